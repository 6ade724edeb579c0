"""Concrete group elements: unipotent generators, chain/Weyl and h elements.

Every one-root generator has an exact closed form (the exponential series
terminates at order two for these root spaces), so elements are assembled
entry by entry rather than through a general exponential.  The test suite
cross-checks the closed forms against ``matrixcore.exp_nilpotent``.

Parameter shapes per (family, root kind):

    so  ±L_i±L_j  -> Scalar(t)            real t
    so  ±L_i      -> RVec(a)              a in R^{m-n}
    su  ±L_i±L_j  -> Cx(z)                complex z
    su  ±2L_i     -> Scalar(t)            real t
    su  ±L_i      -> Heis(t, a)           t real, a in C^{m-n}
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (CertificationError, NotOnSphere, OutOfRange, ShapeMismatch,
                     UnknownRoot, VariantUnsupported, ZeroParameter)
from .matrixcore import DEFAULT_TOL, GroupSpec, Tolerance, identity, in_group
from .rootsystem import RootLabel, _pm_data, embed, is_root

ZERO_PARAM_EPS = 1e-12


@dataclass(frozen=True)
class Scalar:
    t: float


@dataclass(frozen=True)
class Cx:
    z: complex


@dataclass(frozen=True)
class RVec:
    a: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(float(x) for x in self.a))


@dataclass(frozen=True)
class Heis:
    """Heisenberg parameter (t, a) of a unitary ±L_i root group element."""

    t: float
    a: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(complex(x) for x in self.a))


def expected_shape(spec: GroupSpec, root: RootLabel):
    kind = root.kind
    if spec.unitary:
        return {"pm": Cx, "vec": Heis, "long": Scalar}[kind]
    if kind == "long":
        raise UnknownRoot(f"{root} is not a root of {spec}")
    return {"pm": Scalar, "vec": RVec}[kind]


def check_param(spec: GroupSpec, root: RootLabel, p) -> None:
    if not is_root(spec, root):
        raise UnknownRoot(f"{root} is not a root of {spec}")
    want = expected_shape(spec, root)
    if not isinstance(p, want):
        raise ShapeMismatch(f"root {root} of {spec} takes {want.__name__}, got {type(p).__name__}")
    if isinstance(p, (RVec, Heis)) and len(p.a) != spec.tail:
        raise ShapeMismatch(f"vector parameter must have length {spec.tail}, got {len(p.a)}")


def param_norm(p) -> float:
    if isinstance(p, Scalar):
        return abs(p.t)
    if isinstance(p, Cx):
        return abs(p.z)
    if isinstance(p, RVec):
        return float(np.linalg.norm(p.a))
    return float(np.hypot(abs(p.t), np.linalg.norm(p.a)))


def is_zero_param(p) -> bool:
    return param_norm(p) <= ZERO_PARAM_EPS


def param_neg(p):
    """Parameter of the inverse element: x(p)^-1 = x(param_neg(p))."""
    if isinstance(p, Scalar):
        return Scalar(-p.t)
    if isinstance(p, Cx):
        return Cx(-p.z)
    if isinstance(p, RVec):
        return RVec(tuple(-x for x in p.a))
    return Heis(-p.t, tuple(-x for x in p.a))


def param_to_json(p) -> dict:
    if isinstance(p, Scalar):
        return {"t": p.t}
    if isinstance(p, Cx):
        return {"z": [p.z.real, p.z.imag]}
    if isinstance(p, RVec):
        return {"a": list(p.a)}
    return {"t": p.t, "a": [[x.real, x.imag] for x in p.a]}


def param_from_json(obj: dict):
    keys = set(obj)
    if keys == {"t"}:
        return Scalar(float(obj["t"]))
    if keys == {"z"}:
        re, im = obj["z"]
        return Cx(complex(re, im))
    if keys == {"a"}:
        return RVec(tuple(obj["a"]))
    if keys == {"t", "a"}:
        return Heis(float(obj["t"]), tuple(complex(re, im) for re, im in obj["a"]))
    raise ShapeMismatch(f"unrecognized parameter encoding {obj}")


def heis_a0(p: Heis) -> complex:
    a = np.asarray(p.a)
    return complex(-0.5 * float(np.vdot(a, a).real), p.t)


# ---------------------------------------------------------------------------
# one-root generators


def x_elem(spec: GroupSpec, root: RootLabel, p) -> np.ndarray:
    """The unipotent generator x_root(p), as an exact matrix."""
    check_param(spec, root, p)
    return _x_matrix(spec, root, p)


def _x_matrix(spec: GroupSpec, root: RootLabel, p) -> np.ndarray:
    n, size = spec.n, spec.size
    M = identity(size)
    kind = root.kind
    if kind == "pm":
        i, j, flavor = _pm_data(root)
        z = complex(p.z) if isinstance(p, Cx) else complex(p.t)
        if flavor == "diff":
            M[i - 1, j - 1] += z
            M[j + n - 1, i + n - 1] -= np.conj(z)
        elif flavor == "sum":
            M[i - 1, j + n - 1] += z
            M[j - 1, i + n - 1] -= np.conj(z)
        else:
            M[j + n - 1, i - 1] += z
            M[i + n - 1, j - 1] -= np.conj(z)
        return M
    idx = root.support[0] + 1
    positive = root.coeffs[idx - 1] > 0
    if kind == "long":
        pos = (idx - 1, idx + n - 1) if positive else (idx + n - 1, idx - 1)
        M[pos] += 1j * p.t
        return M
    # vec root; rows/cols per sign, a0 entry carries the Heisenberg part
    a = np.asarray(p.a, dtype=complex)
    a0 = heis_a0(p) if isinstance(p, Heis) else complex(-0.5 * float(a.real @ a.real))
    row = idx - 1 if positive else idx + n - 1
    col = idx + n - 1 if positive else idx - 1
    for ell in range(spec.tail):
        M[row, 2 * n + ell] += a[ell]
        M[2 * n + ell, col] -= np.conj(a[ell])
    M[row, col] += a0
    return M


def heis_read(spec: GroupSpec, root: RootLabel, M: np.ndarray) -> Heis:
    """Read the (t, a) coordinates of a unipotent ±L_i element off its entries."""
    n = spec.n
    idx = root.support[0] + 1
    positive = root.coeffs[idx - 1] > 0
    row = idx - 1 if positive else idx + n - 1
    col = idx + n - 1 if positive else idx - 1
    a = tuple(complex(M[row, 2 * n + ell]) for ell in range(spec.tail))
    t = float(M[row, col].imag)
    return Heis(t, a)


def heis_compose(spec: GroupSpec, root: RootLabel, p: Heis, q: Heis) -> Heis:
    """Group composition law in (t, a) coordinates, read off the product."""
    return heis_read(spec, root, _x_matrix(spec, root, p) @ _x_matrix(spec, root, q))


def param_add(spec: GroupSpec, root: RootLabel, p, q):
    """Parameter of x(p) x(q); plain addition except for the Heisenberg case."""
    if isinstance(p, Scalar):
        return Scalar(p.t + q.t)
    if isinstance(p, Cx):
        return Cx(p.z + q.z)
    if isinstance(p, RVec):
        return RVec(tuple(x + y for x, y in zip(p.a, q.a)))
    return heis_compose(spec, root, p, q)


# ---------------------------------------------------------------------------
# chain ("Weyl") elements


def chain_params(spec: GroupSpec, root: RootLabel, p):
    """The three chain factor parameters (x0, y0, x1) with w = x0 y0 x1.

    y0 lives in the opposite root group.  For scalar and vector parameters
    the two outer factors agree; the general unitary Heisenberg chain
    rotates the vector part of the trailing factor.
    """
    if is_zero_param(p):
        raise ZeroParameter(f"chain element of {root} needs a nonzero parameter")
    if isinstance(p, Scalar):
        if root.kind == "long":
            return p, Scalar(1.0 / p.t), p
        return p, Scalar(-1.0 / p.t), p
    if isinstance(p, Cx):
        return p, Cx(-1.0 / p.z), p
    if isinstance(p, RVec):
        a = np.asarray(p.a)
        y = RVec(tuple(2.0 * a / float(a @ a)))
        return p, y, p
    # unitary Heisenberg; the a0 formula covers all branches but the
    # degenerate ones are dispatched on their simpler certified forms
    a = np.asarray(p.a)
    norm_a = float(np.linalg.norm(a))
    if norm_a <= ZERO_PARAM_EPS:
        return p, Heis(1.0 / p.t, p.a), p
    if abs(p.t) <= ZERO_PARAM_EPS:
        y = Heis(0.0, tuple(2.0 * a / norm_a**2))
        return p, y, p
    a0 = heis_a0(p)
    y = Heis(p.t / abs(a0) ** 2, tuple(-a / a0))
    x1 = Heis(p.t, tuple(np.conj(a0) / a0 * a))
    return p, y, x1


def w_matrix(spec: GroupSpec, root: RootLabel, p) -> np.ndarray:
    """The chain element as a matrix, without certification."""
    check_param(spec, root, p)
    x0, y0, x1 = chain_params(spec, root, p)
    return (_x_matrix(spec, root, x0)
            @ _x_matrix(spec, -root, y0)
            @ _x_matrix(spec, root, x1))


def reflection(root: RootLabel, t) -> np.ndarray:
    """The Weyl reflection s_root acting on a Cartan vector."""
    t = np.asarray(t, dtype=float)
    coeffs = np.asarray(root.coeffs, dtype=float)
    return t - 2.0 * (coeffs @ t) / (coeffs @ coeffs) * coeffs


@dataclass(frozen=True)
class ChainCertificate:
    """w = x_i y_i x_next together with the normalizer and reflection checks."""

    w: np.ndarray
    x_i: np.ndarray
    y_i: np.ndarray
    x_next: np.ndarray
    reflection_checked: bool

    def to_json(self) -> dict:
        from .matrixcore import mat_to_json
        return {
            "factors": [mat_to_json(self.x_i), mat_to_json(self.y_i), mat_to_json(self.x_next)],
            "w": mat_to_json(self.w),
            "reflection_checked": self.reflection_checked,
        }


def w_elem(spec: GroupSpec, root: RootLabel, p, tol: Tolerance = DEFAULT_TOL) -> ChainCertificate:
    """Chain element with its factorization and reflection certificate."""
    check_param(spec, root, p)
    x0, y0, x1 = chain_params(spec, root, p)
    X0 = _x_matrix(spec, root, x0)
    Y0 = _x_matrix(spec, -root, y0)
    X1 = _x_matrix(spec, root, x1)
    w = X0 @ Y0 @ X1
    w_inv = np.linalg.inv(w)
    ok = in_group(w, spec, tol)
    for k in range(spec.n):
        e = np.zeros(spec.n)
        e[k] = 1.0
        lhs = w @ embed(spec, e) @ w_inv
        rhs = embed(spec, reflection(root, e))
        ok = ok and tol.close(lhs, rhs)
    return ChainCertificate(w, X0, Y0, X1, ok)


def h_elem(spec: GroupSpec, root: RootLabel, p1, p2, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """h_root(p1, p2) = w(p1) w(p2)^-1, an element centralizing the Cartan."""
    if is_zero_param(p1) or is_zero_param(p2):
        raise ZeroParameter("h element needs two nonzero parameters")
    h = w_matrix(spec, root, p1) @ np.linalg.inv(w_matrix(spec, root, p2))
    for k in range(spec.n):
        e = np.zeros(spec.n)
        e[k] = 1.0
        D = embed(spec, e)
        if not tol.close(h @ D, D @ h):
            raise CertificationError(f"h element of {root} does not centralize the Cartan")
    return h


# ---------------------------------------------------------------------------
# planar rotation elements h^j


def _vec_label(spec: GroupSpec, positive: bool) -> RootLabel:
    c = [0] * spec.n
    c[spec.n - 1] = 1 if positive else -1
    return RootLabel(tuple(c))


def h_rot(spec: GroupSpec, j: int, ab, variant: str = "real") -> np.ndarray:
    """The rotation word h^j_{L_n}(sqrt2 a, sqrt2 b), evaluated verbatim.

    The compact block is the rotation [[a^2-b^2, -2ab], [2ab, a^2-b^2]] in
    tail coordinates (j, j+1); the imaginary variant (unitary only) carries
    the conjugate block.  The word is the defining 9-factor (orthogonal) or
    6-factor (unitary) product; it is not simplified.
    """
    a, b = ab
    if variant not in ("real", "imag"):
        raise VariantUnsupported(f"variant must be 'real' or 'imag', got {variant!r}")
    if variant == "imag" and not spec.unitary:
        raise VariantUnsupported("the imaginary variant exists only for the unitary family")
    if not (1 <= j <= spec.tail - 1):
        raise OutOfRange(f"need 1 <= j <= m-n-1 = {spec.tail - 1}, got j={j}")
    if abs(abs(a) ** 2 + abs(b) ** 2 - 1.0) > 1e-9:
        raise NotOnSphere(f"(a, b) must satisfy |a|^2 + |b|^2 = 1, got {ab}")
    if not spec.unitary and (isinstance(a, complex) or isinstance(b, complex)):
        raise VariantUnsupported("orthogonal rotations take real (a, b)")
    s2 = np.sqrt(2.0)
    k = spec.tail
    pos, neg = _vec_label(spec, True), _vec_label(spec, False)
    if spec.unitary:
        c = np.zeros(k, dtype=complex)
        c[j - 1] = s2 * a
        c[j] = s2 * b * (1j if variant == "imag" else 1.0)
        e = np.zeros(k, dtype=complex)
        e[j - 1] = -s2
        word = [(pos, Heis(0.0, tuple(c))), (neg, Heis(0.0, tuple(c))), (pos, Heis(0.0, tuple(c))),
                (pos, Heis(0.0, tuple(e))), (neg, Heis(0.0, tuple(e))), (pos, Heis(0.0, tuple(e)))]
    else:
        va = [0.0] * k
        vb = [0.0] * k
        ve = [0.0] * k
        va[j - 1] = s2 * a
        vb[j] = s2 * b
        ve[j - 1] = -s2
        word = [(pos, RVec(va)), (pos, RVec(vb)),
                (neg, RVec(va)), (neg, RVec(vb)),
                (pos, RVec(va)), (pos, RVec(vb)),
                (pos, RVec(ve)), (neg, RVec(ve)), (pos, RVec(ve))]
    M = identity(spec.size)
    for root, param in word:
        M = M @ _x_matrix(spec, root, param)
    return M


def rot_from_angle(spec: GroupSpec, j: int, psi: float, variant: str = "real") -> np.ndarray:
    """Rotation by angle psi in tail plane (j, j+1): h_rot doubles the angle."""
    return h_rot(spec, j, (np.cos(psi / 2.0), np.sin(psi / 2.0)), variant)


# ---------------------------------------------------------------------------
# closed permutation-diagonal forms


@dataclass(frozen=True)
class PermDiag:
    """w as p(perm) . diag, with the unitary/orthogonal tail block.

    ``perm`` maps 1-based positions, ``diag`` is the full diagonal vector,
    ``block`` (when present) sits at rows/cols 2n+1 .. m+n.
    """

    size: int
    n: int
    perm: tuple
    diag: tuple
    block: np.ndarray | None

    def matrix(self) -> np.ndarray:
        D = np.diag(np.asarray(self.diag, dtype=complex))
        if self.block is not None:
            k = self.block.shape[0]
            D[2 * self.n:2 * self.n + k, 2 * self.n:2 * self.n + k] = self.block
        P = np.zeros((self.size, self.size), dtype=complex)
        for src in range(1, self.size + 1):
            P[self.perm[src - 1] - 1, src - 1] = 1.0
        return P @ D


def _swap_perm(size: int, swaps) -> tuple:
    perm = list(range(1, size + 1))
    for a, b in swaps:
        perm[a - 1], perm[b - 1] = perm[b - 1], perm[a - 1]
    return tuple(perm)


def dual_param(spec: GroupSpec, root: RootLabel, p):
    """Parameter q with w_{-root}(p) = w_{root}(q); from the chain symmetry."""
    if isinstance(p, Scalar):
        return Scalar(1.0 / p.t) if root.kind == "long" else Scalar(-1.0 / p.t)
    if isinstance(p, Cx):
        return Cx(-1.0 / p.z)
    if isinstance(p, RVec):
        a = np.asarray(p.a)
        return RVec(tuple(2.0 * a / float(a @ a)))
    a = np.asarray(p.a)
    a0 = heis_a0(p)
    return Heis(p.t / abs(a0) ** 2, tuple(-a / a0))


def w_closed_form(spec: GroupSpec, root: RootLabel, p) -> PermDiag:
    """The permutation-diagonal form of the chain element."""
    check_param(spec, root, p)
    if is_zero_param(p):
        raise ZeroParameter(f"chain element of {root} needs a nonzero parameter")
    n, size = spec.n, spec.size
    kind = root.kind
    if kind == "pm":
        i, j, flavor = _pm_data(root)
        if flavor == "msum":
            return w_closed_form(spec, RootLabel(tuple(-c for c in root.coeffs)),
                                 dual_param(spec, root, p))
        z = complex(p.z) if isinstance(p, Cx) else complex(p.t)
        diag = [1.0 + 0j] * size
        if flavor == "diff":
            swaps = [(i, j), (i + n, j + n)]
            diag[i - 1] = -1.0 / z
            diag[j - 1] = z
            diag[i + n - 1] = -np.conj(z)
            diag[j + n - 1] = 1.0 / np.conj(z)
        else:
            swaps = [(i, j + n), (j, i + n)]
            diag[i - 1] = -1.0 / z
            diag[j - 1] = 1.0 / np.conj(z)
            diag[i + n - 1] = -np.conj(z)
            diag[j + n - 1] = z
        return PermDiag(size, n, _swap_perm(size, swaps), tuple(diag), None)
    idx = root.support[0] + 1
    if root.coeffs[idx - 1] < 0:
        return w_closed_form(spec, -root, dual_param(spec, root, p))
    diag = [1.0 + 0j] * size
    swaps = [(idx, idx + n)]
    if isinstance(p, Scalar):  # unitary long root 2L_i
        diag[idx - 1] = 1j / p.t
        diag[idx + n - 1] = 1j * p.t
        return PermDiag(size, n, _swap_perm(size, swaps), tuple(diag), None)
    if isinstance(p, RVec):
        a = np.asarray(p.a, dtype=float)
        na2 = float(a @ a)
        diag[idx - 1] = -2.0 / na2
        diag[idx + n - 1] = -na2 / 2.0
        block = np.eye(spec.tail, dtype=complex) - 2.0 * np.outer(a, a) / na2
        return PermDiag(size, n, _swap_perm(size, swaps), tuple(diag), block)
    a = np.asarray(p.a, dtype=complex)
    a0 = heis_a0(p)
    diag[idx - 1] = 1.0 / np.conj(a0)
    diag[idx + n - 1] = a0
    block = np.eye(spec.tail, dtype=complex) + np.outer(np.conj(a), a) / a0
    return PermDiag(size, n, _swap_perm(size, swaps), tuple(diag), block)
