"""Restricted root system of SO+(m,n) / SU(m,n) relative to the split Cartan.

Roots are integer coefficient vectors in the dual of the Cartan: L_i - L_j
and L_i + L_j (multiplicity 1 / 2), L_i when m > n (multiplicity m-n /
2(m-n)), and 2L_i for the unitary family (multiplicity 1).  Root spaces are
produced as explicit matrices in the split basis fixed by
``matrixcore.form_matrix``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DegeneratePlane, NotRegular, ParseError, SizeMismatch, UnknownRoot
from .matrixcore import GroupSpec, Tolerance, DEFAULT_TOL, basis_matrix

_ROOT_RE = re.compile(r"^([+-]?)(2?)L(\d+)(?:([+-])(2?)L(\d+))?$")


@dataclass(frozen=True)
class RootLabel:
    """A restricted root, stored as its integer coefficient vector."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def support(self) -> tuple:
        return tuple(i for i, c in enumerate(self.coeffs) if c != 0)

    @property
    def kind(self) -> str:
        """One of "pm" (±L_i±L_j), "vec" (±L_i), "long" (±2L_i)."""
        sup = self.support
        if len(sup) == 2:
            return "pm"
        if len(sup) == 1 and abs(self.coeffs[sup[0]]) == 1:
            return "vec"
        if len(sup) == 1 and abs(self.coeffs[sup[0]]) == 2:
            return "long"
        raise UnknownRoot(f"coefficient vector {self.coeffs} is not a root shape")

    def __neg__(self) -> "RootLabel":
        return RootLabel(tuple(-c for c in self.coeffs))

    def __str__(self):
        # Canonical form: positive term first for differences, ascending
        # index otherwise; indices are 1-based.
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = "2" if abs(c) == 2 else ""
            terms.append((c > 0, f"{mag}L{i + 1}"))
        terms.sort(key=lambda t: not t[0])  # positive term leads
        out = ""
        for positive, name in terms:
            if not out:
                out = name if positive else f"-{name}"
            else:
                out += ("+" if positive else "-") + name
        return out


@dataclass(frozen=True)
class RootInfo:
    label: RootLabel
    multiplicity: int


def _unit(n: int, i: int, c: int = 1) -> tuple:
    v = [0] * n
    v[i - 1] = c
    return tuple(v)


@lru_cache(maxsize=None)
def _roots_cached(spec: GroupSpec) -> tuple:
    n = spec.n
    mult_pm = 2 if spec.unitary else 1
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            diff = tuple(a - b for a, b in zip(_unit(n, i), _unit(n, j)))
            tot = tuple(a + b for a, b in zip(_unit(n, i), _unit(n, j)))
            for c in (diff, tuple(-x for x in diff), tot, tuple(-x for x in tot)):
                out.append(RootInfo(RootLabel(c), mult_pm))
    if spec.m > spec.n:
        mult_vec = 2 * spec.tail if spec.unitary else spec.tail
        for i in range(1, n + 1):
            out.append(RootInfo(RootLabel(_unit(n, i)), mult_vec))
            out.append(RootInfo(RootLabel(_unit(n, i, -1)), mult_vec))
    if spec.unitary:
        for i in range(1, n + 1):
            out.append(RootInfo(RootLabel(_unit(n, i, 2)), 1))
            out.append(RootInfo(RootLabel(_unit(n, i, -2)), 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _root_index(spec: GroupSpec) -> dict:
    return {info.label: info.multiplicity for info in _roots_cached(spec)}


def roots(spec: GroupSpec) -> list:
    """The complete restricted root system, in a fixed deterministic order.

    Order: L_i-L_j and L_j-L_i and L_i+L_j and -L_i-L_j for i<j
    (lexicographic in (i,j)), then ±L_i, then ±2L_i.
    """
    return list(_roots_cached(spec))


def positive_roots(spec: GroupSpec) -> list:
    """Roots whose first nonzero coefficient is positive, fixed order."""
    return [info for info in _roots_cached(spec)
            if info.label.coeffs[info.label.support[0]] > 0]


def is_root(spec: GroupSpec, label: RootLabel) -> bool:
    return label in _root_index(spec)


def multiplicity(spec: GroupSpec, label: RootLabel) -> int:
    try:
        return _root_index(spec)[label]
    except KeyError:
        raise UnknownRoot(f"{label} is not a root of {spec}") from None


def _pm_data(label: RootLabel):
    """For a ±L_i±L_j root return (i, j, kind) with kind in diff/sum/msum.

    diff means L_i - L_j (either order of indices), sum means L_i + L_j
    with i < j, msum means -L_i - L_j with i < j.
    """
    (a, b) = label.support
    ca, cb = label.coeffs[a], label.coeffs[b]
    i, j = a + 1, b + 1
    if ca == 1 and cb == -1:
        return i, j, "diff"
    if ca == -1 and cb == 1:
        return j, i, "diff"
    if ca == 1 and cb == 1:
        return i, j, "sum"
    return i, j, "msum"


def root_space_basis(spec: GroupSpec, label: RootLabel) -> list:
    """Basis matrices of the root space, in the split-basis coordinates."""
    if not is_root(spec, label):
        raise UnknownRoot(f"{label} is not a root of {spec}")
    n, size = spec.n, spec.size
    E = lambda r, c, v=1.0: basis_matrix(size, r, c, v)
    kind = label.kind
    if kind == "pm":
        i, j, flavor = _pm_data(label)
        if flavor == "diff":
            f1 = E(i, j) - E(j + n, i + n)
            f2 = E(i, j, 1j) + E(j + n, i + n, 1j)
        elif flavor == "sum":
            f1 = E(i, j + n) - E(j, i + n)
            f2 = E(i, j + n, 1j) + E(j, i + n, 1j)
        else:
            f1 = E(j + n, i) - E(i + n, j)
            f2 = E(j + n, i, 1j) + E(i + n, j, 1j)
        return [f1, f2] if spec.unitary else [f1]
    if kind == "vec":
        i = label.support[0] + 1
        sign = label.coeffs[i - 1]
        out = []
        for ell in range(1, spec.tail + 1):
            if sign > 0:
                f1 = E(i, 2 * n + ell) - E(2 * n + ell, i + n)
                f2 = E(i, 2 * n + ell, 1j) + E(2 * n + ell, i + n, 1j)
            else:
                f1 = E(i + n, 2 * n + ell) - E(2 * n + ell, i)
                f2 = E(i + n, 2 * n + ell, 1j) + E(2 * n + ell, i, 1j)
            out.append(f1)
            if spec.unitary:
                out.append(f2)
        return out
    # long root 2L_i (unitary only)
    i = label.support[0] + 1
    if label.coeffs[i - 1] > 0:
        return [E(i, i + n, 1j)]
    return [E(i + n, i, 1j)]


def root_value(label: RootLabel, t) -> float:
    """Evaluate the root functional on a Cartan vector."""
    t = np.asarray(t, dtype=float)
    if len(label.coeffs) != t.shape[0]:
        raise SizeMismatch(f"root has {len(label.coeffs)} coefficients, vector has {t.shape[0]}")
    return float(np.dot(label.coeffs, t))


def parse_root(text: str, spec: GroupSpec) -> RootLabel:
    """Parse the root grammar ("L1-L2", "-L1-L2", "L3", "2L3", ...).

    Raises ParseError on bad syntax and UnknownRoot when the text is
    well-formed but names no root of ``spec``.
    """
    s = text.strip().replace(" ", "")
    mt = _ROOT_RE.match(s)
    if not mt:
        raise ParseError(f"cannot parse root {text!r}")
    sign1, two1, idx1, sign2, two2, idx2 = mt.groups()
    n = spec.n
    coeffs = [0] * n
    i1 = int(idx1)
    if not (1 <= i1 <= n):
        raise UnknownRoot(f"index {i1} out of range for n={n}")
    c1 = (2 if two1 else 1) * (-1 if sign1 == "-" else 1)
    coeffs[i1 - 1] += c1
    if idx2 is not None:
        i2 = int(idx2)
        if not (1 <= i2 <= n):
            raise UnknownRoot(f"index {i2} out of range for n={n}")
        c2 = (2 if two2 else 1) * (-1 if sign2 == "-" else 1)
        coeffs[i2 - 1] += c2
    label = RootLabel(tuple(coeffs))
    if not is_root(spec, label):
        raise UnknownRoot(f"{text!r} is not a root of {spec}")
    return label


def embed(spec: GroupSpec, t) -> np.ndarray:
    """Embed a Cartan vector as diag(t_1..t_n, -t_1..-t_n, 0, ..., 0)."""
    t = np.asarray(t, dtype=float)
    if t.shape != (spec.n,):
        raise SizeMismatch(f"Cartan vector must have length {spec.n}")
    d = np.zeros(spec.size, dtype=complex)
    d[: spec.n] = t
    d[spec.n : 2 * spec.n] = -t
    return np.diag(d)


def is_regular(spec: GroupSpec, t, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff no root functional vanishes at t (up to scale tolerance)."""
    t = np.asarray(t, dtype=float)
    scale = tol.rel * (1.0 + np.linalg.norm(t))
    return all(abs(root_value(info.label, t)) > scale for info in positive_roots(spec))


def weyl_chamber(spec: GroupSpec, t) -> tuple:
    """Sign vector of the positive roots at a regular Cartan vector."""
    t = np.asarray(t, dtype=float)
    if not is_regular(spec, t):
        raise NotRegular(f"{t} lies on a Lyapunov hyperplane")
    return tuple(1 if root_value(info.label, t) > 0 else -1
                 for info in positive_roots(spec))


def hyperplane_representatives(spec: GroupSpec) -> list:
    """One root per Lyapunov hyperplane (mod sign and the 2L_i doubling)."""
    seen = set()
    reps = []
    for info in positive_roots(spec):
        c = np.array(info.label.coeffs)
        g = int(np.gcd.reduce(np.abs(c[c != 0])))
        key = tuple(int(x) for x in c // g)
        if key not in seen:
            seen.add(key)
            reps.append(RootLabel(key))
    return reps


@dataclass(frozen=True)
class GenericPlaneReport:
    generic: bool
    witness: tuple  # offending RootLabel(s), empty when generic

    def to_json(self) -> dict:
        return {"generic": self.generic, "witness": [str(r) for r in self.witness]}


def is_generic_plane(spec: GroupSpec, v1, v2, tol: Tolerance = DEFAULT_TOL) -> GenericPlaneReport:
    """Decide whether span(v1, v2) meets distinct hyperplanes in distinct lines.

    The plane is generic iff every hyperplane functional restricts to a
    nonzero functional on the plane and no two distinct hyperplanes restrict
    proportionally.  The witness names the offending hyperplane(s).
    """
    v1 = np.asarray(v1, dtype=float)
    v2 = np.asarray(v2, dtype=float)
    if v1.shape != (spec.n,) or v2.shape != (spec.n,):
        raise SizeMismatch(f"plane vectors must have length {spec.n}")
    # |v1 ^ v2|^2 = det of the Gram matrix; dependence is scale-free
    wedge_sq = (v1 @ v1) * (v2 @ v2) - (v1 @ v2) ** 2
    if wedge_sq <= (tol.rel ** 2) * (v1 @ v1) * (v2 @ v2):
        raise DegeneratePlane("v1 and v2 are linearly dependent")
    reps = hyperplane_representatives(spec)
    restricted = [(r, np.array([root_value(r, v1), root_value(r, v2)])) for r in reps]
    scale = tol.rel * (1.0 + max(np.linalg.norm(v1), np.linalg.norm(v2)))
    for r, pair in restricted:
        if np.linalg.norm(pair) <= scale:
            return GenericPlaneReport(False, (r,))
    for a in range(len(restricted)):
        for b in range(a + 1, len(restricted)):
            ra, pa = restricted[a]
            rb, pb = restricted[b]
            det = pa[0] * pb[1] - pa[1] * pb[0]
            if abs(det) <= tol.rel * np.linalg.norm(pa) * np.linalg.norm(pb):
                return GenericPlaneReport(False, (ra, rb))
    return GenericPlaneReport(True, ())
