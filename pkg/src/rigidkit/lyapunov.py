"""Lyapunov combinatorics of the split Cartan action.

Exponent tables with multiplicities, stable/unstable/neutral splittings,
bracket generation of the tangent space, strict feasibility of stable
cycles and membership in the neutral block group.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

from .errors import UnknownRoot
from .matrixcore import DEFAULT_TOL, GroupSpec, Tolerance, basis_matrix, in_group
from .rootsystem import embed, is_root, root_space_basis, root_value, roots


def dim_group(spec: GroupSpec) -> int:
    s = spec.size
    return s * s - 1 if spec.unitary else s * (s - 1) // 2


def zero_multiplicity(spec: GroupSpec) -> int:
    k = spec.tail
    if spec.unitary:
        return 2 * spec.n + k * k - 1
    return spec.n + (k - 1) * k // 2


@dataclass(frozen=True)
class ExponentTable:
    """Lyapunov exponents with multiplicities; None labels the zero exponent."""

    entries: tuple

    @property
    def total(self) -> int:
        return sum(mult for _, mult in self.entries)

    def to_json(self) -> dict:
        return {"entries": [{"functional": (str(r) if r is not None else "0"),
                             "multiplicity": mult} for r, mult in self.entries],
                "total": self.total}


def exponent_table(spec: GroupSpec) -> ExponentTable:
    entries = [(info.label, info.multiplicity) for info in roots(spec)]
    entries.append((None, zero_multiplicity(spec)))
    return ExponentTable(tuple(entries))


def _neutral_compact_basis(spec: GroupSpec) -> list:
    """Basis of the zero-exponent directions beyond the Cartan itself."""
    n, k, size = spec.n, spec.tail, spec.size
    E = lambda r, c, v=1.0: basis_matrix(size, r, c, v)
    out = []
    if not spec.unitary:
        for a in range(1, k + 1):
            for b in range(a + 1, k + 1):
                out.append(E(2 * n + a, 2 * n + b) - E(2 * n + b, 2 * n + a))
        return out
    # unitary: torus directions i(e_ii + e_{i+n,i+n}) made traceless, plus su(k) tail
    if k > 0:
        tail_id = sum(E(2 * n + a, 2 * n + a) for a in range(1, k + 1))
        for i in range(1, n + 1):
            out.append(E(i, i, 1j) + E(i + n, i + n, 1j) - (2.0 / k) * 1j * tail_id)
        for a in range(1, k + 1):
            for b in range(a + 1, k + 1):
                out.append(E(2 * n + a, 2 * n + b) - E(2 * n + b, 2 * n + a))
                out.append(E(2 * n + a, 2 * n + b, 1j) + E(2 * n + b, 2 * n + a, 1j))
        for a in range(1, k):
            out.append(E(2 * n + a, 2 * n + a, 1j) - E(2 * n + a + 1, 2 * n + a + 1, 1j))
    else:
        for i in range(1, n):
            out.append(E(i, i, 1j) + E(i + n, i + n, 1j)
                       - E(n, n, 1j) - E(2 * n, 2 * n, 1j))
    return out


@dataclass(frozen=True)
class SplittingReport:
    t: tuple
    stable_dim: int
    unstable_dim: int
    neutral_dim: int
    stable_basis: tuple
    unstable_basis: tuple
    neutral_basis: tuple

    def to_json(self) -> dict:
        return {"t": list(self.t), "stable_dim": self.stable_dim,
                "unstable_dim": self.unstable_dim, "neutral_dim": self.neutral_dim}


def splitting(spec: GroupSpec, t, tol: Tolerance = DEFAULT_TOL) -> SplittingReport:
    """Classify root-space directions by the sign of the exponent at t.

    Walls are allowed: root spaces with |value| below tolerance count as
    neutral, alongside the Cartan and the compact zero block.
    """
    t = np.asarray(t, dtype=float)
    wall = tol.rel * (1.0 + np.linalg.norm(t))
    stable, unstable = [], []
    neutral = []
    for i in range(spec.n):
        e = np.zeros(spec.n)
        e[i] = 1.0
        neutral.append(embed(spec, e))
    neutral.extend(_neutral_compact_basis(spec))
    for info in roots(spec):
        val = root_value(info.label, t)
        target = stable if val < -wall else (unstable if val > wall else neutral)
        target.extend(root_space_basis(spec, info.label))
    return SplittingReport(tuple(float(x) for x in t),
                           len(stable), len(unstable), len(neutral),
                           tuple(stable), tuple(unstable), tuple(neutral))


def _rank_of_span(mats, size: int) -> int:
    if not mats:
        return 0
    rows = np.array([np.concatenate([M.real.reshape(-1), M.imag.reshape(-1)]) for M in mats])
    return int(np.linalg.matrix_rank(rows, tol=1e-8))


def bracket_generation_check(spec: GroupSpec, include_brackets: bool = True):
    """Rank of the span of all root vectors (plus their pairwise brackets).

    With brackets the span must be the whole Lie algebra.  Returns
    (ok, rank) where ok means rank == dim_group(spec).
    """
    vectors = []
    for info in roots(spec):
        vectors.extend(root_space_basis(spec, info.label))
    mats = list(vectors)
    if include_brackets:
        for a in range(len(vectors)):
            for b in range(a + 1, len(vectors)):
                mats.append(vectors[a] @ vectors[b] - vectors[b] @ vectors[a])
    rank = _rank_of_span(mats, spec.size)
    return rank == dim_group(spec), rank


@dataclass(frozen=True)
class CycleSpec:
    roots: tuple

    def __post_init__(self):
        if not self.roots:
            raise UnknownRoot("a cycle needs at least one root")


def stable_cycle_feasible(spec: GroupSpec, cycle: CycleSpec, margin: float = 1e-9):
    """Witness t with root(t) < 0 for every cycle root, or None.

    Strict feasibility is decided by maximizing the margin eps subject to
    root(t) <= -eps over the box |t|_inf <= 1; feasible iff the optimum
    exceeds ``margin``.
    """
    for r in cycle.roots:
        if not is_root(spec, r):
            raise UnknownRoot(f"{r} is not a root of {spec}")
    n = spec.n
    A = np.array([list(r.coeffs) + [1.0] for r in cycle.roots], dtype=float)
    c = np.zeros(n + 1)
    c[-1] = -1.0  # maximize eps
    bounds = [(-1.0, 1.0)] * n + [(0.0, 10.0)]
    res = linprog(c, A_ub=A, b_ub=np.zeros(len(cycle.roots)), bounds=bounds, method="highs")
    if not res.success:
        return None
    eps = res.x[-1]
    if eps <= margin:
        return None
    return np.array(res.x[:n])


def neutral_membership(spec: GroupSpec, M: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Membership in the neutral block group Y_X.

    Block diagonal with A1 = diag(d_1..d_n, conj(d_1)^-1..conj(d_n)^-1) and
    a unitary tail block; for the orthogonal family the d_i must be real
    and positive (reciprocal pairs) and the tail block real.
    """
    if M.shape != (spec.size, spec.size):
        return False
    if not in_group(M, spec, tol):
        return False
    n, k = spec.n, spec.tail
    scale = tol.rel * (1.0 + np.linalg.norm(M))
    off = M.copy()
    for i in range(2 * n):
        off[i, i] = 0.0
    off[2 * n:, 2 * n:] = 0.0
    if np.linalg.norm(off) > scale:
        return False
    d = np.diag(M)[:n]
    dual = np.diag(M)[n:2 * n]
    if np.linalg.norm(dual - 1.0 / np.conj(d)) > scale:
        return False
    if not spec.unitary:
        if np.linalg.norm(d.imag) > scale or np.any(d.real <= 0):
            return False
        if k and np.linalg.norm(M[2 * n:, 2 * n:].imag) > scale:
            return False
    if k:
        B = M[2 * n:, 2 * n:]
        if not tol.close(B.conj().T @ B, np.eye(k, dtype=complex)):
            return False
    return True
