"""Words over the generator alphabet and staircase normal forms.

A word is a sequence of letters (root, parameter, exponent ±1); evaluation
is the ordered product of generators.  The staircase machinery expresses a
compact tail-block rotation as the descending product of adjacent-plane
rotations (orthogonal: one angle per position; unitary: an Euler triple
real/imag/real per position) and reconstructs it from rotation words.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import NotInGroup, OutOfRange, ShapeMismatch, SizeMismatch
from .matrixcore import DEFAULT_TOL, GroupSpec, Tolerance, identity
from .generators import (Heis, Scalar, Cx, check_param, is_zero_param,
                         param_add, param_from_json, param_neg, param_to_json,
                         rot_from_angle, x_elem)
from .rootsystem import RootLabel, parse_root


@dataclass(frozen=True)
class Letter:
    root: RootLabel
    param: object
    exponent: int = 1

    def __post_init__(self):
        if self.exponent not in (1, -1):
            raise ShapeMismatch(f"exponent must be +1 or -1, got {self.exponent}")


def eval_word(spec: GroupSpec, word) -> np.ndarray:
    """Ordered product of x_root(param)^exponent over the letters."""
    M = identity(spec.size)
    for letter in word:
        p = letter.param if letter.exponent == 1 else param_neg(letter.param)
        M = M @ x_elem(spec, letter.root, p)
    return M


def _params_equal(p, q) -> bool:
    if type(p) is not type(q):
        return False
    if isinstance(p, Scalar):
        return p.t == q.t
    if isinstance(p, Cx):
        return p.z == q.z
    return p == q


def free_reduce(spec: GroupSpec, word) -> list:
    """Drop zero letters, cancel adjacent inverse pairs, merge additively.

    Adjacent letters with the same root, identical parameter and opposite
    exponents cancel; adjacent +1 letters on the same root merge through
    parameter addition (scalar and vector shapes only).  Evaluation is
    unchanged.
    """
    letters = list(word)
    changed = True
    while changed:
        changed = False
        out = []
        for letter in letters:
            if is_zero_param(letter.param):
                changed = True
                continue
            if out:
                prev = out[-1]
                if (prev.root == letter.root and prev.exponent == -letter.exponent
                        and _params_equal(prev.param, letter.param)):
                    out.pop()
                    changed = True
                    continue
                if (prev.root == letter.root and prev.exponent == 1 == letter.exponent
                        and not isinstance(letter.param, Heis)):
                    merged = param_add(spec, letter.root, prev.param, letter.param)
                    out.pop()
                    if not is_zero_param(merged):
                        out.append(Letter(letter.root, merged, 1))
                    changed = True
                    continue
            out.append(letter)
        letters = out
    return letters


def is_relation(spec: GroupSpec, word, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff the word evaluates to the identity matrix."""
    return tol.close(eval_word(spec, word), identity(spec.size))


def word_to_json(word) -> list:
    return [{"root": str(l.root), "param": param_to_json(l.param), "exp": l.exponent}
            for l in word]


def word_from_json(obj, spec: GroupSpec) -> list:
    out = []
    for item in obj:
        root = parse_root(item["root"], spec)
        param = param_from_json(item["param"])
        check_param(spec, root, param)
        out.append(Letter(root, param, int(item.get("exp", 1))))
    return out


def save_word(path: str, word) -> None:
    with open(path, "w") as fh:
        json.dump(word_to_json(word), fh)


def load_word(path: str, spec: GroupSpec) -> list:
    with open(path) as fh:
        return word_from_json(json.load(fh), spec)


# ---------------------------------------------------------------------------
# staircase normal form for the compact tail block


@dataclass(frozen=True)
class Staircase:
    """Descending rotation data: rows of lengths k-1, k-2, ..., 1.

    Row r, position i holds the rotation in tail plane (i, i+1): an angle
    for the orthogonal family, an Euler triple (real, imag, real) for the
    unitary family.
    """

    family: str
    k: int
    rows: tuple

    def to_json(self) -> dict:
        if self.family == "so":
            rows = [[float(a) for a in row] for row in self.rows]
        else:
            rows = [[[float(x) for x in triple] for triple in row] for row in self.rows]
        return {"family": self.family, "k": self.k, "rows": rows}


def _canon_angle(psi: float) -> float:
    psi = float((psi + np.pi) % (2.0 * np.pi) - np.pi)
    return np.pi if psi == -np.pi else psi


def su2_euler(V: np.ndarray) -> tuple:
    """Euler angles (p1, p2, p3) with V = Rr(p1) Ri(p2) Rr(p3) in SU(2).

    Rr is the real rotation [[c,-s],[s,c]], Ri the imaginary rotation
    [[c,-is],[-is,c]].  At gimbal lock the trailing angle is set to 0.
    """
    x, w = V[0, 0].real, V[0, 0].imag
    y, z = V[0, 1].real, V[0, 1].imag
    c2 = float(np.hypot(x, y))
    s2 = float(np.hypot(z, w))
    p2 = float(np.arctan2(s2, c2))
    if s2 < 1e-12:
        return _canon_angle(float(np.arctan2(-y, x))), _canon_angle(p2), 0.0
    if c2 < 1e-12:
        return _canon_angle(float(np.arctan2(-w, -z))), _canon_angle(p2), 0.0
    sum13 = np.arctan2(-y, x)
    diff31 = np.arctan2(-w, -z)
    p1 = (sum13 - diff31) / 2.0
    p3 = (sum13 + diff31) / 2.0
    return _canon_angle(float(p1)), _canon_angle(p2), _canon_angle(float(p3))


def _rr(psi: float) -> np.ndarray:
    c, s = np.cos(psi), np.sin(psi)
    return np.array([[c, -s], [s, c]], dtype=complex)


def _ri(psi: float) -> np.ndarray:
    c, s = np.cos(psi), np.sin(psi)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


def _plane_embed(k: int, i: int, blk: np.ndarray) -> np.ndarray:
    M = np.eye(k, dtype=complex)
    M[i - 1:i + 1, i - 1:i + 1] = blk
    return M


def _check_tail_block(spec: GroupSpec, B: np.ndarray, tol: Tolerance) -> np.ndarray:
    k = spec.tail
    if B.shape != (k, k):
        raise SizeMismatch(f"tail block must be {k}x{k}, got {B.shape}")
    B = np.asarray(B, dtype=complex)
    if not spec.unitary and np.linalg.norm(B.imag) > tol.rel * (1 + np.linalg.norm(B)):
        raise NotInGroup("orthogonal-family tail block must be real")
    if not tol.close(B.conj().T @ B, np.eye(k, dtype=complex)):
        raise NotInGroup("tail block is not orthogonal/unitary to tolerance")
    if abs(np.linalg.det(B) - 1.0) > 1e-7:
        raise NotInGroup("tail block must have determinant 1")
    return B


def staircase_decompose(spec: GroupSpec, B: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> Staircase:
    """Factor B in SO(k) / SU(k) into the descending staircase pattern.

    Column-peeling Givens elimination: the first row of factors carries the
    last column of B, the remainder recurses on the leading block.
    """
    k = spec.tail
    if k < 2:
        raise OutOfRange(f"staircase needs m-n >= 2, got {k}")
    B = _check_tail_block(spec, B, tol).copy()
    rows = []
    for r in range(k - 1):
        kk = k - r
        y = B[:kk, kk - 1].copy()
        if spec.unitary:
            blocks = []
            for i in range(1, kk):
                yi, yj = y[i - 1], y[i]
                nrm = float(np.hypot(abs(yi), abs(yj)))
                if nrm < 1e-300:
                    U = np.eye(2, dtype=complex)
                else:
                    U = np.array([[yj, -yi], [np.conj(yi), np.conj(yj)]], dtype=complex) / nrm
                y[i - 1:i + 1] = U @ y[i - 1:i + 1]
                blocks.append(U)
            row = [su2_euler(U.conj().T) for U in blocks]
            P = np.eye(kk, dtype=complex)
            for i, U in enumerate(blocks, start=1):
                P = P @ _plane_embed(kk, i, U.conj().T)
        else:
            angles = []
            for i in range(1, kk):
                yi, yj = y[i - 1].real, y[i].real
                if np.hypot(yi, yj) < 1e-300:
                    th = 0.0
                else:
                    th = float(np.arctan2(yi, yj))
                    c, s = np.cos(th), np.sin(th)
                    y[i - 1], y[i] = c * yi - s * yj, s * yi + c * yj
                angles.append(_canon_angle(-th))
            row = angles
            P = np.eye(kk, dtype=complex)
            for i, psi in enumerate(angles, start=1):
                P = P @ _plane_embed(kk, i, _rr(psi))
        B[:kk, :kk] = P.conj().T @ B[:kk, :kk]
        rows.append(row)
    return Staircase(spec.family, k, tuple(tuple(r) for r in rows))


def reconstruct(spec: GroupSpec, stair: Staircase) -> np.ndarray:
    """Tail block of the ordered product of rotation words in the staircase."""
    k = spec.tail
    if stair.k != k or stair.family != spec.family:
        raise OutOfRange(f"staircase is for family={stair.family}, k={stair.k}, spec has {spec.family}, {k}")
    M = identity(spec.size)
    for row in stair.rows:
        for i, entry in enumerate(row, start=1):
            if spec.unitary:
                p1, p2, p3 = entry
                M = M @ rot_from_angle(spec, i, p1, "real")
                M = M @ rot_from_angle(spec, i, p2, "imag")
                M = M @ rot_from_angle(spec, i, p3, "real")
            else:
                M = M @ rot_from_angle(spec, i, entry)
    if not DEFAULT_TOL.close(M[:2 * spec.n, :2 * spec.n], identity(2 * spec.n)):
        raise NotInGroup("rotation words left the compact tail subgroup")
    return M[2 * spec.n:, 2 * spec.n:]
