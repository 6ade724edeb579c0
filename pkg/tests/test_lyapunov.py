import numpy as np
import pytest
from scipy.linalg import expm

from rigidkit.errors import UnknownRoot
from rigidkit.matrixcore import DEFAULT_TOL, GroupSpec, identity
from rigidkit.generators import Cx, Heis, RVec, Scalar, h_elem, h_rot, x_elem
from rigidkit.lyapunov import (CycleSpec, bracket_generation_check, dim_group,
                               exponent_table, neutral_membership, splitting,
                               stable_cycle_feasible, zero_multiplicity)
from rigidkit.rootsystem import RootLabel, embed, parse_root, root_value, roots
from rigidkit.relations import rand_param

SO43 = GroupSpec("so", 4, 3)
SU33 = GroupSpec("su", 3, 3)


def test_exponent_table_so43():
    table = exponent_table(SO43)
    nonzero = [(r, m) for r, m in table.entries if r is not None]
    assert len(nonzero) == 18 and all(m == 1 for _, m in nonzero)
    zero = [m for r, m in table.entries if r is None]
    assert zero == [3]
    assert table.total == 21 == 7 * 6 // 2


def test_exponent_table_su33():
    table = exponent_table(SU33)
    pm = [(r, m) for r, m in table.entries if r is not None and r.kind == "pm"]
    long_ = [(r, m) for r, m in table.entries if r is not None and r.kind == "long"]
    assert len(pm) == 12 and all(m == 2 for _, m in pm)
    assert len(long_) == 6 and all(m == 1 for _, m in long_)
    assert zero_multiplicity(SU33) == 5
    assert table.total == 35 == 6 * 6 - 1


def test_exponent_table_su53():
    spec = GroupSpec("su", 5, 3)
    table = exponent_table(spec)
    vec = [(r, m) for r, m in table.entries if r is not None and r.kind == "vec"]
    assert all(m == 2 * spec.tail == 4 for _, m in vec)
    assert table.total == 63 == 8 * 8 - 1


def test_exponent_table_totals_range():
    for family in ("so", "su"):
        for n in range(3, 9):
            for m in range(n, 9):
                spec = GroupSpec(family, m, n)
                assert exponent_table(spec).total == dim_group(spec)


def test_splitting_so43():
    rep = splitting(SO43, [3.0, 2.0, 1.0])
    assert (rep.stable_dim, rep.unstable_dim, rep.neutral_dim) == (9, 9, 3)
    assert rep.stable_dim + rep.unstable_dim + rep.neutral_dim == dim_group(SO43)


def test_splitting_su33():
    rep = splitting(SU33, [3.0, 2.0, 1.0])
    assert (rep.stable_dim, rep.unstable_dim, rep.neutral_dim) == (15, 15, 5)


def test_splitting_zero_vector_all_neutral():
    for spec in (SO43, SU33, GroupSpec("su", 5, 3)):
        rep = splitting(spec, [0.0] * spec.n)
        assert rep.neutral_dim == dim_group(spec)
        assert rep.stable_dim == rep.unstable_dim == 0


def test_splitting_neutral_basis_is_independent():
    from rigidkit.lyapunov import _rank_of_span
    for spec in (SO43, SU33, GroupSpec("su", 5, 3), GroupSpec("so", 6, 3)):
        rep = splitting(spec, [3.0, 2.0, 1.0])
        rank = _rank_of_span(list(rep.neutral_basis), spec.size)
        assert rank == rep.neutral_dim == zero_multiplicity(spec)
        # stable and unstable dimensions agree at regular points
        assert rep.stable_dim == rep.unstable_dim


def test_bracket_generation():
    ok, rank = bracket_generation_check(SO43)
    assert ok and rank == 21
    ok, rank = bracket_generation_check(SU33)
    assert ok and rank == 35


def test_bracket_generation_negative_control():
    for spec in (SO43, SU33):
        ok, rank = bracket_generation_check(spec, include_brackets=False)
        assert not ok
        assert rank == dim_group(spec) - zero_multiplicity(spec)


def test_stable_cycle_antipodal_infeasible():
    cycle = CycleSpec((parse_root("L1-L2", SO43), parse_root("L2-L1", SO43)))
    assert stable_cycle_feasible(SO43, cycle) is None


def test_stable_cycle_feasible_example():
    cycle = CycleSpec(tuple(parse_root(s, SO43) for s in ("L1-L2", "L2-L3", "L1")))
    witness = stable_cycle_feasible(SO43, cycle)
    assert witness is not None
    for r in cycle.roots:
        assert root_value(r, witness) < 0
    # the hand-checkable witness from the statement
    for r, v in zip(cycle.roots, (-1.0, -1.0, -3.0)):
        assert root_value(r, [-3.0, -2.0, -1.0]) == v


def test_stable_cycle_infeasible_with_antipodal_pair_present():
    cycle = CycleSpec(tuple(parse_root(s, SO43) for s in ("L1+L2", "-L1-L2", "L3")))
    assert stable_cycle_feasible(SO43, cycle) is None


def test_stable_cycle_unknown_root():
    with pytest.raises(UnknownRoot):
        stable_cycle_feasible(SO43, CycleSpec((RootLabel((2, 0, 0)),)))


def test_stable_cycle_sampler_agreement():
    # probabilistic cross-check against a box sampler (documented as such)
    rng = np.random.default_rng(77)
    for fam, m, n in [("so", 5, 3), ("su", 5, 4)]:
        spec = GroupSpec(fam, m, n)
        labels = [i.label for i in roots(spec)]
        for _ in range(40):
            cycle = CycleSpec(tuple(labels[int(rng.integers(len(labels)))]
                                    for _ in range(int(rng.integers(1, 7)))))
            witness = stable_cycle_feasible(spec, cycle)
            pts = rng.uniform(-1, 1, size=(20000, spec.n))
            coeffs = np.array([r.coeffs for r in cycle.roots], dtype=float)
            hits = np.all(pts @ coeffs.T < 0, axis=1)
            if witness is None:
                assert not hits.any()
            else:
                assert all(root_value(r, witness) < 0 for r in cycle.roots)


def test_neutral_membership_examples():
    assert neutral_membership(SO43, identity(7))
    h = h_elem(SO43, parse_root("L1-L2", SO43), Scalar(3.0), Scalar(1.0))
    assert neutral_membership(SO43, h)
    x = x_elem(SO43, parse_root("L1-L2", SO43), Scalar(1.0))
    assert not neutral_membership(SO43, x)
    # negative entries are outside the connected neutral group
    hneg = h_elem(SO43, parse_root("L1-L2", SO43), Scalar(-1.0), Scalar(1.0))
    assert not neutral_membership(SO43, hneg)


def test_neutral_membership_rotations():
    spec = GroupSpec("so", 6, 3)
    assert neutral_membership(spec, h_rot(spec, 1, (0.6, 0.8)))
    su = GroupSpec("su", 5, 3)
    assert neutral_membership(su, h_rot(su, 1, (0.6, 0.8), "imag"))


def test_neutral_membership_su_phases():
    su = GroupSpec("su", 4, 3)
    z = np.exp(0.3j)
    h = h_elem(su, parse_root("L1-L2", su), Cx(z), Cx(1.0 + 0j))
    assert neutral_membership(su, h)


def test_cartan_conjugation_rescales_parameters():
    # exp(T) x_r(p) exp(-T) = x_r(e^{r(t)} p), Heisenberg center scales doubly
    rng = np.random.default_rng(31)
    for spec in (GroupSpec("so", 5, 3), GroupSpec("su", 4, 3)):
        t = rng.uniform(-1, 1, size=spec.n)
        D = expm(embed(spec, t))
        Dinv = np.linalg.inv(D)
        for info in roots(spec):
            p = rand_param(spec, info.label, rng)
            val = root_value(info.label, t)
            conj = D @ x_elem(spec, info.label, p) @ Dinv
            if isinstance(p, Scalar) and info.label.kind == "long":
                scaled = Scalar(np.exp(val) * p.t)
            elif isinstance(p, Scalar):
                scaled = Scalar(np.exp(val) * p.t)
            elif isinstance(p, Cx):
                scaled = Cx(np.exp(val) * p.z)
            elif isinstance(p, RVec):
                scaled = RVec(tuple(np.exp(val) * np.asarray(p.a)))
            else:
                scaled = Heis(np.exp(2 * val) * p.t,
                              tuple(np.exp(val) * np.asarray(p.a)))
            assert DEFAULT_TOL.close(conj, x_elem(spec, info.label, scaled))
