import json
import pathlib

import numpy as np
import pytest

from rigidkit.errors import (NotOnSphere, OppositeRoots, PairingMismatch,
                             SideConditionViolated, UnknownSuite)
from rigidkit.matrixcore import DEFAULT_TOL, GroupSpec, identity
from rigidkit.generators import Cx, Heis, RVec, Scalar, param_from_json
from rigidkit.rootsystem import parse_root, roots
from rigidkit.relations import (anti_proportional, commutator_decompose,
                                run_suite, su2_transporter,
                                suite_ids, suite_side_condition, trace_pairing,
                                verify_all, wpair_refactor)

GOLDEN = pathlib.Path(__file__).parent / "golden" / "commutators.json"

SO43 = GroupSpec("so", 4, 3)
SU33 = GroupSpec("su", 3, 3)
SU43 = GroupSpec("su", 4, 3)


def test_commutator_empty_case():
    # L1-L2 and L3: no positive combination is a root, so [x, y] = id
    table = commutator_decompose(SO43, parse_root("L1-L2", SO43), Scalar(0.7),
                                 parse_root("L3", SO43), RVec((1.2,)))
    assert table.terms == ()
    assert table.residual <= 1e-12


def test_commutator_single_term_structure_constant():
    r = parse_root("L1-L2", SO43)
    p = parse_root("L2-L3", SO43)
    t, s = 0.8, -1.1
    table = commutator_decompose(SO43, r, Scalar(t), p, Scalar(s))
    assert len(table.terms) == 1
    q, par = table.terms[0]
    assert str(q) == "L1-L3"
    assert abs(abs(par.t) - abs(t * s)) < 1e-12  # structure constant is +-1


def test_commutator_multi_term_su():
    r = parse_root("L1-L2", SU43)
    p = parse_root("L2", SU43)
    table = commutator_decompose(SU43, r, Cx(0.8 - 0.5j), p, Heis(0.6, (0.3 + 0.2j,)))
    names = [str(q) for q, _ in table.terms]
    assert names == ["L1", "L1+L2", "2L1"]
    assert table.residual <= 1e-12


def test_commutator_same_root_heisenberg():
    p1 = Heis(0.6, (0.3 + 0.2j,))
    p2 = Heis(-0.3, (0.1 - 0.7j,))
    r = parse_root("L2", SU43)
    table = commutator_decompose(SU43, r, p1, r, p2)
    assert [str(q) for q, _ in table.terms] == ["2L2"]


def test_commutator_opposite_roots_rejected():
    r = parse_root("L1-L2", SU33)
    with pytest.raises(OppositeRoots):
        commutator_decompose(SU33, r, Cx(1.0 + 0j), parse_root("L2-L1", SU33), Cx(0.5 + 0j))
    # anti-proportional directions index a root group and its opposite
    with pytest.raises(OppositeRoots):
        commutator_decompose(SU43, parse_root("-L1", SU43), Heis(0.5, (0.1 + 0j,)),
                             parse_root("2L1", SU43), Scalar(1.0))
    assert anti_proportional(parse_root("-L1", SU43), parse_root("2L1", SU43))
    assert not anti_proportional(parse_root("L1", SU43), parse_root("2L1", SU43))


def test_commutator_golden_regression():
    golden = json.loads(GOLDEN.read_text())
    for key, rows in golden.items():
        fam, m, n = key.split(":")
        spec = GroupSpec(fam, int(m), int(n))
        for row in rows:
            r = parse_root(row["r"], spec)
            p = parse_root(row["p"], spec)
            a = param_from_json(row["a"])
            b = param_from_json(row["b"])
            table = commutator_decompose(spec, r, a, p, b)
            assert len(table.terms) == len(row["terms"])
            for (q, par), expected in zip(table.terms, row["terms"]):
                assert str(q) == expected["root"]
                want = param_from_json(expected["param"])
                got = np.array(list(vars(par).values()), dtype=object)
                for gv, wv in zip(_flatten(par), _flatten(want)):
                    assert abs(gv - wv) < 1e-9


def _flatten(par):
    if isinstance(par, Scalar):
        return [par.t]
    if isinstance(par, Cx):
        return [par.z]
    if isinstance(par, RVec):
        return list(par.a)
    return [par.t] + list(par.a)


def test_run_suite_h_mult():
    rep = run_suite(SO43, "h-mult-so", samples=100, seed=42)
    assert rep.passed and rep.max_residual < 1e-9
    assert rep.to_json()["suite"] == "h-mult-so"


def test_run_suite_center_su():
    rep = run_suite(SU33, "center-su", samples=1, seed=0)
    assert rep.passed
    # h_{2L3}(-1) itself: diag(1,1,-1,1,1,-1), not the identity, squares to it
    from rigidkit.generators import w_matrix
    w = w_matrix(SU33, parse_root("2L3", SU33), Scalar(-1.0))
    h = w @ w
    assert DEFAULT_TOL.close(h, np.diag([1, 1, -1, 1, 1, -1]).astype(complex))
    assert not DEFAULT_TOL.close(h, identity(6))
    assert DEFAULT_TOL.close(h @ h, identity(6))


def test_run_suite_side_condition():
    with pytest.raises(SideConditionViolated):
        run_suite(GroupSpec("so", 3, 3), "rot-so", samples=10, seed=7)
    with pytest.raises(SideConditionViolated):
        run_suite(SO43, "rot-so", samples=10, seed=7)  # m - n = 1
    with pytest.raises(SideConditionViolated):
        run_suite(SO43, "h-mult-su", samples=10, seed=7)
    with pytest.raises(UnknownSuite):
        run_suite(SO43, "no-such-suite")


def test_every_suite_reaches_some_spec():
    specs = [GroupSpec("so", 3, 3), GroupSpec("so", 6, 3), GroupSpec("su", 3, 3),
             GroupSpec("su", 6, 3)]
    for sid in suite_ids():
        assert any(suite_side_condition(spec, sid) is None for spec in specs), sid


def test_verify_all_covers_registry():
    report = verify_all(GroupSpec("su", 3, 3), samples=5, seed=1)
    seen = {entry["suite"] for entry in report["suites"]}
    assert seen == set(suite_ids())
    assert report["pass"]


def test_suites_pass_small_samples():
    for spec in (GroupSpec("so", 6, 3), GroupSpec("su", 6, 3)):
        for sid in suite_ids():
            if suite_side_condition(spec, sid) is not None:
                continue
            rep = run_suite(spec, sid, samples=8, seed=3)
            assert rep.passed, (sid, rep.failures[:1])
            assert rep.max_residual < 1e-9


# ---------------------------------------------------------------------------
# trace pairing


def test_trace_pairing_equal_vectors():
    for m in (4, 5, 6):
        spec = GroupSpec("su", m, 3)
        a = np.zeros(spec.tail, dtype=complex)
        a[0] = 1.0
        lhs, rhs = trace_pairing(spec, a, a)
        assert abs(lhs - spec.tail) < 1e-12  # reflection squared is the identity
        assert abs(lhs - rhs) < 1e-9


def test_trace_pairing_orthogonal_vectors():
    spec = GroupSpec("su", 6, 3)
    a = np.array([1.0, 0.0, 0.0], dtype=complex)
    b = np.array([0.0, 1.0, 0.0], dtype=complex)
    lhs, rhs = trace_pairing(spec, a, b)
    assert abs(lhs - (spec.tail - 4)) < 1e-12
    assert abs(lhs - rhs) < 1e-9


def test_trace_pairing_errors():
    with pytest.raises(NotOnSphere):
        trace_pairing(GroupSpec("su", 5, 3), np.array([2.0, 0.0]), np.array([1.0, 0.0]))
    with pytest.raises(SideConditionViolated):
        trace_pairing(GroupSpec("su", 3, 3), np.zeros(0), np.zeros(0))
    with pytest.raises(SideConditionViolated):
        trace_pairing(GroupSpec("so", 5, 3), np.array([1.0, 0]), np.array([1.0, 0]))


# ---------------------------------------------------------------------------
# SU(2) transporter


def test_su2_transporter_identity_case():
    a, b = (1.0 + 0j, 0j), (0j, 1.0 + 0j)
    g, h = su2_transporter(a, b, a, b)
    assert abs(abs(g) - 1) < 1e-12
    assert np.allclose(h @ np.array(a), g * np.array(a))
    assert np.allclose(h @ np.array(b), g * np.array(b))
    assert abs(np.linalg.det(h) - 1) < 1e-12


def test_su2_transporter_swap_case():
    a, b = np.array([1.0, 0j]), np.array([0j, 1.0])
    c, d = np.array([0j, 1.0]), np.array([1.0, 0j])
    g, h = su2_transporter(a, b, c, d)
    assert np.allclose(h @ a, g * c)
    assert np.allclose(h @ b, g * d)
    assert abs(np.linalg.det(h) - 1) < 1e-12
    assert DEFAULT_TOL.close(h.conj().T @ h, np.eye(2, dtype=complex))


def test_su2_transporter_random():
    rng = np.random.default_rng(55)
    for i in range(1000):
        a = rng.normal(size=2) + 1j * rng.normal(size=2)
        a /= np.linalg.norm(a)
        b = rng.normal(size=2) + 1j * rng.normal(size=2)
        b /= np.linalg.norm(b)
        # admissible target pair: rotate both by a random SU(2) and phase
        q = rng.normal(size=4)
        q /= np.linalg.norm(q)
        U = np.array([[q[0] + 1j * q[3], q[1] + 1j * q[2]],
                      [-q[1] + 1j * q[2], q[0] - 1j * q[3]]])
        phase = np.exp(1j * rng.uniform(-np.pi, np.pi))
        c, d = phase * (U @ a), phase * (U @ b)
        g, h = su2_transporter(a, b, c, d)
        assert np.linalg.norm(h @ a - g * c) < 1e-9
        assert np.linalg.norm(h @ b - g * d) < 1e-9
        assert abs(np.linalg.det(h) - 1) < 1e-9


def test_su2_transporter_pairing_mismatch():
    with pytest.raises(PairingMismatch):
        su2_transporter((1.0 + 0j, 0j), (1.0 + 0j, 0j), (1.0 + 0j, 0j), (0j, 1.0 + 0j))


# ---------------------------------------------------------------------------
# pair refactoring


def test_wpair_so_zero_angle():
    spec = GroupSpec("so", 6, 3)
    lead, trail = wpair_refactor(spec, 1, (1.0, 0.0, 0.0), 0.0, "to_imag")
    assert abs(np.linalg.norm(lead) - 1.0) < 1e-9


def test_wpair_so_random_certified():
    spec = GroupSpec("so", 6, 3)
    rng = np.random.default_rng(66)
    for _ in range(50):
        u = rng.normal(size=3)
        u /= np.linalg.norm(u)
        x = rng.uniform(-np.pi, np.pi)
        lead, trail = wpair_refactor(spec, 1, tuple(u), x, "to_imag")
        lead2, trail2 = wpair_refactor(spec, 1, tuple(u), x, "to_real")


def test_wpair_so_side_condition():
    with pytest.raises(SideConditionViolated):
        wpair_refactor(SO43, 1, (1.0, 0.0, 0.0), 0.1, "to_imag")  # m - n = 1


def test_wpair_su_random_certified():
    spec = GroupSpec("su", 5, 3)
    rng = np.random.default_rng(67)
    for _ in range(50):
        a, b, x = rng.uniform(0, 2 * np.pi, size=3)
        lead, trail = wpair_refactor(spec, 1, (a, b), x, "to_imag")
        lead2, trail2 = wpair_refactor(spec, 1, (a, b), x, "to_real")


def test_wpair_su_side_condition():
    with pytest.raises(SideConditionViolated):
        wpair_refactor(SU43, 1, (0.1, 0.2), 0.3, "to_imag")  # m - n = 1
