"""Exit criteria for the package; each test carries its criterion number.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import random

import pytest

from gvfan import (
    BudgetExceeded,
    ExtendedMatrix,
    Rank2Params,
    build_fan,
    check_complete,
    decide_finite_type,
    enumerate_seeds,
    find_witness,
    lattice_cover,
    limiting_slopes,
    mutate_matrix,
    mutate_seed,
    rank2_fan,
    transport_fan,
    verify_witness,
)
from gvfan.io import report_to_json
from gvfan.linalg import det
from gvfan.matrix import mutate_along
from gvfan.quadratic import QuadraticNumber
from gvfan.rank2 import in_badlands, ray_sequences, slope
from gvfan.transition import TransitionMap

from matrices import finite_suite, rank2, suite
from oracles import oracle_g_tuples

SUITE = suite()
FINITE = finite_suite()
ENUM_BUDGET = 5000
TRUNCATION_DEPTH = 8


def _fan_for(b):
    try:
        return build_fan(enumerate_seeds(b, budget=ENUM_BUDGET))
    except BudgetExceeded:
        return build_fan(enumerate_seeds(b, budget=None, max_depth=TRUNCATION_DEPTH))


@pytest.mark.criterion(1, "finite type <=> complete fan <=> Z^n covered (R=6) on the matrix suite")
def test_finite_complete_covered_agree():
    assert len(SUITE) >= 20
    for name, b, expected in SUITE:
        finite = decide_finite_type(b).finite
        fan = _fan_for(b)
        complete = check_complete(fan).complete
        covered = lattice_cover(fan, 6).covered
        print(f"  {name:12} finite={finite} complete={complete} covered={covered}")
        assert finite == complete == covered, name
        assert finite == expected, name


@pytest.mark.criterion(2, "rank-2 maximal g-cone counts 5, 6, 8 for bc = 1, 2, 3")
@pytest.mark.parametrize("b, c, count", [(1, 1, 5), (2, 1, 6), (3, 1, 8)])
def test_rank2_counts(b, c, count):
    fan = rank2_fan(Rank2Params(b, c))
    oracle = oracle_g_tuples([[0, c], [-b, 0]], 16)
    assert len(fan) == count
    assert len(oracle) == count
    assert fan.canonical() == {tuple(sorted(t)) for t in oracle}


@pytest.mark.criterion(3, "exact limiting slopes; 30 ray slopes per side monotone, none inside (s-, s+)")
def test_limiting_slopes():
    s_minus, s_plus = limiting_slopes(Rank2Params(4, 1))
    assert s_minus == s_plus == -2
    p = Rank2Params(5, 1)
    s_minus, s_plus = limiting_slopes(p)
    assert s_minus == QuadraticNumber(-5, -1, 5) / 2
    assert s_plus == QuadraticNumber(-5, 1, 5) / 2

    for params in (Rank2Params(4, 1), p):
        lo, hi = limiting_slopes(params)
        side_a, side_b = ray_sequences(params, 32)
        a = [slope(r) for r in side_a if r[0] < 0][:30]
        z = [slope(r) for r in side_b if r[0] < 0][:30]
        assert len(a) == len(z) == 30
        assert all(x < y for x, y in zip(a, a[1:])) and all(x < lo for x in a)
        assert all(x > y for x, y in zip(z, z[1:])) and all(x > hi for x in z)
        assert all((lo - x) > (lo - y) for x, y in zip(a, a[1:]))
        assert all((x - hi) > (y - hi) for x, y in zip(z, z[1:]))
        for r in side_a + side_b:
            assert not in_badlands(r, params)
            if r[0] < 0 < r[1]:
                assert not (lo < slope(r) < hi)


@pytest.mark.criterion(4, "witness (-2,b) for B_4,1 and B_5,1; verify_witness passes at depth 12")
@pytest.mark.parametrize("b, expected", [(4, (-2, 4)), (5, (-2, 5))])
def test_canonical_witness(b, expected):
    cert = find_witness(rank2(b, 1))
    assert cert.witness == expected
    rep = verify_witness(cert, depth=12)
    assert rep.passed, rep.failed()
    fan = build_fan(enumerate_seeds(rank2(b, 1), budget=None, max_depth=12))
    assert all(not fan.cone(i).contains(expected) for i in range(len(fan)))


@pytest.mark.criterion(5, "transition roundtrip on 1000 random vectors; transported fan = enumerated fan")
def test_transition_identities():
    rng = random.Random(2024)
    for name, b, _ in SUITE:
        for k in range(b.n):
            fwd, inv = TransitionMap(b, k), TransitionMap(b, k, inverse=True)
            for _ in range(1000):
                v = tuple(rng.randint(-1000, 1000) for _ in range(b.n))
                assert inv(fwd(v)) == v, (name, k, v)
    for name, b in FINITE:
        fan = build_fan(enumerate_seeds(b))
        for k in range(b.n):
            direct = build_fan(enumerate_seeds(mutate_matrix(b, k)))
            assert transport_fan(fan, b, k).canonical() == direct.canonical(), (name, k)


@pytest.mark.criterion(6, "det G = +-1, c-vector sign-coherence, mutation involutions on every seed")
def test_structural_invariants():
    violations = []
    for name, b in FINITE:
        enum = enumerate_seeds(b)
        for idx, s in enumerate(enum.seeds):
            if det(s.g_matrix()) not in (1, -1):
                violations.append((name, idx, "det"))
            for c in s.c_vectors():
                if not (all(x >= 0 for x in c) or all(x <= 0 for x in c)):
                    violations.append((name, idx, "sign"))
            upper = s.c_matrix.upper
            for k in range(b.n):
                if mutate_seed(mutate_seed(s, k), k) != s:
                    violations.append((name, idx, "seed involution"))
                if mutate_matrix(mutate_matrix(upper, k), k) != upper:
                    violations.append((name, idx, "matrix involution"))
                if mutate_matrix(mutate_matrix(s.c_matrix, k), k) != s.c_matrix:
                    violations.append((name, idx, "extended involution"))
    assert violations == []


@pytest.mark.criterion(7, "verification reports its depth bound; general statement not claimed")
def test_partial_verification_is_stated():
    cert = find_witness(rank2(5, 1))
    rep = verify_witness(cert, depth=7)
    doc = report_to_json(rep)
    assert doc["partial"] is True
    assert doc["depth"] == 7
    assert "7 mutations" in rep.bound and "not examined" in rep.bound
    assert "badlands" in rep.bound
    assert {c.name for c in rep.checks} >= {"enumeration", "badlands"}
