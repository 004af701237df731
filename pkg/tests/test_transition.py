import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gvfan import (
    ConeStraddlesWall,
    ExchangeMatrix,
    Fan,
    TransitionMap,
    apply_transition,
    build_fan,
    contains_point,
    enumerate_seeds,
    mutate_matrix,
    transport_fan,
    transport_point_along_path,
)

from matrices import NAMED, finite_suite, rank2, suite

A2 = ExchangeMatrix([[0, 1], [-1, 0]])


def test_forward_example():
    assert apply_transition(TransitionMap(A2, 0), (1, 0)) == (-1, 0)


@given(st.sampled_from([m for _, m, _ in suite()]), st.data())
def test_fixed_when_vk_zero(b, data):
    k = data.draw(st.integers(0, b.n - 1))
    v = list(data.draw(st.lists(st.integers(-20, 20), min_size=b.n, max_size=b.n)))
    v[k] = 0
    assert apply_transition(TransitionMap(b, k), v) == tuple(v)


@pytest.mark.parametrize("name, b, finite", suite())
def test_roundtrip(name, b, finite):
    rng = random.Random(name)
    for k in range(b.n):
        fwd, inv = TransitionMap(b, k), TransitionMap(b, k, inverse=True)
        for _ in range(1000):
            v = tuple(rng.randint(-100, 100) for _ in range(b.n))
            assert inv(fwd(v)) == v
            assert fwd(inv(v)) == v


@pytest.mark.parametrize("name, b, finite", suite())
def test_linear_on_half_spaces(name, b, finite):
    rng = random.Random(name + "lin")
    for k in range(b.n):
        t = TransitionMap(b, k)
        for _ in range(100):
            sign = rng.choice([1, -1])
            u = [rng.randint(-30, 30) for _ in range(b.n)]
            w = [rng.randint(-30, 30) for _ in range(b.n)]
            u[k], w[k] = sign * abs(u[k]), sign * abs(w[k])
            s = [x + y for x, y in zip(u, w)]
            assert t(s) == tuple(x + y for x, y in zip(t(u), t(w)))


def test_transport_orthant():
    f = Fan.from_cones([[(1, 0), (0, 1)]])
    assert transport_fan(f, A2, 0).canonical() == {((-1, 0), (0, 1))}


def test_transport_refuses_straddling_cone():
    f = Fan.from_cones([[(1, 0), (-1, 1)]])
    with pytest.raises(ConeStraddlesWall):
        transport_fan(f, A2, 0)


@pytest.mark.parametrize("name, b", finite_suite())
def test_transport_commutes_with_enumeration(name, b):
    f = build_fan(enumerate_seeds(b))
    for k in range(b.n):
        moved = transport_fan(f, b, k)
        direct = build_fan(enumerate_seeds(mutate_matrix(b, k)))
        assert moved == direct
        back = transport_fan(moved, mutate_matrix(b, k), k)
        assert back == f


@pytest.mark.parametrize("name, b", finite_suite())
def test_support_preserved_at_lattice_points(name, b):
    rng = random.Random(name)
    for k in range(b.n):
        g = build_fan(enumerate_seeds(mutate_matrix(b, k)))
        t = TransitionMap(b, k)
        for _ in range(50):
            z = tuple(rng.randint(-5, 5) for _ in range(b.n))
            assert contains_point(g, t(z)).inside


def test_support_preserved_for_truncated_infinite_fan():
    # the rank-2 badlands point maps to a point outside the (truncated) fan of mu_k B
    b = rank2(4, 1)
    for k in range(2):
        z = apply_transition(TransitionMap(b, k), (-2, 4))
        g = build_fan(enumerate_seeds(mutate_matrix(b, k), max_depth=10))
        assert not contains_point(g, z).inside


def test_path_transport():
    b = ExchangeMatrix(NAMED["Markov"])
    rng = random.Random(5)
    assert transport_point_along_path((1, 2, 3), b, []) == (1, 2, 3)
    assert transport_point_along_path((1, -2, 3), b, [0, 0]) == (1, -2, 3)
    for _ in range(200):
        path = [rng.randrange(3) for _ in range(rng.randrange(6))]
        v = tuple(rng.randint(-9, 9) for _ in range(3))
        w = transport_point_along_path(v, b, path)
        assert transport_point_along_path(w, b, path, inverse=True) == v
        assert all(isinstance(x, int) for x in w)
    with pytest.raises(IndexError):
        transport_point_along_path((0, 0, 0), b, [3])
