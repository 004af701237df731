import dataclasses

import pytest

from gvfan import (
    ExchangeMatrix,
    FiniteTypeVerdict,
    build_fan,
    check_complete,
    enumerate_seeds,
    find_witness,
    lattice_cover,
    verify_witness,
)
from gvfan.transition import transport_point_along_path

from matrices import NAMED, rank2, suite


def test_rank2_witness():
    cert = find_witness(rank2(4, 1))
    assert cert.path == () and cert.pair == (0, 1)
    assert cert.witness == (-2, 4)


def test_markov_witness():
    cert = find_witness(ExchangeMatrix(NAMED["Markov"]))
    assert cert.path == ()
    assert (cert.params.b, cert.params.c) == (2, 2)
    assert sorted(cert.witness) == [-2, 0, 2]
    assert cert.witness == cert.witness_at_bprime


def test_orientation_swap():
    # the violating pair has a negative upper-right entry
    cert = find_witness(ExchangeMatrix([[0, -4], [1, 0]]))
    assert cert.pair == (1, 0)
    assert (cert.params.b, cert.params.c) == (4, 1)
    assert cert.witness == (4, -2)
    assert verify_witness(cert, 8).passed


def test_finite_type_has_no_witness():
    res = find_witness(rank2(1, 1))
    assert isinstance(res, FiniteTypeVerdict)
    assert res.finite and res.class_size == 2


def test_verify_rank2_depth12():
    rep = verify_witness(find_witness(rank2(4, 1)), depth=12)
    assert rep.passed, rep.failed()
    assert rep.cones_examined == 25
    assert "12" in rep.bound and "not examined" in rep.bound


def test_verify_markov():
    rep = verify_witness(find_witness(ExchangeMatrix(NAMED["Markov"])), depth=6)
    assert rep.passed, rep.failed()


def test_tampered_certificate_fails_badlands_check():
    cert = dataclasses.replace(find_witness(rank2(4, 1)), witness=(-1, 1))
    rep = verify_witness(cert, depth=12)
    failed = {c.name for c in rep.failed()}
    assert "badlands" in failed
    assert "enumeration" in failed
    assert not rep.passed


@pytest.mark.parametrize("name, b, finite", [t for t in suite() if not t[2]])
def test_certificates_sound(name, b, finite):
    cert = find_witness(b)
    i, j = cert.pair
    bprime = cert.bprime
    assert bprime[i, j] == cert.params.c > 0 and bprime[j, i] == -cert.params.b
    assert transport_point_along_path(cert.witness, b, cert.path) == cert.witness_at_bprime
    assert all(isinstance(x, int) for x in cert.witness)
    rep = verify_witness(cert, depth=10)
    assert rep.passed, rep.failed()


@pytest.mark.parametrize("name, b, finite", suite())
def test_three_way_consistency(name, b, finite):
    res = find_witness(b)
    if finite:
        assert isinstance(res, FiniteTypeVerdict)
        f = build_fan(enumerate_seeds(b))
        assert check_complete(f).complete
        assert lattice_cover(f, 3).covered
    else:
        f = build_fan(enumerate_seeds(b, max_depth=6))
        assert not check_complete(f).complete
        rep = lattice_cover(f, max(map(abs, res.witness)) + 1)
        assert not rep.covered
