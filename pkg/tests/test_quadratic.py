from decimal import Decimal, getcontext
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gvfan import QuadraticNumber

getcontext().prec = 80

fractions = st.fractions(min_value=-1000, max_value=1000, max_denominator=50)


def decimal_value(q):
    a = Decimal(q.rational.numerator) / Decimal(q.rational.denominator)
    b = Decimal(q.irrational.numerator) / Decimal(q.irrational.denominator)
    return a + b * Decimal(q.radicand).sqrt()


@given(fractions, fractions, st.integers(0, 60), fractions)
def test_comparison_matches_high_precision(a, b, d, r):
    q = QuadraticNumber(a, b, d)
    exact = (q - r).sign()
    approx = decimal_value(q) - Decimal(r.numerator) / Decimal(r.denominator)
    if abs(approx) > Decimal("1e-40"):
        assert exact == (1 if approx > 0 else -1)
    else:
        assert exact == 0


@given(fractions, fractions, fractions, fractions, st.sampled_from([2, 3, 5, 21, 32]))
def test_field_operations(a, b, c, e, d):
    x, y = QuadraticNumber(a, b, d), QuadraticNumber(c, e, d)
    assert (x + y) - y == x
    assert x * y == y * x
    if y != 0:
        assert (x / y) * y == x


def test_perfect_square_radicand_collapses():
    q = QuadraticNumber(1, 2, 9)
    assert q.radicand == 0 and q == 7 and hash(q) == hash(7)


def test_sign_edge_cases():
    assert QuadraticNumber(-3, 1, 9).sign() == 0
    assert QuadraticNumber(Fraction(-5, 2), Fraction(1, 2), 5) < -1
    assert QuadraticNumber(Fraction(-5, 2), Fraction(1, 2), 5) > Fraction(-14, 10)


def test_mixed_radicands_rejected():
    with pytest.raises(ValueError):
        QuadraticNumber(0, 1, 2) + QuadraticNumber(0, 1, 3)
