"""Exact real quadratic numbers a + b*sqrt(d) with rational a, b."""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from math import isqrt


def _sign(x) -> int:
    return (x > 0) - (x < 0)


@total_ordering
class QuadraticNumber:
    """``rational + irrational * sqrt(radicand)`` with Fraction coefficients.

    Comparisons are exact: the sign of x + y*sqrt(d) is found by squaring,
    never by floating point.  Numbers with different radicands only mix when
    one of them is rational.
    """

    __slots__ = ("rational", "irrational", "radicand")

    def __init__(self, rational, irrational=0, radicand: int = 0):
        if radicand < 0:
            raise ValueError("radicand must be non-negative")
        rational = Fraction(rational)
        irrational = Fraction(irrational)
        r = isqrt(radicand)
        if r * r == radicand:
            rational += irrational * r
            irrational = Fraction(0)
            radicand = 0
        if irrational == 0:
            radicand = 0
        self.rational = rational
        self.irrational = irrational
        self.radicand = radicand

    @classmethod
    def coerce(cls, x) -> "QuadraticNumber":
        return x if isinstance(x, cls) else cls(x)

    def _common(self, other):
        other = self.coerce(other)
        if self.radicand and other.radicand and self.radicand != other.radicand:
            raise ValueError(
                f"cannot combine sqrt({self.radicand}) and sqrt({other.radicand})"
            )
        return other, self.radicand or other.radicand

    def __add__(self, other):
        other, d = self._common(other)
        return QuadraticNumber(self.rational + other.rational, self.irrational + other.irrational, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.rational, -self.irrational, self.radicand)

    def __sub__(self, other):
        return self + (-self.coerce(other))

    def __rsub__(self, other):
        return self.coerce(other) - self

    def __mul__(self, other):
        other, d = self._common(other)
        a, b, c, e = self.rational, self.irrational, other.rational, other.irrational
        return QuadraticNumber(a * c + b * e * d, a * e + b * c, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other, d = self._common(other)
        c, e = other.rational, other.irrational
        norm = c * c - e * e * d
        if norm == 0:
            raise ZeroDivisionError("division by zero")
        return self * QuadraticNumber(c / norm, -e / norm, d)

    def sign(self) -> int:
        x, y, d = self.rational, self.irrational, self.radicand
        sx, sy = _sign(x), _sign(y)
        if sy == 0:
            return sx
        if sx == 0 or sx == sy:
            return sy
        # opposite signs: compare x^2 with d y^2
        return sx * _sign(x * x - d * y * y)

    def __eq__(self, other):
        try:
            return (self - other).sign() == 0
        except (TypeError, ValueError):
            return NotImplemented

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __hash__(self):
        if not self.irrational:
            return hash(self.rational)
        return hash((self.rational, self.irrational, self.radicand))

    def __float__(self):
        return float(self.rational) + float(self.irrational) * self.radicand**0.5

    def __str__(self):
        if not self.irrational:
            return str(self.rational)
        op = "+" if self.irrational > 0 else "-"
        return f"{self.rational} {op} {abs(self.irrational)}*sqrt({self.radicand})"

    def __repr__(self):
        if not self.irrational:
            return f"QuadraticNumber({self.rational})"
        return f"QuadraticNumber({self.rational} + {self.irrational}*sqrt({self.radicand}))"
