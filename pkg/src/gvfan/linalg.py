"""Small exact linear algebra over the integers and rationals."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse(rows: Sequence[Sequence[int]]) -> list[list[Fraction]] | None:
    """Rational inverse by Gauss-Jordan elimination, or None if singular."""
    n = len(rows)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def adjugate(rows: Sequence[Sequence[int]]) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Return (adj, d) with adj an integer matrix and adj * rows = d * I, d = det != 0."""
    d = det(rows)
    if d == 0:
        raise ZeroDivisionError("singular matrix")
    inv = inverse(rows)
    adj = tuple(tuple(int(x * d) for x in r) for r in inv)
    return adj, d


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = gcd(*v)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in v)
