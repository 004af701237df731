"""
Exact integer exchange matrices, matrix mutation and the finite-type test.

Matrices are stored as tuples of tuples of Python ints, so entries never
overflow however far a mutation sequence drives them.  Indices are 0-based
throughout the library; the CLI and the JSON formats are 1-based.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

from .errors import BudgetExceeded, InvalidInput, NonSkewSymmetrizable

Rows = tuple[tuple[int, ...], ...]

DEFAULT_CLASS_BUDGET = 1_000_000


def _as_rows(entries: Iterable[Iterable[int]]) -> Rows:
    rows = []
    for row in entries:
        out = []
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                if isinstance(x, Fraction) and x.denominator == 1:
                    x = x.numerator
                else:
                    raise InvalidInput(f"matrix entries must be integers, got {x!r}")
            out.append(int(x))
        rows.append(tuple(out))
    return tuple(rows)


def positive_part(a: int) -> int:
    return a if a > 0 else 0


def find_skew_symmetrizer(entries: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Return the minimal positive integer vector d with d_i b_ij = -d_j b_ji.

    Ratios d_j/d_i are propagated along a spanning forest of the graph with an
    edge {i, j} whenever b_ij != 0; remaining edges are then verified.  Each
    connected component is scaled to the smallest positive integer solution,
    which makes the whole vector have gcd 1.

    Raises NonSkewSymmetrizable if the sign pattern or a cycle is inconsistent.
    """
    rows = _as_rows(entries)
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise InvalidInput("exchange matrix must be square and non-empty")
    for i in range(n):
        if rows[i][i] != 0:
            raise NonSkewSymmetrizable(f"diagonal entry ({i}, {i}) is nonzero")
        for j in range(i + 1, n):
            a, b = rows[i][j], rows[j][i]
            if (a == 0) != (b == 0) or (a != 0 and (a > 0) == (b > 0)):
                raise NonSkewSymmetrizable(
                    f"entries ({i}, {j}) = {a} and ({j}, {i}) = {b} are not sign-skew-symmetric"
                )

    ratio: list[Fraction | None] = [None] * n
    d = [0] * n
    for root in range(n):
        if ratio[root] is not None:
            continue
        ratio[root] = Fraction(1)
        component = [root]
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if rows[i][j] == 0:
                    continue
                # d_j = -d_i b_ij / b_ji
                want = -ratio[i] * rows[i][j] / rows[j][i]
                if ratio[j] is None:
                    ratio[j] = want
                    component.append(j)
                    queue.append(j)
                elif ratio[j] != want:
                    raise NonSkewSymmetrizable(
                        f"no consistent symmetrizer around the cycle through ({i}, {j})"
                    )
        den = lcm(*(ratio[i].denominator for i in component))
        ints = [int(ratio[i] * den) for i in component]
        g = gcd(*ints)
        for i, v in zip(component, ints):
            d[i] = v // g
    return tuple(d)


@dataclass(frozen=True)
class ExchangeMatrix:
    """A skew-symmetrizable n x n integer matrix together with its minimal symmetrizer."""

    entries: Rows
    skew_symmetrizer: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        rows = _as_rows(self.entries)
        object.__setattr__(self, "entries", rows)
        if not self.skew_symmetrizer:
            object.__setattr__(self, "skew_symmetrizer", find_skew_symmetrizer(rows))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "ExchangeMatrix":
        return cls(_as_rows(rows))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def is_symmetrized_by(self, d: Sequence[int]) -> bool:
        n = self.n
        return all(
            d[i] * self.entries[i][j] == -d[j] * self.entries[j][i]
            for i in range(n)
            for j in range(n)
        )

    def permuted(self, perm: Sequence[int]) -> "ExchangeMatrix":
        """Simultaneous row/column permutation: new (i, j) entry is old (perm[i], perm[j])."""
        return ExchangeMatrix(
            tuple(tuple(self.entries[p][q] for q in perm) for p in perm)
        )

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


@dataclass(frozen=True)
class ExtendedMatrix:
    """A 2n x n integer matrix whose upper n x n block is skew-symmetrizable."""

    entries: Rows

    def __post_init__(self):
        rows = _as_rows(self.entries)
        object.__setattr__(self, "entries", rows)
        if not rows or len(rows) != 2 * len(rows[0]) or any(len(r) != len(rows[0]) for r in rows):
            raise InvalidInput("extended matrix must have shape 2n x n")
        find_skew_symmetrizer(rows[: self.n])

    @classmethod
    def principal(cls, b: ExchangeMatrix) -> "ExtendedMatrix":
        """Stack b on top of the n x n identity."""
        n = b.n
        lower = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        return cls(b.entries + lower)

    @property
    def n(self) -> int:
        return len(self.entries[0])

    @property
    def upper(self) -> ExchangeMatrix:
        return ExchangeMatrix(self.entries[: self.n])

    @property
    def lower(self) -> Rows:
        return self.entries[self.n :]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


AnyMatrix = Union[ExchangeMatrix, ExtendedMatrix]


def _mutate_rows(rows: Rows, n: int, k: int) -> Rows:
    if not 0 <= k < n:
        raise IndexError(f"mutation index {k} out of range for rank {n}")
    pivot = rows[k]
    out = []
    for i, row in enumerate(rows):
        bik = row[k]
        if i == k:
            out.append(tuple(-x for x in row))
            continue
        new = []
        for j, bij in enumerate(row):
            if j == k:
                new.append(-bij)
            else:
                bkj = pivot[j]
                new.append(bij + bik * positive_part(bkj) + positive_part(-bik) * bkj)
        out.append(tuple(new))
    return tuple(out)


def mutate_matrix(m: AnyMatrix, k: int) -> AnyMatrix:
    """Matrix mutation at the 0-based index k.  Returns a new object of the same type."""
    if isinstance(m, ExchangeMatrix):
        # mutation keeps the same symmetrizer
        return ExchangeMatrix(_mutate_rows(m.entries, m.n, k), m.skew_symmetrizer)
    if isinstance(m, ExtendedMatrix):
        new = object.__new__(ExtendedMatrix)
        object.__setattr__(new, "entries", _mutate_rows(m.entries, m.n, k))
        return new
    raise TypeError(f"cannot mutate {type(m).__name__}")


def mutate_along(m: AnyMatrix, path: Iterable[int]) -> AnyMatrix:
    for k in path:
        m = mutate_matrix(m, k)
    return m


def first_violation(rows: Rows) -> tuple[int, int] | None:
    """First pair i < j (lexicographic) with |b_ij b_ji| >= 4, or None."""
    n = len(rows)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(rows[i][j] * rows[j][i]) >= 4:
                return (i, j)
    return None


@dataclass(frozen=True)
class FiniteTypeVerdict:
    """Outcome of the 2-finiteness search.

    For finite verdicts ``class_size`` counts the (labeled) mutation class.
    For infinite verdicts ``path`` is a shortest mutation sequence from the
    input to a matrix whose ``pair`` entries violate 2-finiteness.
    """

    finite: bool
    class_size: int | None = None
    path: tuple[int, ...] = ()
    pair: tuple[int, int] | None = None

    @property
    def kind(self) -> str:
        return "finite" if self.finite else "infinite"

    def replay(self, b: ExchangeMatrix) -> ExchangeMatrix:
        return mutate_along(b, self.path)


def decide_finite_type(
    b: ExchangeMatrix, max_class: int = DEFAULT_CLASS_BUDGET
) -> FiniteTypeVerdict:
    """Breadth-first search of the mutation class of ``b``.

    Children are generated in index order with a FIFO frontier, so the first
    violation found lies at minimal depth.  Raises BudgetExceeded if more than
    ``max_class`` matrices are visited without a violation.
    """
    pair = first_violation(b.entries)
    if pair is not None:
        return FiniteTypeVerdict(False, path=(), pair=pair)
    n = b.n
    parent: dict[Rows, tuple[Rows, int] | None] = {b.entries: None}
    queue = deque([b.entries])
    while queue:
        cur = queue.popleft()
        for k in range(n):
            child = _mutate_rows(cur, n, k)
            if child in parent:
                continue
            parent[child] = (cur, k)
            pair = first_violation(child)
            if pair is not None:
                path = []
                node = child
                while parent[node] is not None:
                    node, step = parent[node]
                    path.append(step)
                return FiniteTypeVerdict(False, path=tuple(reversed(path)), pair=pair)
            if len(parent) > max_class:
                raise BudgetExceeded(
                    f"mutation class exceeds budget of {max_class} matrices", visited=len(parent)
                )
            queue.append(child)
    return FiniteTypeVerdict(True, class_size=len(parent))
