"""g-vector seeds, their mutation, and breadth-first enumeration of all seeds."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import BudgetExceeded
from .matrix import ExchangeMatrix, ExtendedMatrix, mutate_matrix, positive_part

Vector = tuple[int, ...]

DEFAULT_SEED_BUDGET = 1_000_000


@dataclass(frozen=True)
class GVectorSeed:
    """An extended matrix C with an ordered tuple of g-vectors.

    ``ambient`` is the fixed initial exchange matrix whose columns enter the
    g-vector mutation rule.  It is shared by every seed of an enumeration and
    takes no part in equality.
    """

    ambient: ExchangeMatrix = field(compare=False, repr=False)
    c_matrix: ExtendedMatrix
    g_tuple: tuple[Vector, ...]

    @property
    def n(self) -> int:
        return self.ambient.n

    @property
    def key(self) -> tuple:
        return (self.c_matrix.entries, self.g_tuple)

    def g_matrix(self) -> tuple[Vector, ...]:
        """Rows of the n x n matrix whose columns are the g-vectors."""
        n = self.n
        return tuple(tuple(self.g_tuple[j][i] for j in range(n)) for i in range(n))

    def c_vectors(self) -> tuple[Vector, ...]:
        """Columns of the lower n x n block of C."""
        lower = self.c_matrix.lower
        return tuple(tuple(row[j] for row in lower) for j in range(self.n))

    def mutate(self, k: int) -> "GVectorSeed":
        return mutate_seed(self, k)


def initial_seed(b: ExchangeMatrix) -> GVectorSeed:
    n = b.n
    basis = tuple(tuple(int(i == j) for i in range(n)) for j in range(n))
    return GVectorSeed(b, ExtendedMatrix.principal(b), basis)


def mutate_seed(s: GVectorSeed, k: int) -> GVectorSeed:
    """Seed mutation at the 0-based index k.

    The new g_k is  -g_k + sum_i [c_ik]_+ g_i - sum_j [c_{n+j,k}]_+ b_j  with the
    c entries taken before mutation and b_j the j-th column of the ambient matrix.
    """
    n = s.n
    if not 0 <= k < n:
        raise IndexError(f"mutation index {k} out of range for rank {n}")
    c = s.c_matrix.entries
    g = s.g_tuple
    b = s.ambient.entries
    new = [-x for x in g[k]]
    for i in range(n):
        w = positive_part(c[i][k])
        if w:
            gi = g[i]
            for t in range(n):
                new[t] += w * gi[t]
    for j in range(n):
        w = positive_part(c[n + j][k])
        if w:
            for t in range(n):
                new[t] -= w * b[t][j]
    g_new = g[:k] + (tuple(new),) + g[k + 1 :]
    return GVectorSeed(s.ambient, mutate_matrix(s.c_matrix, k), g_new)


def seed_along(b: ExchangeMatrix, path: Iterable[int]) -> GVectorSeed:
    s = initial_seed(b)
    for k in path:
        s = mutate_seed(s, k)
    return s


@dataclass
class SeedEnumeration:
    """Labeled seeds reached by BFS together with the exchange-graph edges.

    ``edges`` holds triples (source index, k, target index).  ``exhausted`` is
    True when no further seeds exist, i.e. the enumeration is the full set.
    """

    ambient: ExchangeMatrix
    seeds: list[GVectorSeed]
    edges: list[tuple[int, int, int]]
    depths: list[int]
    exhausted: bool
    max_depth: int | None = None

    def __len__(self):
        return len(self.seeds)

    def g_tuples(self) -> set[tuple[Vector, ...]]:
        """Distinct ordered g-vector tuples."""
        return {s.g_tuple for s in self.seeds}

    def unordered_g_tuples(self) -> set[frozenset[Vector]]:
        """Distinct g-vector tuples up to reordering."""
        return {frozenset(s.g_tuple) for s in self.seeds}


def enumerate_seeds(
    b: ExchangeMatrix,
    budget: int | None = DEFAULT_SEED_BUDGET,
    max_depth: int | None = None,
    order: Sequence[int] | None = None,
) -> SeedEnumeration:
    """Breadth-first enumeration of labeled seeds from the initial seed of ``b``.

    Deduplication is on exact equality of (C, g-tuple).  With ``max_depth`` the
    search stops at that mutation distance and reports whether anything new
    lies beyond it; without it the search must exhaust the seeds or raise
    BudgetExceeded once more than ``budget`` seeds were found.  ``order`` fixes
    the order in which mutation directions are tried (default 0..n-1).
    """
    n = b.n
    order = tuple(range(n)) if order is None else tuple(order)
    start = initial_seed(b)
    index = {start.key: 0}
    seeds = [start]
    depths = [0]
    edges: list[tuple[int, int, int]] = []
    queue = deque([0])
    exhausted = True
    while queue:
        src = queue.popleft()
        s = seeds[src]
        at_limit = max_depth is not None and depths[src] >= max_depth
        for k in order:
            child = mutate_seed(s, k)
            dst = index.get(child.key)
            if dst is None:
                if at_limit:
                    exhausted = False
                    continue
                dst = len(seeds)
                index[child.key] = dst
                seeds.append(child)
                depths.append(depths[src] + 1)
                if budget is not None and len(seeds) > budget:
                    raise BudgetExceeded(
                        f"more than {budget} seeds; the matrix is probably of infinite type",
                        visited=len(seeds),
                    )
                queue.append(dst)
            edges.append((src, k, dst))
    return SeedEnumeration(b, seeds, edges, depths, exhausted, max_depth)
