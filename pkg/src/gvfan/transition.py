"""
Piecewise-linear transition maps relating the g-fans of B and mu_k(B).

The forward map for (B, k) sends v to v' with v'_k = -v_k and

    v'_i = v_i + [b_ik]_+ v_k - b_ik min(v_k, 0)      (i != k).

It is linear on each half-space v_k >= 0 and v_k <= 0.  Its inverse is the
forward map for (mu_k(B), k).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ConeStraddlesWall, InvalidInput
from .fan import Fan
from .matrix import ExchangeMatrix, mutate_matrix, positive_part

Number = int | Fraction


@dataclass(frozen=True)
class TransitionMap:
    base: ExchangeMatrix
    k: int
    inverse: bool = False

    def __post_init__(self):
        if not 0 <= self.k < self.base.n:
            raise IndexError(f"mutation index {self.k} out of range for rank {self.base.n}")

    @property
    def target(self) -> ExchangeMatrix:
        """Matrix whose fan is the image: mu_k(base) forward, base itself inverse."""
        return self.base if self.inverse else mutate_matrix(self.base, self.k)

    def __call__(self, v: Sequence[Number]) -> tuple[Number, ...]:
        return apply_transition(self, v)


def _forward(b: ExchangeMatrix, k: int, v: Sequence[Number]) -> tuple[Number, ...]:
    vk = v[k]
    neg = min(vk, 0)
    out = []
    for i, vi in enumerate(v):
        if i == k:
            out.append(-vk)
        else:
            bik = b.entries[i][k]
            out.append(vi + positive_part(bik) * vk - bik * neg)
    return tuple(out)


def apply_transition(t: TransitionMap, v: Sequence[Number]) -> tuple[Number, ...]:
    if len(v) != t.base.n:
        raise InvalidInput(f"vector of dimension {len(v)} given for rank {t.base.n}")
    b = mutate_matrix(t.base, t.k) if t.inverse else t.base
    return _forward(b, t.k, v)


def transport_fan(f: Fan, b: ExchangeMatrix, k: int) -> Fan:
    """Image of a g-fan of b under the forward map, as a fan for mu_k(b).

    Every cone must lie in one linearity domain of the map; a cone whose rays
    have strictly mixed signs in coordinate k raises ConeStraddlesWall.
    """
    if f.dim != b.n:
        raise InvalidInput(f"fan dimension {f.dim} does not match rank {b.n}")
    t = TransitionMap(b, k)
    images = []
    for cone in f.cones:
        rays = [f.rays[j] for j in cone]
        signs = {(r[k] > 0) - (r[k] < 0) for r in rays}
        if {1, -1} <= signs:
            raise ConeStraddlesWall(f"cone {tuple(rays)} straddles the wall v_{k + 1} = 0")
        images.append([t(r) for r in rays])
    return Fan.from_cones(images, dim=f.dim, complete=f.complete)


def transport_point_along_path(
    v: Sequence[Number], b: ExchangeMatrix, path: Sequence[int], inverse: bool = False
) -> tuple[Number, ...]:
    """Compose transition maps along a mutation path.

    Forward carries a point for b to the matrix mu_{k_m} ... mu_{k_1}(b).
    Inverse takes a point given for that final matrix back to b.
    """
    if len(v) != b.n:
        raise InvalidInput(f"vector of dimension {len(v)} given for rank {b.n}")
    if any(not 0 <= k < b.n for k in path):
        raise IndexError(f"mutation path {tuple(path)} has an index out of range for rank {b.n}")
    v = tuple(v)
    if not inverse:
        for k in path:
            v = _forward(b, k, v)
            b = mutate_matrix(b, k)
        return v
    chain = [b]
    for k in path:
        chain.append(mutate_matrix(chain[-1], k))
    for step in range(len(path), 0, -1):
        v = _forward(chain[step], path[step - 1], v)
    return v
