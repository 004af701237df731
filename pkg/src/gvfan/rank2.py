"""
Rank-2 exchange matrices B_{b,c} = [[0, c], [-b, 0]].

For bc >= 4 the g-fan has infinitely many rays accumulating at two limiting
rays of slope (-bc +- sqrt(bc(bc-4))) / 2c.  The open cone between them in the
upper-left quadrant (the badlands) meets no g-cone, and it always contains
the lattice point (-2, b).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import FiniteTypeNoLimit, InvalidInput
from .fan import Fan, build_fan
from .gvec import enumerate_seeds, initial_seed, mutate_seed
from .matrix import ExchangeMatrix
from .quadratic import QuadraticNumber

Vector = tuple[int, ...]

PLOT_DEPTH = 8


@dataclass(frozen=True)
class Rank2Params:
    """Parameters (b, c) with b, c > 0.

    A pair with b, c < 0 is the same matrix up to swapping the two indices and
    is normalized to (-c, -b).
    """

    b: int
    c: int

    def __post_init__(self):
        b, c = int(self.b), int(self.c)
        if b * c <= 0:
            raise InvalidInput(f"B_(b,c) needs bc > 0, got b={b}, c={c}")
        if b < 0:
            b, c = -c, -b
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @classmethod
    def from_matrix(cls, m: ExchangeMatrix | Sequence[Sequence[int]]) -> "Rank2Params":
        rows = m.entries if isinstance(m, ExchangeMatrix) else m
        if len(rows) != 2:
            raise InvalidInput("rank-2 parameters need a 2 x 2 matrix")
        return cls(-rows[1][0], rows[0][1])

    @property
    def product(self) -> int:
        return self.b * self.c

    @property
    def finite(self) -> bool:
        return self.product <= 3

    @property
    def matrix(self) -> ExchangeMatrix:
        return ExchangeMatrix(((0, self.c), (-self.b, 0)))


def limiting_slopes(p: Rank2Params) -> tuple[QuadraticNumber, QuadraticNumber]:
    """Exact slopes (s_minus, s_plus) of the limiting rays, s_minus <= s_plus."""
    bc = p.product
    if bc <= 3:
        raise FiniteTypeNoLimit(f"bc = {bc} <= 3: the fan is finite and has no limiting rays")
    disc = bc * (bc - 4)
    den = 2 * p.c
    s_minus = QuadraticNumber(Fraction(-bc, den), Fraction(-1, den), disc)
    s_plus = QuadraticNumber(Fraction(-bc, den), Fraction(1, den), disc)
    return s_minus, s_plus


def slope(v: Sequence[int]) -> Fraction:
    if v[0] == 0:
        raise ZeroDivisionError(f"vertical vector {tuple(v)} has no slope")
    return Fraction(v[1], v[0])


def in_badlands(v: Sequence[int], p: Rank2Params, closed: bool = False) -> bool:
    """Whether v lies in the cone between the limiting rays (upper-left quadrant).

    With ``closed`` the limiting rays themselves count; for bc = 4 the closed
    cone is the single ray of slope -b/2 and the open one is empty.
    """
    x, y = v
    if not (x < 0 < y):
        return False
    s_minus, s_plus = limiting_slopes(p)
    s = slope(v)
    if closed:
        return s_minus <= s <= s_plus
    return s_minus < s < s_plus


def ray_sequences(p: Rank2Params, steps: int) -> tuple[list[Vector], list[Vector]]:
    """New g-vectors produced by the alternating mutation sequences 1,2,1,... and 2,1,2,...

    Each step of either sequence introduces exactly one new ray.
    """
    out = []
    for first in (0, 1):
        s = initial_seed(p.matrix)
        k = first
        rays = []
        for _ in range(steps):
            s = mutate_seed(s, k)
            rays.append(s.g_tuple[k])
            k = 1 - k
        out.append(rays)
    return out[0], out[1]


def rank2_fan(p: Rank2Params, max_cones: int = 2 * PLOT_DEPTH + 1) -> Fan:
    """The g-fan of B_{b,c}: complete for bc <= 3, else truncated to ``max_cones`` cones.

    The truncation takes the initial cone and then alternates between the two
    mutation sequences, one new cone at a time.
    """
    if p.finite:
        return build_fan(enumerate_seeds(p.matrix))
    if max_cones < 1:
        raise InvalidInput("max_cones must be positive")
    seeds = [initial_seed(p.matrix), initial_seed(p.matrix)]
    ks = [0, 1]
    cones = [seeds[0].g_tuple]
    side = 0
    while len(cones) < max_cones:
        s = mutate_seed(seeds[side], ks[side])
        seeds[side] = s
        ks[side] = 1 - ks[side]
        cones.append(s.g_tuple)
        side = 1 - side
    return Fan.from_cones(cones, dim=2, complete=False)


def badlands_lattice_point(p: Rank2Params) -> Vector:
    if p.finite:
        raise FiniteTypeNoLimit(f"bc = {p.product} <= 3: the fan covers every lattice point")
    return (-2, p.b)
