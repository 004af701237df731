"""
Simplicial cones and fans with exact membership, completeness and lattice
coverage checks.

A fan is stored as a sorted list of primitive rays plus, for each maximal
cone, the sorted tuple of its ray indices.  Faces are implicit.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .errors import InvalidInput, RaysDependent
from .gvec import SeedEnumeration

Vector = tuple[int, ...]
Point = Sequence[int | Fraction]

_INT64_SAFE = 2**62


@dataclass(frozen=True)
class SimplicialCone:
    rays: tuple[Vector, ...]

    def __post_init__(self):
        rays = tuple(sorted(linalg.primitive(r) for r in self.rays))
        object.__setattr__(self, "rays", rays)
        if len(set(rays)) != len(rays):
            raise RaysDependent(f"repeated ray in {rays}")

    @property
    def dim(self) -> int:
        return len(self.rays[0])

    @cached_property
    def _solver(self):
        rows = tuple(tuple(r[i] for r in self.rays) for i in range(self.dim))
        try:
            return linalg.adjugate(rows)
        except ZeroDivisionError:
            raise RaysDependent(f"rays {self.rays} are linearly dependent") from None

    def coefficients(self, p: Point) -> tuple[Fraction, ...]:
        """Coordinates of p in the ray basis (full-dimensional cones only)."""
        if len(self.rays) != self.dim:
            raise RaysDependent(f"cone {self.rays} is not full-dimensional")
        adj, d = self._solver
        return tuple(Fraction(sum(a * x for a, x in zip(row, p))) / d for row in adj)

    def contains(self, p: Point) -> bool:
        return all(a >= 0 for a in self.coefficients(p))


@dataclass(frozen=True)
class Membership:
    cone: int | None
    coefficients: tuple[Fraction, ...] | None = None

    @property
    def inside(self) -> bool:
        return self.cone is not None


@dataclass(frozen=True)
class CompletenessReport:
    complete: bool
    unmatched_facet: tuple[Vector, ...] | None = None
    reason: str = ""

    def __bool__(self):
        return self.complete


@dataclass(frozen=True)
class CoverReport:
    covered: bool
    radius: int
    missing: Vector | None = None

    def __bool__(self):
        return self.covered


@dataclass(frozen=True)
class Fan:
    """A pure simplicial fan of full-dimensional maximal cones.

    ``complete`` is a tri-state flag: True, False, or None for unknown.
    """

    dim: int
    rays: tuple[Vector, ...]
    cones: tuple[tuple[int, ...], ...]
    complete: bool | None = field(default=None, compare=False)

    @classmethod
    def from_cones(
        cls, cones: Iterable[Iterable[Sequence[int]]], dim: int | None = None, complete: bool | None = None
    ) -> "Fan":
        canon = set()
        for rays in cones:
            cone = SimplicialCone(tuple(tuple(int(x) for x in r) for r in rays))
            if dim is None:
                dim = cone.dim
            if cone.dim != dim or len(cone.rays) != dim:
                raise RaysDependent(f"cone {cone.rays} is not a full-dimensional simplicial cone in R^{dim}")
            cone._solver  # raises RaysDependent when singular
            canon.add(cone.rays)
        if dim is None:
            raise InvalidInput("cannot infer the dimension of an empty fan")
        rays = sorted({r for c in canon for r in c})
        pos = {r: i for i, r in enumerate(rays)}
        idx = sorted(tuple(sorted(pos[r] for r in c)) for c in canon)
        return cls(dim, tuple(rays), tuple(idx), complete)

    def cone(self, i: int) -> SimplicialCone:
        return self._cones[i]

    @cached_property
    def _cones(self) -> tuple[SimplicialCone, ...]:
        return tuple(SimplicialCone(tuple(self.rays[j] for j in c)) for c in self.cones)

    def canonical(self) -> frozenset[tuple[Vector, ...]]:
        """Set of maximal cones, each as its sorted tuple of rays."""
        return frozenset(c.rays for c in self._cones)

    def with_flag(self, complete: bool | None) -> "Fan":
        return Fan(self.dim, self.rays, self.cones, complete)

    def __len__(self):
        return len(self.cones)

    def contains_point(self, p: Point) -> Membership:
        return contains_point(self, p)


def build_fan(enum: SeedEnumeration) -> Fan:
    """Distinct g-cones of an enumeration as a fan.

    A fully exhausted enumeration gets its completeness flag from the facet
    pairing check; a truncated one is flagged unknown.
    """
    fan = Fan.from_cones((s.g_tuple for s in enum.seeds), dim=enum.ambient.n)
    if enum.exhausted:
        return fan.with_flag(check_complete(fan).complete)
    return fan


def contains_point(f: Fan, p: Point) -> Membership:
    """First maximal cone (in canonical order) containing p, with its coefficients."""
    if len(p) != f.dim:
        raise InvalidInput(f"point of dimension {len(p)} given for a fan in R^{f.dim}")
    for i, cone in enumerate(f._cones):
        coeffs = cone.coefficients(p)
        if all(a >= 0 for a in coeffs):
            return Membership(i, coeffs)
    return Membership(None)


def check_complete(f: Fan) -> CompletenessReport:
    """Facet pairing test: complete iff every facet lies in exactly two maximal
    cones and the facet-adjacency graph is connected."""
    if not f.cones:
        return CompletenessReport(False, None, "fan has no maximal cones")
    if f.dim == 1:
        present = set(f.rays)
        if (1,) in present and (-1,) in present:
            return CompletenessReport(True)
        missing = (1,) if (1,) not in present else (-1,)
        return CompletenessReport(False, (), f"ray {missing} absent")

    owners: dict[tuple[int, ...], list[int]] = defaultdict(list)
    for ci, cone in enumerate(f.cones):
        for drop in range(len(cone)):
            owners[cone[:drop] + cone[drop + 1 :]].append(ci)
    for facet in sorted(owners):
        if len(owners[facet]) != 2:
            rays = tuple(f.rays[i] for i in facet)
            return CompletenessReport(
                False, rays, f"facet shared by {len(owners[facet])} maximal cone(s)"
            )

    adj = defaultdict(list)
    for a, b in owners.values():
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if len(seen) != len(f.cones):
        return CompletenessReport(False, None, "facet-adjacency graph is disconnected")
    return CompletenessReport(True)


def _lattice_box(dim: int, radius: int) -> np.ndarray:
    axis = np.arange(-radius, radius + 1, dtype=np.int64)
    grids = np.meshgrid(*([axis] * dim), indexing="ij")
    return np.stack([g.ravel() for g in grids])  # lexicographic column order


def covered_mask(f: Fan, points: np.ndarray) -> np.ndarray:
    """Boolean mask over the columns of an integer point array: inside some maximal cone."""
    covered = np.zeros(points.shape[1], dtype=bool)
    bound = int(np.abs(points).max()) if points.size else 0
    for cone in f._cones:
        adj, d = cone._solver
        big = max(abs(x) for row in adj for x in row) * bound * f.dim
        mat = np.array(adj, dtype=np.int64 if big < _INT64_SAFE else object)
        pts = points if mat.dtype != object else points.astype(object)
        coeffs = mat @ pts
        if d < 0:
            coeffs = -coeffs
        covered |= np.all(coeffs >= 0, axis=0).astype(bool)
    return covered


def lattice_cover(f: Fan, radius: int) -> CoverReport:
    """Scan the box [-R, R]^n for lattice points outside the fan's support.

    Returns the lexicographically first missing point, if any.
    """
    if radius < 0:
        raise InvalidInput("radius must be non-negative")
    points = _lattice_box(f.dim, radius)
    mask = covered_mask(f, points)
    if mask.all():
        return CoverReport(True, radius)
    first = int(np.argmin(mask))
    return CoverReport(False, radius, tuple(int(x) for x in points[:, first]))


def lattice_cover_scan(f: Fan, radius: int) -> CoverReport:
    """Same as lattice_cover, point by point through contains_point (slow, reference path)."""
    for z in itertools.product(range(-radius, radius + 1), repeat=f.dim):
        if not contains_point(f, z).inside:
            return CoverReport(False, radius, z)
    return CoverReport(True, radius)
