"""
Lattice points outside the g-fan support of an infinite-type matrix.

The search for a 2-finiteness violation yields a mutation path from B to some
B' and an index pair I with B'_I = B_{b,c}, bc >= 4.  The point with -2 at
I[0], b at I[1] and 0 elsewhere projects into the rank-2 badlands, so it lies
outside |F(B')|.  Pulling it back along the path with the inverse transition
maps gives a lattice point outside |F(B)|.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidInput
from .fan import build_fan, contains_point
from .gvec import enumerate_seeds
from .matrix import (
    DEFAULT_CLASS_BUDGET,
    ExchangeMatrix,
    FiniteTypeVerdict,
    decide_finite_type,
    mutate_along,
)
from .rank2 import Rank2Params, in_badlands
from .transition import transport_point_along_path

Vector = tuple[int, ...]


@dataclass(frozen=True)
class WitnessCertificate:
    input_b: ExchangeMatrix
    path: tuple[int, ...]
    pair: tuple[int, int]
    params: Rank2Params
    witness_at_bprime: Vector
    witness: Vector

    @property
    def bprime(self) -> ExchangeMatrix:
        return mutate_along(self.input_b, self.path)


def find_witness(
    b: ExchangeMatrix, budget: int = DEFAULT_CLASS_BUDGET
) -> WitnessCertificate | FiniteTypeVerdict:
    """A certified lattice point outside |F(b)|, or the finite verdict if there is none."""
    verdict = decide_finite_type(b, budget)
    if verdict.finite:
        return verdict
    bprime = verdict.replay(b)
    i, j = verdict.pair
    if bprime[i, j] < 0:
        i, j = j, i
    params = Rank2Params(-bprime[j, i], bprime[i, j])
    at_bprime = [0] * b.n
    at_bprime[i] = -2
    at_bprime[j] = params.b
    at_bprime = tuple(at_bprime)
    witness = transport_point_along_path(at_bprime, b, verdict.path, inverse=True)
    return WitnessCertificate(b, verdict.path, (i, j), params, at_bprime, witness)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


@dataclass
class WitnessReport:
    """Outcome of verify_witness.

    The enumeration check is partial by nature: only g-cones up to ``depth``
    mutations from the initial seed are examined.  ``bound`` says so in words.
    """

    depth: int
    cones_examined: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def bound(self) -> str:
        return (
            f"partial check: the witness was tested against {self.cones_examined} g-cones "
            f"reachable within {self.depth} mutations; cones beyond that depth were not examined. "
            f"Exclusion from the full support rests on the exact rank-2 badlands check."
        )

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


def verify_witness(cert: WitnessCertificate, depth: int = 10) -> WitnessReport:
    """Re-derive every claim of a certificate.  Failed checks are reported, never raised."""
    if depth < 0:
        raise InvalidInput("depth must be non-negative")
    b = cert.input_b
    n = b.n
    i, j = cert.pair
    checks = []

    # (a) replaying the path lands on B' with B'_I = B_{b,c}, bc >= 4
    bprime = cert.bprime
    block = ((bprime[i, i], bprime[i, j]), (bprime[j, i], bprime[j, j]))
    expected = ((0, cert.params.c), (-cert.params.b, 0))
    ok = i != j and block == expected and cert.params.product >= 4
    checks.append(Check("replay", ok, f"B'_I = {block}, expected {expected}"))

    at = cert.witness_at_bprime
    ok = (
        len(at) == n
        and (at[i], at[j]) == (-2, cert.params.b)
        and all(at[t] == 0 for t in range(n) if t not in (i, j))
    )
    checks.append(Check("shape", ok, f"witness at B' = {at}"))

    # (b) the transition maps carry the witness to the point at B' and back
    fwd = transport_point_along_path(cert.witness, b, cert.path)
    back = transport_point_along_path(at, b, cert.path, inverse=True)
    ok = fwd == tuple(at) and back == tuple(cert.witness)
    checks.append(Check("transport", ok, f"forward(witness) = {fwd}, inverse(witness at B') = {back}"))

    # (c) no g-cone within the depth bound contains the witness
    fan = build_fan(enumerate_seeds(b, budget=None, max_depth=depth))
    hit = contains_point(fan, cert.witness)
    if hit.inside:
        detail = f"witness lies in cone {tuple(fan.rays[r] for r in fan.cones[hit.cone])}"
    else:
        detail = f"outside all {len(fan)} cones up to depth {depth}"
    checks.append(Check("enumeration", not hit.inside, detail))

    # (d) the projection of the transported witness lies in the closed badlands
    proj = (fwd[i], fwd[j])
    ok = in_badlands(proj, cert.params, closed=True)
    checks.append(Check("badlands", ok, f"projection {proj} vs limiting rays of B_{cert.params.b},{cert.params.c}"))

    return WitnessReport(depth, len(fan), checks)
