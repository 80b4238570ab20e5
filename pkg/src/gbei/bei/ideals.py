"""J_m(G), its minimal primes P_T(G), heights, and the decomposition check."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..field_poly import (
    GroebnerLimitExceeded,
    Ideal,
    Limits,
    RingSpec,
    ideal_equal,
    ideal_intersection,
    minor,
    variable,
)
from ..field_poly.groebner import NO_LIMITS
from ..graph import SimpleGraph, VertexSet, cut_sets, is_cut_set, vertex_connectivity


def _check_m(m: int) -> None:
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")


def minors_on(ring: RingSpec, edges) -> list:
    """All 2-minors [k,l|i,j], k<l, for the given column pairs."""
    out = []
    for i, j in sorted((min(e), max(e)) for e in edges):
        for k, l in combinations(range(1, ring.m + 1), 2):
            out.append(minor(ring, k, l, i, j))
    return out


@dataclass(frozen=True)
class GBEIdeal:
    m: int
    graph: SimpleGraph
    ideal: Ideal

    @property
    def mu(self) -> int:
        return len(self.ideal.generators)

    @property
    def ring(self) -> RingSpec:
        return self.ideal.ring


def build_gbei(m: int, g: SimpleGraph, characteristic: int = 0) -> GBEIdeal:
    _check_m(m)
    ring = RingSpec(m, max(g.n, 1), characteristic)
    return GBEIdeal(m, g, Ideal(ring, minors_on(ring, g.edges)))


def mu(m: int, g: SimpleGraph) -> int:
    return m * (m - 1) // 2 * len(g.edges)


@dataclass(frozen=True)
class PrimeComponent:
    T: VertexSet
    components: tuple[VertexSet, ...]
    ideal: Ideal
    height: int


def prime_component(m: int, g: SimpleGraph, T, characteristic: int = 0) -> PrimeComponent:
    """P_T(G): the columns in T set to zero plus all minors inside each component of G - T."""
    _check_m(m)
    T = tuple(sorted(set(T)))
    if any(not 1 <= v <= g.n for v in T):
        raise ValueError("T must be a subset of the vertex set")
    ring = RingSpec(m, max(g.n, 1), characteristic)
    comps = tuple(g.components_after_deletion(T))
    gens = [variable(ring, k, i) for i in T for k in range(1, m + 1)]
    for comp in comps:
        gens += minors_on(ring, combinations(comp, 2))
    height = (m - 1) * (g.n - len(comps)) + len(T)
    return PrimeComponent(T, comps, Ideal(ring, gens), height)


def minimal_primes(m: int, g: SimpleGraph, characteristic: int = 0) -> list[PrimeComponent]:
    return [prime_component(m, g, T, characteristic) for T in cut_sets(g)]


def height_formula(m: int, g: SimpleGraph) -> int:
    """min over cut sets T of (m-1)(n-c(T)) + |T|."""
    _check_m(m)
    return min((m - 1) * (g.n - g.c(T)) + len(T) for T in cut_sets(g))


def sum_height_empty_T(m: int, g: SimpleGraph, T) -> int:
    """ht(P_empty + P_T) = (m-1)(n-1) + |T|.

    For a cut set T the value is also checked against (m-1)(n-1) + k(G).
    """
    _check_m(m)
    T = tuple(sorted(set(T)))
    if not T:
        raise ValueError("T must be nonempty")
    value = (m - 1) * (g.n - 1) + len(T)
    if is_cut_set(g, T):
        floor = (m - 1) * (g.n - 1) + vertex_connectivity(g)
        if value < floor:
            raise AssertionError(f"cut set {T} gives {value} < (m-1)(n-1)+k(G) = {floor}")
    return value


@dataclass(frozen=True)
class DecompositionResult:
    status: str  # "verified", "failed" or "not_attempted"
    cut_sets: tuple[VertexSet, ...]
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "verified"


def decompose_verify(m: int, g: SimpleGraph, characteristic: int = 0, limits: Limits = NO_LIMITS) -> DecompositionResult:
    """Check J_m(G) = intersection of P_T(G) over cut sets by reduced-GB equality."""
    primes = minimal_primes(m, g, characteristic)
    sets = tuple(p.T for p in primes)
    target = build_gbei(m, g, characteristic).ideal
    try:
        acc = primes[0].ideal
        for p in primes[1:]:
            acc = ideal_intersection(acc, p.ideal, limits)
        same = ideal_equal(acc, target, limits)
    except GroebnerLimitExceeded as exc:
        return DecompositionResult("not_attempted", sets, str(exc))
    if same:
        return DecompositionResult("verified", sets, f"{len(sets)} minimal primes")
    return DecompositionResult("failed", sets, "intersection differs from J_m(G)")
