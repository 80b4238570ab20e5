"""Radical certificates: instantiate, verify, compose."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from ..bei.ideals import minors_on
from ..field_poly import (
    DEFAULT_KMAX,
    GroebnerLimitExceeded,
    Ideal,
    Limits,
    Polynomial,
    RingSpec,
    binomial_f,
    format_polynomial,
    ideal_membership,
    power_membership,
)
from ..field_poly.groebner import NO_LIMITS
from ..graph import SimpleGraph
from .catalog import CertificateTemplate, Pair


@dataclass(frozen=True)
class Certificate:
    """A witness list I with rad(I) = J for a radical target ideal J.

    ``claims`` pairs a target generator missing from I with an exponent e
    such that f**e lies in (I).
    """

    name: str
    ring: RingSpec
    target: Ideal
    witness: tuple[Polynomial, ...]
    claims: tuple[tuple[Polynomial, int], ...]
    source: str = ""
    graph: SimpleGraph | None = None  # set when the target is exactly J_2(graph)

    @property
    def size(self) -> int:
        return len(self.witness)

    def without_witness(self, index: int) -> "Certificate":
        """The same certificate with one witness polynomial dropped (negative control)."""
        w = self.witness[:index] + self.witness[index + 1:]
        return Certificate(f"{self.name}-drop{index}", self.ring, self.target, w, self.claims, self.source, self.graph)


def _f_sum(ring: RingSpec, terms: Sequence[Pair], label: Mapping[int, int]) -> Polynomial:
    acc = Polynomial.zero(ring)
    for a, b in terms:
        acc = acc + binomial_f(ring, label[a], label[b])
    return acc


def instantiate(
    template: CertificateTemplate,
    labels: Sequence[int] | None = None,
    n: int | None = None,
    characteristic: int = 0,
) -> Certificate:
    """Place ``template`` on the vertices ``labels`` (template vertex v -> labels[v-1])."""
    labels = list(labels) if labels is not None else list(range(1, template.k + 1))
    if len(labels) != template.k or len(set(labels)) != template.k:
        raise ValueError(f"{template.name} needs {template.k} distinct labels")
    n = n if n is not None else max(labels)
    if min(labels) < 1 or max(labels) > n:
        raise ValueError("labels must lie in 1..n")
    label = {v: labels[v - 1] for v in range(1, template.k + 1)}
    ring = RingSpec(2, n, characteristic)
    edges = [(label[a], label[b]) for a, b in template.edges]
    graph = SimpleGraph(n, edges)
    gens = minors_on(ring, graph.edges)
    gens += [_f_sum(ring, [e], label) for e in template.extra_target]
    witness = tuple(_f_sum(ring, w, label) for w in template.witness)
    claims = tuple((_f_sum(ring, [pair], label), e) for pair, e in template.claims)
    graph_or_none = graph if template.graph_target else None
    return Certificate(template.name, ring, Ideal(ring, gens), witness, claims, template.description, graph_or_none)


def compose_with_edges(cert: Certificate, extra_edges: Sequence[Pair], name: str | None = None) -> Certificate:
    """Certificate for J_2(G + extra_edges): the witness gains one f_e per new edge."""
    if cert.graph is None or cert.ring.m != 2:
        raise ValueError("composition needs a certificate whose target is J_2 of a graph")
    new = [tuple(sorted(e)) for e in extra_edges if tuple(sorted(e)) not in cert.graph.edges]
    graph = SimpleGraph(cert.graph.n, list(cert.graph.edges) + new)
    ring = cert.ring
    target = Ideal(ring, minors_on(ring, graph.edges))
    witness = cert.witness + tuple(binomial_f(ring, a, b) for a, b in sorted(new))
    return Certificate(name or f"{cert.name}+{len(new)}", ring, target, witness, cert.claims, cert.source, graph)


# -- verification ------------------------------------------------------------------


@dataclass(frozen=True)
class ClaimResult:
    polynomial: str
    claimed: int
    found: int | None

    @property
    def ok(self) -> bool:
        return self.found is not None and self.found <= self.claimed


@dataclass(frozen=True)
class CertReport:
    name: str
    status: str  # "pass", "fail", "not_attempted"
    inclusion: tuple[tuple[str, bool], ...] = ()
    coverage: tuple[tuple[str, bool], ...] = ()
    claims: tuple[ClaimResult, ...] = ()
    detail: str = ""
    size: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def exponents(self) -> tuple[int | None, ...]:
        return tuple(c.found for c in self.claims)

    def failures(self) -> list[str]:
        out = [f"witness not in target: {p}" for p, ok in self.inclusion if not ok]
        out += [f"target generator not in witness ideal: {p}" for p, ok in self.coverage if not ok]
        for c in self.claims:
            if not c.ok:
                got = "no power found" if c.found is None else f"needs exponent {c.found}"
                out.append(f"claim {c.polynomial} ^ {c.claimed}: {got}")
        return out

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "size": self.size,
            "inclusion": [{"polynomial": p, "ok": ok} for p, ok in self.inclusion],
            "coverage": [{"polynomial": p, "ok": ok} for p, ok in self.coverage],
            "claims": [{"polynomial": c.polynomial, "claimed": c.claimed, "found": c.found} for c in self.claims],
            "failures": self.failures(),
            "detail": self.detail,
        }


def _same_up_to_scalar(a: Polynomial, b: Polynomial, ideal: Ideal) -> bool:
    if not a or not b:
        return a == b
    return a.monic(ideal.order) == b.monic(ideal.order)


def verify(cert: Certificate, k_max: int = DEFAULT_KMAX, limits: Limits = NO_LIMITS) -> CertReport:
    """Check (a) every witness lies in the target, (b) every target generator
    lies in the witness ideal or is a claim, (c) each claim has f**k in the
    witness ideal for some minimal k <= its stated exponent."""
    order = cert.target.order
    witness_ideal = Ideal(cert.ring, cert.witness, order)
    try:
        inclusion = tuple(
            (format_polynomial(w), ideal_membership(w, cert.target, limits)) for w in cert.witness
        )
        claimed = [f for f, _ in cert.claims]
        coverage = tuple(
            (format_polynomial(g), ideal_membership(g, witness_ideal, limits))
            for g in cert.target.generators
            if not any(_same_up_to_scalar(g, f, cert.target) for f in claimed)
        )
        results = tuple(
            ClaimResult(format_polynomial(f), e, power_membership(f, witness_ideal, max(k_max, 1), limits))
            for f, e in cert.claims
        )
    except GroebnerLimitExceeded as exc:
        return CertReport(cert.name, "not_attempted", detail=str(exc), size=cert.size)
    ok = all(v for _, v in inclusion) and all(v for _, v in coverage) and all(c.ok for c in results)
    return CertReport(cert.name, "pass" if ok else "fail", inclusion, coverage, results, size=cert.size)


def join_2k1_certificate(core: SimpleGraph, characteristic: int = 0) -> Certificate:
    """Certificate of size 2p for J_2(H * 2K_1), H on [p] with at most 3 edges.

    Each nontrivial component of H is covered by a catalog piece sharing the
    two extra vertices p+1, p+2; isolated vertices contribute their two
    complete-bipartite edges.
    """
    from .catalog import get_template

    p = core.n
    if len(core.edges) > 3:
        raise ValueError("only graphs with at most 3 edges are covered")
    i, j = p + 1, p + 2
    n = p + 2
    ring = RingSpec(2, n, characteristic)
    witness: list[Polynomial] = []
    claims: list[tuple[Polynomial, int]] = []
    for comp in core.components_after_deletion(()):
        sub = core.induced(comp)
        if not sub:
            v = comp[0]
            witness += [binomial_f(ring, v, i), binomial_f(ring, v, j)]
            continue
        labels = _piece_labels(core, comp, sub)
        name, order = labels
        piece = instantiate(get_template(name), list(order) + [i, j], n, characteristic)
        witness += piece.witness
        claims += piece.claims
    graph = SimpleGraph(n, list(core.edges) + [(v, w) for v in range(1, p + 1) for w in (i, j)])
    target = Ideal(ring, minors_on(ring, graph.edges))
    return Certificate(f"join-2k1-p{p}", ring, target, tuple(witness), tuple(claims), "composed from catalog pieces", graph)


def _piece_labels(core: SimpleGraph, comp, sub) -> tuple[str, tuple[int, ...]]:
    degs = {v: sum(1 for e in sub if v in e) for v in comp}
    if len(sub) == 1:
        return "edge-join-2k1", tuple(sorted(comp))
    if len(sub) == 3 and len(comp) == 3:
        return "triangle-join-2k1", tuple(sorted(comp))
    if len(sub) == 3 and max(degs.values()) == 3:
        centre = next(v for v in comp if degs[v] == 3)
        return "claw-join-2k1", (centre,) + tuple(sorted(v for v in comp if v != centre))
    # a path: walk from one end
    start = min(v for v in comp if degs[v] == 1)
    walk = [start]
    while len(walk) < len(comp):
        nxt = next(w for w in core.neighbors(walk[-1]) if w in comp and w not in walk)
        walk.append(nxt)
    return ("path2-join-2k1" if len(sub) == 2 else "path3-join-2k1"), tuple(walk)


def certificate_size_vs_bound(cert: Certificate) -> bool:
    """Whether |witness| equals the ara upper bound in the bounds report of its graph."""
    from ..bei.bounds import bounds_report

    if cert.graph is None:
        raise ValueError(f"{cert.name}: target is not J_2 of a graph, so no bounds report applies")
    return cert.size == bounds_report(2, cert.graph, cert.ring.characteristic).hi["ara"]
