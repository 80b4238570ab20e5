"""Built-in radical certificates for binomial edge ideals (m = 2).

Each template lists, on vertices 1..k, the target graph, the witness
polynomials as sums of f_{a,b} = x_{1a} x_{2b} - x_{1b} x_{2a}, and the
claimed exponents e with f^e in (witness).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from ..graph import SimpleGraph

Pair = tuple[int, int]


def _join2(core_edges: Sequence[Pair], p: int) -> tuple[Pair, ...]:
    """Edges of H * 2K_1 where H lives on 1..p and the two extra vertices are p+1, p+2."""
    return tuple(core_edges) + tuple((v, w) for v in range(1, p + 1) for w in (p + 1, p + 2))


@dataclass(frozen=True)
class CertificateTemplate:
    name: str
    description: str
    k: int
    edges: tuple[Pair, ...]
    witness: tuple[tuple[Pair, ...], ...]
    claims: tuple[tuple[Pair, int], ...]
    extra_target: tuple[Pair, ...] = ()

    @property
    def size(self) -> int:
        return len(self.witness)

    @property
    def graph_target(self) -> bool:
        """True when the target is exactly J_2 of the template graph."""
        return not self.extra_target

    def graph(self) -> SimpleGraph:
        return SimpleGraph(self.k, self.edges)


CATALOG: tuple[CertificateTemplate, ...] = (
    CertificateTemplate(
        "c4-two-primes",
        "4-cycle: P_empty cap P_{2,4} = J_2(C_4) + (f_{2,4}) is the radical of 4 polynomials",
        4,
        ((1, 2), (2, 3), (3, 4), (1, 4)),
        (((1, 2), (3, 4)), ((2, 3),), ((1, 4),), ((2, 4),)),
        (((1, 2), 2), ((3, 4), 2)),
        extra_target=((2, 4),),
    ),
    CertificateTemplate(
        "diamond-pendants-a",
        "diamond with chord {1,3} and pendant edges {1,5}, {2,6}: ara <= 5",
        6,
        ((1, 2), (2, 3), (3, 4), (1, 4), (1, 3), (1, 5), (2, 6)),
        (((1, 3), (2, 6)), ((1, 5), (3, 4)), ((1, 2),), ((1, 4),), ((2, 3),)),
        (((1, 3), 2), ((2, 6), 2), ((1, 5), 4), ((3, 4), 4)),
    ),
    CertificateTemplate(
        "diamond-pendants-b",
        "diamond with chord {2,4} and pendant edges {1,5}, {2,6}: ara <= 5",
        6,
        ((1, 2), (2, 3), (3, 4), (1, 4), (2, 4), (1, 5), (2, 6)),
        (((1, 5), (2, 4)), ((2, 6), (3, 4)), ((1, 2),), ((1, 4),), ((2, 3),)),
        (((1, 5), 2), ((2, 4), 2), ((2, 6), 4), ((3, 4), 4)),
    ),
    CertificateTemplate(
        "k4-pendants",
        "K_4 with pendant edges {1,5}, {2,6}: ara <= 5",
        6,
        tuple(combinations(range(1, 5), 2)) + ((1, 5), (2, 6)),
        (((1, 3), (2, 6)), ((1, 5), (3, 4)), ((1, 4), (2, 3)), ((1, 2),), ((2, 4),)),
        (((1, 3), 3), ((2, 6), 3), ((1, 5), 5), ((3, 4), 5), ((1, 4), 2), ((2, 3), 2)),
    ),
    CertificateTemplate(
        "triangle-pendant",
        "triangle {1,3,4} with pendant edge {1,2}: ara <= 3",
        4,
        ((1, 3), (1, 2), (3, 4), (1, 4)),
        (((1, 2), (3, 4)), ((1, 3),), ((1, 4),)),
        (((1, 2), 2), ((3, 4), 2)),
    ),
    CertificateTemplate(
        "edge-join-edge-point",
        "edge {1,2} joined with (edge {3,4} + vertex 5): ara <= 5",
        5,
        ((1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4)),
        (((1, 3), (2, 5)), ((1, 4), (2, 3)), ((1, 5), (3, 4)), ((1, 2),), ((2, 4),)),
        (((1, 3), 3), ((2, 5), 3), ((1, 4), 2), ((2, 3), 2), ((1, 5), 5), ((3, 4), 5)),
    ),
    CertificateTemplate(
        "edge-join-2k1",
        "single edge joined with two isolated vertices 3, 4: ara <= 4",
        4,
        _join2([(1, 2)], 2),
        (((1, 3), (2, 4)), ((1, 2),), ((1, 4),), ((2, 3),)),
        (((1, 3), 2), ((2, 4), 2)),
    ),
    CertificateTemplate(
        "path2-join-2k1",
        "path 1-2-3 joined with two isolated vertices 4, 5: ara <= 6",
        5,
        _join2([(1, 2), (2, 3)], 3),
        (((1, 2),), ((2, 3),), ((1, 5),), ((3, 4),), ((1, 4), (2, 5)), ((2, 4), (3, 5))),
        (((1, 4), 2), ((2, 5), 2), ((2, 4), 2), ((3, 5), 2)),
    ),
    CertificateTemplate(
        "path3-join-2k1",
        "path 1-2-3-4 joined with two isolated vertices 5, 6: ara <= 8",
        6,
        _join2([(1, 2), (2, 3), (3, 4)], 4),
        (
            ((1, 2),), ((2, 3),), ((3, 4),), ((1, 6),), ((4, 5),),
            ((1, 5), (2, 6)), ((2, 5), (3, 6)), ((3, 5), (4, 6)),
        ),
        (((1, 5), 2), ((2, 6), 2), ((2, 5), 4), ((3, 6), 4), ((3, 5), 2), ((4, 6), 2)),
    ),
    CertificateTemplate(
        "claw-join-2k1",
        "claw centred at 1 (leaves 2, 3, 4) joined with two isolated vertices 5, 6: ara <= 8",
        6,
        _join2([(1, 2), (1, 3), (1, 4)], 4),
        (
            ((1, 2), (3, 6)), ((1, 5), (2, 6)), ((1, 6), (4, 5)),
            ((1, 3),), ((1, 4),), ((2, 5),), ((3, 5),), ((4, 6),),
        ),
        (((1, 2), 2), ((3, 6), 2), ((1, 5), 3), ((2, 6), 3), ((1, 6), 2), ((4, 5), 2)),
    ),
    CertificateTemplate(
        "triangle-join-2k1",
        "triangle 1-2-3 joined with two isolated vertices 4, 5: ara <= 6",
        5,
        _join2([(1, 2), (2, 3), (1, 3)], 3),
        (((1, 2), (3, 4)), ((1, 3), (2, 5)), ((1, 5), (2, 4)), ((1, 4),), ((2, 3),), ((3, 5),)),
        (((1, 2), 3), ((3, 4), 3), ((1, 3), 2), ((2, 5), 2), ((1, 5), 5), ((2, 4), 5)),
    ),
)


def builtin_catalog() -> tuple[CertificateTemplate, ...]:
    return CATALOG


def get_template(name: str) -> CertificateTemplate:
    for t in CATALOG:
        if t.name == name:
            return t
    raise KeyError(f"no built-in certificate named {name!r}")
