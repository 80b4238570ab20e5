"""Ideals with a lazily computed reduced Groebner basis, plus the derived tests
(membership, radical membership, intersection, equality, height)."""

from __future__ import annotations

import threading
from typing import Iterable, Sequence

from . import monomial as mono
from .groebner import NO_LIMITS, Limits, normal_form, reduced_groebner
from .order import MonomialOrder
from .polynomial import Polynomial, aux_variable
from .ring import RingSpec

DEFAULT_KMAX = 8


class Ideal:
    """An ideal of ``ring`` given by generators.

    The reduced Groebner basis under ``order`` is computed on first use and
    cached.  The cache is filled at most once; readers either see no basis or
    the complete one.
    """

    def __init__(self, ring: RingSpec, generators: Iterable[Polynomial] = (), order: MonomialOrder | None = None):
        gens = tuple(generators)
        for g in gens:
            ring.check_same(g.ring)
        self.ring = ring
        self.generators = gens
        self.order = order or MonomialOrder.degrevlex(ring.nvars)
        self.order.check_vars(ring.nvars)
        self._gb: tuple[Polynomial, ...] | None = None
        self._lock = threading.Lock()

    def groebner(self, limits: Limits = NO_LIMITS) -> tuple[Polynomial, ...]:
        gb = self._gb
        if gb is not None:
            return gb
        with self._lock:
            if self._gb is None:
                self._gb = tuple(reduced_groebner(self.generators, self.order, limits, ring=self.ring))
            return self._gb

    @property
    def reduced_gb(self) -> tuple[Polynomial, ...] | None:
        """The cached basis, or None if not yet computed."""
        return self._gb

    def is_unit(self, limits: Limits = NO_LIMITS) -> bool:
        gb = self.groebner(limits)
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero(self) -> bool:
        return not any(self.generators)

    def __add__(self, other: "Ideal") -> "Ideal":
        self.ring.check_same(other.ring)
        return Ideal(self.ring, self.generators + other.generators, self.order)

    def __repr__(self) -> str:
        return f"Ideal({len(self.generators)} generators in {self.ring})"


def _check(f: Polynomial, ideal: Ideal) -> None:
    ideal.ring.check_same(f.ring)


def ideal_membership(f: Polynomial, ideal: Ideal, limits: Limits = NO_LIMITS) -> bool:
    _check(f, ideal)
    if not f:
        return True
    return not normal_form(f, ideal.groebner(limits), ideal.order)


def power_membership(f: Polynomial, ideal: Ideal, k_max: int = DEFAULT_KMAX, limits: Limits = NO_LIMITS) -> int | None:
    """Least ``k <= k_max`` with ``f**k`` in the ideal, else None."""
    if k_max < 1:
        raise ValueError("k_max must be positive")
    _check(f, ideal)
    gb = ideal.groebner(limits)
    # f^k == f * NF(f^(k-1)) modulo the ideal
    r = normal_form(f, gb, ideal.order)
    for k in range(1, k_max + 1):
        if not r:
            return k
        if k < k_max:
            r = normal_form(f * r, gb, ideal.order)
    return None


def radical_membership(f: Polynomial, ideal: Ideal, limits: Limits = NO_LIMITS) -> bool:
    """Whether some power of ``f`` lies in the ideal, via 1 in I + (1 - y f)."""
    _check(f, ideal)
    big = ideal.ring.with_aux(1)
    y = aux_variable(big, big.aux_count)
    gens = [g.embed(big) for g in ideal.generators] + [1 - y * f.embed(big)]
    gb = reduced_groebner(gens, MonomialOrder.degrevlex(big.nvars), limits, ring=big)
    return len(gb) == 1 and gb[0].is_constant()


def ideal_intersection(a: Ideal, b: Ideal, limits: Limits = NO_LIMITS) -> Ideal:
    """I cap J by eliminating a tag t from t*I + (1-t)*J."""
    a.ring.check_same(b.ring)
    base = a.ring
    big = base.with_aux(1)
    t = aux_variable(big, big.aux_count)
    tag = big.nvars - 1
    gens = [t * g.embed(big) for g in a.generators if g]
    gens += [(1 - t) * h.embed(big) for h in b.generators if h]
    order = MonomialOrder.elimination(big.nvars, (tag,))
    gb = reduced_groebner(gens, order, limits, ring=big) if gens else []
    kept = [g.restrict(base) for g in gb if tag not in g.variables()]
    return Ideal(base, kept, a.order)


def ideal_equal(a: Ideal, b: Ideal, limits: Limits = NO_LIMITS) -> bool:
    a.ring.check_same(b.ring)
    if a.order != b.order:
        raise ValueError("ideal_equal needs both ideals under the same order")
    return a.groebner(limits) == b.groebner(limits)


def initial_ideal(ideal: Ideal, order: MonomialOrder | None = None, limits: Limits = NO_LIMITS) -> list[tuple[int, ...]]:
    """Minimal generators (exponent vectors) of the initial ideal, sorted."""
    if order is not None and order != ideal.order:
        ideal = Ideal(ideal.ring, ideal.generators, order)
    nv = ideal.ring.nvars
    lms = [g.leading_monomial(ideal.order) for g in ideal.groebner(limits)]
    minimal = [m for m in lms if not any(o != m and mono.divides(o, m, nv) for o in lms)]
    return sorted(mono.unpack(m, nv) for m in set(minimal))


def monomial_dimension(mingens: Sequence[tuple[int, ...]], varcount: int) -> int:
    """Krull dimension of K[x_1..x_varcount] / (mingens).

    The largest variable set S containing no generator's support; -1 for the
    unit ideal.
    """
    supports = {frozenset(v for v, e in enumerate(g) if e) for g in mingens}
    if frozenset() in supports:
        return -1
    # keep inclusion-minimal supports only
    sup = [s for s in supports if not any(o < s for o in supports)]
    best = _min_hitting_set(sup, varcount)
    return varcount - best


def _min_hitting_set(sets: list[frozenset[int]], varcount: int) -> int:
    best = [varcount]

    def search(remaining: list[frozenset[int]], chosen: int):
        if chosen >= best[0]:
            return
        if not remaining:
            best[0] = chosen
            return
        pick = min(remaining, key=len)
        for v in sorted(pick):
            search([s for s in remaining if v not in s], chosen + 1)

    search(sets, 0)
    return best[0]


def height_oracle(ideal: Ideal, limits: Limits = NO_LIMITS) -> int:
    """ht(I) = varcount - dim(R / in(I))."""
    if ideal.is_unit(limits):
        raise ValueError("the unit ideal has no height")
    nv = ideal.ring.nvars
    return nv - monomial_dimension(initial_ideal(ideal, limits=limits), nv)

