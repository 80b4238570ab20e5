"""Multivariate division and reduced Groebner bases (Buchberger).

Pairs are processed by the normal strategy (smallest lcm first) and pruned with
Buchberger's coprimality criterion and the Gebauer-Moeller chain criterion.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from typing import Sequence

from . import monomial as mono
from .order import MonomialOrder
from .polynomial import Polynomial
from .ring import RingSpec


class GroebnerLimitExceeded(RuntimeError):
    """A Groebner computation hit its time or size cap and was abandoned."""


@dataclass(frozen=True)
class Limits:
    max_seconds: float | None = None
    max_terms: int | None = None

    def deadline(self) -> float | None:
        return None if self.max_seconds is None else time.monotonic() + self.max_seconds


NO_LIMITS = Limits()


class _Elem:
    __slots__ = ("lm", "tail", "terms")

    def __init__(self, terms: dict, order: MonomialOrder, ring: RingSpec):
        lm = max(terms, key=order.key)
        lc = terms[lm]
        if lc != 1:
            inv = ring.inverse(lc)
            p = ring.characteristic
            terms = {m: (c * inv % p if p else c * inv) for m, c in terms.items()}
        self.lm = lm
        self.terms = terms
        self.tail = [(m, c) for m, c in terms.items() if m != lm]


def _reduce(terms: dict, reducers: Sequence[_Elem], key, guard: int, p: int) -> dict:
    """Fully reduce ``terms`` (consumed) by monic ``reducers``; returns the remainder."""
    heap = [(-key(m), m) for m in terms]
    heapify(heap)
    rem = {}
    while heap:
        m = heappop(heap)[1]
        c = terms.pop(m, None)
        if c is None:
            continue
        for g in reducers:
            if not (m - g.lm) & guard:
                q = m - g.lm
                get = terms.get
                for gm, gc in g.tail:
                    t = q + gm
                    old = get(t)
                    if old is None:
                        v = -c * gc
                        if p:
                            v %= p
                        terms[t] = v
                        heappush(heap, (-key(t), t))
                    else:
                        v = old - c * gc
                        if p:
                            v %= p
                        if v:
                            terms[t] = v
                        else:
                            del terms[t]
                break
        else:
            rem[m] = c
    return rem


def _common_ring(polys: Sequence[Polynomial], ring: RingSpec | None) -> RingSpec:
    for f in polys:
        if ring is None:
            ring = f.ring
        else:
            ring.check_same(f.ring)
    if ring is None:
        raise ValueError("cannot infer the ring of an empty polynomial list")
    return ring


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Remainder of ``f`` on division by ``basis`` (first divisor in list order wins)."""
    ring = _common_ring([f, *basis], None)
    order.check_vars(ring.nvars)
    reducers = [_Elem(dict(g.terms), order, ring) for g in basis if g]
    rem = _reduce(dict(f.terms), reducers, order.key, mono.guard_mask(ring.nvars), ring.characteristic)
    return Polynomial(ring, rem, _trusted=True)


def _s_poly(a: _Elem, b: _Elem, lcm: int, p: int) -> dict:
    qa = lcm - a.lm
    qb = lcm - b.lm
    out = {qa + m: c for m, c in a.tail}
    for m, c in b.tail:
        t = qb + m
        v = out.get(t, 0) - c
        if p:
            v %= p
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def reduced_groebner(
    gens: Sequence[Polynomial],
    order: MonomialOrder,
    limits: Limits = NO_LIMITS,
    ring: RingSpec | None = None,
) -> list[Polynomial]:
    """The reduced Groebner basis of ``(gens)``, sorted by leading monomial, descending.

    Raises :class:`GroebnerLimitExceeded` when ``limits`` are hit.
    """
    gens = [g for g in gens]
    if not gens:
        return []
    ring = _common_ring(gens, ring)
    nv = ring.nvars
    order.check_vars(nv)
    key = order.key
    guard = mono.guard_mask(nv)
    p = ring.characteristic
    deadline = limits.deadline()
    one = mono.pack((0,) * nv)

    basis: list[_Elem] = []
    active: list[int] = []
    pairs: list[tuple[int, int, int]] = []  # (i, j, lcm)
    term_count = 0

    def divides(a, b):
        return not (b - a) & guard

    def update(h: int) -> None:
        nonlocal pairs, active
        lm_h = basis[h].lm
        cand = [(g, mono.lcm(lm_h, basis[g].lm, nv)) for g in active]
        kept = []
        for idx, (g, l) in enumerate(cand):
            if l == lm_h + basis[g].lm:
                kept.append((g, l))
                continue
            dominated = any(divides(l2, l) for _, l2 in cand[idx + 1:]) or any(divides(l2, l) for _, l2 in kept)
            if not dominated:
                kept.append((g, l))
        new_pairs = [(g, h, l) for g, l in kept if l != lm_h + basis[g].lm]
        survivors = []
        for i, j, l in pairs:
            if (
                divides(lm_h, l)
                and mono.lcm(basis[i].lm, lm_h, nv) != l
                and mono.lcm(lm_h, basis[j].lm, nv) != l
            ):
                continue
            survivors.append((i, j, l))
        pairs = survivors + new_pairs
        active = [g for g in active if not divides(lm_h, basis[g].lm)] + [h]

    def add(terms: dict) -> bool:
        nonlocal term_count
        e = _Elem(terms, order, ring)
        if e.lm == one:
            return True
        term_count += len(e.terms)
        if limits.max_terms is not None and term_count > limits.max_terms:
            raise GroebnerLimitExceeded(f"basis exceeded {limits.max_terms} terms")
        basis.append(e)
        update(len(basis) - 1)
        return False

    def check_time():
        if deadline is not None and time.monotonic() > deadline:
            raise GroebnerLimitExceeded(f"Groebner basis exceeded {limits.max_seconds}s")

    unit = False
    for f in sorted((g for g in gens if g), key=lambda g: key(g.leading_monomial(order))):
        rem = _reduce(dict(f.terms), [basis[g] for g in active], key, guard, p)
        if rem and add(rem):
            unit = True
            break

    while pairs and not unit:
        check_time()
        best = min(range(len(pairs)), key=lambda t: (pairs[t][2] >> (mono.BITS * nv), key(pairs[t][2]), pairs[t][0], pairs[t][1]))
        i, j, l = pairs.pop(best)
        s = _s_poly(basis[i], basis[j], l, p)
        if not s:
            continue
        rem = _reduce(s, [basis[g] for g in active], key, guard, p)
        if rem and add(rem):
            unit = True

    if unit:
        return [Polynomial.constant(ring, 1)]

    # interreduce the (already minimal) active set
    elems = sorted((basis[g] for g in active), key=lambda e: key(e.lm), reverse=True)
    out = []
    for idx, e in enumerate(elems):
        check_time()
        others = elems[:idx] + elems[idx + 1:]
        tail = _reduce(dict(e.tail), others, key, guard, p)
        tail[e.lm] = ring.coerce(1)
        out.append(Polynomial(ring, tail, _trusted=True))
    return out
