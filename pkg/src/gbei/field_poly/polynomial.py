"""Exact sparse multivariate polynomials over Q or GF(p)."""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping

from . import monomial as mono
from .order import MonomialOrder
from .ring import RingSpec

Scalar = int | Fraction


class Polynomial:
    """Immutable polynomial: a map from packed monomials to nonzero coefficients."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Mapping[int, Scalar] | None = None, *, _trusted=False):
        self.ring = ring
        self._hash = None
        if _trusted:
            self._terms = terms
            return
        clean = {}
        for m, c in (terms or {}).items():
            c = ring.coerce(c)
            if c:
                clean[m] = c
        self._terms = clean

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_exponents(cls, ring: RingSpec, terms: Mapping[tuple[int, ...], Scalar]) -> "Polynomial":
        out: dict[int, Scalar] = {}
        for exps, c in terms.items():
            if len(exps) != ring.nvars:
                raise ValueError(f"exponent vector of length {len(exps)}, ring has {ring.nvars} variables")
            m = mono.pack(exps)
            out[m] = out.get(m, 0) + c
        return cls(ring, out)

    @classmethod
    def zero(cls, ring: RingSpec) -> "Polynomial":
        return cls(ring, {}, _trusted=True)

    @classmethod
    def constant(cls, ring: RingSpec, c: Scalar) -> "Polynomial":
        return cls(ring, {mono.pack((0,) * ring.nvars): c})

    # -- inspection ------------------------------------------------------------

    @property
    def terms(self) -> Mapping[int, Scalar]:
        return MappingProxyType(self._terms)

    def exponent_terms(self) -> dict[tuple[int, ...], Scalar]:
        n = self.ring.nvars
        return {mono.unpack(m, n): c for m, c in self._terms.items()}

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        shift = mono.BITS * self.ring.nvars
        return all(m >> shift == 0 for m in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(mono.degree(m, self.ring.nvars) for m in self._terms)

    def leading_monomial(self, order: MonomialOrder) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> Scalar:
        return self._terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if not self._terms:
            return self
        inv = self.ring.inverse(self.leading_coefficient(order))
        return self._scaled(inv)

    def variables(self) -> frozenset[int]:
        out: set[int] = set()
        for m in self._terms:
            out |= mono.support(m, self.ring.nvars)
        return frozenset(out)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.ring, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        from .textfmt import format_polynomial

        return f"Polynomial({format_polynomial(self)!r})"

    # -- arithmetic ------------------------------------------------------------

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self.ring.check_same(other.ring)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ring, other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def _scaled(self, c) -> "Polynomial":
        p = self.ring.characteristic
        if p:
            terms = {m: v * c % p for m, v in self._terms.items()}
            terms = {m: v for m, v in terms.items() if v}
        else:
            terms = {m: v * c for m, v in self._terms.items()} if c else {}
        return Polynomial(self.ring, terms, _trusted=True)

    def __add__(self, other) -> "Polynomial":
        other = self._lift(other)
        return Polynomial(self.ring, _combine(self._terms, other._terms, 1, self.ring.characteristic), _trusted=True)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = self._lift(other)
        return Polynomial(self.ring, _combine(self._terms, other._terms, -1, self.ring.characteristic), _trusted=True)

    def __rsub__(self, other) -> "Polynomial":
        return self._lift(other) - self

    def __neg__(self) -> "Polynomial":
        return self._scaled(self.ring.coerce(-1))

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self._scaled(self.ring.coerce(other))
        other = self._lift(other)
        if self.total_degree() + other.total_degree() > mono.MAX_EXP:
            raise OverflowError("product degree exceeds the packed-exponent range")
        p = self.ring.characteristic
        out: dict[int, Scalar] = {}
        get = out.get
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = ma + mb
                out[m] = get(m, 0) + ca * cb
        if p:
            out = {m: c % p for m, c in out.items()}
        return Polynomial(self.ring, {m: c for m, c in out.items() if c}, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- ring changes ------------------------------------------------------------

    def embed(self, ring: RingSpec) -> "Polynomial":
        """Reinterpret in a ring with the same matrix shape and more aux variables."""
        if (ring.m, ring.n, ring.characteristic) != (self.ring.m, self.ring.n, self.ring.characteristic):
            raise ValueError("can only embed into a ring with the same matrix shape and characteristic")
        if ring.aux_count < self.ring.aux_count:
            raise ValueError("target ring has fewer variables")
        old, new = self.ring.nvars, ring.nvars
        shift_old, shift_new = mono.BITS * old, mono.BITS * new
        low = mono.low_mask(old)
        terms = {((m >> shift_old) << shift_new) | (m & low): c for m, c in self._terms.items()}
        return Polynomial(ring, terms, _trusted=True)

    def restrict(self, ring: RingSpec) -> "Polynomial":
        """Inverse of :meth:`embed`; the dropped variables must not occur."""
        old, new = self.ring.nvars, ring.nvars
        shift_old, shift_new = mono.BITS * old, mono.BITS * new
        low = mono.low_mask(new)
        terms = {}
        for m, c in self._terms.items():
            if (m & mono.low_mask(old)) >> shift_new:
                raise ValueError("polynomial involves variables outside the target ring")
            terms[((m >> shift_old) << shift_new) | (m & low)] = c
        return Polynomial(ring, terms, _trusted=True)


def _combine(a: Mapping[int, Scalar], b: Mapping[int, Scalar], sign: int, p: int) -> dict[int, Scalar]:
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, 0) + sign * c
        if p:
            v %= p
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


# -- named constructors -----------------------------------------------------------


def variable(ring: RingSpec, i: int, j: int) -> Polynomial:
    """The matrix variable x_{ij}."""
    m = mono.variable(ring.var_index(i, j), ring.nvars)
    return Polynomial(ring, {m: ring.coerce(1)}, _trusted=True)


def aux_variable(ring: RingSpec, k: int) -> Polynomial:
    m = mono.variable(ring.aux_index(k), ring.nvars)
    return Polynomial(ring, {m: ring.coerce(1)}, _trusted=True)


def minor(ring: RingSpec, k: int, l: int, i: int, j: int) -> Polynomial:
    """The 2-minor x_{ki} x_{lj} - x_{kj} x_{li} on rows k, l and columns i, j."""
    x = lambda a, b: variable(ring, a, b)  # noqa: E731
    return x(k, i) * x(l, j) - x(k, j) * x(l, i)


def binomial_f(ring: RingSpec, i: int, j: int) -> Polynomial:
    """f_{i,j} = x_{1i} x_{2j} - x_{1j} x_{2i}."""
    return minor(ring, 1, 2, i, j)


def total(polys: Iterable[Polynomial], ring: RingSpec) -> Polynomial:
    acc = Polynomial.zero(ring)
    for f in polys:
        acc = acc + f
    return acc
