"""Monomial orders as integer sort keys over packed monomials."""

from __future__ import annotations

from dataclasses import dataclass, field

from .monomial import BITS, FIELD, low_mask

_KINDS = ("lex", "degrevlex", "block")


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on ``nvars`` variables.

    ``precedence`` lists variable indices from highest to lowest.  For
    ``kind="block"`` the first ``block_size`` variables of the precedence form
    an elimination block; each block is compared by degrevlex.

    ``key(m)`` maps a packed monomial to an int that is strictly increasing in
    the order, so ``max(terms, key=order.key)`` is the leading monomial.
    """

    kind: str
    nvars: int
    precedence: tuple[int, ...] = ()
    block_size: int = 0
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        if not self.precedence:
            object.__setattr__(self, "precedence", tuple(range(self.nvars)))
        if sorted(self.precedence) != list(range(self.nvars)):
            raise ValueError("precedence must be a permutation of the variables")
        if self.kind == "block" and not 0 < self.block_size <= self.nvars:
            raise ValueError("block_size must be in 1..nvars")
        fast = self.kind == "degrevlex" and self.precedence == tuple(range(self.nvars))
        object.__setattr__(self, "_fast", fast)
        object.__setattr__(self, "_low", low_mask(self.nvars))
        object.__setattr__(self, "_shift", BITS * self.nvars)

    @classmethod
    def degrevlex(cls, nvars: int, precedence=()) -> "MonomialOrder":
        return cls("degrevlex", nvars, tuple(precedence))

    @classmethod
    def lex(cls, nvars: int, precedence=()) -> "MonomialOrder":
        return cls("lex", nvars, tuple(precedence))

    @classmethod
    def elimination(cls, nvars: int, eliminate: tuple[int, ...]) -> "MonomialOrder":
        """Block order with ``eliminate`` first, remaining variables in index order."""
        rest = tuple(v for v in range(nvars) if v not in eliminate)
        return cls("block", nvars, tuple(eliminate) + rest, len(eliminate))

    @property
    def label(self) -> str:
        if self.kind == "block":
            return f"block-elimination({self.block_size})"
        return self.kind

    def key(self, m: int) -> int:
        if self._fast:
            # (degree, then reversed exponents complemented)
            return ((m >> self._shift) << self._shift) | (self._low - (m & self._low))
        k = self._cache.get(m)
        if k is None:
            k = self._slow_key(m)
            self._cache[m] = k
        return k

    def _slow_key(self, m: int) -> int:
        exps = [(m >> (BITS * v)) & FIELD for v in self.precedence]
        if self.kind == "lex":
            k = 0
            for e in exps:
                k = (k << BITS) | e
            return k
        if self.kind == "degrevlex":
            return _drl(exps)
        b = self.block_size
        return (_drl(exps[:b]) << (BITS * (len(exps) - b + 1))) | _drl(exps[b:])

    def check_vars(self, nvars: int) -> None:
        if nvars != self.nvars:
            raise ValueError(f"order is on {self.nvars} variables, ring has {nvars}")


def _drl(exps: list[int]) -> int:
    # digit layout: [deg][~e_last]...[~e_first]
    k = sum(exps)
    for e in reversed(exps):
        k = (k << BITS) | (FIELD - e)
    return k
