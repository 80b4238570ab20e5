"""Polynomial ring description and coefficient field arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class RingMismatchError(ValueError):
    """Raised when polynomials or ideals from different rings are combined."""


@dataclass(frozen=True)
class RingSpec:
    """K[x_ij : i in [m], j in [n]] plus ``aux_count`` trailing auxiliary variables.

    Variable ``x[i][j]`` has index ``(i-1)*n + (j-1)``; auxiliary ``y[k]``
    (1-based) has index ``m*n + k - 1``.
    """

    m: int
    n: int
    characteristic: int = 0
    aux_count: int = 0

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"ring needs m >= 1 and n >= 1, got m={self.m}, n={self.n}")
        if self.aux_count < 0:
            raise ValueError("aux_count must be nonnegative")
        if self.characteristic != 0 and not is_prime(self.characteristic):
            raise ValueError(f"characteristic must be 0 or a prime, got {self.characteristic}")

    @property
    def nvars(self) -> int:
        return self.m * self.n + self.aux_count

    def var_index(self, i: int, j: int) -> int:
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise ValueError(f"x[{i}][{j}] is outside the {self.m}x{self.n} matrix")
        return (i - 1) * self.n + (j - 1)

    def aux_index(self, k: int) -> int:
        if not 1 <= k <= self.aux_count:
            raise ValueError(f"y[{k}] is not an auxiliary variable of this ring")
        return self.m * self.n + k - 1

    def var_name(self, index: int) -> str:
        mn = self.m * self.n
        if index < mn:
            i, j = divmod(index, self.n)
            return f"x[{i + 1}][{j + 1}]"
        return f"y[{index - mn + 1}]"

    def with_aux(self, extra: int = 1) -> "RingSpec":
        return RingSpec(self.m, self.n, self.characteristic, self.aux_count + extra)

    def base(self) -> "RingSpec":
        return RingSpec(self.m, self.n, self.characteristic, 0)

    # -- coefficients -------------------------------------------------------

    def coerce(self, c) -> Fraction | int:
        """Map an int/Fraction into the coefficient field."""
        p = self.characteristic
        if not p:
            return Fraction(c)
        if isinstance(c, Fraction):
            den = c.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"{c} has no image in GF({p})")
            return c.numerator * pow(den, -1, p) % p
        return int(c) % p

    def inverse(self, c):
        p = self.characteristic
        if not p:
            return 1 / c
        return pow(c, -1, p)

    def check_same(self, other: "RingSpec") -> None:
        if self != other:
            raise RingMismatchError(f"ring mismatch: {self} vs {other}")
