"""Packed exponent vectors.

A monomial in ``N`` variables is stored as one Python int: exponent ``e_v``
occupies bits ``[16v, 16v+16)`` and the total degree sits in field ``N``.
Each field keeps its top bit clear as a guard, so

* multiplication is integer addition,
* ``a | b`` iff ``(b - a) & guard_mask == 0``,
* the degree is ``packed >> 16N``.

Exponents and degrees must stay below ``2**15``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

BITS = 16
FIELD = (1 << BITS) - 1
MAX_EXP = (1 << (BITS - 1)) - 1

Monomial = tuple  # public exponent-vector form: tuple[int, ...]


@lru_cache(maxsize=None)
def guard_mask(nvars: int) -> int:
    g = 0
    for v in range(nvars + 1):
        g |= 1 << (BITS * v + BITS - 1)
    return g


@lru_cache(maxsize=None)
def low_mask(nvars: int) -> int:
    return (1 << (BITS * nvars)) - 1


def pack(exps: Sequence[int]) -> int:
    packed = 0
    deg = 0
    for v, e in enumerate(exps):
        if e < 0:
            raise ValueError("negative exponent")
        if e:
            packed |= e << (BITS * v)
            deg += e
    if deg > MAX_EXP:
        raise OverflowError(f"total degree {deg} exceeds {MAX_EXP}")
    return packed | (deg << (BITS * len(exps)))


def unpack(packed: int, nvars: int) -> tuple[int, ...]:
    return tuple((packed >> (BITS * v)) & FIELD for v in range(nvars))


def degree(packed: int, nvars: int) -> int:
    return packed >> (BITS * nvars)


def divides(a: int, b: int, nvars: int) -> bool:
    return not ((b - a) & guard_mask(nvars))


def lcm(a: int, b: int, nvars: int) -> int:
    out = 0
    deg = 0
    for v in range(nvars):
        sh = BITS * v
        ea = (a >> sh) & FIELD
        eb = (b >> sh) & FIELD
        e = ea if ea > eb else eb
        if e:
            out |= e << sh
            deg += e
    return out | (deg << (BITS * nvars))


def support(packed: int, nvars: int) -> frozenset[int]:
    return frozenset(v for v in range(nvars) if (packed >> (BITS * v)) & FIELD)


def variable(index: int, nvars: int) -> int:
    return (1 << (BITS * index)) | (1 << (BITS * nvars))
