from __future__ import annotations

import sys
from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import HealthCheck, settings

from gbei.field_poly import Polynomial, RingSpec

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    derandomize=True,
)
settings.load_profile("default")


def sympy_symbols(ring: RingSpec):
    return sympy.symbols([ring.var_name(v).replace("[", "_").replace("]", "") for v in range(ring.nvars)])


def to_sympy(f: Polynomial, gens):
    expr = 0
    for exps, c in f.exponent_terms().items():
        term = sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else sympy.Integer(c)
        for g, e in zip(gens, exps):
            term *= g**e
        expr += term
    return sympy.Poly(expr, *gens)


def from_sympy(p, ring: RingSpec) -> Polynomial:
    terms = {}
    for exps, c in p.terms():
        if ring.characteristic:
            c = int(c) % ring.characteristic
        else:
            c = Fraction(int(sympy.numer(c)), int(sympy.denom(c)))
        terms[tuple(exps)] = c
    return Polynomial.from_exponents(ring, terms)


def sympy_reduced_gb(polys, ring: RingSpec, order: str = "grevlex"):
    gens = sympy_symbols(ring)
    exprs = [to_sympy(f, gens).as_expr() for f in polys]
    opts = {"order": order}
    if ring.characteristic:
        opts["modulus"] = ring.characteristic
    gb = sympy.groebner(exprs, *gens, **opts)
    out = []
    for g in gb.polys:
        g = sympy.Poly(g.as_expr(), *gens, **({"modulus": ring.characteristic} if ring.characteristic else {}))
        out.append(from_sympy(g, ring))
    return out


def brute_force_dimension(mingens, varcount: int) -> int:
    """Largest variable subset avoiding every generator's support (all 2^varcount subsets)."""
    supports = [frozenset(v for v, e in enumerate(g) if e) for g in mingens]
    if frozenset() in supports:
        return -1
    for size in range(varcount, -1, -1):
        for s in combinations(range(varcount), size):
            ss = set(s)
            if not any(sup <= ss for sup in supports):
                return size
    return 0


@pytest.fixture
def r24() -> RingSpec:
    return RingSpec(2, 4)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        ok, detail = results[number]
        title = mod.TITLES[number]
        terminalreporter.write_line(f"criterion {number} ({title}): {'PASS' if ok else 'FAIL'}  {detail}")
