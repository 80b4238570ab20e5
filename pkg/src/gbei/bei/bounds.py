"""Bounds on pd, cd and ara of J_m(G), and the CI / ACI / cci / stci flags.

Every known bound is collected as a candidate with a short citation, then
pushed through the chain ht <= pd <= cd <= ara <= mu.  Values the literature
does not settle stay as intervals; nothing is rounded to a point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

from ..graph import (
    DisconnectedGraphError,
    SimpleGraph,
    is_complete,
    is_cut_set,
    is_path,
    is_star,
    max_clique,
    vertex_connectivity,
)
from .families import (
    clique_with_trees,
    is_edge_join_edge_plus_point,
    join_split,
    join_with_2k1,
    subgraph_embedding,
    two_paths_two_rungs,
)
from .ideals import _check_m, height_formula, mu

CHAIN = ("pd", "cd", "ara")
YES, NO, UNKNOWN = "yes", "no", "unknown"


class BoundsConsistencyError(AssertionError):
    """Two bounds contradict the chain ht <= pd <= cd <= ara <= mu (a bug, not a user error)."""


@dataclass(frozen=True)
class Bound:
    value: int
    citation: str
    direct: bool = True


@dataclass(frozen=True)
class BoundsReport:
    graph: SimpleGraph
    m: int
    char: int
    ht: int
    mu: int
    lo: dict
    hi: dict
    flags: dict
    provenance: tuple[tuple[str, str, int], ...]
    notes: tuple[str, ...] = field(default=())

    def bound(self, name: str) -> tuple[int, int]:
        return self.lo[name], self.hi[name]

    def exact(self, name: str) -> int | None:
        lo, hi = self.bound(name)
        return lo if lo == hi else None

    def to_dict(self) -> dict:
        return {
            "graph": {"n": self.graph.n, "edges": [list(e) for e in self.graph.sorted_edges()]},
            "m": self.m,
            "char": self.char,
            "ht": self.ht,
            "mu": self.mu,
            "bounds": {k: {"lo": self.lo[k], "hi": self.hi[k]} for k in CHAIN},
            "flags": dict(self.flags),
            "provenance": [{"bound": b, "theorem": t, "value": v} for b, t, v in self.provenance],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        g = self.graph
        lines = [
            f"graph: n={g.n}, {len(g.edges)} edges",
            f"m={self.m} char={self.char}",
            f"ht={self.ht} mu={self.mu}",
        ]
        for k in CHAIN:
            lo, hi = self.bound(k)
            lines.append(f"{k}: {lo}" if lo == hi else f"{k}: {lo}..{hi}")
        lines.append("flags: " + " ".join(f"{k}={v}" for k, v in self.flags.items()))
        lines.append("provenance:")
        lines += [f"  {b} = {v}: {t}" for b, t, v in self.provenance]
        lines += [f"note: {n}" for n in self.notes]
        return "\n".join(lines) + "\n"


def _require_connected(g: SimpleGraph) -> None:
    if g.n < 2:
        raise ValueError("bounds need a graph with at least two vertices")
    if not g.is_connected():
        raise DisconnectedGraphError("graph is not connected")


# -- single-purpose bounds -----------------------------------------------------------


def pairwise_cd_lower(m: int, g: SimpleGraph, T) -> int:
    """Lower bound mn-m-n+|T| for cd(P_empty(G) cap P_T(G)).

    T must be nonempty and split G; cut sets qualify, and so does the set of
    interior vertices of a path.
    """
    _check_m(m)
    T = tuple(sorted(set(T)))
    if not T:
        raise ValueError("T must be nonempty")
    if not is_cut_set(g, T) and g.c(T) < 2:
        raise ValueError(f"{T} does not disconnect the graph")
    return m * g.n - m - g.n + len(T)


def clique_ara_upper(m: int, g: SimpleGraph) -> int | None:
    """m(m-1)/2 (q - r(r-1)/2) + rm - 3 with r the clique number (needs r >= 2)."""
    r = max_clique(g)
    if r < 2:
        return None
    q = len(g.edges)
    return m * (m - 1) // 2 * (q - r * (r - 1) // 2) + r * m - 3


@lru_cache(maxsize=None)
def _template_holds(name: str, characteristic: int) -> bool:
    from ..certificates.catalog import get_template
    from ..certificates.core import instantiate, verify

    return verify(instantiate(get_template(name), characteristic=characteristic)).passed


def certificate_ara_bounds(g: SimpleGraph, characteristic: int = 0) -> list[Bound]:
    """ara(J_2(G)) <= |witness| + |E(G)| - |E(S)| for each catalog graph S inside G.

    Radicals add: rad(I + (f_e : e outside S)) = J_2(S) + J_2(G - E(S)) = J_2(G).
    A template only counts after it verifies in the requested characteristic.
    """
    from ..certificates.catalog import builtin_catalog

    out = []
    for t in builtin_catalog():
        if not t.graph_target or t.k > g.n:
            continue
        if subgraph_embedding(t.graph(), g) is None:
            continue
        if not _template_holds(t.name, characteristic):
            continue
        value = t.size + len(g.edges) - len(t.edges)
        out.append(Bound(value, f"certificate {t.name} (ara <= {t.size}) plus one generator per remaining edge"))
    return out


# -- candidate collection ------------------------------------------------------------


def _candidates(m: int, g: SimpleGraph, char: int, ht: int, use_certificates: bool) -> tuple[dict, list[str]]:
    n, q = g.n, len(g.edges)
    cand: dict[str, list[Bound]] = {f"{k}_{s}": [] for k in CHAIN for s in ("lo", "hi")}
    notes: list[str] = []

    def add(key: str, value: int, citation: str) -> None:
        cand[key].append(Bound(value, citation))

    complete = is_complete(g)
    if complete:
        add("ara_lo", m * n - 3, "complete graph: ara = mn-3")
        add("ara_hi", m * n - 3, "complete graph: ara = mn-3")
        if char > 0:
            v = (m - 1) * (n - 1)
            add("cd_lo", v, "complete graph, char > 0: cd = (m-1)(n-1)")
            add("cd_hi", v, "complete graph, char > 0: cd = (m-1)(n-1)")
        else:
            add("cd_lo", m * n - 3, "complete graph, char 0: cd = mn-3")
            add("cd_hi", m * n - 3, "complete graph, char 0: cd = mn-3")
    else:
        k = vertex_connectivity(g)
        add("cd_lo", m * n - m - n + k, f"vertex connectivity k(G)={k}: cd >= mn-m-n+k(G)")

    if n >= 3 and is_star(g):
        v = (m - 1) * (n - 1)
        add("cd_lo", v, "star: cd >= (m-1)(n-1)")
        if char > 0:
            add("cd_hi", v, "star, char > 0: cd = (m-1)(n-1)")
        else:
            add("cd_hi", m * n - 3, "star, char 0: cd <= mn-3")

    clique = clique_ara_upper(m, g)
    if clique is not None:
        add("ara_hi", clique, f"maximum clique r={max_clique(g)}: ara <= m(m-1)/2 (q - r(r-1)/2) + rm - 3")

    if m == 2:
        for kind, label in (("K4", "K_4"), ("diamond", "diamond")):
            hit = clique_with_trees(g, kind)
            if hit is not None:
                cite = f"{label} with trees glued at {len(hit[1])} distinct vertices: ara = pd = n-1"
                for key in ("pd_lo", "pd_hi", "ara_lo", "ara_hi"):
                    add(key, n - 1, cite)

        for i, j, h_edges in join_with_2k1(g):
            p = n - 2
            if p < 2:
                continue
            cite = f"H * 2K_1 with 2K_1 = {{{i},{j}}}, p={p}: pd = 2p"
            add("pd_lo", 2 * p, cite)
            add("pd_hi", 2 * p, cite)
            if h_edges <= 3:
                add("ara_hi", 2 * p, f"H * 2K_1 with H having {h_edges} <= 3 edges, p={p}: ara = 2p")
            break

        split = join_split(g)
        if split is not None:
            add("ara_hi", q - 3, "join of two graphs with edges, one side of size >= 3: ara <= pq+r+t-3")

        if is_edge_join_edge_plus_point(g):
            cite = "edge joined with (edge + vertex): pd = ara = 5"
            for key in ("pd_lo", "pd_hi", "ara_hi"):
                add(key, 5, cite)

        rungs = two_paths_two_rungs(g)
        if rungs is not None:
            add("cd_hi", n - 1, "two paths joined by two rungs at their first two vertices: cd = n-1")

        if use_certificates:
            for b in certificate_ara_bounds(g, char):
                cand["ara_hi"].append(b)

    if m == 2 and (mu(m, g) == ht + 1) and not (n == 3 and complete):
        notes.append(
            "almost complete intersection with G not a triangle: cci holds exactly when J_2(G) is Cohen-Macaulay"
        )
    return cand, notes


def _pick(options: list[Bound], lower: bool) -> Bound:
    # lower bounds want the largest value, upper bounds the smallest; direct citations win ties
    if lower:
        return max(options, key=lambda b: (b.value, b.direct))
    return min(options, key=lambda b: (b.value, not b.direct))


def _inherit(b: Bound, k: str) -> Bound:
    return Bound(b.value, f"via {k}: {b.citation}" if b.direct else b.citation, direct=False)


def _squeeze(ht: int, mu_value: int, cand: dict) -> tuple[dict, dict]:
    lo: dict[str, Bound] = {}
    hi: dict[str, Bound] = {}
    prev = Bound(ht, "height (ht <= pd)", direct=False)
    for k in CHAIN:
        lo[k] = _pick([prev] + cand[f"{k}_lo"], lower=True)
        prev = _inherit(lo[k], k)
    nxt = Bound(mu_value, "generator count (ara <= mu)", direct=False)
    for k in reversed(CHAIN):
        hi[k] = _pick([nxt] + cand[f"{k}_hi"], lower=False)
        nxt = _inherit(hi[k], k)
    return lo, hi


def _check_chain(ht: int, mu_value: int, lo: dict, hi: dict) -> None:
    lows = [ht] + [lo[k].value for k in CHAIN]
    highs = [hi[k].value for k in CHAIN] + [mu_value]
    # lows[i] sits at chain position i, highs[j] at position j+1
    for i, a in enumerate(lows):
        for j, b in enumerate(highs):
            if j + 1 >= i and a > b:
                raise BoundsConsistencyError(f"chain violated: lower {a} at position {i} > upper {b} at {j + 1}")


def _chain_bounds(m: int, g: SimpleGraph, char: int, use_certificates: bool = True):
    _check_m(m)
    _require_connected(g)
    ht = height_formula(m, g)
    mu_value = mu(m, g)
    cand, notes = _candidates(m, g, char, ht, use_certificates)
    lo, hi = _squeeze(ht, mu_value, cand)
    _check_chain(ht, mu_value, lo, hi)
    return ht, mu_value, lo, hi, notes


def cd_bounds(m: int, g: SimpleGraph, char: int = 0) -> tuple[int, int, dict[str, str]]:
    _, _, lo, hi, _ = _chain_bounds(m, g, char)
    return lo["cd"].value, hi["cd"].value, {"lo": lo["cd"].citation, "hi": hi["cd"].citation}


def ara_bounds(m: int, g: SimpleGraph, char: int = 0) -> tuple[int, int, dict[str, str]]:
    _, _, lo, hi, _ = _chain_bounds(m, g, char)
    return lo["ara"].value, hi["ara"].value, {"lo": lo["ara"].citation, "hi": hi["ara"].citation}


# -- classification ------------------------------------------------------------------


def classify_ci(m: int, g: SimpleGraph) -> tuple[bool, str]:
    """CI iff m = 2 and G is a path; cross-checked against mu == ht."""
    _check_m(m)
    _require_connected(g)
    structural = m == 2 and is_path(g)
    numeric = mu(m, g) == height_formula(m, g)
    if structural != numeric:
        raise BoundsConsistencyError(f"CI tests disagree: structural={structural}, numeric={numeric}")
    why = "m = 2 and G is a path" if structural else ("m >= 3" if m > 2 else "G is not a path")
    return structural, f"{why}; mu {'=' if numeric else '>'} ht"


def classify_aci(m: int, g: SimpleGraph) -> bool:
    _check_m(m)
    _require_connected(g)
    return mu(m, g) == height_formula(m, g) + 1


def _cci_from(m: int, g: SimpleGraph, char: int, ht: int, lo: dict, hi: dict) -> tuple[str, str]:
    if m >= 3:
        if is_complete(g) and char > 0:
            return YES, "m >= 3: cci exactly for complete graphs in positive characteristic"
        return NO, "m >= 3: cci only for complete graphs in positive characteristic"
    if hi["cd"].value == ht:
        return YES, f"cd <= {ht} = ht ({hi['cd'].citation})"
    if lo["cd"].value > ht:
        return NO, f"cd >= {lo['cd'].value} > ht ({lo['cd'].citation})"
    if ht != (m - 1) * (g.n - 1):
        return NO, "ht != (m-1)(n-1), so J_m(G) is not Cohen-Macaulay and hence not cci"
    return UNKNOWN, "cd not settled by known bounds"


def _stci_from(m: int, ht: int, lo: dict, hi: dict, cci: str) -> tuple[str, str]:
    if m >= 3:
        return NO, "m >= 3: never a set-theoretic complete intersection"
    if hi["ara"].value == ht:
        return YES, f"ara <= {ht} = ht ({hi['ara'].citation})"
    if lo["ara"].value > ht:
        return NO, f"ara >= {lo['ara'].value} > ht ({lo['ara'].citation})"
    if cci == NO:
        return NO, "not cci, and stci implies Cohen-Macaulay as well as cd = ht"
    return UNKNOWN, "ara not settled by known bounds"


def classify_cci(m: int, g: SimpleGraph, char: int = 0) -> tuple[str, str]:
    ht, _, lo, hi, _ = _chain_bounds(m, g, char)
    return _cci_from(m, g, char, ht, lo, hi)


def classify_stci(m: int, g: SimpleGraph, char: int = 0) -> tuple[str, str]:
    ht, _, lo, hi, _ = _chain_bounds(m, g, char)
    cci, _ = _cci_from(m, g, char, ht, lo, hi)
    return _stci_from(m, ht, lo, hi, cci)


def bounds_report(m: int, g: SimpleGraph, char: int = 0, use_certificates: bool = True) -> BoundsReport:
    ht, mu_value, lo, hi, notes = _chain_bounds(m, g, char, use_certificates)
    ci, _ = classify_ci(m, g)
    cci, cci_why = _cci_from(m, g, char, ht, lo, hi)
    stci, stci_why = _stci_from(m, ht, lo, hi, cci)
    flags = {
        "ci": YES if ci else NO,
        "aci": YES if mu_value == ht + 1 else NO,
        "cci": cci,
        "stci": stci,
    }
    prov = [("ht", "minimum over cut sets of (m-1)(n-c(T)) + |T|", ht), ("mu", "m(m-1)/2 generators per edge", mu_value)]
    for k in CHAIN:
        prov.append((f"{k}.lo", lo[k].citation, lo[k].value))
        prov.append((f"{k}.hi", hi[k].citation, hi[k].value))
    notes += [f"cci: {cci_why}", f"stci: {stci_why}"]
    return BoundsReport(g, m, char, ht, mu_value, {k: lo[k].value for k in CHAIN}, {k: hi[k].value for k in CHAIN},
                        flags, tuple(prov), tuple(notes))
