"""Structural recognizers for the graph families with known ara/cd/pd values."""

from __future__ import annotations

from itertools import combinations

from ..graph import SimpleGraph, is_isomorphic, join, path_graph


def _edges_within(edges: set, comp) -> int:
    cs = set(comp)
    return sum(1 for a, _ in edges if a in cs)


def _components(n: int, edges: set) -> list[tuple[int, ...]]:
    adj = {v: [] for v in range(1, n + 1)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen, out = set(), []
    for s in range(1, n + 1):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        out.append(tuple(sorted(comp)))
    return out


def clique_with_trees(g: SimpleGraph, kind: str) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Find G = D (+)_{v1} T_1 ... (+)_{vs} T_s with D a K_4 (kind="K4") or a diamond
    (kind="diamond"), trees T_h glued at s >= 2 distinct vertices of D, and n >= 6.

    Returns (vertices of D, attachment vertices) or None.
    """
    want = {"K4": 6, "diamond": 5}[kind]
    if g.n < 6 or not g.is_connected():
        return None
    for quad in combinations(g.vertices, 4):
        inner = g.induced(quad)
        if len(inner) != want:
            continue
        rest = set(g.edges) - inner
        attachments = []
        ok = True
        for comp in _components(g.n, rest):
            anchors = [v for v in comp if v in quad]
            if len(anchors) != 1 or _edges_within(rest, comp) != len(comp) - 1:
                ok = False
                break
            if len(comp) > 1:
                attachments.append(anchors[0])
        if ok and len(attachments) >= 2:
            return quad, tuple(sorted(attachments))
    return None


def join_with_2k1(g: SimpleGraph) -> list[tuple[int, int, int]]:
    """Every way to read G as H * 2K_1: pairs (i, j) of non-adjacent vertices adjacent
    to everything else.  Returns (i, j, number of edges of H)."""
    out = []
    everyone = set(g.vertices)
    for i, j in combinations(g.vertices, 2):
        if g.has_edge(i, j):
            continue
        others = everyone - {i, j}
        if g.neighbors(i) == others and g.neighbors(j) == others:
            h_edges = len(g.induced(others))
            out.append((i, j, h_edges))
    return out


def join_split(g: SimpleGraph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """A partition V = A u B with every A-B edge present, both sides carrying an
    edge and one side having at least 3 vertices."""
    verts = list(g.vertices)
    if g.n < 5:
        return None
    rest = verts[1:]
    for size in range(1, g.n - 1):
        for extra in combinations(rest, size):
            a = (verts[0],) + extra
            b = tuple(v for v in verts if v not in a)
            if max(len(a), len(b)) < 3:
                continue
            if not all(g.has_edge(x, y) for x in a for y in b):
                continue
            if g.induced(a) and g.induced(b):
                return a, b
    return None


def _edge_plus_point_join() -> SimpleGraph:
    h = SimpleGraph(3, [(1, 2)])
    return join(path_graph(2), h)[0]


def is_edge_join_edge_plus_point(g: SimpleGraph) -> bool:
    """G is isomorphic to (single edge) * (edge + isolated vertex), on 5 vertices."""
    return g.n == 5 and len(g.edges) == 8 and is_isomorphic(g, _edge_plus_point_join())


def _is_path_from(edges: set, comp: tuple[int, ...], start: int) -> bool:
    deg = {v: 0 for v in comp}
    for a, b in edges:
        if a in deg:
            deg[a] += 1
            deg[b] += 1
    return (
        len([e for e in edges if e[0] in deg]) == len(comp) - 1
        and all(d <= 2 for d in deg.values())
        and (len(comp) == 1 or deg[start] == 1)
    )


def two_paths_two_rungs(g: SimpleGraph) -> tuple[int, int, int, int] | None:
    """Paths u_1..u_r and v_1..v_s (r, s >= 3) joined by the edges {u_1,v_1}, {u_2,v_2}.

    Returns (u_1, u_2, v_2, v_1) or None.
    """
    if g.n < 6 or len(g.edges) != g.n or not g.is_connected():
        return None
    for u1 in g.vertices:
        if g.degree(u1) != 2:
            continue
        for v1 in g.neighbors(u1):
            if g.degree(v1) != 2:
                continue
            (u2,) = g.neighbors(u1) - {v1}
            (v2,) = g.neighbors(v1) - {u1}
            if u2 == v2 or not g.has_edge(u2, v2):
                continue
            rest = set(g.edges) - {tuple(sorted((u1, v1))), tuple(sorted((u2, v2)))}
            comps = _components(g.n, rest)
            cu = next(c for c in comps if u1 in c)
            cv = next(c for c in comps if v1 in c)
            if len(comps) != 2 or cu == cv or len(cu) < 3 or len(cv) < 3:
                continue
            sub_u = {e for e in rest if e[0] in cu}
            sub_v = {e for e in rest if e[0] in cv}
            if _is_path_from(sub_u, cu, u1) and _is_path_from(sub_v, cv, v1):
                return u1, u2, v2, v1
    return None


def subgraph_embedding(pattern: SimpleGraph, g: SimpleGraph) -> dict[int, int] | None:
    """An injective vertex map sending every edge of ``pattern`` onto an edge of ``g``."""
    if pattern.n > g.n or len(pattern.edges) > len(g.edges):
        return None
    order: list[int] = []
    for s in sorted(pattern.vertices, key=lambda v: -pattern.degree(v)):
        if s in order:
            continue
        queue = [s]
        while queue:
            v = queue.pop(0)
            if v in order:
                continue
            order.append(v)
            queue.extend(sorted(pattern.neighbors(v) - set(order), key=lambda w: -pattern.degree(w)))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def place(idx: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        placed_nbrs = [mapping[w] for w in pattern.neighbors(v) if w in mapping]
        if placed_nbrs:
            cands = set(g.neighbors(placed_nbrs[0]))
            for w in placed_nbrs[1:]:
                cands &= g.neighbors(w)
        else:
            cands = set(g.vertices)
        for c in sorted(cands - used):
            if g.degree(c) < pattern.degree(v):
                continue
            mapping[v] = c
            used.add(c)
            if place(idx + 1):
                return True
            del mapping[v]
            used.discard(c)
        return False

    return dict(mapping) if place(0) else None

