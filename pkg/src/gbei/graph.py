"""Simple graphs on vertices 1..n: cut sets, connectivity, cliques, families."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from pathlib import Path
from typing import Iterable, Mapping, Sequence

VertexSet = tuple[int, ...]

SOFT_CAP = 20


class DisconnectedGraphError(ValueError):
    pass


class GraphFormatError(ValueError):
    pass


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph; edges are stored as sorted pairs ``(i, j)``, ``i < j``."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        clean = set()
        for e in edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge {{{i},{j}}} has an endpoint outside [1..{n}]")
            clean.add((min(i, j), max(i, j)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(clean))
        adj: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
        for i, j in clean:
            adj[i].add(j)
            adj[j].add(i)
        object.__setattr__(self, "_adj", {v: frozenset(s) for v, s in adj.items()})

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, i: int, j: int) -> bool:
        return j in self._adj.get(i, ())

    def __len__(self) -> int:
        return self.n

    def is_connected(self) -> bool:
        return self.n == 0 or len(self.components_after_deletion(())) == 1

    def components_after_deletion(self, removed: Iterable[int]) -> list[VertexSet]:
        """Connected components of G minus ``removed``, each sorted, listed by first vertex."""
        gone = set(removed)
        seen = set(gone)
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            stack = [s]
            seen.add(s)
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self._adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return comps

    def c(self, removed: Iterable[int]) -> int:
        return len(self.components_after_deletion(removed))

    def induced(self, verts: Iterable[int]) -> set[tuple[int, int]]:
        vs = set(verts)
        return {e for e in self.edges if e[0] in vs and e[1] in vs}

    def is_clique(self, verts: Iterable[int]) -> bool:
        vs = list(verts)
        return all(self.has_edge(a, b) for a, b in combinations(vs, 2))

    def relabeled(self, mapping: Mapping[int, int], n: int | None = None) -> "SimpleGraph":
        return SimpleGraph(self.n if n is None else n, ((mapping[i], mapping[j]) for i, j in self.edges))

    def to_text(self) -> str:
        lines = [str(self.n)] + [f"{i} {j}" for i, j in self.sorted_edges()]
        return "\n".join(lines) + "\n"


# -- file format -----------------------------------------------------------------


def parse_graph(text: str) -> SimpleGraph:
    """First meaningful line is ``n``; each further line is an edge ``i j``; ``#`` comments."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise GraphFormatError("empty graph file")
    try:
        n = int(rows[0])
    except ValueError as exc:
        raise GraphFormatError(f"first line must be the vertex count, got {rows[0]!r}") from exc
    edges = []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"edge line must have two vertices: {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise GraphFormatError(f"non-integer vertex in {line!r}") from exc
    try:
        return SimpleGraph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def read_graph(path: str | Path) -> SimpleGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(g: SimpleGraph, path: str | Path) -> None:
    Path(path).write_text(g.to_text(), encoding="utf-8")


# -- cut sets and connectivity -------------------------------------------------------


def _require_connected(g: SimpleGraph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError("graph is not connected")


def is_cut_set(g: SimpleGraph, t: Iterable[int]) -> bool:
    t = tuple(t)
    if not t:
        return True
    ct = g.c(t)
    return all(g.c([v for v in t if v != i]) < ct for i in t)


def cut_sets(g: SimpleGraph) -> list[VertexSet]:
    """All cut sets of a connected graph, by exhaustive search; sorted lexicographically."""
    _require_connected(g)
    if g.n > SOFT_CAP:
        raise ValueError(f"cut-set enumeration is exhaustive; n={g.n} exceeds the cap {SOFT_CAP}")
    out = []
    for size in range(g.n + 1):
        for t in combinations(g.vertices, size):
            if is_cut_set(g, t):
                out.append(t)
    return sorted(out)


def vertex_connectivity(g: SimpleGraph) -> int:
    """Largest k with k < n and G - T connected whenever |T| < k."""
    if g.n < 2:
        raise ValueError("vertex connectivity needs at least two vertices")
    _require_connected(g)
    if len(g.edges) == g.n * (g.n - 1) // 2:
        return g.n - 1
    for size in range(1, g.n - 1):
        for t in combinations(g.vertices, size):
            if g.c(t) > 1:
                return size
    return g.n - 1  # unreachable for a non-complete graph


def max_clique(g: SimpleGraph) -> int:
    """Size of a maximum clique (branch and bound over candidate sets)."""
    if g.n == 0:
        return 0
    best = 1

    def expand(size: int, cand: list[int]):
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + len(cand) <= best:
                return
            v = cand.pop()
            expand(size + 1, [w for w in cand if w in g.neighbors(v)])

    order = sorted(g.vertices, key=lambda v: (g.degree(v), v))
    expand(0, order)
    return best


# -- constructors ----------------------------------------------------------------------


def null_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, ())


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, ((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimpleGraph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, combinations(range(1, n + 1), 2))


def star_graph(n: int) -> SimpleGraph:
    """K_{1,n-1} with centre 1."""
    return SimpleGraph(n, ((1, j) for j in range(2, n + 1)))


def complete_bipartite(p: int, q: int) -> SimpleGraph:
    """K_{p,q} with parts 1..p and p+1..p+q."""
    return SimpleGraph(p + q, ((i, j) for i in range(1, p + 1) for j in range(p + 1, p + q + 1)))


def diamond() -> SimpleGraph:
    """K_4 minus the edge {2,4}; vertices 1 and 3 have degree 3."""
    return SimpleGraph(4, [(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)])


def join(g: SimpleGraph, h: SimpleGraph) -> tuple[SimpleGraph, dict[int, int]]:
    """G * H: disjoint union plus every edge between the two vertex sets.

    H's vertex v becomes ``g.n + v``; the returned map sends H's labels to the new ones.
    """
    shift = {v: g.n + v for v in h.vertices}
    edges = set(g.edges) | {(shift[i], shift[j]) for i, j in h.edges}
    edges |= {(i, shift[j]) for i in g.vertices for j in h.vertices}
    return SimpleGraph(g.n + h.n, edges), shift


def clique_sum(
    g1: SimpleGraph, g2: SimpleGraph, shared: Sequence[tuple[int, int]]
) -> tuple[SimpleGraph, dict[int, int]]:
    """Glue ``g1`` and ``g2`` along ``shared`` pairs (vertex of g1, vertex of g2).

    Both sides of ``shared`` must induce cliques.  g1 keeps its labels; the
    returned map sends g2's labels to labels in the sum.
    """
    left = [a for a, _ in shared]
    right = [b for _, b in shared]
    if len(set(left)) != len(left) or len(set(right)) != len(right):
        raise ValueError("shared vertices must be distinct")
    if not (g1.is_clique(left) and g2.is_clique(right)):
        raise ValueError("the shared vertex set is not a clique in both graphs")
    mapping = dict((b, a) for a, b in shared)
    nxt = g1.n
    for v in g2.vertices:
        if v not in mapping:
            nxt += 1
            mapping[v] = nxt
    edges = set(g1.edges) | {(mapping[i], mapping[j]) for i, j in g2.edges}
    return SimpleGraph(nxt, edges), mapping


def attach_tree(g: SimpleGraph, v: int, tree: SimpleGraph, root: int = 1) -> tuple[SimpleGraph, dict[int, int]]:
    """Clique sum of ``g`` and a tree glued at ``v`` (in g) = ``root`` (in tree)."""
    if not is_tree(tree):
        raise ValueError("attached graph is not a tree")
    return clique_sum(g, tree, [(v, root)])


def with_pendant_paths(g: SimpleGraph, n: int, anchors: Sequence[int] = (1, 2)) -> SimpleGraph:
    """Grow ``g`` to ``n`` vertices by hanging one path at each anchor, lengths as equal as possible."""
    extra = n - g.n
    if extra < len(anchors):
        raise ValueError(f"need at least {g.n + len(anchors)} vertices to give every anchor a path")
    out = g
    for idx, v in enumerate(anchors):
        length = extra // len(anchors) + (1 if idx < extra % len(anchors) else 0)
        out, _ = attach_tree(out, v, path_graph(length + 1))
    return out


# -- recognizers --------------------------------------------------------------------------


def is_tree(g: SimpleGraph) -> bool:
    return g.n >= 1 and len(g.edges) == g.n - 1 and g.is_connected()


def is_path(g: SimpleGraph) -> bool:
    return is_tree(g) and all(g.degree(v) <= 2 for v in g.vertices)


def is_cycle(g: SimpleGraph) -> bool:
    return g.n >= 3 and g.is_connected() and all(g.degree(v) == 2 for v in g.vertices)


def is_complete(g: SimpleGraph) -> bool:
    return len(g.edges) == g.n * (g.n - 1) // 2


def is_star(g: SimpleGraph) -> bool:
    return g.n >= 2 and is_tree(g) and any(g.degree(v) == g.n - 1 for v in g.vertices)


def bipartition(g: SimpleGraph) -> tuple[VertexSet, VertexSet] | None:
    """The 2-colouring of a connected bipartite graph (part containing 1 first), else None."""
    if g.n == 0 or not g.is_connected():
        return None
    colour = {1: 0}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in colour:
                colour[w] = 1 - colour[v]
                stack.append(w)
            elif colour[w] == colour[v]:
                return None
    a = tuple(v for v in g.vertices if colour[v] == 0)
    b = tuple(v for v in g.vertices if colour[v] == 1)
    return a, b


def complete_bipartite_shape(g: SimpleGraph) -> tuple[int, int] | None:
    parts = bipartition(g)
    if parts is None or not parts[1]:
        return None
    p, q = sorted((len(parts[0]), len(parts[1])))
    return (p, q) if len(g.edges) == p * q else None


def is_diamond(g: SimpleGraph) -> bool:
    return g.n == 4 and len(g.edges) == 5


def classify_family(g: SimpleGraph) -> set[str]:
    tags = set()
    if is_path(g):
        tags.add("path")
    if is_cycle(g):
        tags.add("cycle")
    if is_tree(g):
        tags.add("tree")
    if is_star(g):
        tags.add("star")
    if g.n >= 1 and is_complete(g):
        tags.add("complete")
    shape = complete_bipartite_shape(g)
    if shape:
        tags.add(f"complete_bipartite({shape[0]},{shape[1]})")
    if g.n >= 1 and not g.edges:
        tags.add("null")
    if g.n == 3 and is_complete(g):
        tags.add("triangle")
    if is_diamond(g):
        tags.add("diamond")
    return tags


def is_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    """Brute-force isomorphism test for small graphs."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if sorted(g.degree(v) for v in g.vertices) != sorted(h.degree(v) for v in h.vertices):
        return False
    for perm in permutations(h.vertices):
        mapping = dict(zip(g.vertices, perm))
        if all(h.has_edge(mapping[i], mapping[j]) for i, j in g.edges):
            return True
    return False


def connected_graphs(n: int) -> list[SimpleGraph]:
    """Every connected labelled graph on [n], ordered by edge bitmask."""
    pairs = list(combinations(range(1, n + 1), 2))
    out = []
    for mask in range(1 << len(pairs)):
        g = SimpleGraph(n, (pairs[b] for b in range(len(pairs)) if mask >> b & 1))
        if g.is_connected():
            out.append(g)
    return out
