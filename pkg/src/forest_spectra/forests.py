"""Enumeration and counting of k-component spanning forests.

A spanning forest here always covers the full vertex set of its host graph
(isolated vertices count as components), so a forest with e edges on v
vertices has exactly v - e components.  Enumeration is exhaustive: recursive
edge inclusion with union-find cycle rejection, pruned by remaining-edge
feasibility.  Counts are plain Python integers, which are arbitrary
precision; w^(w-4) and forest counts overflow fixed-width types quickly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .errors import InsufficientVertices
from .graphs import (
    COMPLETE,
    Edge,
    Graph,
    Vertex,
    complete_graph,
    edge,
    edge_name,
    vertex,
)
from .polynomials import Polynomial


@dataclass(frozen=True)
class Forest:
    """An acyclic edge subset spanning a fixed vertex subset of a graph.

    ``vertices`` is usually the full vertex set of ``graph``; restricted
    vertex sets appear when trees are split or families live on K_W.
    """

    graph: Graph
    vertices: frozenset[Vertex]
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("a forest needs at least one vertex")
        if not self.vertices <= set(self.graph.vertices):
            raise ValueError("forest vertices must belong to the graph")
        for e in self.edges:
            self.graph.require_edge(e)
            if not (e[0] in self.vertices and e[1] in self.vertices):
                raise ValueError(f"edge {edge_name(e)} leaves the vertex set")
        # acyclic iff #components == #vertices - #edges
        if self.component_count != len(self.vertices) - len(self.edges):
            raise ValueError("edge set contains a cycle")

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    @property
    def component_count(self) -> int:
        return len(self._component_map()[1])

    def _component_map(self) -> tuple[dict[Vertex, int], list[Vertex]]:
        cached = self.__dict__.get("_comps")
        if cached is None:
            adj: dict[Vertex, list[Vertex]] = {v: [] for v in self.vertices}
            for a, b in self.edges:
                adj[a].append(b)
                adj[b].append(a)
            comp: dict[Vertex, int] = {}
            reps: list[Vertex] = []
            for v in sorted(self.vertices):
                if v in comp:
                    continue
                cid = len(reps)
                reps.append(v)
                stack = [v]
                comp[v] = cid
                while stack:
                    x = stack.pop()
                    for y in adj[x]:
                        if y not in comp:
                            comp[y] = cid
                            stack.append(y)
            cached = (comp, reps)
            object.__setattr__(self, "_comps", cached)
        return cached

    def component_containing(self, v: Vertex) -> "Forest":
        if v not in self.vertices:
            raise ValueError(f"vertex {v} is not in this forest")
        comp, _ = self._component_map()
        cid = comp[v]
        verts = frozenset(u for u in self.vertices if comp[u] == cid)
        edges = frozenset(e for e in self.edges if comp[e[0]] == cid)
        return Forest(self.graph, verts, edges)

    def components(self) -> tuple["Forest", ...]:
        """Component trees, ordered by their smallest vertex."""
        _comp, reps = self._component_map()
        return tuple(self.component_containing(rep) for rep in reps)

    def same_component(self, u: Vertex, v: Vertex) -> bool:
        comp, _ = self._component_map()
        return comp[u] == comp[v]

    def replace_edges(self, remove: Iterable[Edge] = (), add: Iterable[Edge] = ()) -> "Forest":
        """New forest with edges swapped; raises if the result has a cycle."""
        removed = set(remove)
        missing = removed - self.edges
        if missing:
            names = ", ".join(sorted(edge_name(e) for e in missing))
            raise ValueError(f"cannot remove absent edges: {names}")
        return Forest(self.graph, self.vertices, (self.edges - removed) | set(add))

    def relabel(self, mapping: dict[Vertex, Vertex]) -> "Forest":
        """Apply a vertex permutation (vertices outside ``mapping`` are fixed)."""
        verts = frozenset(mapping.get(v, v) for v in self.vertices)
        edges = frozenset(edge(mapping.get(a, a), mapping.get(b, b)) for a, b in self.edges)
        return Forest(self.graph, verts, edges)

    def edge_names(self) -> tuple[str, ...]:
        return tuple(edge_name(e) for e in sorted(self.edges))

    def __str__(self) -> str:
        inner = ",".join(self.edge_names()) or "no edges"
        return f"Forest({inner})"


@dataclass(frozen=True)
class PairCounts:
    """Numbers of k-forests through the anchored edge pairs.

    Complete graphs have two counts (shared vertex, disjoint); bipartite
    graphs a third, split by which part carries the shared vertex.
    """

    p: int
    q: int
    r: int | None = None

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0 or (self.r is not None and self.r < 0):
            raise ValueError("pair counts are nonnegative")


@dataclass(frozen=True)
class Decomposition:
    """The two-term split of the shared-vertex/disjoint pair counts.

    For complete graphs: p = 3t + f and q = 4t + f.
    """

    t: int
    f: int


def spanning_forest(graph: Graph, edges: Iterable[Edge]) -> Forest:
    """Forest on the full vertex set of ``graph``."""
    return Forest(graph, frozenset(graph.vertices), frozenset(edges))


# ---------------------------------------------------------------------------
# core search: recursion over the next included edge, union-find with undo


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        x = parent[x]
    return x


def _count_from(parent: list[int], comps: int, free: Sequence[tuple[int, int]], i: int, k: int) -> int:
    need = comps - k
    if need == 0:
        return 1
    m = len(free)
    total = 0
    while i <= m - need:
        u, v = free[i]
        ru = _find(parent, u)
        rv = _find(parent, v)
        if ru != rv:
            parent[ru] = rv
            total += _count_from(parent, comps - 1, free, i + 1, k)
            parent[ru] = ru
        i += 1
    return total


def _collect_from(
    parent: list[int],
    comps: int,
    free: Sequence[tuple[int, int, int]],
    i: int,
    k: int,
    chosen: list[int],
    out: list[tuple[int, ...]],
) -> None:
    need = comps - k
    if need == 0:
        out.append(tuple(chosen))
        return
    m = len(free)
    while i <= m - need:
        u, v, idx = free[i]
        ru = _find(parent, u)
        rv = _find(parent, v)
        if ru != rv:
            parent[ru] = rv
            chosen.append(idx)
            _collect_from(parent, comps - 1, free, i + 1, k, chosen, out)
            chosen.pop()
            parent[ru] = ru
        i += 1


def _setup(g: Graph, k: int, required: Iterable[Edge], forbidden: Iterable[Edge]):
    if not isinstance(k, int) or not 1 <= k <= g.vertex_count:
        raise ValueError(f"component count k={k} out of range 1..{g.vertex_count}")
    req = list(dict.fromkeys(required))
    forb = set(forbidden)
    overlap = set(req) & forb
    if overlap:
        names = ", ".join(sorted(edge_name(e) for e in overlap))
        raise ValueError(f"required and forbidden edges overlap: {names}")
    for e in req:
        g.require_edge(e)
    for e in forb:
        g.require_edge(e)
    vidx = {v: i for i, v in enumerate(g.vertices)}
    parent = list(range(g.vertex_count))
    comps = g.vertex_count
    for a, b in req:
        ra = _find(parent, vidx[a])
        rb = _find(parent, vidx[b])
        if ra == rb:
            return None  # required edges already close a cycle
        parent[ra] = rb
        comps -= 1
    skip = set(req) | forb
    eidx = g.edge_index
    return parent, comps, vidx, [e for e in g.edges if e not in skip], eidx, req


def count_forests_constrained(
    g: Graph, k: int, required: Iterable[Edge] = (), forbidden: Iterable[Edge] = ()
) -> int:
    """Number of k-component spanning forests containing every required
    edge and avoiding every forbidden edge."""
    state = _setup(g, k, required, forbidden)
    if state is None:
        return 0
    parent, comps, vidx, free, _eidx, _req = state
    if comps < k:
        return 0
    pairs = [(vidx[a], vidx[b]) for a, b in free]
    return _count_from(parent, comps, pairs, 0, k)


def _forest_index_tuples(
    g: Graph, k: int, required: Iterable[Edge] = (), forbidden: Iterable[Edge] = ()
) -> list[tuple[int, ...]]:
    state = _setup(g, k, required, forbidden)
    if state is None:
        return []
    parent, comps, vidx, free, eidx, req = state
    if comps < k:
        return []
    triples = [(vidx[a], vidx[b], eidx[e]) for e in free for a, b in [e]]
    out: list[tuple[int, ...]] = []
    _collect_from(parent, comps, triples, 0, k, [], out)
    base = tuple(sorted(eidx[e] for e in req))
    if base:
        return [tuple(sorted(base + c)) for c in out]
    return out


def enumerate_forests(g: Graph, k: int) -> tuple[Forest, ...]:
    """All spanning forests of ``g`` with exactly k components.

    Deterministic order: lexicographic in the sequence of edge indices.
    """
    return enumerate_forests_constrained(g, k)


def enumerate_forests_constrained(
    g: Graph, k: int, required: Iterable[Edge] = (), forbidden: Iterable[Edge] = ()
) -> tuple[Forest, ...]:
    """Constrained variant of :func:`enumerate_forests`, same order."""
    edges = g.edges
    verts = frozenset(g.vertices)
    return tuple(
        Forest(g, verts, frozenset(edges[i] for i in tup))
        for tup in _forest_index_tuples(g, k, required, forbidden)
    )


def forest_generating_polynomial(g: Graph, k: int) -> Polynomial:
    """Generating function of the k-component forests: one square-free
    monomial x_e1 ... x_er per forest, variables in canonical edge order."""
    m = g.edge_count
    terms = {}
    for tup in _forest_index_tuples(g, k):
        exps = [0] * m
        for i in tup:
            exps[i] = 1
        terms[tuple(exps)] = 1
    return Polynomial(g.edges, terms)


# ---------------------------------------------------------------------------
# anchored pair counts and their decomposition


def _complete_anchors() -> tuple[Edge, Edge, Edge]:
    v1, v2, v3, v4 = (vertex(i) for i in range(1, 5))
    return edge(v1, v2), edge(v2, v3), edge(v3, v4)


def _bipartite_anchors() -> tuple[Vertex, Vertex, Vertex, Vertex]:
    return vertex(1), vertex(1, right=True), vertex(2), vertex(2, right=True)


def theorem_range(g: Graph, k: int) -> bool:
    """Whether (g, k) satisfies the hypotheses of the nonvanishing theorems."""
    if g.kind == COMPLETE:
        return 0 < k < g.left_size - 2
    return g.left_size >= 2 and g.right_size >= 2 and 0 < k < g.vertex_count - 2


def edge_pair_counts(g: Graph, k: int) -> PairCounts:
    """Counts of k-forests through the anchored edge pairs.

    By edge-transitivity of the automorphism group, these counts do not
    depend on the chosen pair within each class; the uniformity is asserted
    separately by the matrix route.
    """
    if g.kind == COMPLETE:
        n = g.left_size
        if n < 4:
            raise InsufficientVertices(f"need n >= 4 for anchor edges, got n={n}")
        if not 0 < k < n - 2:
            raise ValueError(f"k={k} outside the range 0 < k < n-2 = {n - 2}")
        e12, e23, e34 = _complete_anchors()
        p = count_forests_constrained(g, k, required=(e12, e23))
        q = count_forests_constrained(g, k, required=(e12, e34))
        return PairCounts(p, q)
    m, n = g.left_size, g.right_size
    if m < 2 or n < 2:
        raise InsufficientVertices(f"need m, n >= 2 for anchor edges, got ({m}, {n})")
    if not 0 < k < m + n - 2:
        raise ValueError(f"k={k} outside the range 0 < k < m+n-2 = {m + n - 2}")
    a, b, c, d = _bipartite_anchors()
    p = count_forests_constrained(g, k, required=(edge(a, b), edge(a, d)))
    q = count_forests_constrained(g, k, required=(edge(a, b), edge(c, b)))
    r = count_forests_constrained(g, k, required=(edge(a, b), edge(c, d)))
    return PairCounts(p, q, r)


def moon_tree_counts(w: int) -> tuple[int, int]:
    """Closed-form counts of spanning trees of K_w through the anchored
    pairs: (3 w^(w-4), 4 w^(w-4))."""
    if w < 4:
        raise ValueError(f"need w >= 4, got {w}")
    scale = w ** (w - 4)
    return 3 * scale, 4 * scale


@lru_cache(maxsize=None)
def _forests_by_size(n: int, k: int) -> int:
    """Number of spanning forests of K_n with k components; defined as 1 for
    the empty vertex set with k = 0 (the boundary the subset sums need)."""
    if n == 0:
        return 1 if k == 0 else 0
    if k < 1 or k > n:
        return 0
    return count_forests_constrained(complete_graph(n), k)


@lru_cache(maxsize=None)
def _split_family_size(w: int) -> int:
    """Number of two-component forests on K_w whose marked tree carries both
    anchored adjacent edges while vertex 4 sits in the other component."""
    g = complete_graph(w)
    e12, e23, _ = _complete_anchors()
    v1, v4 = vertex(1), vertex(4)
    count = 0
    verts = frozenset(g.vertices)
    for tup in _forest_index_tuples(g, 2, required=(e12, e23)):
        f = Forest(g, verts, frozenset(g.edges[i] for i in tup))
        if not f.same_component(v1, v4):
            count += 1
    return count


def pq_decomposition(n: int, k: int) -> Decomposition:
    """The exact (t, f) split with p = 3t + f and q = 4t + f.

    t sums w^(w-4) tree counts over vertex subsets W of {1..n} containing
    the four anchor vertices, weighted by forest counts on the complement;
    f does the same with the two-component split families.
    """
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    if not 0 < k < n - 2:
        raise ValueError(f"k={k} outside the range 0 < k < n-2 = {n - 2}")
    t = 0
    f = 0
    for w in range(4, n + 1):
        ways = comb(n - 4, w - 4)
        t += ways * (w ** (w - 4)) * _forests_by_size(n - w, k - 1)
        f += ways * _split_family_size(w) * _forests_by_size(n - w, k - 2)
    return Decomposition(t, f)


def split_tree_at_edge(t: Forest, e: Edge) -> tuple[Forest, Forest]:
    """Delete ``e`` from a single tree; the two pieces come back ordered by
    which endpoint of ``e`` they contain (smaller endpoint first)."""
    if t.component_count != 1:
        raise ValueError("split_tree_at_edge needs a connected forest (one tree)")
    if e not in t.edges:
        raise ValueError(f"edge {edge_name(e)} is not in the tree")
    cut = Forest(t.graph, t.vertices, t.edges - {e})
    return cut.component_containing(e[0]), cut.component_containing(e[1])
