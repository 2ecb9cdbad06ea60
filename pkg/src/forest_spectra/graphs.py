"""Labeled complete and complete bipartite graphs with a canonical edge order.

Vertices are ``(part, index)`` pairs: part 0 is the left side (or the whole
vertex set of a complete graph), part 1 is the right side of a bipartite
graph.  Edges are sorted vertex pairs.  The edge list of every graph is
lexicographic in the endpoint labels, so any matrix indexed by edges is
reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable

Vertex = tuple[int, int]
Edge = tuple[Vertex, Vertex]

COMPLETE = "complete"
BIPARTITE = "bipartite"


def vertex(index: int, right: bool = False) -> Vertex:
    """Vertex with a positive integer label; ``right=True`` tags the right part."""
    if index < 1:
        raise ValueError(f"vertex labels are positive integers, got {index}")
    return (1 if right else 0, index)


def edge(u: Vertex, v: Vertex) -> Edge:
    """Canonical (sorted) edge between two distinct vertices."""
    if u == v:
        raise ValueError(f"edge endpoints must be distinct, got {u} twice")
    return (u, v) if u < v else (v, u)


def vertex_name(v: Vertex) -> str:
    part, index = v
    return f"{index}'" if part == 1 else str(index)


def edge_name(e: Edge) -> str:
    return f"{vertex_name(e[0])}-{vertex_name(e[1])}"


class PairClass(Enum):
    """How two edges of one graph sit relative to each other."""

    EQUAL = "equal"
    SHARE_VERTEX = "share-vertex"
    SHARE_LEFT = "share-left"
    SHARE_RIGHT = "share-right"
    DISJOINT = "disjoint"


@dataclass(frozen=True)
class Graph:
    """Immutable complete or complete bipartite graph.

    ``left_size`` is n for a complete graph; for bipartite graphs the two
    part sizes are ``left_size`` and ``right_size`` (0 marks a complete
    graph).  All operations on graphs are pure.
    """

    kind: str
    left_size: int
    right_size: int
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]

    def __hash__(self) -> int:
        return hash((self.kind, self.vertices))

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def edge_index(self) -> dict[Edge, int]:
        idx = self.__dict__.get("_edge_index")
        if idx is None:
            idx = {e: i for i, e in enumerate(self.edges)}
            object.__setattr__(self, "_edge_index", idx)
        return idx

    def has_edge(self, e: Edge) -> bool:
        return e in self.edge_index

    def require_edge(self, e: Edge) -> None:
        if not self.has_edge(e):
            raise ValueError(f"{edge_name(e)} is not an edge of {self.name}")

    @property
    def name(self) -> str:
        if self.kind == COMPLETE:
            return f"K_{self.left_size}"
        return f"K_{{{self.left_size},{self.right_size}}}"


def complete_graph(n: int) -> Graph:
    """Complete graph on vertices 1..n with C(n,2) lexicographic edges."""
    if n < 1:
        raise ValueError(f"complete graph needs at least one vertex, got n={n}")
    return complete_graph_on(range(1, n + 1))


def complete_graph_on(labels: Iterable[int]) -> Graph:
    """Complete graph on an arbitrary set of positive integer labels.

    Used for the vertex-subset families, where forests live on K_W for a
    subset W of the ambient vertex labels.
    """
    verts = tuple(sorted(vertex(i) for i in set(labels)))
    if not verts:
        raise ValueError("complete graph needs at least one vertex")
    edges = tuple(edge(u, v) for u, v in combinations(verts, 2))
    return Graph(COMPLETE, len(verts), 0, verts, edges)


def complete_bipartite_graph(m: int, n: int) -> Graph:
    """Complete bipartite graph with left part 1..m and right part 1'..n'."""
    if m < 1 or n < 1:
        raise ValueError(f"both parts need at least one vertex, got m={m}, n={n}")
    left = tuple(vertex(i) for i in range(1, m + 1))
    right = tuple(vertex(j, right=True) for j in range(1, n + 1))
    edges = tuple(edge(u, v) for u in left for v in right)
    return Graph(BIPARTITE, m, n, left + right, edges)


def classify_edge_pair(g: Graph, e: Edge, e2: Edge) -> PairClass:
    """Classify an edge pair of ``g``; symmetric in the two edges.

    Complete graphs distinguish equal / one shared vertex / disjoint; on
    bipartite graphs a shared vertex is reported by the part it lies in.
    """
    g.require_edge(e)
    g.require_edge(e2)
    if e == e2:
        return PairClass.EQUAL
    shared = set(e) & set(e2)
    if not shared:
        return PairClass.DISJOINT
    if g.kind == COMPLETE:
        return PairClass.SHARE_VERTEX
    (part, _index), = shared
    return PairClass.SHARE_LEFT if part == 0 else PairClass.SHARE_RIGHT
