"""Shared brute-force oracles for the test suite.

Everything here is deliberately naive and independent of the package's
algorithms: subsets come from itertools.combinations, connectivity from a
BFS over an adjacency dict (no union-find), determinants from cofactor
expansion.  Tests freeze values computed by these oracles and compare the
package against them.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from hypothesis import settings

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


def bfs_component_count(vertices, edge_subset) -> int:
    adj = {v: [] for v in vertices}
    for a, b in edge_subset:
        adj[a].append(b)
        adj[b].append(a)
    seen = set()
    comps = 0
    for v in vertices:
        if v in seen:
            continue
        comps += 1
        stack = [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return comps


def is_acyclic(vertices, edge_subset) -> bool:
    return bfs_component_count(vertices, edge_subset) == len(vertices) - len(edge_subset)


def brute_forests(graph, k, required=(), forbidden=()):
    """All k-component spanning forests as frozensets of edges."""
    vertices = list(graph.vertices)
    req = frozenset(required)
    forb = frozenset(forbidden)
    nedges = len(vertices) - k
    out = []
    for sub in itertools.combinations(graph.edges, nedges):
        s = frozenset(sub)
        if not req <= s or s & forb:
            continue
        if bfs_component_count(vertices, sub) == k and is_acyclic(vertices, sub):
            out.append(s)
    return out


def brute_count(graph, k, required=(), forbidden=()):
    return len(brute_forests(graph, k, required, forbidden))


def brute_acyclic_subset_count(graph) -> int:
    """Number of acyclic edge subsets of any size (use only when #E <= 16)."""
    vertices = list(graph.vertices)
    total = 0
    edges = list(graph.edges)
    for size in range(len(edges) + 1):
        for sub in itertools.combinations(edges, size):
            if is_acyclic(vertices, sub):
                total += 1
    return total


def cofactor_determinant(rows) -> Fraction:
    """Determinant by cofactor expansion along the first row."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        a = rows[0][j]
        if a == 0:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * Fraction(a) * cofactor_determinant(minor)
    return total
