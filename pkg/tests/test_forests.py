import networkx as nx
import pytest

from forest_spectra import (
    Forest,
    count_forests_constrained,
    complete_bipartite_graph,
    complete_graph,
    edge,
    edge_pair_counts,
    enumerate_forests,
    enumerate_forests_constrained,
    moon_tree_counts,
    pq_decomposition,
    spanning_forest,
    split_tree_at_edge,
    vertex,
)
from forest_spectra.errors import InsufficientVertices

from conftest import brute_acyclic_subset_count, brute_count, brute_forests

E12 = edge(vertex(1), vertex(2))
E23 = edge(vertex(2), vertex(3))
E34 = edge(vertex(3), vertex(4))

# forests on n labeled vertices with k tree components, checked against the
# naive subset oracle for n <= 6 and an exponential-generating-function
# computation for n = 7
COMPLETE_COUNTS = {
    4: [16, 15, 6, 1],
    5: [125, 110, 45, 10, 1],
    6: [1296, 1080, 435, 105, 15, 1],
    7: [16807, 13377, 5250, 1295, 210, 21, 1],
}

BIPARTITE_COUNTS = {
    (2, 2): [4, 6, 4, 1],
    (2, 3): [12, 20, 15, 6, 1],
    (3, 3): [81, 117, 84, 36, 9, 1],
    (3, 4): [432, 648, 477, 220, 66, 12, 1],
    (4, 4): [4096, 5632, 3936, 1784, 560, 120, 16, 1],
}


@pytest.mark.parametrize("n", sorted(COMPLETE_COUNTS))
def test_complete_forest_counts(n):
    g = complete_graph(n)
    got = [len(enumerate_forests(g, k)) for k in range(1, n + 1)]
    assert got == COMPLETE_COUNTS[n]


@pytest.mark.parametrize("mn", sorted(BIPARTITE_COUNTS))
def test_bipartite_forest_counts(mn):
    g = complete_bipartite_graph(*mn)
    got = [len(enumerate_forests(g, k)) for k in range(1, sum(mn) + 1)]
    assert got == BIPARTITE_COUNTS[mn]


@pytest.mark.parametrize(
    "g",
    [complete_graph(4), complete_graph(5), complete_bipartite_graph(2, 3)],
    ids=["K4", "K5", "K23"],
)
def test_enumeration_matches_subset_oracle(g):
    for k in range(1, g.vertex_count + 1):
        got = {f.edges for f in enumerate_forests(g, k)}
        assert got == set(brute_forests(g, k))


@pytest.mark.parametrize(
    "g",
    [complete_graph(5), complete_graph(6), complete_bipartite_graph(3, 3)],
    ids=["K5", "K6", "K33"],
)
def test_total_forests_equal_acyclic_subsets(g):
    total = sum(len(enumerate_forests(g, k)) for k in range(1, g.vertex_count + 1))
    assert total == brute_acyclic_subset_count(g)


def test_enumeration_order_and_validity():
    g = complete_graph(5)
    forests = enumerate_forests(g, 2)
    index = g.edge_index
    tuples = [tuple(sorted(index[e] for e in f.edges)) for f in forests]
    assert tuples == sorted(tuples)
    assert len(set(tuples)) == len(tuples)
    for f in forests[:50]:
        nxg = nx.Graph()
        nxg.add_nodes_from(f.vertices)
        nxg.add_edges_from(f.edges)
        assert nx.is_forest(nxg)
        assert nx.number_connected_components(nxg) == 2


def test_enumerate_rejects_bad_k():
    g = complete_graph(4)
    with pytest.raises(ValueError):
        enumerate_forests(g, 0)
    with pytest.raises(ValueError):
        enumerate_forests(g, 5)


def test_constrained_counts_examples():
    g = complete_graph(4)
    assert count_forests_constrained(g, 1, required=(E12, E23)) == 3
    assert count_forests_constrained(g, 1, required=(E12, E34)) == 4
    assert count_forests_constrained(g, 4) == 1


def test_constrained_counts_forbidden_and_oracle():
    g = complete_graph(5)
    e15 = edge(vertex(1), vertex(5))
    for k in (1, 2, 3):
        assert count_forests_constrained(g, k, required=(E12,), forbidden=(e15,)) == brute_count(
            g, k, required=(E12,), forbidden=(e15,)
        )


def test_constrained_overlap_rejected():
    g = complete_graph(4)
    with pytest.raises(ValueError):
        count_forests_constrained(g, 1, required=(E12,), forbidden=(E12,))


def test_required_cycle_gives_zero():
    g = complete_graph(4)
    e13 = edge(vertex(1), vertex(3))
    assert count_forests_constrained(g, 1, required=(E12, E23, e13)) == 0


def test_pair_counts_k4():
    counts = edge_pair_counts(complete_graph(4), 1)
    assert (counts.p, counts.q, counts.r) == (3, 4, None)


def test_pair_counts_k22():
    counts = edge_pair_counts(complete_bipartite_graph(2, 2), 1)
    assert (counts.p, counts.q, counts.r) == (2, 2, 2)


def test_pair_counts_k5_frozen():
    counts = edge_pair_counts(complete_graph(5), 2)
    assert (counts.p, counts.q) == (7, 8)
    assert counts.q - counts.p > 0


def test_pair_counts_k6_frozen():
    counts = edge_pair_counts(complete_graph(6), 2)
    assert (counts.p, counts.q) == (57, 68)


def test_pair_counts_range_errors():
    with pytest.raises(InsufficientVertices):
        edge_pair_counts(complete_graph(3), 1)
    with pytest.raises(ValueError):
        edge_pair_counts(complete_graph(4), 2)
    with pytest.raises(InsufficientVertices):
        edge_pair_counts(complete_bipartite_graph(1, 3), 1)
    with pytest.raises(ValueError):
        edge_pair_counts(complete_bipartite_graph(2, 2), 2)


@pytest.mark.parametrize(
    "g",
    [complete_graph(n) for n in (4, 5, 6)]
    + [complete_bipartite_graph(m, n) for m in (2, 3) for n in (2, 3)],
    ids=["K4", "K5", "K6", "K22", "K23", "K32", "K33"],
)
def test_entry_uniformity_within_pair_classes(g):
    # same count for every edge pair in one class, not just the anchored one
    from forest_spectra import classify_edge_pair, theorem_range

    for k in range(1, g.vertex_count + 1):
        if not theorem_range(g, k):
            continue
        per_class = {}
        for i, e in enumerate(g.edges):
            for e2 in g.edges[i + 1 :]:
                cls = classify_edge_pair(g, e, e2)
                c = count_forests_constrained(g, k, required=(e, e2))
                per_class.setdefault(cls, set()).add(c)
        assert all(len(values) == 1 for values in per_class.values()), k


def test_moon_formula_values():
    assert moon_tree_counts(4) == (3, 4)
    assert moon_tree_counts(5) == (15, 20)
    with pytest.raises(ValueError):
        moon_tree_counts(3)


@pytest.mark.parametrize("w", [4, 5, 6])
def test_moon_matches_enumeration(w):
    g = complete_graph(w)
    adjacent, disjoint = moon_tree_counts(w)
    assert count_forests_constrained(g, 1, required=(E12, E23)) == adjacent
    assert count_forests_constrained(g, 1, required=(E12, E34)) == disjoint


def test_pq_decomposition_k1_has_no_f_term():
    d = pq_decomposition(5, 1)
    assert (d.t, d.f) == (5, 0)
    counts = edge_pair_counts(complete_graph(5), 1)
    assert counts.p == 3 * d.t and counts.q == 4 * d.t


@pytest.mark.parametrize(
    "n,k,expected",
    [(5, 2, (1, 4)), (6, 2, (11, 24)), (6, 3, (1, 9)), (7, 2, (126, 196))],
)
def test_pq_decomposition_frozen(n, k, expected):
    d = pq_decomposition(n, k)
    assert (d.t, d.f) == expected


@pytest.mark.parametrize("n,k", [(5, 2), (6, 2), (6, 3)])
def test_pq_identity_against_counts(n, k):
    d = pq_decomposition(n, k)
    counts = edge_pair_counts(complete_graph(n), k)
    assert counts.p == 3 * d.t + d.f
    assert counts.q == 4 * d.t + d.f


def test_pq_decomposition_range_errors():
    with pytest.raises(ValueError):
        pq_decomposition(3, 1)
    with pytest.raises(ValueError):
        pq_decomposition(5, 3)


def test_split_tree_path():
    g = complete_graph(3)
    tree = Forest(g, frozenset(g.vertices), frozenset((E12, E23)))
    side2, side3 = split_tree_at_edge(tree, E23)
    assert side2.vertices == {vertex(1), vertex(2)} and side2.edges == {E12}
    assert side3.vertices == {vertex(3)} and not side3.edges


def test_split_tree_star():
    g = complete_graph(4)
    e24 = edge(vertex(2), vertex(4))
    star = Forest(g, frozenset(g.vertices), frozenset((E12, E23, e24)))
    side2, side3 = split_tree_at_edge(star, E23)
    assert side2.vertices == {vertex(1), vertex(2), vertex(4)}
    assert side2.edges == {E12, e24}
    assert side3.vertices == {vertex(3)}


def test_split_single_edge():
    g = complete_graph(2)
    tree = spanning_forest(g, [E12])
    a, b = split_tree_at_edge(tree, E12)
    assert a.vertices == {vertex(1)} and b.vertices == {vertex(2)}


def test_split_tree_errors():
    g = complete_graph(4)
    two_trees = spanning_forest(g, [E12, E34])
    with pytest.raises(ValueError):
        split_tree_at_edge(two_trees, E12)
    tree = Forest(g, frozenset([vertex(1), vertex(2)]), frozenset([E12]))
    with pytest.raises(ValueError):
        split_tree_at_edge(tree, E23)


def test_forest_rejects_cycles():
    g = complete_graph(3)
    e13 = edge(vertex(1), vertex(3))
    with pytest.raises(ValueError):
        spanning_forest(g, [E12, E23, e13])


def test_replace_edges_validates():
    g = complete_graph(4)
    f = spanning_forest(g, [E12, E23])
    e13 = edge(vertex(1), vertex(3))
    with pytest.raises(ValueError):
        f.replace_edges(add=(e13,))  # closes the triangle
    with pytest.raises(ValueError):
        f.replace_edges(remove=(E34,))  # not present
    swapped = f.replace_edges(remove=(E23,), add=(E34,))
    assert swapped.edges == {E12, E34}


def test_constrained_enumeration_respects_constraints():
    g = complete_bipartite_graph(2, 3)
    a, b = vertex(1), vertex(1, right=True)
    ab = edge(a, b)
    for f in enumerate_forests_constrained(g, 2, required=(ab,)):
        assert ab in f.edges
