import pytest

from forest_spectra import (
    Matroid,
    basis_generating_polynomial,
    complete_bipartite_graph,
    complete_graph,
    enumerate_forests,
    forest_generating_polynomial,
    graphic_matroid,
    truncate,
    verify_exchange_axiom,
)


def test_graphic_matroid_k4():
    m = graphic_matroid(complete_graph(4))
    assert m.basis_count == 16
    assert m.rank == 3


def test_graphic_matroid_k22():
    m = graphic_matroid(complete_bipartite_graph(2, 2))
    assert m.basis_count == 4
    assert m.rank == 3


def test_graphic_matroid_k2():
    m = graphic_matroid(complete_graph(2))
    assert m.basis_count == 1
    assert m.rank == 1


def test_truncate_counts():
    m = graphic_matroid(complete_graph(4))
    assert truncate(m, 2).basis_count == 15
    assert truncate(m, 1).basis_count == 6
    assert truncate(m, 3) is m


def test_truncate_range():
    m = graphic_matroid(complete_graph(4))
    with pytest.raises(ValueError):
        truncate(m, 0)
    with pytest.raises(ValueError):
        truncate(m, 4)


def test_truncated_bases_are_small_forests():
    g = complete_graph(5)
    m = truncate(graphic_matroid(g), 3)
    assert set(m.bases) == {f.edges for f in enumerate_forests(g, 2)}


def test_exchange_axiom_graphic():
    assert verify_exchange_axiom(graphic_matroid(complete_graph(4)))
    assert verify_exchange_axiom(truncate(graphic_matroid(complete_graph(5)), 3))


def test_exchange_axiom_tiny_cases():
    good = Matroid(("a", "b"), (frozenset("a"), frozenset("b")))
    assert verify_exchange_axiom(good)
    uneven = Matroid(("a", "b"), (frozenset("a"), frozenset("ab")))
    assert not verify_exchange_axiom(uneven)


def test_exchange_axiom_detects_non_matroid():
    # two disjoint pairs: exchanging one element of {a,b} into {c,d} fails
    bad = Matroid(("a", "b", "c", "d"), (frozenset("ab"), frozenset("cd")))
    assert not verify_exchange_axiom(bad)


def test_matroid_validation():
    with pytest.raises(ValueError):
        Matroid(("a",), ())
    with pytest.raises(ValueError):
        Matroid(("a",), (frozenset("ab"),))
    with pytest.raises(ValueError):
        Matroid(("a", "a"), (frozenset("a"),))


def test_basis_polynomial_rank_one_truncation():
    g = complete_graph(4)
    phi = basis_generating_polynomial(truncate(graphic_matroid(g), 1))
    assert phi.term_count() == 6
    assert phi.homogeneous_degree() == 1
    assert phi == forest_generating_polynomial(g, 3)


def test_basis_polynomial_k22():
    g = complete_bipartite_graph(2, 2)
    phi = basis_generating_polynomial(graphic_matroid(g))
    assert phi == forest_generating_polynomial(g, 1)
    assert phi.term_count() == 4 and phi.homogeneous_degree() == 3


def test_basis_polynomial_single_basis():
    m = Matroid(("a", "b"), (frozenset("ab"),))
    phi = basis_generating_polynomial(m)
    assert phi.terms == {(1, 1): 1}


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_truncations_generate_forest_polynomials_complete(n):
    g = complete_graph(n)
    m = graphic_matroid(g)
    for r in range(1, n):
        assert basis_generating_polynomial(truncate(m, r)) == forest_generating_polynomial(
            g, n - r
        )


@pytest.mark.parametrize("mn", [(2, 2), (2, 3), (3, 3), (2, 4), (3, 4), (4, 4)])
def test_truncations_generate_forest_polynomials_bipartite(mn):
    g = complete_bipartite_graph(*mn)
    m = graphic_matroid(g)
    total = sum(mn)
    for r in range(1, total):
        assert basis_generating_polynomial(truncate(m, r)) == forest_generating_polynomial(
            g, total - r
        )


def test_exchange_axiom_all_constructed_small():
    for g in (complete_graph(4), complete_bipartite_graph(2, 3)):
        m = graphic_matroid(g)
        for r in range(1, m.rank + 1):
            assert verify_exchange_axiom(truncate(m, r))
