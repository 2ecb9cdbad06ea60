"""Matroids stored extensionally: explicit ground set and basis list.

Desk-scale targets make implicit oracles unnecessary; storing every basis
keeps the exchange-axiom check exhaustive.  Graphic matroids take spanning
trees as bases; truncation to rank r keeps all r-subsets of bases, which
for complete and complete bipartite graphs is exactly the set of r-edge
forests.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable

from .graphs import Graph
from .forests import enumerate_forests
from .polynomials import Polynomial


@dataclass(frozen=True)
class Matroid:
    """Ground set plus basis collection.

    Construction checks only that the collection is nonempty and lives on
    the ground set; equicardinality and the exchange axiom are the job of
    :func:`verify_exchange_axiom`, so that defective inputs can be examined
    rather than rejected.
    """

    ground: tuple[Hashable, ...]
    bases: tuple[frozenset, ...]

    def __post_init__(self) -> None:
        if len(set(self.ground)) != len(self.ground):
            raise ValueError("ground set has repeated elements")
        if not self.bases:
            raise ValueError("a matroid has at least one basis")
        universe = set(self.ground)
        for b in self.bases:
            if not b <= universe:
                raise ValueError("basis element outside the ground set")
        # canonical order: by sorted ground-set indices
        index = {x: i for i, x in enumerate(self.ground)}
        canon = sorted({frozenset(b) for b in self.bases}, key=lambda b: sorted(index[x] for x in b))
        object.__setattr__(self, "bases", tuple(canon))

    def __hash__(self) -> int:
        return hash((self.ground, self.bases))

    @property
    def rank(self) -> int:
        return len(self.bases[0])

    @property
    def basis_count(self) -> int:
        return len(self.bases)


def graphic_matroid(g: Graph) -> Matroid:
    """Matroid on the edges of ``g`` whose bases are the spanning trees."""
    trees = enumerate_forests(g, 1)
    return Matroid(g.edges, tuple(t.edges for t in trees))


def truncate(m: Matroid, r: int) -> Matroid:
    """Truncated matroid of rank r: all r-subsets of bases."""
    if not 1 <= r <= m.rank:
        raise ValueError(f"target rank {r} out of range 1..{m.rank}")
    if r == m.rank:
        return m
    subsets = {frozenset(c) for b in m.bases for c in combinations(sorted(b, key=repr), r)}
    return Matroid(m.ground, tuple(subsets))


def verify_exchange_axiom(m: Matroid) -> bool:
    """Exhaustive basis-exchange check.

    True iff all bases are equicardinal and for every ordered basis pair
    (B1, B2) and every x in B1 \\ B2 some y in B2 \\ B1 has B1 - x + y a
    basis.  Quantifies over everything; bases are packed into bitmasks so
    the inner loop is integer arithmetic.
    """
    sizes = {len(b) for b in m.bases}
    if len(sizes) > 1:
        return False
    index = {x: i for i, x in enumerate(m.ground)}
    masks = []
    for b in m.bases:
        mask = 0
        for x in b:
            mask |= 1 << index[x]
        masks.append(mask)
    basis_set = set(masks)
    # For each basis and each x in it, precompute the mask of valid partners y.
    swap_targets: dict[tuple[int, int], int] = {}
    full = (1 << len(m.ground)) - 1
    for bm in masks:
        rest = bm
        while rest:
            xbit = rest & -rest
            rest ^= xbit
            base = bm ^ xbit
            partners = 0
            cand = full & ~bm
            while cand:
                ybit = cand & -cand
                cand ^= ybit
                if (base | ybit) in basis_set:
                    partners |= ybit
            swap_targets[(bm, xbit)] = partners
    for b1 in masks:
        for b2 in masks:
            diff1 = b1 & ~b2
            if not diff1:
                continue
            diff2 = b2 & ~b1
            rest = diff1
            while rest:
                xbit = rest & -rest
                rest ^= xbit
                if not swap_targets[(b1, xbit)] & diff2:
                    return False
    return True


def basis_generating_polynomial(m: Matroid) -> Polynomial:
    """Sum over bases of the product of their variables.

    Homogeneous of degree rank, square-free, all coefficients one, variables
    keyed by the canonical ground-set order.
    """
    n = len(m.ground)
    index = {x: i for i, x in enumerate(m.ground)}
    terms = {}
    for b in m.bases:
        exps = [0] * n
        for x in b:
            exps[index[x]] = 1
        terms[tuple(exps)] = 1
    return Polynomial(m.ground, terms)
