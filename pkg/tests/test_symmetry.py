from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given, settings

from factorcrit import families
from factorcrit.graph_core import Graph, members, popcount, vset
from factorcrit.symmetry import (
    automorphism_generators,
    block_induced_transitivity_check,
    blocks_containing,
    has_clique_block_of_size_k,
    is_automorphism,
    is_block,
    is_vertex_transitive,
    minimal_block,
)

from .conftest import graphs

PRISM = families.prism(3)


def count_automorphisms(g: Graph) -> int:
    """Backtracking count: extend partial maps vertex by vertex, checking adjacency to mapped ones."""
    n = g.n
    total = 0
    image = [-1] * n
    used = [False] * n

    def go(v: int) -> None:
        nonlocal total
        if v == n:
            total += 1
            return
        for w in range(n):
            if used[w] or g.degree(w) != g.degree(v):
                continue
            if all(g.has_edge(u, v) == g.has_edge(image[u], w) for u in range(v)):
                image[v], used[w] = w, True
                go(v + 1)
                image[v], used[w] = -1, False

    go(0)
    return total


@pytest.mark.parametrize(
    "g, order",
    [(families.cycle(5), 10), (families.complete(5), 120), (families.petersen(), 120), (PRISM, 12)],
)
def test_group_orders(g, order):
    assert automorphism_generators(g).order() == order
    assert count_automorphisms(g) == order


def test_petersen_order_by_permutation_count():
    g = families.petersen()
    # fix vertex 0's image to cut the 10! loop down; transitivity multiplies back
    fixed = sum(1 for p in permutations(range(1, 10)) if is_automorphism(g, (0, *p)))
    assert fixed * 10 == 120


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8))
def test_order_and_generators_against_backtracking(g):
    grp = automorphism_generators(g)
    assert all(is_automorphism(g, p) for p in grp.generators)
    assert grp.order() == count_automorphisms(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_orbits_refine_degrees(g):
    grp = automorphism_generators(g)
    for orbit in grp.orbits():
        assert len({g.degree(v) for v in members(orbit)}) == 1


def test_family_orders():
    assert automorphism_generators(families.circulant(13, [1, 5])).order() == 52
    assert automorphism_generators(families.kneser(7, 3)).order() == 5040


def test_vertex_transitivity():
    for spec in families.enumerate_circulants(9):
        assert is_vertex_transitive(families.build(spec))
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert not is_vertex_transitive(path)
    assert is_vertex_transitive(families.petersen())


def test_is_automorphism_rejects():
    c5 = families.cycle(5)
    assert not is_automorphism(c5, (0, 2, 1, 3, 4))
    assert not is_automorphism(c5, (0, 0, 1, 2, 3))
    assert is_automorphism(c5, (0, 4, 3, 2, 1))


# blocks ---------------------------------------------------------------------


def test_minimal_block_examples():
    c4 = families.cycle(4)
    assert minimal_block(c4, automorphism_generators(c4), (0, 2)) == vset([0, 2])
    k5 = families.complete(5)
    assert minimal_block(k5, automorphism_generators(k5), (1, 3)) == k5.full
    assert minimal_block(PRISM, automorphism_generators(PRISM), (0, 1)) == vset([0, 1, 2])


def test_minimal_block_needs_transitive_group():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        minimal_block(path, automorphism_generators(path), (0, 2))


def test_blocks_are_blocks():
    for g in (families.cycle(6), families.cycle(12), PRISM, families.circulant(15, [1, 5]), families.petersen()):
        grp = automorphism_generators(g)
        found = blocks_containing(g, grp)
        assert found[0] == 1 and found[-1] == g.full
        for b in found:
            assert is_block(grp, b)
            assert g.n % popcount(b) == 0


def test_c6_blocks():
    g = families.cycle(6)
    found = blocks_containing(g, automorphism_generators(g))
    assert found == [vset([0]), vset([0, 3]), vset([0, 2, 4]), g.full]


def test_clique_blocks():
    assert has_clique_block_of_size_k(PRISM)
    assert not has_clique_block_of_size_k(families.circulant(13, [1, 5]))
    assert not has_clique_block_of_size_k(families.complete(5))
    with pytest.raises(ValueError):
        has_clique_block_of_size_k(families.cycle(6))


def test_block_induced_transitivity():
    assert block_induced_transitivity_check(PRISM, vset([0, 1, 2]))
    assert block_induced_transitivity_check(families.cycle(4), vset([0, 2]))
    assert block_induced_transitivity_check(families.cycle(6), vset([0, 2, 4]))
    with pytest.raises(ValueError):
        block_induced_transitivity_check(families.cycle(6), vset([0, 1]))
