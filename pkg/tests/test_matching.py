from __future__ import annotations

from functools import lru_cache

import pytest
from hypothesis import given, settings

from factorcrit import families
from factorcrit.graph_core import Graph, SizeCapError, disjoint_union
from factorcrit.matching import (
    allowed_edges,
    deficiency_matching_number,
    has_perfect_matching,
    is_elementary,
    is_matching,
    matching_number,
    maximum_matching,
)

from .conftest import graphs, seeded_graphs


def brute_matching_number(g: Graph) -> int:
    """Exhaustive: pick the lowest unmatched vertex, leave it out or match it."""

    @lru_cache(maxsize=None)
    def best(free: int) -> int:
        if not free:
            return 0
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        out = best(rest)
        nbrs = g.adj[v] & rest
        while nbrs:
            w = (nbrs & -nbrs).bit_length() - 1
            nbrs &= nbrs - 1
            out = max(out, 1 + best(rest & ~(1 << w)))
        return out

    return best(g.full)


def brute_perfect_matchings(g: Graph) -> list[frozenset]:
    out = []

    def go(free: int, chosen: list) -> None:
        if not free:
            out.append(frozenset(chosen))
            return
        v = (free & -free).bit_length() - 1
        for w in range(g.n):
            if free >> w & 1 and w != v and g.has_edge(v, w):
                go(free & ~(1 << v) & ~(1 << w), chosen + [(v, w)])

    go(g.full, [])
    return out


def test_examples():
    assert matching_number(families.cycle(5)) == 2
    assert matching_number(families.complete(4)) == 2
    assert matching_number(families.petersen()) == 5
    assert brute_matching_number(families.petersen()) == 5


def test_perfect_matching_examples():
    assert not has_perfect_matching(families.cycle(5))
    assert has_perfect_matching(families.cycle(6))
    assert not has_perfect_matching(Graph(2, (0, 0)))


@given(graphs(max_n=12))
def test_blossom_matches_exhaustive_oracle(g):
    m = maximum_matching(g)
    assert is_matching(g, m)
    assert len(m) == brute_matching_number(g)


@settings(max_examples=60)
@given(graphs(max_n=10))
def test_berge_tutte_formula(g):
    assert matching_number(g) == deficiency_matching_number(g)


def test_blossom_on_larger_families():
    for g in (families.kneser(7, 3), families.circulant(31, [1, 5]), families.prism(9)):
        m = maximum_matching(g)
        assert is_matching(g, m) and len(m) == g.n // 2


def test_deficiency_oracle_is_capped():
    with pytest.raises(SizeCapError):
        deficiency_matching_number(families.cycle(17))


def test_allowed_edges_examples():
    c6 = families.cycle(6)
    assert len(brute_perfect_matchings(c6)) == 2
    assert sorted(allowed_edges(c6)) == sorted(c6.edges())
    assert allowed_edges(families.complete(2)) == [(0, 1)]
    assert allowed_edges(families.cycle(5)) == []


def test_allowed_edges_against_enumeration():
    for g in seeded_graphs(150, seed=7, max_n=8):
        union = set()
        for pm in brute_perfect_matchings(g):
            union |= {tuple(sorted(e)) for e in pm}
        assert set(allowed_edges(g)) == union


def test_elementary_examples():
    c6 = families.cycle(6)
    assert is_elementary(c6)
    assert is_elementary(families.complete(2))
    assert not is_elementary(disjoint_union(c6, c6))


def test_is_matching_rejects_shared_vertices():
    g = families.complete(4)
    assert not is_matching(g, [(0, 1), (1, 2)])
    assert not is_matching(families.cycle(4), [(0, 2)])
    assert is_matching(g, [(0, 1), (2, 3)])
