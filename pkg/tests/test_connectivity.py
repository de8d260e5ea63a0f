from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings

from factorcrit import families
from factorcrit.connectivity import (
    connectivity_profile,
    cut_report,
    cyclic_edge_connectivity,
    edge_connectivity,
    exhaustive_cut_oracle,
    fragment_members,
    fragment_search,
    is_super_lambda,
    is_super_lambda2,
    min_edge_degree,
    restricted_edge_connectivity,
    vertex_connectivity,
    zeta,
)
from factorcrit.graph_core import Graph, SizeCapError, components, vset

from .conftest import graphs, seeded_graphs

K4 = families.complete(4)
K5 = families.complete(5)
C5 = families.cycle(5)
C6 = families.cycle(6)
PETERSEN = families.petersen()
C13 = families.circulant(13, [1, 5])
PRISM = families.prism(3)


def literal_cut(g: Graph, mode) -> int | None:
    """Edge-subset definition with a union-find, written independently of the package oracle."""
    edges = g.edges()
    best = None
    for mask in range(1, 1 << len(edges)):
        size = bin(mask).count("1")
        if best is not None and size >= best:
            continue
        parent = list(range(g.n))

        def find(a):
            while parent[a] != a:
                a = parent[a]
            return a

        kept = [e for i, e in enumerate(edges) if not mask >> i & 1]
        for u, v in kept:
            parent[find(u)] = find(v)
        roots = {}
        for v in range(g.n):
            roots.setdefault(find(v), []).append(v)
        if len(roots) < 2:
            continue
        if mode == "cyclic":
            cyclic = 0
            for verts in roots.values():
                inside = sum(1 for u, v in kept if u in verts and v in verts)
                cyclic += inside >= len(verts)
            ok = cyclic >= 2
        else:
            ok = all(len(verts) >= mode for verts in roots.values())
        if ok:
            best = size
    return best


def brute_kappa(g: Graph) -> int:
    for size in range(g.n - 1):
        for s in combinations(range(g.n), size):
            rest = g.full & ~vset(s)
            if len(components(g, rest).components) > 1:
                return size
    return g.n - 1


# basic connectivities ------------------------------------------------------


def test_vertex_connectivity_examples():
    assert vertex_connectivity(C5) == 2
    assert vertex_connectivity(K5) == 4
    assert vertex_connectivity(families.circulant(7, [1, 2])) == 4


def test_edge_connectivity_examples():
    assert edge_connectivity(C5) == 2
    assert edge_connectivity(PETERSEN) == 3


@given(graphs(min_n=2, max_n=9))
def test_kappa_against_brute_force(g):
    assert vertex_connectivity(g) == brute_kappa(g)


@given(graphs(min_n=2, max_n=9))
def test_whitney_chain(g):
    kappa, lam = vertex_connectivity(g), edge_connectivity(g)
    assert kappa <= lam <= g.min_degree()


@settings(max_examples=40)
@given(graphs(min_n=2, max_n=7))
def test_lambda_against_literal_cut(g):
    if g.num_edges() > 12:
        return
    expected = literal_cut(g, 1) if g.is_connected() else 0
    assert edge_connectivity(g) == expected


def test_min_edge_degree_examples():
    assert min_edge_degree(K5) == 6
    assert min_edge_degree(C5) == 2
    assert min_edge_degree(C13) == 6
    with pytest.raises(ValueError):
        min_edge_degree(Graph(3, (0, 0, 0)))


# super-lambda --------------------------------------------------------------


def test_super_lambda_examples():
    assert is_super_lambda(K5)
    assert not is_super_lambda(PRISM)
    assert is_super_lambda(C13)
    assert is_super_lambda(C13, transitive=True)


def test_prism_rungs_are_a_minimum_cut():
    # removing the three rungs separates the two triangles
    report = cut_report(PRISM, vset([0, 1, 2]))
    assert report.d == 3 == edge_connectivity(PRISM)
    assert report.kind == "cyclic"


# restricted and cyclic connectivity ------------------------------------------


def test_restricted_examples():
    assert restricted_edge_connectivity(K5, 2).value == 6
    res = restricted_edge_connectivity(C13, 2)
    assert res.value == 6 == min_edge_degree(C13)
    assert restricted_edge_connectivity(PETERSEN, 3).value == 5
    assert restricted_edge_connectivity(PETERSEN, 2).value == 4


def test_restricted_undefined_cases():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert restricted_edge_connectivity(star, 2).value is None
    assert exhaustive_cut_oracle(star, 2) is None
    assert restricted_edge_connectivity(C5, 3).value is None
    with pytest.raises(ValueError):
        restricted_edge_connectivity(C5, 4)


def test_super_lambda2_examples():
    assert is_super_lambda2(C13).holds
    c6 = is_super_lambda2(C6)
    assert not c6.holds and c6.lambda2 == 2
    assert c6.superatom == vset([0, 1, 2])
    assert is_super_lambda2(K4).holds
    assert exhaustive_cut_oracle(K4, 2) == 4


def test_cyclic_examples():
    res = cyclic_edge_connectivity(PETERSEN)
    assert res.value == 5 == zeta(PETERSEN)
    assert cyclic_edge_connectivity(K4).value is None
    assert exhaustive_cut_oracle(K4, "cyclic") is None
    assert exhaustive_cut_oracle(C5, "cyclic") is None
    assert zeta(Graph.from_edges(3, [(0, 1), (1, 2)])) is None


def test_oracle_examples():
    assert exhaustive_cut_oracle(K5, 2) == 6
    assert exhaustive_cut_oracle(C6, 2) == 2
    assert exhaustive_cut_oracle(PETERSEN, 3) == 5
    assert exhaustive_cut_oracle(PETERSEN, "cyclic") == 5
    with pytest.raises(SizeCapError):
        exhaustive_cut_oracle(families.complete(7), 2)


def test_package_oracle_matches_independent_oracle():
    for g in seeded_graphs(60, seed=3, max_n=7):
        if g.num_edges() > 11:
            continue
        for mode in (1, 2, 3, "cyclic"):
            assert exhaustive_cut_oracle(g, mode) == literal_cut(g, mode)


@settings(max_examples=120, deadline=None)
@given(graphs(min_n=2, max_n=9, connected=True))
def test_fragment_search_matches_oracle(g):
    if g.num_edges() > 14:
        return
    for mode in (2, 3, "cyclic"):
        res = fragment_search(g, mode, budget=None)
        assert res.exact
        assert res.value == exhaustive_cut_oracle(g, mode)
        for x in res.fragments:
            assert x & 1
            assert cut_report(g, x).d == res.value


def test_fragment_search_transitive_shortcut():
    for spec in families.enumerate_circulants(12, odd_only=False):
        g = families.build(spec)
        for mode in (2, 3, "cyclic"):
            full = fragment_search(g, mode, budget=None)
            fast = fragment_search(g, mode, transitive=True, budget=None)
            assert full.value == fast.value


def test_fragment_search_budget():
    res = fragment_search(families.kneser(7, 3), "cyclic", transitive=True, budget=1000)
    assert not res.exact and res.nodes > 1000
    assert res.value is None or res.value >= 12
    with pytest.raises(ValueError):
        fragment_search(Graph(4, (0, 0, 0, 0)), 2)


def test_fragment_members_and_profile():
    prof = connectivity_profile(PETERSEN, transitive=True)
    assert (prof.kappa, prof.lambda_, prof.xi) == (3, 3, 4)
    assert (prof.lambda2.value, prof.lambda3.value, prof.lambda_c.value, prof.zeta) == (4, 5, 5, 5)
    assert prof.super_lambda and prof.super_lambda2
    assert all(0 in side for side in fragment_members(prof.lambda2))


def test_cut_report_kinds():
    rep = cut_report(C6, vset([0, 1, 2]))
    assert rep.kinds == ("3-restricted", "restricted", "edge-cut")
    assert rep.side_components == (1, 1)
    with pytest.raises(ValueError):
        cut_report(C6, 0)
