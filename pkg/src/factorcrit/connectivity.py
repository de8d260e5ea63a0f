"""Vertex/edge connectivity and the conditional edge-connectivities.

Restricted (s = 2, 3) and cyclic edge-connectivity are minimised over
fragments: vertex sets X with G[X] and G[V - X] both connected.  In a
connected graph a minimum s-restricted or cyclic cut always has this form
(if V - X split into pieces B1..Bq, q >= 2, the boundary of a single Bj would
be a strictly smaller cut of the same kind), so the fragment minimum equals
the edge-subset definition.  :func:`exhaustive_cut_oracle` evaluates the
edge-subset definition literally for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Literal, Optional

from .counting import girth, shortest_cycle_sets
from .flow import local_edge_connectivity, local_vertex_connectivity
from .graph_core import (
    SizeCapError,
    Graph,
    VertexSet,
    boundary_size,
    components,
    edges_inside,
    is_connected_set,
    iter_bits,
    lowest,
    members,
    popcount,
)

CutMode = Literal[2, 3, "cyclic"]

FRAGMENT_CAP = 40
DEFAULT_BUDGET = 2_000_000
ORACLE_EDGE_CAP = 16


class SearchBudgetExceeded(RuntimeError):
    pass


def vertex_connectivity(g: Graph) -> int:
    """kappa: smallest vertex cut, or n - 1 for complete graphs.

    Sources are taken in index order; once sources v0..v_best have been tried,
    some source avoids every cut of size best, so the minimum is final.
    """
    if g.n < 2:
        raise ValueError("vertex connectivity needs n >= 2")
    best = g.n - 1
    if not g.is_connected():
        return 0
    src = 0
    while src <= best and src < g.n:
        for t in range(g.n):
            if t != src and not g.has_edge(src, t):
                best = min(best, local_vertex_connectivity(g, src, t, limit=best))
        src += 1
    return best


def edge_connectivity(g: Graph) -> int:
    if g.n < 2:
        raise ValueError("edge connectivity needs n >= 2")
    best = g.min_degree()
    for t in range(1, g.n):
        best = min(best, local_edge_connectivity(g, 0, t, limit=best))
    return best


def min_edge_degree(g: Graph) -> int:
    """xi: min deg(u) + deg(v) - 2 over edges."""
    edges = g.edges()
    if not edges:
        raise ValueError("minimum edge degree of an edgeless graph")
    deg = g.degrees()
    return min(deg[u] + deg[v] - 2 for u, v in edges)


@dataclass(frozen=True)
class FragmentResult:
    """Minimum over fragments.

    ``value`` is None when no fragment of the requested kind exists.  When
    ``exact`` is False the search hit its node budget and ``value`` is only an
    upper bound (or None if nothing was found).  ``fragments`` lists the
    minimisers, each as the side containing vertex 0, in ascending bitset
    order; under ``transitive=True`` only sides of size <= n/2 are listed.
    """

    mode: CutMode | str
    value: Optional[int]
    fragments: tuple[VertexSet, ...]
    exact: bool = True
    nodes: int = 0


def _side_ok(g: Graph, side: VertexSet, mode) -> bool:
    if mode == "cyclic":
        return edges_inside(g, side) >= popcount(side)
    return popcount(side) >= mode


def fragment_search(
    g: Graph,
    mode,
    *,
    transitive: bool = False,
    bound: Optional[int] = None,
    budget: Optional[int] = DEFAULT_BUDGET,
) -> FragmentResult:
    """Minimise d(X) over connected X containing vertex 0 with a valid complement.

    ``mode`` is 2 or 3 (both sides connected with at least that many vertices)
    or "cyclic" (both sides connected and containing a cycle).  Sets are grown
    from vertex 0 by include/exclude branching on the lowest frontier vertex;
    edges from X to excluded vertices are a lower bound on the final d(X).
    ``bound`` discards anything larger; ``transitive`` caps |X| at n/2, which
    is exhaustive when every vertex can be moved to 0 by an automorphism.
    """
    if g.n > FRAGMENT_CAP:
        raise SizeCapError(f"fragment search limited to n <= {FRAGMENT_CAP}")
    if not g.is_connected():
        raise ValueError("fragment search needs a connected graph")
    min_side = 3 if mode == "cyclic" else mode
    max_size = g.n // 2 if transitive else g.n - min_side
    adj = g.adj
    full = g.full
    best = bound if bound is not None else 1 << 30
    found: list[VertexSet] = []
    nodes = 0

    def evaluate(x: VertexSet) -> None:
        nonlocal best, found
        if popcount(x) < min_side:
            return
        d = boundary_size(g, x)
        if d > best:
            return
        rest = full & ~x
        if popcount(rest) < min_side or not _side_ok(g, x, mode) or not _side_ok(g, rest, mode):
            return
        if not is_connected_set(g, rest):
            return
        if d < best:
            best, found = d, []
        found.append(x)

    def grow(x: VertexSet, size: int, excluded: VertexSet, lb: int) -> None:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise SearchBudgetExceeded
        if size >= max_size:
            return
        nb = 0
        for v in iter_bits(x):
            nb |= adj[v]
        frontier = nb & ~x & ~excluded
        while frontier:
            v = lowest(frontier)
            frontier &= ~(1 << v)
            gain = popcount(adj[v] & excluded)
            if lb + gain <= best:
                xv = x | 1 << v
                evaluate(xv)
                grow(xv, size + 1, excluded, lb + gain)
            # from here on v stays outside X
            excluded |= 1 << v
            lb += popcount(adj[v] & x)
            if lb > best:
                return

    exact = True
    try:
        evaluate(1)
        grow(1, 1, 0, 0)
    except SearchBudgetExceeded:
        exact = False
    value = best if found else None
    return FragmentResult(mode, value, tuple(sorted(found)), exact, nodes)


def restricted_edge_connectivity(g: Graph, s: int, **kw) -> FragmentResult:
    if s not in (2, 3):
        raise ValueError("s must be 2 or 3")
    if g.n < 2 * s:
        return FragmentResult(s, None, ())
    return fragment_search(g, s, **kw)


def cyclic_edge_connectivity(g: Graph, **kw) -> FragmentResult:
    if g.n < 6:
        if not g.is_connected():
            raise ValueError("cyclic edge connectivity needs a connected graph")
        return FragmentResult("cyclic", None, ())
    return fragment_search(g, "cyclic", **kw)


def zeta(g: Graph) -> Optional[int]:
    """Smallest boundary of a vertex set inducing a shortest cycle."""
    sets = shortest_cycle_sets(g)
    if not sets:
        return None
    return min(boundary_size(g, x) for x in sets)


def is_super_lambda(g: Graph, *, transitive: bool = False) -> bool:
    """Every minimum edge cut isolates a vertex."""
    if not g.is_connected():
        raise ValueError("super-lambda needs a connected graph")
    lam = edge_connectivity(g)
    if g.n < 4:
        return True
    res = fragment_search(g, 2, transitive=transitive, bound=lam, budget=None)
    return res.value is None


@dataclass(frozen=True)
class SuperLambda2:
    holds: bool
    lambda2: int
    superatom: Optional[VertexSet]


def is_super_lambda2(g: Graph, *, transitive: bool = False, lambda2: Optional[FragmentResult] = None) -> SuperLambda2:
    """Every minimum restricted edge cut isolates an edge.

    A fragment is trivial when one side has exactly two vertices.  Otherwise
    the smallest nontrivial fragment (by size, then bitset order, reported as
    the smaller side) is the superatom.
    """
    res = lambda2 if lambda2 is not None else restricted_edge_connectivity(g, 2, transitive=transitive, budget=None)
    if res.value is None:
        raise ValueError("restricted edge connectivity undefined")
    if not res.exact:
        raise ValueError("restricted edge connectivity search incomplete")
    nontrivial = []
    for x in res.fragments:
        rest = g.full & ~x
        if popcount(x) > 2 and popcount(rest) > 2:
            small = x if popcount(x) <= popcount(rest) else rest
            nontrivial.append((popcount(small), small))
    if not nontrivial:
        return SuperLambda2(True, res.value, None)
    return SuperLambda2(False, res.value, min(nontrivial)[1])


# literal edge-subset oracle ------------------------------------------------


def exhaustive_cut_oracle(g: Graph, mode) -> Optional[int]:
    """Minimum |F| over edge sets F meeting the literal cut definition.

    mode 1, 2, 3: G - F is disconnected and every component has at least that
    many vertices.  mode "cyclic": at least two components of G - F contain a
    cycle.  Only for graphs with at most 16 edges.
    """
    edges = g.edges()
    if len(edges) > ORACLE_EDGE_CAP:
        raise SizeCapError(f"oracle limited to {ORACLE_EDGE_CAP} edges, got {len(edges)}")
    for size in range(1, len(edges) + 1):
        for cut in combinations(edges, size):
            adj = list(g.adj)
            for u, v in cut:
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
            h = Graph(g.n, tuple(adj))
            comps = components(h, h.full).components
            if len(comps) < 2:
                continue
            if mode == "cyclic":
                if sum(1 for c in comps if edges_inside(h, c) >= popcount(c)) >= 2:
                    return size
            elif all(popcount(c) >= mode for c in comps):
                return size
    return None


# reports --------------------------------------------------------------------


@dataclass(frozen=True)
class CutReport:
    x: VertexSet
    d: int
    side_components: tuple[int, int]
    kinds: tuple[str, ...]

    @property
    def kind(self) -> str:
        return self.kinds[0]


def cut_report(g: Graph, x: VertexSet) -> CutReport:
    """Classify the cut nabla(X) by the components of G - nabla(X)."""
    rest = g.full & ~x
    if x == 0 or rest == 0:
        raise ValueError("cut needs a proper non-empty vertex set")
    cx = components(g, x).components
    cr = components(g, rest).components
    comps = cx + cr
    kinds = []
    if sum(1 for c in comps if edges_inside(g, c) >= popcount(c)) >= 2:
        kinds.append("cyclic")
    sizes = [popcount(c) for c in comps]
    if min(sizes) >= 3:
        kinds.append("3-restricted")
    if min(sizes) >= 2:
        kinds.append("restricted")
    kinds.append("edge-cut")
    return CutReport(x, boundary_size(g, x), (len(cx), len(cr)), tuple(kinds))


@dataclass
class ConnectivityProfile:
    kappa: int
    lambda_: int
    xi: Optional[int]
    lambda2: FragmentResult
    lambda3: FragmentResult
    lambda_c: FragmentResult
    zeta: Optional[int]
    super_lambda: bool
    super_lambda2: Optional[bool]
    superatom: Optional[VertexSet] = None
    notes: list[str] = field(default_factory=list)


def connectivity_profile(g: Graph, *, transitive: bool = False, budget: Optional[int] = DEFAULT_BUDGET) -> ConnectivityProfile:
    if not g.is_connected():
        raise ValueError("connectivity profile needs a connected graph")
    kappa = vertex_connectivity(g) if g.n >= 2 else 0
    lam = edge_connectivity(g) if g.n >= 2 else 0
    xi = min_edge_degree(g) if g.num_edges() else None
    kw = dict(transitive=transitive, budget=budget)
    l2 = restricted_edge_connectivity(g, 2, **kw)
    l3 = restricted_edge_connectivity(g, 3, **kw)
    lc = cyclic_edge_connectivity(g, **kw)
    z = zeta(g) if (girth(g) or 0) <= 12 else None
    notes = []
    sl2 = None
    atom = None
    if l2.value is not None and l2.exact:
        res = is_super_lambda2(g, lambda2=l2)
        sl2, atom = res.holds, res.superatom
    for name, r in (("lambda2", l2), ("lambda3", l3), ("lambda_c", lc)):
        if not r.exact:
            notes.append(f"{name} search stopped after {r.nodes} nodes; value is an upper bound")
    return ConnectivityProfile(
        kappa=kappa,
        lambda_=lam,
        xi=xi,
        lambda2=l2,
        lambda3=l3,
        lambda_c=lc,
        zeta=z,
        super_lambda=is_super_lambda(g, transitive=transitive) if g.n >= 2 else True,
        super_lambda2=sl2,
        superatom=atom,
        notes=notes,
    )


def fragment_members(res: FragmentResult) -> list[list[int]]:
    return [members(x) for x in res.fragments]
