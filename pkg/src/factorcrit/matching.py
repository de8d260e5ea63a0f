"""Maximum cardinality matching in general graphs (Edmonds' blossom shrinking).

Free vertices are grown into alternating trees lowest index first and
neighbours are scanned in ascending order, so the returned matching is a
deterministic function of the graph.
"""

from __future__ import annotations

from collections import deque

from .graph_core import Graph, SizeCapError, components, iter_bits, odd_components, popcount

Matching = list[tuple[int, int]]


def _mate_array(g: Graph) -> list[int]:
    n = g.n
    mate = [-1] * n

    # greedy start keeps the number of augmentations small
    for v in range(n):
        if mate[v] < 0:
            for u in iter_bits(g.adj[v]):
                if mate[u] < 0:
                    mate[v], mate[u] = u, v
                    break

    for root in range(n):
        if mate[root] < 0:
            _augment_from(g, mate, root)
    return mate


def _augment_from(g: Graph, mate: list[int], root: int) -> bool:
    n = g.n
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] < 0:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for u in iter_bits(g.adj[v]):
            if base[v] == base[u] or mate[v] == u:
                continue
            if u == root or (mate[u] >= 0 and parent[mate[u]] >= 0):
                # odd cycle: contract the blossom
                b = lca(v, u)
                in_blossom = [False] * n
                mark_path(v, b, u, in_blossom)
                mark_path(u, b, v, in_blossom)
                for w in range(n):
                    if in_blossom[base[w]]:
                        base[w] = b
                        if not used[w]:
                            used[w] = True
                            queue.append(w)
            elif parent[u] < 0:
                parent[u] = v
                if mate[u] < 0:
                    # augmenting path found: flip it back to the root
                    while u >= 0:
                        pv = parent[u]
                        nxt = mate[pv]
                        mate[u], mate[pv] = pv, u
                        u = nxt
                    return True
                w = mate[u]
                used[w] = True
                queue.append(w)
    return False


def maximum_matching(g: Graph) -> Matching:
    mate = _mate_array(g)
    return [(v, mate[v]) for v in range(g.n) if mate[v] > v]


def matching_number(g: Graph) -> int:
    return len(maximum_matching(g))


def has_perfect_matching(g: Graph) -> bool:
    if g.n % 2:
        return False
    # an odd component rules it out without running the matcher
    if components(g, g.full).odd_count:
        return False
    return 2 * matching_number(g) == g.n


def is_matching(g: Graph, m: Matching) -> bool:
    seen = set()
    for u, v in m:
        if not g.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def allowed_edges(g: Graph) -> list[tuple[int, int]]:
    """Edges lying in at least one perfect matching."""
    if g.n % 2 or not has_perfect_matching(g):
        return []
    out = []
    for u, v in g.edges():
        rest = g.full & ~(1 << u | 1 << v)
        if rest == 0 or has_perfect_matching(g.remove(1 << u | 1 << v)):
            out.append((u, v))
    return out


def is_elementary(g: Graph) -> bool:
    """Allowed edges form a connected subgraph with at least one edge.

    Isolated vertices of the allowed-edge subgraph cannot occur once a perfect
    matching exists, so connectivity is checked on all of V.
    """
    allowed = allowed_edges(g)
    if not allowed:
        return False
    spanning = Graph.from_edges(g.n, allowed)
    return spanning.is_connected()


def deficiency_matching_number(g: Graph) -> int:
    """Matching number from the Berge-Tutte formula by enumerating every X.

    min over X of (n + |X| - c0(G - X)) / 2; exponential, for small graphs.
    """
    if g.n > 16:
        raise SizeCapError("deficiency enumeration limited to n <= 16")
    best = g.n
    for x in range(1 << g.n):
        odd = odd_components(g, x) if x != g.full else 0
        best = min(best, (g.n + popcount(x) - odd) // 2)
    return best
