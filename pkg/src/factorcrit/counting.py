"""Short-cycle statistics, girths, independence number and twins."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .graph_core import Graph, SizeCapError, VertexSet, edges_inside, iter_bits, lowest, vset

MAX_CYCLE_LENGTH = 12
DEFAULT_SEED = 0xC0FFEE


def cycles(g: Graph, length: int) -> Iterator[tuple[int, ...]]:
    """Each simple cycle of the given length exactly once.

    A cycle is reported from its smallest vertex, in the orientation whose
    second vertex is smaller than its last.
    """
    if not 3 <= length <= MAX_CYCLE_LENGTH:
        raise ValueError(f"cycle length must lie in 3..{MAX_CYCLE_LENGTH}")
    adj = g.adj
    for root in range(g.n):
        above = g.full & ~((1 << (root + 1)) - 1)
        path = [root]

        def extend(v: int, used: VertexSet) -> Iterator[tuple[int, ...]]:
            if len(path) == length:
                if adj[v] >> root & 1 and path[1] < v:
                    yield tuple(path)
                return
            for u in iter_bits(adj[v] & above & ~used):
                path.append(u)
                yield from extend(u, used | 1 << u)
                path.pop()

        yield from extend(root, 1 << root)


@dataclass
class CycleStats:
    length: int
    total: int
    per_vertex: list[int]
    per_edge: dict[tuple[int, int], int] = field(default_factory=dict)

    def uniform_vertex_count(self) -> Optional[int]:
        values = set(self.per_vertex)
        return values.pop() if len(values) == 1 else None


def cycle_census(g: Graph, length: int) -> CycleStats:
    per_vertex = [0] * g.n
    per_edge = {e: 0 for e in g.edges()}
    total = 0
    for cyc in cycles(g, length):
        total += 1
        for i, v in enumerate(cyc):
            per_vertex[v] += 1
            u = cyc[i - 1]
            per_edge[(u, v) if u < v else (v, u)] += 1
    return CycleStats(length, total, per_vertex, per_edge)


def girth(g: Graph) -> Optional[int]:
    best = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if best is not None and 2 * dist[v] + 1 >= best:
                break
            for u in iter_bits(g.adj[v]):
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif u != parent[v]:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
    return best


def odd_girth(g: Graph) -> Optional[int]:
    """Shortest odd cycle; None for bipartite graphs.

    An edge joining two vertices at equal BFS depth d closes an odd walk of
    length 2d + 1, and a root on a shortest odd cycle realises it exactly.
    """
    best = None
    for root in range(g.n):
        dist = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in iter_bits(g.adj[v]):
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    queue.append(u)
                elif dist[u] == dist[v]:
                    length = 2 * dist[v] + 1
                    if best is None or length < best:
                        best = length
    return best


def shortest_cycle_sets(g: Graph) -> list[VertexSet]:
    """Vertex sets of all shortest cycles (empty for forests)."""
    g_len = girth(g)
    if g_len is None:
        return []
    if g_len > MAX_CYCLE_LENGTH:
        raise ValueError(f"girth {g_len} beyond cycle enumeration cap")
    return sorted({vset(c) for c in cycles(g, g_len)})


def independence_number(g: Graph) -> tuple[int, VertexSet]:
    """Exact alpha and a maximum independent set (first found in branch order).

    Branch and bound on cliques of the complement, bounded by a greedy
    colouring of the complement (a clique cover of G).
    """
    if g.n > 40:
        raise SizeCapError("independence number limited to n <= 40")
    co = [g.full & ~(nb | 1 << v) for v, nb in enumerate(g.adj)]
    best_size = 0
    best_set = 0

    def colour_order(cand: VertexSet) -> list[tuple[int, int]]:
        order = []
        colour = 0
        left = cand
        while left:
            colour += 1
            avail = left
            while avail:
                v = lowest(avail)
                avail &= ~(1 << v) & ~co[v]
                left &= ~(1 << v)
                order.append((v, colour))
        return order

    def expand(chosen: VertexSet, size: int, cand: VertexSet) -> None:
        nonlocal best_size, best_set
        order = colour_order(cand)
        for v, colour in reversed(order):
            if size + colour <= best_size:
                return
            new_cand = cand & co[v]
            if new_cand:
                expand(chosen | 1 << v, size + 1, new_cand)
            elif size + 1 > best_size:
                best_size, best_set = size + 1, chosen | 1 << v
            cand &= ~(1 << v)

    expand(0, 0, g.full)
    return best_size, best_set


def find_twins(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.adj[u] == g.adj[v]]


@dataclass(frozen=True)
class SingletonAudit:
    singletons: int
    edges: int
    hypothesis_met: Optional[bool] = None

    @property
    def passed(self) -> bool:
        return self.singletons <= self.edges


def singleton_edge_audit(g: Graph, x: VertexSet, hypothesis_met: Optional[bool] = None) -> SingletonAudit:
    """Isolated vertices of G - X against edges of G[X]."""
    rest = g.full & ~x
    singles = sum(1 for v in iter_bits(rest) if not g.adj[v] & rest)
    return SingletonAudit(singles, edges_inside(g, x), hypothesis_met)


def random_subset_sweep(g: Graph, trials: int, seed: int = DEFAULT_SEED) -> list[VertexSet]:
    """``trials`` random vertex sets, each vertex kept with probability 1/2."""
    rng = random.Random(seed)
    return [rng.getrandbits(g.n) for _ in range(trials)]


def has_triangle(g: Graph) -> bool:
    return any(g.adj[u] & g.adj[v] for u, v in g.edges())
