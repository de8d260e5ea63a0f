"""Unit-capacity max-flow used for kappa and lambda."""

from __future__ import annotations

from collections import deque

from .graph_core import Graph, iter_bits


class _Network:
    def __init__(self, size: int) -> None:
        self.cap: list[dict[int, int]] = [{} for _ in range(size)]

    def add(self, u: int, v: int, c: int = 1) -> None:
        self.cap[u][v] = self.cap[u].get(v, 0) + c
        self.cap[v].setdefault(u, 0)

    def max_flow(self, s: int, t: int, limit: int | None = None) -> int:
        """Augment along BFS paths; stops early once ``limit`` is reached."""
        cap = self.cap
        flow = 0
        while limit is None or flow < limit:
            prev = {s: s}
            queue = deque([s])
            while queue and t not in prev:
                u = queue.popleft()
                for v, c in cap[u].items():
                    if c > 0 and v not in prev:
                        prev[v] = u
                        queue.append(v)
            if t not in prev:
                break
            v = t
            while v != s:
                u = prev[v]
                cap[u][v] -= 1
                cap[v][u] += 1
                v = u
            flow += 1
        return flow


def local_edge_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> int:
    net = _Network(g.n)
    for u, v in g.edges():
        net.add(u, v)
        net.add(v, u)
    return net.max_flow(s, t, limit)


def local_vertex_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> int:
    """Internally vertex-disjoint s-t paths for non-adjacent s, t.

    Vertex v splits into v_in = 2v and v_out = 2v + 1 joined by a unit arc.
    """
    if g.has_edge(s, t):
        raise ValueError("local vertex connectivity needs non-adjacent endpoints")
    net = _Network(2 * g.n)
    for v in range(g.n):
        net.add(2 * v, 2 * v + 1, g.n if v in (s, t) else 1)
        for u in iter_bits(g.adj[v]):
            net.add(2 * v + 1, 2 * u, g.n)
    return net.max_flow(2 * s + 1, 2 * t, limit)
