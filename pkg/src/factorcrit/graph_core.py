"""Bitset graph representation, vertex-set calculus and graph6 I/O.

Vertex sets are plain ``int`` bitmasks: bit ``v`` is set iff vertex ``v`` is a
member.  Every function here is pure; :class:`Graph` is immutable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator

VertexSet = int

DEFAULT_WIDTH = 64
ALLOWED_WIDTHS = (64, 128)
WIDTH_ENV = "FACTORCRIT_MAX_WIDTH"

GRAPH6_HEADER = b">>graph6<<"


class GraphFormatError(ValueError):
    """Malformed graph input (graph6 line, family spec, edge list)."""


class SizeCapError(ValueError):
    """Input exceeds a configured size cap."""


def max_width() -> int:
    raw = os.environ.get(WIDTH_ENV)
    if not raw:
        return DEFAULT_WIDTH
    try:
        width = int(raw)
    except ValueError:
        raise GraphFormatError(f"{WIDTH_ENV}={raw!r} is not an integer") from None
    if width not in ALLOWED_WIDTHS:
        raise GraphFormatError(f"{WIDTH_ENV} must be one of {ALLOWED_WIDTHS}, got {width}")
    return width


def vset(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(x: VertexSet) -> list[int]:
    """Ascending list of the vertices in ``x``."""
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def iter_bits(x: VertexSet) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def popcount(x: VertexSet) -> int:
    return bin(x).count("1")


def lowest(x: VertexSet) -> int:
    return (x & -x).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphFormatError("graph must have at least one vertex")
        if self.n > max_width():
            raise SizeCapError(f"n={self.n} exceeds bitset width {max_width()}")
        if len(self.adj) != self.n:
            raise GraphFormatError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphFormatError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise GraphFormatError(f"loop at vertex {v}")
            for u in iter_bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphFormatError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees())

    def max_degree(self) -> int:
        return max(self.degrees())

    def is_regular(self) -> bool:
        return len(set(self.degrees())) == 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def remove(self, x: VertexSet) -> Graph:
        """G - X, relabelled by ascending original index."""
        return induced(self, self.full & ~x)

    def is_connected(self) -> bool:
        return is_connected_set(self, self.full)


def _check_subset(g: Graph, x: VertexSet) -> None:
    if x < 0 or x & ~g.full:
        raise ValueError(f"vertex set {x:#x} is not a subset of 0..{g.n - 1}")


def neighborhood(g: Graph, x: VertexSet) -> VertexSet:
    """Vertices outside ``x`` adjacent to some vertex of ``x``."""
    _check_subset(g, x)
    nb = 0
    for v in iter_bits(x):
        nb |= g.adj[v]
    return nb & ~x


def edges_inside(g: Graph, x: VertexSet) -> int:
    return sum(popcount(g.adj[v] & x) for v in iter_bits(x)) // 2


def boundary_size(g: Graph, x: VertexSet) -> int:
    """d(x) without materialising the edge list; no properness check."""
    out = ~x & g.full
    return sum(popcount(g.adj[v] & out) for v in iter_bits(x))


def boundary(g: Graph, x: VertexSet) -> tuple[list[tuple[int, int]], int]:
    """Edges with exactly one end in ``x`` (inside end first) and their count."""
    _check_subset(g, x)
    if x == 0 or x == g.full:
        raise ValueError("boundary needs a proper non-empty vertex set")
    out = ~x & g.full
    cut = [(u, v) for u in iter_bits(x) for v in iter_bits(g.adj[u] & out)]
    return cut, len(cut)


def reach(g: Graph, carrier: VertexSet, start: VertexSet) -> VertexSet:
    """Vertices of ``carrier`` reachable from ``start`` inside G[carrier]."""
    seen = start & carrier
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & carrier & ~seen
        seen |= frontier
    return seen


def is_connected_set(g: Graph, x: VertexSet) -> bool:
    if x == 0:
        return False
    return reach(g, x, x & -x) == x


@dataclass(frozen=True)
class ComponentPartition:
    components: tuple[VertexSet, ...]
    odd_count: int

    def sizes(self) -> list[int]:
        return [popcount(c) for c in self.components]


def components(g: Graph, carrier: VertexSet) -> ComponentPartition:
    """Components of G[carrier], ordered by smallest member."""
    _check_subset(g, carrier)
    comps = []
    rest = carrier
    while rest:
        comp = reach(g, carrier, rest & -rest)
        comps.append(comp)
        rest &= ~comp
    odd = sum(1 for c in comps if popcount(c) % 2)
    return ComponentPartition(tuple(comps), odd)


def odd_components(g: Graph, x: VertexSet) -> int:
    """c0(G - X)."""
    return components(g, g.full & ~x).odd_count


def induced(g: Graph, x: VertexSet) -> Graph:
    _check_subset(g, x)
    if x == 0:
        raise ValueError("induced subgraph of the empty set")
    order = members(x)
    index = {v: i for i, v in enumerate(order)}
    adj = []
    for v in order:
        adj.append(vset(index[u] for u in iter_bits(g.adj[v] & x)))
    return Graph(len(order), tuple(adj))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph whose vertex ``perm[v]`` plays the role of ``v``."""
    adj = [0] * g.n
    for v in range(g.n):
        adj[perm[v]] = vset(perm[u] for u in iter_bits(g.adj[v]))
    return Graph(g.n, tuple(adj))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    return Graph(a.n + b.n, a.adj + tuple(nb << a.n for nb in b.adj))


def complement(g: Graph) -> Graph:
    return Graph(g.n, tuple(g.full & ~(nb | 1 << v) for v, nb in enumerate(g.adj)))


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in iter_bits(g.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(d == 2 for d in g.degrees()) and g.is_connected()


# graph6 -------------------------------------------------------------------


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise SizeCapError(f"n={n} too large for graph6")


def emit_graph6(g: Graph) -> bytes:
    bits = [g.has_edge(i, j) for j in range(1, g.n) for i in range(j)]
    bits.extend([False] * (-len(bits) % 6))
    body = bytearray()
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k : k + 6]:
            chunk = chunk << 1 | b
        body.append(chunk + 63)
    return _encode_n(g.n) + bytes(body)


def parse_graph6(text: bytes | str) -> Graph:
    if isinstance(text, str):
        try:
            text = text.encode("ascii")
        except UnicodeEncodeError:
            raise GraphFormatError("graph6 input must be ASCII") from None
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER) :]
    if not data:
        raise GraphFormatError("empty graph6 input")
    if any(not 63 <= c <= 126 for c in data):
        raise GraphFormatError("graph6 contains bytes outside 63..126")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise GraphFormatError("8-byte graph6 length field is not supported")
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 length field")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        if n <= 62:
            raise GraphFormatError("non-canonical graph6 length field")
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n == 0:
        raise GraphFormatError("graph6 encodes the empty graph")
    if n > max_width():
        raise SizeCapError(f"n={n} exceeds bitset width {max_width()}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise GraphFormatError("non-zero graph6 padding bits")
    return Graph(n, tuple(adj))
