"""Automorphism groups, orbits and imprimitive blocks.

Generators come from a stabiliser chain: at each level a base point b is
individualised and, for every vertex w of its cell not yet reached, an
automorphism fixing the earlier base points and sending b to w is searched for
by individualisation-refinement backtracking.  The generators therefore reach
every point of every basic orbit and generate the full group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Optional

from .graph_core import Graph, SizeCapError, VertexSet, induced, iter_bits, lowest, members, popcount, vset

Permutation = tuple[int, ...]

SYMMETRY_CAP = 40


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra > rb:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def _refine(g: Graph, cells: list[VertexSet]) -> tuple[list[VertexSet], tuple]:
    """Coarsest equitable refinement plus a trace of the splits made."""
    cells = list(cells)
    trace = []
    changed = True
    while changed:
        changed = False
        for w_idx in range(len(cells)):
            splitter = cells[w_idx]
            for c_idx in range(len(cells)):
                cell = cells[c_idx]
                if cell & (cell - 1) == 0:
                    continue
                counts: dict[int, VertexSet] = {}
                for v in iter_bits(cell):
                    k = popcount(g.adj[v] & splitter)
                    counts[k] = counts.get(k, 0) | 1 << v
                if len(counts) > 1:
                    keys = sorted(counts)
                    trace.append((w_idx, c_idx, tuple((k, popcount(counts[k])) for k in keys)))
                    cells[c_idx : c_idx + 1] = [counts[k] for k in keys]
                    changed = True
                    break
            if changed:
                break
    return cells, tuple(trace)


def _individualise(cells: list[VertexSet], idx: int, v: int) -> list[VertexSet]:
    return cells[:idx] + [1 << v, cells[idx] & ~(1 << v)] + cells[idx + 1 :]


def _first_nonsingleton(cells: list[VertexSet]) -> int:
    for i, c in enumerate(cells):
        if c & (c - 1):
            return i
    return -1


def is_automorphism(g: Graph, perm: Permutation) -> bool:
    if sorted(perm) != list(range(g.n)):
        return False
    return all(g.adj[perm[v]] == vset(perm[u] for u in iter_bits(g.adj[v])) for v in range(g.n))


def _match(g: Graph, left: list[VertexSet], right: list[VertexSet]) -> Optional[Permutation]:
    idx = _first_nonsingleton(left)
    if idx < 0:
        perm = [0] * g.n
        for a, b in zip(left, right):
            perm[lowest(a)] = lowest(b)
        perm = tuple(perm)
        return perm if is_automorphism(g, perm) else None
    v = lowest(left[idx])
    new_left, ltrace = _refine(g, _individualise(left, idx, v))
    shape = [popcount(c) for c in new_left]
    for w in iter_bits(right[idx]):
        new_right, rtrace = _refine(g, _individualise(right, idx, w))
        if rtrace != ltrace or [popcount(c) for c in new_right] != shape:
            continue
        found = _match(g, new_left, new_right)
        if found is not None:
            return found
    return None


def _orbit(n: int, gens: list[Permutation], start: int) -> VertexSet:
    seen = 1 << start
    stack = [start]
    while stack:
        v = stack.pop()
        for p in gens:
            w = p[v]
            if not seen >> w & 1:
                seen |= 1 << w
                stack.append(w)
    return seen


@dataclass
class PermGroup:
    n: int
    generators: list[Permutation]
    base: list[int] = field(default_factory=list)
    basic_orbit_sizes: list[int] = field(default_factory=list)
    _orbits: Optional[list[VertexSet]] = field(default=None, repr=False)

    def orbits(self) -> list[VertexSet]:
        if self._orbits is None:
            uf = _UnionFind(self.n)
            for p in self.generators:
                for v in range(self.n):
                    uf.union(v, p[v])
            groups: dict[int, VertexSet] = {}
            for v in range(self.n):
                r = uf.find(v)
                groups[r] = groups.get(r, 0) | 1 << v
            self._orbits = sorted(groups.values(), key=lowest)
        return self._orbits

    def orbit(self, v: int) -> VertexSet:
        return next(o for o in self.orbits() if o >> v & 1)

    def is_transitive(self) -> bool:
        return self.orbit(0) == (1 << self.n) - 1

    def order(self) -> int:
        """Product of basic orbit sizes (valid for groups built by the search)."""
        return prod(self.basic_orbit_sizes)


def automorphism_generators(g: Graph) -> PermGroup:
    if g.n > SYMMETRY_CAP:
        raise SizeCapError(f"automorphism search limited to n <= {SYMMETRY_CAP}")
    cells, _ = _refine(g, [g.full])
    gens: list[Permutation] = []
    base: list[int] = []
    while True:
        idx = _first_nonsingleton(cells)
        if idx < 0:
            break
        b = lowest(cells[idx])
        left, ltrace = _refine(g, _individualise(cells, idx, b))
        shape = [popcount(c) for c in left]
        level_gens: list[Permutation] = []
        reached = 1 << b
        for w in iter_bits(cells[idx]):
            if reached >> w & 1:
                continue
            right, rtrace = _refine(g, _individualise(cells, idx, w))
            if rtrace != ltrace or [popcount(c) for c in right] != shape:
                continue
            perm = _match(g, left, right)
            if perm is not None:
                level_gens.append(perm)
                fixing = [p for p in gens + level_gens if all(p[x] == x for x in base)]
                reached = _orbit(g.n, fixing, b)
        gens.extend(level_gens)
        base.append(b)
        cells = left
    sizes = []
    for i, b in enumerate(base):
        fixing = [p for p in gens if all(p[x] == x for x in base[:i])]
        sizes.append(popcount(_orbit(g.n, fixing, b)))
    return PermGroup(g.n, gens, base, sizes)


def translation_group(n: int, maps: list[Permutation]) -> PermGroup:
    """Group given by known automorphisms (e.g. rotations), no search."""
    return PermGroup(n, list(maps))


def is_vertex_transitive(g: Graph, group: Optional[PermGroup] = None) -> bool:
    if group is None:
        group = automorphism_generators(g)
    return group.orbit(0) == g.full


def minimal_block(g: Graph, group: PermGroup, seed: tuple[int, int] | VertexSet) -> VertexSet:
    """Smallest block of imprimitivity containing the seed vertices.

    The seed may be a vertex pair or any vertex set.  Classes are merged
    under the generators until stable; the class of the seed is returned.
    """
    if not group.is_transitive():
        raise ValueError("block computation needs a transitive group")
    seed_vertices = list(seed) if isinstance(seed, tuple) else members(seed)
    uf = _UnionFind(g.n)
    pending = []
    for v in seed_vertices[1:]:
        if uf.union(seed_vertices[0], v):
            pending.append((seed_vertices[0], v))
    while pending:
        a, b = pending.pop()
        for p in group.generators:
            x, y = p[a], p[b]
            if uf.union(x, y):
                pending.append((x, y))
    root = uf.find(seed_vertices[0])
    return vset(v for v in range(g.n) if uf.find(v) == root)


def blocks_containing(g: Graph, group: PermGroup, v: int = 0) -> list[VertexSet]:
    """All blocks containing ``v``, singleton and V included, ascending by size."""
    found = {1 << v}
    todo = [1 << v]
    while todo:
        blk = todo.pop()
        for w in range(g.n):
            if blk >> w & 1:
                continue
            bigger = minimal_block(g, group, blk | 1 << w)
            if bigger not in found:
                found.add(bigger)
                todo.append(bigger)
    return sorted(found, key=lambda b: (popcount(b), b))


def is_block(group: PermGroup, block: VertexSet) -> bool:
    for p in group.generators:
        image = vset(p[v] for v in iter_bits(block))
        if image != block and image & block:
            return False
    return True


def is_clique(g: Graph, x: VertexSet) -> bool:
    return all((g.adj[v] | 1 << v) & x == x for v in iter_bits(x))


def has_clique_block_of_size_k(g: Graph, group: Optional[PermGroup] = None) -> bool:
    """Some imprimitive block is a clique on exactly deg vertices.

    Blocks through vertex 0 suffice: automorphisms carry any block onto one
    through 0 and preserve being a clique.
    """
    if not g.is_connected() or not g.is_regular():
        raise ValueError("needs a connected vertex-transitive graph")
    k = g.degree(0)
    if k < 3:
        raise ValueError("needs degree at least 3")
    if group is None:
        group = automorphism_generators(g)
    if not group.is_transitive():
        raise ValueError("graph is not vertex-transitive")
    return any(
        popcount(b) == k and b != g.full and is_clique(g, b) for b in blocks_containing(g, group)
    )


def block_induced_transitivity_check(g: Graph, block: VertexSet, group: Optional[PermGroup] = None) -> bool:
    if group is None:
        group = automorphism_generators(g)
    if block == 0 or not is_block(group, block):
        raise ValueError("not an imprimitive block of the automorphism group")
    return is_vertex_transitive(induced(g, block))
