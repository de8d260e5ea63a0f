"""p-factor-criticality, by definition and by the odd-component criterion."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Literal, Optional

from .graph_core import Graph, VertexSet, members, odd_components, vset
from .matching import has_perfect_matching


@dataclass(frozen=True)
class CriticalityVerdict:
    p: int
    holds: bool
    witness: Optional[VertexSet]
    via: Literal["direct", "deficiency-criterion"]

    def witness_list(self) -> Optional[list[int]]:
        return None if self.witness is None else members(self.witness)


def _check_parity(g: Graph, p: int) -> None:
    if p < 0 or p > g.n:
        raise ValueError(f"p={p} outside 0..{g.n}")
    if (g.n - p) % 2:
        raise ValueError(f"p={p} and n={g.n} differ in parity")


def _subsets(n: int, size: int, anchored: bool):
    # anchored: only sets containing vertex 0, which are lexicographically first
    if anchored and size > 0:
        for rest in combinations(range(1, n), size - 1):
            yield (0, *rest)
    else:
        yield from combinations(range(n), size)


def is_p_factor_critical_direct(g: Graph, p: int, *, transitive: bool = False) -> CriticalityVerdict:
    """Remove every p-set and test for a perfect matching.

    With ``transitive=True`` the caller vouches that ``g`` is vertex-transitive;
    only p-sets containing vertex 0 are tried.  Any violating set maps onto one
    containing 0, so the verdict and the lexicographically smallest witness are
    unchanged.
    """
    _check_parity(g, p)
    for x in _subsets(g.n, p, transitive):
        xs = vset(x)
        if xs == g.full:
            continue
        if not has_perfect_matching(g.remove(xs)):
            return CriticalityVerdict(p, False, xs, "direct")
    return CriticalityVerdict(p, True, None, "direct")


def is_p_factor_critical_criterion(g: Graph, p: int) -> CriticalityVerdict:
    """c0(G - X) <= |X| - p for every X with |X| >= p.

    Since c0(G - X) <= n - |X|, sets larger than (n + p) / 2 cannot violate.
    Sizes are scanned in increasing order and the smallest violating size is
    reported with its lexicographically first set.
    """
    _check_parity(g, p)
    for size in range(p, (g.n + p) // 2 + 1):
        for x in combinations(range(g.n), size):
            xs = vset(x)
            if odd_components(g, xs) > size - p:
                return CriticalityVerdict(p, False, xs, "deficiency-criterion")
    return CriticalityVerdict(p, True, None, "deficiency-criterion")


def is_factor_critical(g: Graph, *, transitive: bool = False) -> bool:
    if g.n % 2 == 0:
        raise ValueError("factor-criticality needs odd order")
    return is_p_factor_critical_direct(g, 1, transitive=transitive).holds


def is_bicritical(g: Graph, *, transitive: bool = False) -> bool:
    if g.n % 2:
        raise ValueError("bicriticality needs even order")
    return is_p_factor_critical_direct(g, 2, transitive=transitive).holds


def check_necessary_conditions(g: Graph, p: int) -> bool:
    """kappa >= p and lambda >= p + 1, which every p-factor-critical graph meets."""
    from .connectivity import edge_connectivity, vertex_connectivity

    return vertex_connectivity(g) >= p and edge_connectivity(g) >= p + 1
