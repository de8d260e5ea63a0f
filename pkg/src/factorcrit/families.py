"""Generators for vertex-transitive families and group-table ingestion."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations, product
from pathlib import Path
from typing import Optional

from .graph_core import Graph, GraphFormatError, SizeCapError, max_width, parse_graph6
from .symmetry import Permutation

KINDS = ("cycle", "complete", "circulant", "cayley", "petersen", "kneser", "prism", "graph6")
SHIPPED_TABLES = ("Z9", "Z3xZ3", "Z15", "Z21", "F21", "Z25", "Z5xZ5", "Z27")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int = 0
    steps: tuple[int, ...] = ()
    table: str = ""
    connection: tuple[int, ...] = ()
    k: int = 0
    text: str = ""

    def label(self) -> str:
        if self.kind == "circulant":
            return f"circulant:{self.n}:{','.join(map(str, self.steps))}"
        if self.kind in ("cycle", "complete", "prism"):
            return f"{self.kind}:{self.n}"
        if self.kind == "kneser":
            return f"kneser:{self.n}:{self.k}"
        if self.kind == "cayley":
            return f"cayley:{self.table}:{','.join(map(str, self.connection))}"
        if self.kind == "petersen":
            return "petersen"
        return self.text

    @property
    def certified_transitive(self) -> bool:
        return self.kind != "graph6"


# builders -------------------------------------------------------------------


def circulant(n: int, steps) -> Graph:
    steps = sorted(set(steps))
    if n < 3:
        raise ValueError("circulant needs n >= 3")
    if not steps:
        raise ValueError("circulant needs a non-empty step set")
    if any(not 1 <= s <= n // 2 for s in steps):
        raise ValueError(f"steps must lie in 1..{n // 2}")
    return Graph.from_edges(n, {(i, (i + s) % n) for i in range(n) for s in steps})


def cycle(n: int) -> Graph:
    return circulant(n, [1])


def complete(n: int) -> Graph:
    if n == 1:
        return Graph(1, (0,))
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    return circulant(n, range(1, n // 2 + 1))


def petersen() -> Graph:
    return kneser(5, 2)


def prism(n: int) -> Graph:
    """C_n x K2: outer cycle 0..n-1, inner cycle n..2n-1, spokes i ~ n+i."""
    if n < 3:
        raise ValueError("prism needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def kneser(n: int, k: int) -> Graph:
    """k-subsets of 0..n-1 in lexicographic order, adjacent when disjoint."""
    if k < 1 or n < 2 * k:
        raise ValueError("kneser needs 1 <= k and n >= 2k")
    verts = list(combinations(range(n), k))
    if len(verts) > max_width():
        raise SizeCapError(f"kneser({n},{k}) has {len(verts)} vertices, above width {max_width()}")
    masks = [sum(1 << i for i in v) for v in verts]
    edges = [(a, b) for a, b in combinations(range(len(verts)), 2) if not masks[a] & masks[b]]
    return Graph.from_edges(len(verts), edges)


def rotations(n: int) -> list[Permutation]:
    return [tuple((i + 1) % n for i in range(n))]


# groups -----------------------------------------------------------------------


@dataclass(frozen=True)
class GroupTable:
    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    name: str = ""
    default_connection: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        m, t, e = self.order, self.table, self.identity
        if len(t) != m or any(len(row) != m for row in t):
            raise GraphFormatError("group table is not m x m")
        if not 0 <= e < m:
            raise GraphFormatError("identity index out of range")
        for row in t:
            if sorted(row) != list(range(m)):
                raise GraphFormatError("group table row is not a permutation")
        if any(t[e][x] != x or t[x][e] != x for x in range(m)):
            raise GraphFormatError("identity axiom fails")
        for a in range(m):
            for b in range(m):
                ab = t[a][b]
                for c in range(m):
                    if t[ab][c] != t[a][t[b][c]]:
                        raise GraphFormatError(f"associativity fails at ({a},{b},{c})")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.table[a].index(self.identity)

    def generated(self, elems) -> set[int]:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            x = frontier.pop()
            for s in elems:
                y = self.table[x][s]
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return seen

    def generating_set(self) -> list[int]:
        """Greedy: each element not yet generated joins the set."""
        gens: list[int] = []
        span = {self.identity}
        for a in range(self.order):
            if a not in span:
                gens.append(a)
                span = self.generated(gens)
        return gens

    def left_translations(self) -> list[Permutation]:
        """g -> a g for a in a generating set; automorphisms of every Cayley graph."""
        return [tuple(self.table[a][x] for x in range(self.order)) for a in self.generating_set()]

    def automorphisms(self) -> list[tuple[int, ...]]:
        """All group automorphisms, found by extending images of a generating set."""
        gens = self.generating_set()
        orders = [self._element_order(a) for a in gens]
        out = []
        for images in product(range(self.order), repeat=len(gens)):
            if any(self._element_order(b) != o for b, o in zip(images, orders)):
                continue
            phi = self._extend(gens, images)
            if phi is not None:
                out.append(phi)
        return sorted(out)

    def is_cyclic(self) -> bool:
        return any(self._element_order(a) == self.order for a in range(self.order))

    def _element_order(self, a: int) -> int:
        x, k = a, 1
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def _extend(self, gens, images) -> Optional[tuple[int, ...]]:
        phi = {self.identity: self.identity}
        frontier = [self.identity]
        while frontier:
            x = frontier.pop()
            for s, t in zip(gens, images):
                y, fy = self.table[x][s], self.table[phi[x]][t]
                if y in phi:
                    if phi[y] != fy:
                        return None
                else:
                    phi[y] = fy
                    frontier.append(y)
        if len(set(phi.values())) != self.order:
            return None
        for a in range(self.order):
            for b in range(self.order):
                if phi[self.table[a][b]] != self.table[phi[a]][phi[b]]:
                    return None
        return tuple(phi[x] for x in range(self.order))


def parse_group_table(text: str, name: str = "") -> GroupTable:
    """Table file: "order m identity e", m rows of products, then "S: ..."."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise GraphFormatError("empty group table file")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "order" or head[2] != "identity":
        raise GraphFormatError("first line must read 'order m identity e'")
    try:
        m, e = int(head[1]), int(head[3])
        rows = tuple(tuple(int(x) for x in ln.split()) for ln in lines[1 : 1 + m])
    except ValueError:
        raise GraphFormatError("non-integer entry in group table") from None
    if len(rows) != m:
        raise GraphFormatError("group table has too few rows")
    conn: tuple[int, ...] = ()
    rest = lines[1 + m :]
    if rest:
        if not rest[0].startswith("S:") or len(rest) > 1:
            raise GraphFormatError("expected a single trailing 'S:' line")
        try:
            conn = tuple(int(x) for x in rest[0][2:].replace(",", " ").split())
        except ValueError:
            raise GraphFormatError("non-integer entry in connection set") from None
    return GroupTable(m, rows, e, name, conn)


def format_group_table(t: GroupTable, connection=None) -> str:
    lines = [f"order {t.order} identity {t.identity}"]
    lines += [" ".join(map(str, row)) for row in t.table]
    conn = t.default_connection if connection is None else connection
    lines.append("S: " + " ".join(map(str, conn)))
    return "\n".join(lines) + "\n"


def load_group_table(name_or_path: str) -> GroupTable:
    if name_or_path in SHIPPED_TABLES:
        text = resources.files("factorcrit.data").joinpath(f"{name_or_path}.txt").read_text()
        return parse_group_table(text, name_or_path)
    path = Path(name_or_path)
    if not path.exists():
        raise GraphFormatError(f"unknown group table {name_or_path!r}")
    return parse_group_table(path.read_text(), path.stem)


def cayley(table: GroupTable, connection) -> Graph:
    conn = sorted(set(connection))
    m = table.order
    if any(not 0 <= s < m for s in conn):
        raise ValueError("connection set element out of range")
    if table.identity in conn:
        raise ValueError("identity in connection set")
    if any(table.inverse(s) not in conn for s in conn):
        raise ValueError("connection set is not inverse-closed")
    edges = {(x, table.mul(x, s)) for x in range(m) for s in conn}
    return Graph.from_edges(m, {(a, b) if a < b else (b, a) for a, b in edges})


def inverse_classes(table: GroupTable) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for a in range(table.order):
        if a == table.identity or a in seen:
            continue
        pair = tuple(sorted({a, table.inverse(a)}))
        seen.update(pair)
        out.append(pair)
    return out


def enumerate_cayley(table: GroupTable) -> list[FamilySpec]:
    """Connected Cayley graphs of ``table`` up to group automorphisms of S."""
    classes = inverse_classes(table)
    autos = table.automorphisms()
    seen = set()
    specs = []
    for r in range(1, len(classes) + 1):
        for pick in combinations(classes, r):
            conn = tuple(sorted(x for c in pick for x in c))
            if conn in seen:
                continue
            orbit = {tuple(sorted(phi[x] for x in conn)) for phi in autos}
            seen.update(orbit)
            if len(table.generated(conn)) != table.order:
                continue
            specs.append(FamilySpec("cayley", n=table.order, table=table.name, connection=min(orbit)))
    return specs


# circulant classes ------------------------------------------------------------


def _canonical_steps(n: int, steps) -> tuple[int, ...]:
    return tuple(sorted({min(s % n, -s % n) for s in steps}))


def enumerate_circulants(n: int, *, odd_only: bool = True) -> list[FamilySpec]:
    """Connected circulants on n vertices up to multiplier equivalence S ~ aS.

    Each class is represented by its lexicographically smallest sorted step
    tuple; classes are listed by step count, then lexicographically.
    """
    if odd_only and n % 2 == 0:
        raise ValueError("the odd sweep takes odd n only")
    if n < 3:
        raise ValueError("circulants need n >= 3")
    units = [a for a in range(1, n) if math.gcd(a, n) == 1]
    half = range(1, n // 2 + 1)
    classes = set()
    for r in range(1, len(half) + 1):
        for steps in combinations(half, r):
            if math.gcd(n, *steps) != 1:
                continue
            classes.add(min(_canonical_steps(n, [a * s for s in steps]) for a in units))
    return [FamilySpec("circulant", n=n, steps=s) for s in sorted(classes, key=lambda s: (len(s), s))]


# spec strings -----------------------------------------------------------------


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x != "")
    except ValueError:
        raise GraphFormatError(f"bad integer list {text!r}") from None


def parse_family_spec(text: str) -> FamilySpec:
    """Parse "circulant:7:1,2", "cycle:9", "complete:5", "prism:3", "petersen",
    "kneser:7:3", "cayley:Z3xZ3[:1,2,...]" or fall back to a graph6 line."""
    parts = text.strip().split(":")
    kind = parts[0]
    try:
        if kind == "circulant" and len(parts) == 3:
            return FamilySpec("circulant", n=int(parts[1]), steps=_ints(parts[2]))
        if kind in ("cycle", "complete", "prism") and len(parts) == 2:
            return FamilySpec(kind, n=int(parts[1]))
        if kind == "petersen" and len(parts) == 1:
            return FamilySpec("petersen", n=10)
        if kind == "kneser" and len(parts) == 3:
            return FamilySpec("kneser", n=int(parts[1]), k=int(parts[2]))
        if kind == "cayley" and len(parts) in (2, 3):
            conn = _ints(parts[2]) if len(parts) == 3 else ()
            return FamilySpec("cayley", table=parts[1], connection=conn)
    except ValueError:
        raise GraphFormatError(f"bad family spec {text!r}") from None
    if kind in KINDS:
        raise GraphFormatError(f"bad family spec {text!r}")
    parse_graph6(text)
    return FamilySpec("graph6", text=text.strip())


def build(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_family_spec(spec)
    try:
        if spec.kind == "circulant":
            return circulant(spec.n, spec.steps)
        if spec.kind == "cycle":
            return cycle(spec.n)
        if spec.kind == "complete":
            return complete(spec.n)
        if spec.kind == "prism":
            return prism(spec.n)
        if spec.kind == "petersen":
            return petersen()
        if spec.kind == "kneser":
            return kneser(spec.n, spec.k)
        if spec.kind == "cayley":
            table = load_group_table(spec.table)
            return cayley(table, spec.connection or table.default_connection)
    except SizeCapError:
        raise
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None
    return parse_graph6(spec.text)


def known_automorphisms(spec: FamilySpec) -> Optional[list[Permutation]]:
    """Constructive transitivity certificates where the family provides them."""
    if spec.kind in ("circulant", "cycle", "complete"):
        return rotations(spec.n)
    if spec.kind == "cayley":
        return load_group_table(spec.table).left_translations()
    return None
