"""Corpora, per-graph analysis, lemma suites, the theorem sweep and oracle checks.

Every public function returns a JSON-ready dict.  Nothing that varies between
runs (wall-clock time, worker count) enters the dicts unless explicitly asked
for, so reports are byte-identical for equal inputs.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Callable, Optional

from . import connectivity as conn
from . import counting, criticality, families, matching, symmetry
from .graph_core import Graph, emit_graph6, is_bipartite, members, popcount

SCHEMA = 1
DEFAULT_SEED = counting.DEFAULT_SEED
UNDEFINED = "undefined"
CAPPED = "capped"

LEMMA_IDS = ("1.1", "2.1", "2.2", "2.3", "2.4", "2.5", "2.6", "2.7", "2.8", "2.9", "2.10", "2.11", "3.1", "3.2", "3.3", "3.4", "4")


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def _val(x):
    return UNDEFINED if x is None else x


# corpus -------------------------------------------------------------------------


@dataclass
class Entry:
    spec: families.FamilySpec
    graph: Graph
    verify_symmetry: bool = False

    @property
    def label(self) -> str:
        return self.spec.label()

    @property
    def graph6(self) -> str:
        return emit_graph6(self.graph).decode()

    @cached_property
    def group(self) -> symmetry.PermGroup:
        return symmetry.automorphism_generators(self.graph)

    @cached_property
    def transitive(self) -> bool:
        if self.spec.certified_transitive and not self.verify_symmetry:
            return True
        return symmetry.is_vertex_transitive(self.graph, self.group)

    @cached_property
    def connected(self) -> bool:
        return self.graph.is_connected()

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def degree(self) -> int:
        return self.graph.degree(0)

    @cached_property
    def girth(self) -> Optional[int]:
        return counting.girth(self.graph)

    @cached_property
    def triangle(self) -> bool:
        return counting.has_triangle(self.graph)

    @cached_property
    def kappa(self) -> int:
        return conn.vertex_connectivity(self.graph)

    @cached_property
    def lambda_(self) -> int:
        return conn.edge_connectivity(self.graph)

    @cached_property
    def xi(self) -> int:
        return conn.min_edge_degree(self.graph)

    @cached_property
    def lambda2(self) -> conn.FragmentResult:
        return conn.restricted_edge_connectivity(self.graph, 2, transitive=self.transitive, budget=None)

    @cached_property
    def lambda3(self) -> conn.FragmentResult:
        return conn.restricted_edge_connectivity(self.graph, 3, transitive=self.transitive, budget=None)

    @cached_property
    def lambda_c(self) -> conn.FragmentResult:
        return conn.cyclic_edge_connectivity(self.graph, transitive=self.transitive, budget=None)


def entry(spec: families.FamilySpec | str, verify_symmetry: bool = False) -> Entry:
    if isinstance(spec, str):
        spec = families.parse_family_spec(spec)
    return Entry(spec, families.build(spec), verify_symmetry)


def vt_corpus(max_order: int = 15, *, odd_only: bool = False, min_order: int = 3) -> list[Entry]:
    """Connected vertex-transitive graphs generated up to ``max_order``.

    Circulant classes, Cayley classes of the shipped non-cyclic tables (cyclic
    ones coincide with circulants), prisms, and connected Kneser graphs.
    """
    out = []
    for n in range(max(min_order, 3), max_order + 1):
        if odd_only and n % 2 == 0:
            continue
        out.extend(entry(s) for s in families.enumerate_circulants(n, odd_only=False))
    for name in families.SHIPPED_TABLES:
        table = families.load_group_table(name)
        if not min_order <= table.order <= max_order or (odd_only and table.order % 2 == 0):
            continue
        if table.is_cyclic():
            continue
        out.extend(entry(s) for s in families.enumerate_cayley(table))
    if not odd_only:
        for k in range(3, max_order // 2 + 1):
            if 2 * k >= min_order:
                out.append(entry(families.FamilySpec("prism", n=k)))
    out.extend(entry(s) for s in kneser_specs(max_order, odd_only=odd_only, min_order=min_order))
    return out


def kneser_specs(max_order: int, *, odd_only: bool, min_order: int = 3) -> list[families.FamilySpec]:
    specs = []
    for k in range(2, 8):
        n = 2 * k + 1
        while comb(n, k) <= max_order:
            size = comb(n, k)
            if size >= min_order and not (odd_only and size % 2 == 0):
                specs.append(families.FamilySpec("kneser", n=n, k=k))
            n += 1
    return sorted(specs, key=lambda s: (comb(s.n, s.k), s.n))


def theorem_corpus(max_order: int) -> list[families.FamilySpec]:
    """Connected VT odd graphs of order 5..max_order: circulants, shipped Cayley tables, Kneser."""
    specs = []
    for n in range(5, max_order + 1, 2):
        specs.extend(families.enumerate_circulants(n))
    for name in families.SHIPPED_TABLES:
        table = families.load_group_table(name)
        if table.order % 2 and 5 <= table.order <= max_order:
            specs.extend(families.enumerate_cayley(table))
    specs.extend(kneser_specs(max_order, odd_only=True, min_order=5))
    return specs


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_graphs(count: int, seed: int, max_n: int = 10, min_n: int = 1) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        out.append(random_graph(rng, n, rng.choice((0.2, 0.35, 0.5, 0.65, 0.8))))
    return out


def random_connected_small(count: int, seed: int, max_edges: int = conn.ORACLE_EDGE_CAP) -> list[Graph]:
    """Random connected graphs on 4..9 vertices with at most ``max_edges`` edges."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(4, 9)
        # random spanning tree, then extra edges
        order = list(range(n))
        rng.shuffle(order)
        edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
        extra = rng.randint(0, max_edges - len(edges))
        pool = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
        rng.shuffle(pool)
        edges.update(pool[:extra])
        out.append(Graph.from_edges(n, sorted(edges)))
    return out


# analysis -------------------------------------------------------------------------


def _fragment_field(res: conn.FragmentResult, report: dict, name: str) -> None:
    if res.exact:
        report[name] = _val(res.value)
    else:
        report[name] = CAPPED
        report.setdefault("bounds", {})[name] = {"upper": _val(res.value), "nodes": res.nodes}


def analyze(
    source: families.FamilySpec | str,
    *,
    verify_symmetry: bool = False,
    seed: int = DEFAULT_SEED,
    budget: Optional[int] = conn.DEFAULT_BUDGET,
    timings: bool = False,
) -> dict:
    spec = families.parse_family_spec(source) if isinstance(source, str) else source
    g = families.build(spec)
    clock: dict[str, float] = {}

    def timed(name: str, fn: Callable):
        t0 = time.perf_counter()
        out = fn()
        clock[name] = round(time.perf_counter() - t0, 6)
        return out

    report: dict = {
        "schema": SCHEMA,
        "graph6": emit_graph6(g).decode(),
        "family": None if spec.kind == "graph6" else spec.label(),
        "n": g.n,
        "m": g.num_edges(),
        "min_degree": g.min_degree(),
        "regular": g.is_regular(),
        "degree": g.degree(0) if g.is_regular() else UNDEFINED,
        "connected": g.is_connected(),
        "bipartite": is_bipartite(g),
        "seed": seed,
        "notes": [],
        "witnesses": {},
    }
    report["girth"] = _val(counting.girth(g))
    report["odd_girth"] = _val(counting.odd_girth(g))
    alpha, indep = timed("alpha", lambda: counting.independence_number(g))
    report["alpha"] = alpha
    report["witnesses"]["max_independent_set"] = members(indep)

    if spec.certified_transitive and not verify_symmetry:
        report["vertex_transitive"] = True
        report["transitivity"] = "constructive"
    else:
        group = timed("automorphisms", lambda: symmetry.automorphism_generators(g))
        report["vertex_transitive"] = symmetry.is_vertex_transitive(g, group)
        report["transitivity"] = "search"
        report["automorphism_group_order"] = group.order()
    vt = report["vertex_transitive"]

    if g.n >= 2:
        report["kappa"] = timed("kappa", lambda: conn.vertex_connectivity(g))
        report["lambda"] = timed("lambda", lambda: conn.edge_connectivity(g))
    else:
        report["kappa"] = report["lambda"] = UNDEFINED
    report["xi"] = conn.min_edge_degree(g) if g.num_edges() else UNDEFINED
    if report["connected"] and g.n >= 2:
        kw = dict(transitive=vt, budget=budget)
        l2 = timed("lambda2", lambda: conn.restricted_edge_connectivity(g, 2, **kw))
        _fragment_field(l2, report, "lambda2")
        _fragment_field(timed("lambda3", lambda: conn.restricted_edge_connectivity(g, 3, **kw)), report, "lambda3")
        _fragment_field(timed("lambda_c", lambda: conn.cyclic_edge_connectivity(g, **kw)), report, "lambda_c")
        report["super_lambda"] = timed("super_lambda", lambda: conn.is_super_lambda(g, transitive=vt))
        if l2.value is not None and l2.exact:
            sl2 = conn.is_super_lambda2(g, lambda2=l2)
            report["super_lambda2"] = sl2.holds
            report["witnesses"]["superatom"] = None if sl2.superatom is None else members(sl2.superatom)
            report["witnesses"]["lambda2_fragment"] = members(l2.fragments[0])
        else:
            report["super_lambda2"] = UNDEFINED
    else:
        for name in ("lambda2", "lambda3", "lambda_c", "super_lambda", "super_lambda2"):
            report[name] = UNDEFINED
        report["notes"].append("graph is disconnected; conditional connectivities undefined")
    girth = counting.girth(g)
    report["zeta"] = _val(conn.zeta(g)) if girth is None or girth <= counting.MAX_CYCLE_LENGTH else UNDEFINED

    if g.n % 2:
        fc = criticality.is_p_factor_critical_direct(g, 1, transitive=vt)
        report["factor_critical"] = fc.holds
        if g.n >= 3:
            tfc = timed("three_fc", lambda: criticality.is_p_factor_critical_direct(g, 3, transitive=vt))
            report["three_factor_critical"] = tfc.holds
            report["witnesses"]["three_factor_critical"] = tfc.witness_list()
        else:
            report["three_factor_critical"] = UNDEFINED
    else:
        bc = criticality.is_p_factor_critical_direct(g, 2, transitive=vt) if g.n >= 2 else None
        report["bicritical"] = UNDEFINED if bc is None else bc.holds
        if bc is not None:
            report["witnesses"]["bicritical"] = bc.witness_list()
        report["elementary"] = matching.is_elementary(g)
    for name, r in (("lambda2", "lambda2"), ("lambda3", "lambda3"), ("lambda_c", "lambda_c")):
        if report.get(r) == CAPPED:
            report["notes"].append(f"{name} search budget exhausted; see bounds")
    if timings:
        report["timings"] = clock
    return report


# theorem sweep -----------------------------------------------------------------------


def _sweep_one(args: tuple[families.FamilySpec, bool]) -> dict:
    spec, verify_symmetry = args
    e = Entry(spec, families.build(spec), verify_symmetry)
    g = e.graph
    row = {"family": e.label, "graph6": e.graph6, "n": g.n, "degree": e.degree}
    if not e.connected or not e.transitive:
        row["skipped"] = "not connected" if not e.connected else "not vertex-transitive"
        return row
    is_cyc = g.is_regular() and e.degree == 2
    verdict = criticality.is_p_factor_critical_direct(g, 3, transitive=True)
    row["cycle"] = is_cyc
    row["three_factor_critical"] = verdict.holds
    row["witness"] = verdict.witness_list()
    row["ok"] = verdict.holds == (not is_cyc)
    return row


def verify_theorem(max_order: int, *, threads: int = 1, verify_symmetry: bool = False, timings: bool = False) -> dict:
    if max_order % 2 == 0 or max_order < 5:
        raise ValueError("max order must be odd and at least 5")
    specs = theorem_corpus(max_order)
    jobs = [(s, verify_symmetry) for s in specs]
    t0 = time.perf_counter()
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_sweep_one, jobs, chunksize=4))
    else:
        rows = [_sweep_one(j) for j in jobs]
    elapsed = time.perf_counter() - t0
    orders: dict[str, dict] = {}
    for row in rows:
        o = orders.setdefault(str(row["n"]), {"graphs": 0, "cycles": 0, "three_factor_critical": 0, "violations": 0})
        if "skipped" in row:
            continue
        o["graphs"] += 1
        o["cycles"] += row["cycle"]
        o["three_factor_critical"] += row["three_factor_critical"]
        o["violations"] += not row["ok"]
    violations = [r for r in rows if r.get("ok") is False]
    report = {
        "schema": SCHEMA,
        "command": "verify-theorem",
        "max_order": max_order,
        "statement": "connected vertex-transitive odd graph of order >= 5 is 3-factor-critical iff not a cycle",
        "graphs": rows,
        "orders": orders,
        "total": sum(o["graphs"] for o in orders.values()),
        "violations": violations,
        "passed": not violations,
    }
    if timings:
        report["elapsed_seconds"] = round(elapsed, 3)
    return report


# lemma suites ---------------------------------------------------------------------------


def _odd(e: Entry) -> bool:
    return e.n % 2 == 1


def _blocks(e: Entry) -> list[int]:
    return [b for b in symmetry.blocks_containing(e.graph, e.group) if 1 < popcount(b) < e.n]


def _check_1_1(e: Entry):
    g = e.graph
    if _odd(e):
        return criticality.is_factor_critical(g), "factor-critical"
    if g.n < 2:
        return True, "trivial"
    elem_bip = matching.is_elementary(g) and is_bipartite(g)
    bic = criticality.is_bicritical(g)
    return elem_bip or bic, f"elementary-bipartite={elem_bip} bicritical={bic}"


def _check_2_2(e: Entry):
    return 3 * e.kappa > 2 * e.degree, f"kappa={e.kappa} k={e.degree}"


def _check_2_3(e: Entry):
    return e.kappa == e.degree, f"kappa={e.kappa} k={e.degree}"


def _check_2_4(e: Entry):
    return e.lambda_ == e.degree, f"lambda={e.lambda_} k={e.degree}"


def _check_2_5(e: Entry):
    sl = conn.is_super_lambda(e.graph, transitive=True)
    cb = symmetry.has_clique_block_of_size_k(e.graph, e.group)
    return sl == (not cb), f"super_lambda={sl} clique_block={cb}"


def _check_2_6(e: Entry):
    return e.lambda2.value == e.xi, f"lambda2={e.lambda2.value} xi={e.xi}"


def _check_super_l2(e: Entry):
    res = conn.is_super_lambda2(e.graph, lambda2=e.lambda2)
    atom = None if res.superatom is None else members(res.superatom)
    return res.holds, f"lambda2={res.lambda2} superatom={atom}"


def _check_2_9(e: Entry):
    bad = []
    for b in _blocks(e):
        if e.n % popcount(b) or not symmetry.block_induced_transitivity_check(e.graph, b, e.group):
            bad.append(members(b))
    return not bad, f"blocks={len(_blocks(e))} bad={bad}"


def _check_2_10(e: Entry):
    l3, k = e.lambda3.value, e.degree
    ok = l3 == 3 * k - 4 or (l3 is not None and e.n % l3 == 0 and 2 * k - 2 <= l3 <= 3 * k - 5)
    return ok, f"lambda3={l3} k={k} n={e.n}"


def _check_2_11(e: Entry):
    z = conn.zeta(e.graph)
    return e.lambda_c.value == z, f"lambda_c={e.lambda_c.value} zeta={z}"


def _check_3_1(e: Entry):
    alpha, _ = counting.independence_number(e.graph)
    return 2 * alpha < e.n - 1, f"alpha={alpha} n={e.n}"


def _check_3_2(e: Entry, seed: int, trials: int):
    fails = []
    for x in counting.random_subset_sweep(e.graph, trials, seed):
        audit = counting.singleton_edge_audit(e.graph, x, hypothesis_met=True)
        if not audit.passed:
            fails.append(members(x))
    return not fails, f"subsets={trials} violations={fails[:3]}"


def _check_3_3(e: Entry):
    twins = counting.find_twins(e.graph)
    return not twins, f"twins={twins}"


def _check_3_4(e: Entry):
    stats = counting.cycle_census(e.graph, 4)
    g = e.graph
    m = stats.uniform_vertex_count()
    problems = []
    if m is None or m % 4 or 4 * stats.total != m * g.n:
        problems.append(f"m={m} n4={stats.total}")
    for (u, v), t in stats.per_edge.items():
        if t < 2:
            problems.append(f"edge {u}-{v} in {t} quadrangles")
        adjacent = [c for (a, b), c in stats.per_edge.items() if (a, b) != (u, v) and {a, b} & {u, v}]
        if t not in adjacent:
            problems.append(f"edge {u}-{v} count {t} unmatched")
    return not problems, f"m={m} n4={stats.total} problems={problems[:3]}"


@dataclass(frozen=True)
class LemmaSuite:
    hypothesis: Callable[[Entry], bool]
    check: Callable[[Entry], tuple[bool, str]]


def _regular_connected(e: Entry) -> bool:
    return e.connected and e.transitive


SUITES: dict[str, LemmaSuite] = {
    "1.1": LemmaSuite(_regular_connected, _check_1_1),
    "2.2": LemmaSuite(_regular_connected, _check_2_2),
    "2.3": LemmaSuite(lambda e: _regular_connected(e) and e.degree in (4, 6), _check_2_3),
    "2.4": LemmaSuite(_regular_connected, _check_2_4),
    "2.5": LemmaSuite(lambda e: _regular_connected(e) and e.degree >= 3, _check_2_5),
    "2.6": LemmaSuite(lambda e: _regular_connected(e) and e.n >= 4 and (_odd(e) or not e.triangle), _check_2_6),
    "2.7": LemmaSuite(lambda e: _regular_connected(e) and e.degree > 2 and (e.girth or 0) > 4, _check_super_l2),
    "2.8": LemmaSuite(lambda e: _regular_connected(e) and _odd(e) and e.degree > 2 and (e.girth or 0) > 3, _check_super_l2),
    "2.9": LemmaSuite(_regular_connected, _check_2_9),
    "2.10": LemmaSuite(
        lambda e: _regular_connected(e) and e.n >= 6 and (e.girth or 0) >= 4 and not (e.degree == 3 and e.girth == 4),
        _check_2_10,
    ),
    "2.11": LemmaSuite(lambda e: _regular_connected(e) and e.degree >= 4 and (e.girth or 0) >= 5, _check_2_11),
    "3.1": LemmaSuite(lambda e: _regular_connected(e) and _odd(e) and e.degree >= 4, _check_3_1),
    "3.3": LemmaSuite(
        lambda e: _regular_connected(e) and _odd(e) and e.degree == 4 and not e.triangle, _check_3_3
    ),
    "3.4": LemmaSuite(
        lambda e: _regular_connected(e) and _odd(e) and e.degree == 4 and e.girth == 4, _check_3_4
    ),
}


def _summary(lemma: str, corpus_size: int, rows: list[dict], seed: int, extra: Optional[dict] = None) -> dict:
    violations = [r for r in rows if not r["ok"]]
    out = {
        "schema": SCHEMA,
        "command": "verify-lemma",
        "id": lemma,
        "corpus_size": corpus_size,
        "hypothesis_matched": len(rows),
        "passed": len(rows) - len(violations),
        "failed": len(violations),
        "violations": violations,
        "ok": not violations,
        "seed": seed,
        "results": rows,
    }
    if extra:
        out.update(extra)
    return out


def verify_lemma(
    lemma: str,
    *,
    max_order: int = 15,
    seed: int = DEFAULT_SEED,
    random_count: int = 500,
    trials: int = 500,
    corpus: Optional[list[Entry]] = None,
) -> dict:
    if lemma not in LEMMA_IDS:
        raise ValueError(f"unknown lemma id {lemma!r}; choose from {', '.join(LEMMA_IDS)}")
    if lemma == "2.1":
        return _verify_2_1(max_order=min(max_order, 11), seed=seed, random_count=random_count)
    if lemma == "4":
        return _verify_4(max_order=max_order, seed=seed, random_count=random_count)
    if corpus is None:
        corpus = vt_corpus(max_order)
    rows = []
    if lemma == "3.2":
        for e in corpus:
            if _regular_connected(e) and e.triangle:
                ok, detail = _check_3_2(e, seed, trials)
                rows.append({"family": e.label, "graph6": e.graph6, "ok": ok, "detail": detail})
        return _summary(lemma, len(corpus), rows, seed, {"subsets_per_graph": trials})
    suite = SUITES[lemma]
    for e in corpus:
        if suite.hypothesis(e):
            ok, detail = suite.check(e)
            rows.append({"family": e.label, "graph6": e.graph6, "ok": ok, "detail": detail})
    return _summary(lemma, len(corpus), rows, seed)


def _verify_2_1(*, max_order: int, seed: int, random_count: int) -> dict:
    graphs: list[tuple[str, Graph]] = [(f"random#{i}", g) for i, g in enumerate(random_graphs(random_count, seed))]
    graphs += [(e.label, e.graph) for e in vt_corpus(min(max_order, 11))]
    rows = []
    for label, g in graphs:
        for p in (1, 2, 3):
            if p > g.n or (g.n - p) % 2:
                continue
            direct = criticality.is_p_factor_critical_direct(g, p)
            crit = criticality.is_p_factor_critical_criterion(g, p)
            ok = direct.holds == crit.holds
            rows.append(
                {"family": label, "graph6": emit_graph6(g).decode(), "p": p, "ok": ok, "detail": f"direct={direct.holds} criterion={crit.holds}"}
            )
    return _summary("2.1", len(graphs), rows, seed, {"random_graphs": random_count})


def _verify_4(*, max_order: int, seed: int, random_count: int) -> dict:
    graphs: list[tuple[str, Graph]] = [(f"random#{i}", g) for i, g in enumerate(random_graphs(random_count, seed, min_n=2))]
    graphs += [(e.label, e.graph) for e in vt_corpus(min(max_order, 13))]
    rows = []
    for label, g in graphs:
        for p in (1, 2, 3):
            if not 1 <= p < g.n or (g.n - p) % 2:
                continue
            if not criticality.is_p_factor_critical_direct(g, p).holds:
                continue
            ok = criticality.check_necessary_conditions(g, p)
            rows.append({"family": label, "graph6": emit_graph6(g).decode(), "p": p, "ok": ok, "detail": ""})
    return _summary("4", len(graphs), rows, seed, {"random_graphs": random_count})


# oracle gate ------------------------------------------------------------------------------------


def oracle_corpus_cuts(random_count: int, seed: int, include_families: bool) -> list[tuple[str, Graph]]:
    graphs = [(f"random#{i}", g) for i, g in enumerate(random_connected_small(random_count, seed))]
    if include_families:
        for e in vt_corpus(12, min_order=4):
            if e.graph.num_edges() <= conn.ORACLE_EDGE_CAP:
                graphs.append((e.label, e.graph))
        for text in ("petersen", "prism:3", "complete:4", "complete:5"):
            e = entry(text)
            graphs.append((e.label, e.graph))
    return graphs


def oracle_corpus_matching(random_count: int, seed: int, include_families: bool) -> list[tuple[str, Graph]]:
    graphs = [(f"random#{i}", g) for i, g in enumerate(random_graphs(random_count, seed ^ 0x5A5A, max_n=10))]
    if include_families:
        graphs += [(e.label, e.graph) for e in vt_corpus(10, min_order=3)]
    return graphs


def oracle_check(*, random_count: int = 200, seed: int = DEFAULT_SEED, include_families: bool = True) -> dict:
    if random_count <= 0 and not include_families:
        raise ValueError("empty oracle corpus")
    mismatches = []
    cut_checked = 0
    for label, g in oracle_corpus_cuts(random_count, seed, include_families):
        for mode in (2, 3, "cyclic"):
            frag = conn.fragment_search(g, mode, budget=None).value
            oracle = conn.exhaustive_cut_oracle(g, mode)
            cut_checked += 1
            if frag != oracle:
                mismatches.append({"family": label, "graph6": emit_graph6(g).decode(), "mode": str(mode), "fragment": _val(frag), "oracle": _val(oracle)})
    match_checked = 0
    for label, g in oracle_corpus_matching(random_count, seed, include_families):
        got = matching.matching_number(g)
        want = matching.deficiency_matching_number(g)
        match_checked += 1
        if got != want or not matching.is_matching(g, matching.maximum_matching(g)):
            mismatches.append({"family": label, "graph6": emit_graph6(g).decode(), "mode": "matching", "blossom": got, "berge_tutte": want})
    return {
        "schema": SCHEMA,
        "command": "oracle-check",
        "seed": seed,
        "cut_comparisons": cut_checked,
        "matching_comparisons": match_checked,
        "mismatches": mismatches,
        "passed": not mismatches,
    }

