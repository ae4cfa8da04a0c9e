"""Machine verification sweeps.

Every structural claim the package relies on is re-checked here on concrete
instances: closed-form dimension values, outcome tables for named families,
product constructions against direct computation, and an exhaustive sweep
over all small connected labeled graphs that plays every game with the exact
solver.  Each check produces one record with the claim id, the instance, the
expected and computed values, and a pass flag; failures are data, not
exceptions.

Exhaustive sweeps take no seed; sampled sweeps are deterministic given the
configured seed.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .families import (
    complete,
    complete_multipartite,
    cycle,
    edgeless,
    path,
    petersen,
    spider,
    star,
    tree_from_parents,
    tree_stats,
)
from .games import (
    Outcome,
    cover_game_outcome,
    is_pairing_vertex_cover,
    is_quasi_pairing_vertex_cover,
    outcome_rg_exact,
    outcome_srg_classifier,
    outcome_srg_exact,
    srg_cover_system,
    system_outcome,
)
from .graphs import (
    Graph,
    UNREACHABLE,
    all_pairs_distances,
    are_isomorphic,
    classify_shape,
    complement,
    disjoint_union,
    is_connected,
)
from .products import (
    ModularPreconditionError,
    _sr_edges_diameter3_clauses,
    cartesian,
    corona,
    direct,
    gamma_pairs,
    lexicographic,
    modular,
    modular_sr_dispatch,
    modular_sr_structural,
    twin_edges,
)
from .resolving import (
    is_resolving_set,
    metric_dimension,
    min_vertex_cover,
    resolving_witness_masks,
    strong_metric_dimension,
    strong_resolving_graph,
    strong_resolving_witness_masks,
    twin_free_clique_number,
    twin_partition,
)

SWEEP_SEED = 20250811


@dataclass(frozen=True)
class VerifyConfig:
    max_sweep_n: int = 6
    seed: int = SWEEP_SEED
    random_samples: int = 10000


@dataclass
class CheckResult:
    claim: str
    instance: str
    expected: str
    computed: str
    passed: bool
    millis: float

    def line(self) -> str:
        return json.dumps(
            {"claim_id": self.claim, "instance": self.instance,
             "expected": self.expected, "computed": self.computed,
             "pass": self.passed, "millis": round(self.millis, 3)},
            sort_keys=True)


class Recorder:
    def __init__(self) -> None:
        self.results: list[CheckResult] = []
        self._t0 = time.perf_counter()

    def start(self) -> None:
        self._t0 = time.perf_counter()

    def add(self, claim: str, instance: str, expected, computed) -> None:
        ms = (time.perf_counter() - self._t0) * 1000.0
        self.results.append(CheckResult(claim, instance, str(expected),
                                        str(computed), str(expected) == str(computed), ms))
        self._t0 = time.perf_counter()


# ---------------------------------------------------------------------------
# Small-graph enumeration and sampling


def labeled_graphs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = []
        mm = mask
        while mm:
            bit = mm & -mm
            edges.append(pairs[bit.bit_length() - 1])
            mm ^= bit
        yield Graph(n, frozenset(edges))


def connected_labeled_graphs(n: int):
    for g in labeled_graphs(n):
        if is_connected(g):
            yield g


def random_connected_graph(n: int, rng: random.Random) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    while True:
        mask = rng.getrandbits(len(pairs))
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph(n, frozenset(edges))
        if is_connected(g):
            return g


def random_tree(n: int, rng: random.Random) -> Graph:
    if n == 1:
        return edgeless(1)
    parents: list[int | None] = [None] + [rng.randrange(i) for i in range(1, n)]
    return tree_from_parents(parents)


def matching_graph(x: int) -> Graph:
    """x disjoint edges."""
    return Graph(2 * x, frozenset((2 * i, 2 * i + 1) for i in range(x)))


def _partitions(total: int, largest: int | None = None):
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for head in range(min(total, largest), 0, -1):
        for tail in _partitions(total - head, head):
            yield (head,) + tail


def part_vectors(max_total: int):
    """All multipartite part-size vectors with >= 2 parts and total >= 3."""
    for total in range(3, max_total + 1):
        for parts in _partitions(total):
            if len(parts) >= 2:
                yield parts


# ---------------------------------------------------------------------------
# Expected values for the named families


def expected_multipartite_sdim(sizes) -> int:
    n, k = sum(sizes), len(sizes)
    s = sum(1 for a in sizes if a == 1)
    return n - k if s == 0 else n - k + s - 1


def expected_multipartite_outcome(sizes) -> Outcome:
    s = sum(1 for a in sizes if a == 1)
    triples = sum(1 for a in sizes if a == 3)
    if s >= 4 or any(a >= 4 for a in sizes):
        return Outcome.B
    if (s == 3 and triples >= 1) or triples >= 2:
        return Outcome.B
    if s == 3 or triples == 1:
        return Outcome.N
    return Outcome.M


def expected_tree_outcome(sigma: int) -> Outcome:
    if sigma == 2:
        return Outcome.M
    return Outcome.N if sigma == 3 else Outcome.B


def expected_cycle_outcome(n: int) -> Outcome:
    if n % 2 == 0:
        return Outcome.M
    return Outcome.N if n == 3 else Outcome.B


def expected_corona_base_outcome(n: int, m: int) -> Outcome:
    if n >= 4:
        return Outcome.B
    if n == 3:
        return Outcome.N if m == 1 else Outcome.B
    return Outcome.M if m == 1 else Outcome.B


def expected_cone_path_outcome(n: int) -> Outcome:
    if n in (1, 3):
        return Outcome.M
    return Outcome.N if n in (2, 4) else Outcome.B


def expected_cone_cycle_outcome(n: int) -> Outcome:
    return Outcome.M if n == 4 else Outcome.B


def is_near_complete_family(h: Graph) -> bool:
    """Connected, order >= 4, every degree in {m-2, m-1}, at most two
    vertices of degree m-1.  The cone over K1 + such a graph keeps the first
    player in charge (outcome N)."""
    m = h.n
    if m < 4 or not is_connected(h):
        return False
    degs = h.degree_sequence
    if any(d not in (m - 2, m - 1) for d in degs):
        return False
    return sum(1 for d in degs if d == m - 1) <= 2


# ---------------------------------------------------------------------------
# Pairing searches (certificate hunting on small cores)


def iter_pairings(k: int):
    """All families of disjoint unordered pairs from range(k), empty first."""

    def rec(avail: tuple[int, ...]):
        yield ()
        if len(avail) >= 2:
            u = avail[0]
            rest = avail[1:]
            for i, w in enumerate(rest):
                for tail in rec(rest[:i] + rest[i + 1:]):
                    yield ((u, w),) + tail
            for tail in rec(rest):
                if tail:
                    yield tail

    yield from rec(tuple(range(k)))


def find_pairing_cover(sr) -> tuple | None:
    for pairs in iter_pairings(sr.core.n):
        if pairs and is_pairing_vertex_cover(sr, pairs):
            return pairs
    return None


def find_quasi_pairing_cover(sr) -> tuple | None:
    for pairs in iter_pairings(sr.core.n):
        used = {x for p in pairs for x in p}
        for v in range(sr.core.n):
            if v not in used and is_quasi_pairing_vertex_cover(sr, pairs, v):
                return pairs, v
    return None


def _is_pairing_resolving_set(g: Graph, pairs) -> bool:
    return all(is_resolving_set(g, choice)
               for choice in itertools.product(*pairs))


def _is_quasi_pairing_resolving_set(g: Graph, pairs, v: int) -> bool:
    return all(is_resolving_set(g, set(choice) | {v})
               for choice in itertools.product(*pairs))


# ---------------------------------------------------------------------------
# Claim groups


def check_sdim_formulas(cfg: VerifyConfig) -> list[CheckResult]:
    rec = Recorder()
    for n in range(2, 13):
        rec.add("sdim/paths", f"P{n}", 1, strong_metric_dimension(path(n))[0])
    for n in range(2, 13):
        rec.add("sdim/completes", f"K{n}", n - 1,
                strong_metric_dimension(complete(n))[0])
    for n in range(3, 15):
        rec.add("sdim/cycles", f"C{n}", (n + 1) // 2,
                strong_metric_dimension(cycle(n))[0])
    rng = random.Random(cfg.seed)
    for i in range(50):
        n = rng.randint(2, 14)
        t = random_tree(n, rng)
        sigma = tree_stats(t).sigma
        rec.add("sdim/trees", f"tree#{i}(n={n},leaves={sigma})", sigma - 1,
                strong_metric_dimension(t)[0])
    rec.add("sdim/petersen", "Petersen", 8, strong_metric_dimension(petersen())[0])
    for parts in part_vectors(10):
        g = complete_multipartite(parts)
        rec.add("sdim/multipartite", f"K{list(parts)}",
                expected_multipartite_sdim(parts), strong_metric_dimension(g)[0])
    return rec.results


def _tree_zoo() -> list[tuple[str, Graph, int]]:
    """Named trees together with their intended leaf counts (2 through 6)."""
    zoo = [("P5", path(5), 2), ("P10", path(10), 2)]
    legsets = [(1, 1, 1), (2, 2, 1), (4, 2, 1),
               (1, 1, 1, 1), (2, 2, 2, 1), (3, 3, 2, 2),
               (1, 1, 1, 1, 1), (2, 2, 2, 2, 2),
               (1, 1, 1, 1, 1, 1), (2, 2, 2, 1, 1, 1)]
    zoo.extend((f"spider{legs}", spider(*legs), len(legs)) for legs in legsets)
    return zoo


def check_outcome_tables(cfg: VerifyConfig) -> list[CheckResult]:
    rec = Recorder()
    sigmas_seen = set()
    for name, t, intended_sigma in _tree_zoo():
        sigma = tree_stats(t).sigma
        sigmas_seen.add(sigma)
        rec.add("outcome/trees/leaf-count", name, intended_sigma, sigma)
        expected = expected_tree_outcome(sigma)
        sr = strong_resolving_graph(t)
        rec.add("outcome/trees/exact", f"{name} (leaves={sigma})",
                expected, outcome_srg_exact(t))
        rec.add("outcome/trees/classifier", f"{name} (leaves={sigma})",
                expected, outcome_srg_classifier(sr))
    rec.add("outcome/trees/leaf-count", "zoo realizes every count 2..6",
            True, {2, 3, 4, 5, 6} <= sigmas_seen)
    for n in range(3, 15):
        expected = expected_cycle_outcome(n)
        g = cycle(n)
        rec.add("outcome/cycles/exact", f"C{n}", expected, outcome_srg_exact(g))
        rec.add("outcome/cycles/classifier", f"C{n}", expected,
                outcome_srg_classifier(strong_resolving_graph(g)))
    p = petersen()
    rec.add("outcome/petersen/exact", "Petersen", Outcome.B, outcome_srg_exact(p))
    rec.add("outcome/petersen/classifier", "Petersen", Outcome.B,
            outcome_srg_classifier(strong_resolving_graph(p)))
    for parts in part_vectors(10):
        g = complete_multipartite(parts)
        expected = expected_multipartite_outcome(parts)
        rec.add("outcome/multipartite/exact", f"K{list(parts)}", expected,
                outcome_srg_exact(g))
        rec.add("outcome/multipartite/classifier", f"K{list(parts)}", expected,
                outcome_srg_classifier(strong_resolving_graph(g)))
    return rec.results


def check_corona_tables(cfg: VerifyConfig) -> list[CheckResult]:
    rec = Recorder()
    bases: list[tuple[str, Graph]] = []
    for n in (2, 3, 4):
        bases.extend((f"G(n={n})#{i}", g)
                     for i, g in enumerate(connected_labeled_graphs(n)))
    tops: list[tuple[str, Graph]] = []
    for m in (1, 2, 3):
        tops.extend((f"H(m={m})#{i}", g) for i, g in enumerate(labeled_graphs(m)))
    for gname, g in bases:
        for hname, h in tops:
            expected = expected_corona_base_outcome(g.n, h.n)
            prod = corona(g, h)
            sr = strong_resolving_graph(prod)
            exact = cover_game_outcome(sr.core)
            cls = outcome_srg_classifier(sr)
            rec.add("corona/base-table", f"{gname} corona {hname}",
                    f"{expected}/{expected}", f"{exact}/{cls}")
    for n in range(1, 9):
        expected = expected_cone_path_outcome(n)
        prod = corona(complete(1), path(n))
        sr = strong_resolving_graph(prod)
        rec.add("corona/cone-path", f"K1 corona P{n}",
                f"{expected}/{expected}",
                f"{cover_game_outcome(sr.core)}/{outcome_srg_classifier(sr)}")
    for n in range(3, 9):
        expected = expected_cone_cycle_outcome(n)
        prod = corona(complete(1), cycle(n))
        sr = strong_resolving_graph(prod)
        rec.add("corona/cone-cycle", f"K1 corona C{n}",
                f"{expected}/{expected}",
                f"{cover_game_outcome(sr.core)}/{outcome_srg_classifier(sr)}")
    for name, h, expected in _corona_component_cases():
        prod = corona(complete(1), h)
        sr = strong_resolving_graph(prod)
        rec.add("corona/components", name,
                f"{expected}/{expected}",
                f"{cover_game_outcome(sr.core)}/{outcome_srg_classifier(sr)}")
    for name, h in _near_complete_zoo():
        rec.add("corona/near-complete-family", name, True, is_near_complete_family(h))
    return rec.results


def _near_complete_zoo() -> list[tuple[str, Graph]]:
    return [
        ("C4", cycle(4)),
        ("K4 minus edge", complete_multipartite([1, 1, 2])),
        ("octahedron", complete_multipartite([2, 2, 2])),
        ("complement(2K2+K1)", complement(disjoint_union(matching_graph(2), edgeless(1)))),
        ("complement(2K2+2K1)", complement(disjoint_union(matching_graph(2), edgeless(2)))),
    ]


def _corona_component_cases() -> list[tuple[str, Graph, Outcome]]:
    k1 = edgeless(1)
    cases: list[tuple[str, Graph, Outcome]] = [
        ("2 components: 2K1", edgeless(2), Outcome.M),
        ("2 components: K1+K2", disjoint_union(k1, complete(2)), Outcome.N),
        ("2 components: K1+P3", disjoint_union(k1, path(3)), Outcome.N),
        ("2 components: K1+K3", disjoint_union(k1, complete(3)), Outcome.B),
        ("2 components: K1+K4", disjoint_union(k1, complete(4)), Outcome.B),
        ("2 components: K1+P4", disjoint_union(k1, path(4)), Outcome.B),
        ("2 components: K1+C5", disjoint_union(k1, cycle(5)), Outcome.B),
        ("2 components: K1+star3", disjoint_union(k1, star(3)), Outcome.B),
        ("2 components: K2+K2", matching_graph(2), Outcome.B),
        ("2 components: K2+P3", disjoint_union(complete(2), path(3)), Outcome.B),
        ("3 components: 3K1", edgeless(3), Outcome.N),
        ("3 components: 2K1+K2", disjoint_union(edgeless(2), complete(2)), Outcome.B),
        ("3 components: K1+2K2", disjoint_union(k1, matching_graph(2)), Outcome.B),
        ("3 components: 2K1+P3", disjoint_union(edgeless(2), path(3)), Outcome.B),
        ("4 components: 4K1", edgeless(4), Outcome.B),
        ("4 components: 3K1+K2", disjoint_union(edgeless(3), complete(2)), Outcome.B),
        ("4 components: 2K2+2K1", disjoint_union(matching_graph(2), edgeless(2)), Outcome.B),
    ]
    cases.extend((f"2 components: K1+{name}", disjoint_union(k1, h), Outcome.N)
                 for name, h in _near_complete_zoo())
    return cases


_CARTESIAN_FACTORS = [
    ("P3", lambda: path(3)), ("P4", lambda: path(4)),
    ("K3", lambda: complete(3)), ("K4", lambda: complete(4)),
    ("C4", lambda: cycle(4)), ("C5", lambda: cycle(5)),
    ("K1,3", lambda: star(3)),
]


def check_cartesian_products(cfg: VerifyConfig) -> list[CheckResult]:
    rec = Recorder()
    for aname, af in _CARTESIAN_FACTORS:
        a = af()
        asr = strong_resolving_graph(a)
        for bname, bf in _CARTESIAN_FACTORS:
            b = bf()
            bsr = strong_resolving_graph(b)
            prod = cartesian(a, b)
            sr = strong_resolving_graph(prod)
            m = b.n
            expected_edges = set()
            for u, v in asr.core.edges:
                pu, pv = asr.to_parent[u], asr.to_parent[v]
                for w, x in bsr.core.edges:
                    pw, px = bsr.to_parent[w], bsr.to_parent[x]
                    e1 = (pu * m + pw, pv * m + px)
                    e2 = (pu * m + px, pv * m + pw)
                    expected_edges.add(e1 if e1[0] < e1[1] else (e1[1], e1[0]))
                    expected_edges.add(e2 if e2[0] < e2[1] else (e2[1], e2[0]))
            identity = sr.parent_edges() == frozenset(expected_edges)
            if identity and sr.core.n <= 12:
                identity = are_isomorphic(sr.core, direct(asr.core, bsr.core))
            rec.add("cartesian/sr-identity", f"{aname} x {bname}", True, identity)
            matchings = (max(asr.core.degree_sequence) <= 1
                         and max(bsr.core.degree_sequence) <= 1)
            expected = Outcome.M if matchings else Outcome.B
            cls = outcome_srg_classifier(sr)
            rec.add("cartesian/outcome-classifier", f"{aname} x {bname}", expected, cls)
            if sr.core.n <= 20:
                rec.add("cartesian/outcome-exact", f"{aname} x {bname}", expected,
                        cover_game_outcome(sr.core))
    return rec.results


_MODULAR_POOL = [
    ("P3", lambda: path(3)), ("P4", lambda: path(4)), ("P5", lambda: path(5)),
    ("P6", lambda: path(6)), ("C4", lambda: cycle(4)), ("C5", lambda: cycle(5)),
    ("C6", lambda: cycle(6)), ("K1,3", lambda: star(3)),
    ("K2,3", lambda: complete_multipartite([2, 3])),
    ("paw", lambda: Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])),
]


def check_modular_products(cfg: VerifyConfig) -> list[CheckResult]:
    rec = Recorder()

    sr = modular_sr_structural(cycle(4), cycle(6))
    rec.add("modular/showcase-shape", "C4 mod C6: SR shape", classify_shape(matching_graph(12)),
            classify_shape(sr.core))
    rec.add("modular/showcase-outcome", "C4 mod C6", Outcome.M, outcome_srg_classifier(sr))

    sr = modular_sr_structural(complement(path(5)), path(5))
    rec.add("modular/showcase-shape", "coP5 mod P5: SR shape",
            classify_shape(disjoint_union(path(5), matching_graph(10))),
            classify_shape(sr.core))
    rec.add("modular/showcase-outcome", "coP5 mod P5", Outcome.N, outcome_srg_classifier(sr))

    sr = modular_sr_structural(path(4), path(4))
    rec.add("modular/showcase-outcome", "P4 mod P4", Outcome.B, outcome_srg_classifier(sr))
    if sr.core.n <= 20:
        rec.add("modular/showcase-outcome", "P4 mod P4 (exact)", Outcome.B,
                cover_game_outcome(sr.core))

    applicable = 0
    rules_seen = set()
    for aname, af in _MODULAR_POOL:
        for bname, bf in _MODULAR_POOL:
            a, b = af(), bf()
            try:
                rule = modular_sr_dispatch(a, b)
            except ModularPreconditionError:
                continue
            applicable += 1
            rules_seen.add(rule)
            structural = modular_sr_structural(a, b)
            direct_sr = strong_resolving_graph(modular(a, b))
            rec.add("modular/structural-vs-mmd", f"{aname} mod {bname} [{rule}]",
                    sorted(direct_sr.parent_edges()), sorted(structural.parent_edges()))
            if rule == "gamma-factor":
                prod = modular(a, b)
                clause_edges = _sr_edges_diameter3_clauses(
                    a, b, prod, all_pairs_distances(prod),
                    gamma_pairs(a), gamma_pairs(b))
                rec.add("modular/gamma-vs-clauses", f"{aname} mod {bname}",
                        sorted(direct_sr.parent_edges()),
                        sorted((u, v) if u < v else (v, u) for u, v in clause_edges))
    rec.add("modular/pool-coverage",
            f"{applicable} factor pairs, rules {sorted(rules_seen)}",
            True, applicable >= 20 and len(rules_seen) == 3)
    return rec.results


def check_modular_breaker_cases(cfg: VerifyConfig) -> list[CheckResult]:
    rec = Recorder()

    def outcome_of(g: Graph, h: Graph) -> Outcome:
        sr = strong_resolving_graph(modular(g, h))
        return outcome_srg_classifier(sr)

    def add_case(name: str, g: Graph, h: Graph, hypothesis: bool) -> None:
        prod = modular(g, h)
        diam_ok = is_connected(prod) and all_pairs_distances(prod).diameter == 3
        rec.add("modular/breaker-cases", f"{name}: hypothesis+diam3",
                True, hypothesis and diam_ok)
        rec.add("modular/breaker-cases", f"{name}: outcome", Outcome.B, outcome_of(g, h))

    g, h = path(4), path(4)
    add_case("gamma pairs in both factors (P4,P4)", g, h,
             bool(gamma_pairs(g).pairs) and bool(gamma_pairs(h).pairs))

    g, h = complete_multipartite([1, 1, 2]), path(4)
    uni = [v for v in range(g.n) if g.degree(v) == g.n - 1]
    add_case("two universal vertices x diameter-3 factor (diamond,P4)", g, h,
             len(uni) >= 2 and all_pairs_distances(h).diameter >= 3)

    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                             (5, 0), (5, 1), (5, 4)])
    h = cycle(6)
    hyp = (not gamma_pairs(g).pairs
           and not any(g.degree(v) == g.n - 1 for v in range(g.n))
           and bool(twin_edges(g)) and bool(gamma_pairs(h).pairs))
    add_case("adjacent twins x gamma factor (C5+twin,C6)", g, h, hyp)

    g, h = cycle(4), path(6)
    gph = gamma_pairs(h)
    hyp = (not gamma_pairs(g).pairs
           and not any(g.degree(v) == g.n - 1 for v in range(g.n))
           and bool(gph.pairs) and h.n - len(gph.members) >= 2)
    add_case("gamma factor with two unpaired vertices (C4,P6)", g, h, hyp)

    g = cycle(4)
    h = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4), (3, 4)])
    gph = gamma_pairs(h)
    hyp = ((3, 4) in twin_edges(h)
           and (0, 3) in gph.pairs and (0, 4) in gph.pairs
           and not gamma_pairs(g).pairs
           and not any(g.degree(v) == g.n - 1 for v in range(g.n)))
    add_case("twin pair sharing a gamma partner (C4,P4+twin)", g, h, hyp)

    for gname, gf, t in [("P4", path, 4), ("C5", cycle, 5)]:
        g = gf(t)
        for k in (2, 3):
            lex = lexicographic(g, complete(k))
            mod = modular(g, complete(k))
            rec.add("modular/lexicographic-complete", f"{gname} with K{k}: same graph",
                    sorted(lex.edges), sorted(mod.edges))
            sr = strong_resolving_graph(mod)
            rec.add("modular/lexicographic-complete", f"{gname} with K{k}: outcome",
                    Outcome.B, outcome_srg_classifier(sr))

    k4 = modular(complete(2), complete(2))
    rec.add("modular/diameter-1", "K2 mod K2 = K4", Outcome.B, outcome_srg_exact(k4))

    for aname, a, bname, b in [("P3", path(3), "P3", path(3)),
                               ("P3", path(3), "K1,3", star(3))]:
        prod = modular(a, b)
        dm = all_pairs_distances(prod)
        if dm.diameter == 2:
            sr = strong_resolving_graph(prod)
            rec.add("modular/diameter-2", f"{aname} mod {bname}", Outcome.B,
                    outcome_srg_classifier(sr))
    return rec.results


def _dist_ge3(d: int) -> bool:
    return d == UNREACHABLE or d >= 3


def check_distance3_predicate(cfg: VerifyConfig) -> list[CheckResult]:
    rec = Recorder()
    pool = [("C4", cycle(4), "C6", cycle(6)),
            ("P4", path(4), "P4", path(4)),
            ("coP5", complement(path(5)), "P5", path(5)),
            ("C4", cycle(4), "P6", path(6)),
            ("K1,3", star(3), "C6", cycle(6))]
    for aname, a, bname, b in pool:
        prod = modular(a, b)
        dm = all_pairs_distances(prod)
        dma, dmb = all_pairs_distances(a), all_pairs_distances(b)
        ga, gb = gamma_pairs(a), gamma_pairs(b)
        ca = [a.neighbor_masks[v] | (1 << v) for v in range(a.n)]
        cb = [b.neighbor_masks[v] | (1 << v) for v in range(b.n)]
        m = b.n
        mism = []
        for i in range(prod.n):
            x, y = divmod(i, m)
            for j in range(i + 1, prod.n):
                u, w = divmod(j, m)
                cond1 = (ca[x] == ca[u] and _dist_ge3(dmb.d(y, w))
                         and (ca[x] == (1 << a.n) - 1
                              or ((y, w) if y < w else (w, y)) in gb.pairs))
                cond2 = (cb[y] == cb[w] and _dist_ge3(dma.d(x, u))
                         and (cb[y] == (1 << b.n) - 1
                              or ((x, u) if x < u else (u, x)) in ga.pairs))
                if (dm.d(i, j) == 3) != (cond1 or cond2):
                    mism.append((i, j))
        rec.add("modular/distance-3-predicate", f"{aname} mod {bname}",
                "no mismatches", "no mismatches" if not mism else f"mismatches {mism[:4]}")
    return rec.results


def check_outcome_pair_witnesses(cfg: VerifyConfig) -> list[CheckResult]:
    rec = Recorder()
    witnesses = [
        ("P6", path(6), (Outcome.M, Outcome.M)),
        ("K3", complete(3), (Outcome.N, Outcome.N)),
        ("K1,3", star(3), (Outcome.N, Outcome.N)),
        ("K1,4", star(4), (Outcome.B, Outcome.B)),
        ("spider(2,2,1)", spider(2, 2, 1), (Outcome.N, Outcome.M)),
        ("spider(2,2,2,1)", spider(2, 2, 2, 1), (Outcome.B, Outcome.M)),
        ("spider(2,1,1,1)", spider(2, 1, 1, 1), (Outcome.B, Outcome.N)),
    ]
    for name, g, expected in witnesses:
        o_sr = outcome_srg_exact(g)
        o_r = outcome_rg_exact(g)
        rec.add("pairs/witnesses", name,
                f"({expected[0]}, {expected[1]})", f"({o_sr}, {o_r})")
    rec.add("pairs/resolving-pairing", "P6 endpoints", True,
            _is_pairing_resolving_set(path(6), [(0, 5)]))
    rec.add("pairs/resolving-pairing", "spider(2,2,1) two long legs", True,
            _is_pairing_resolving_set(spider(2, 2, 1), [(1, 2), (3, 4)]))
    rec.add("pairs/resolving-pairing", "spider(2,2,2,1) three long legs", True,
            _is_pairing_resolving_set(spider(2, 2, 2, 1), [(1, 2), (3, 4), (5, 6)]))
    rec.add("pairs/resolving-quasi-pairing", "spider(2,1,1,1)", True,
            _is_quasi_pairing_resolving_set(spider(2, 1, 1, 1), [(1, 2), (3, 4)], 5))
    return rec.results


def check_realization(cfg: VerifyConfig) -> list[CheckResult]:
    rec = Recorder()
    for n in range(4, 11):
        rec.add("realization/orders", f"path order {n}", Outcome.M,
                outcome_srg_exact(path(n)))
        rec.add("realization/orders", f"three-leaf tree order {n}", Outcome.N,
                outcome_srg_exact(spider(n - 3, 1, 1)))
        rec.add("realization/orders", f"complete order {n}", Outcome.B,
                outcome_srg_exact(complete(n)))
    return rec.results


def check_sr_shapes(cfg: VerifyConfig) -> list[CheckResult]:
    rec = Recorder()
    for n in (2, 5, 9):
        rec.add("sr-shape/paths", f"P{n}", classify_shape(complete(2)),
                classify_shape(strong_resolving_graph(path(n)).core))
    for m in range(2, 6):
        rec.add("sr-shape/even-cycles", f"C{2 * m}", classify_shape(matching_graph(m)),
                classify_shape(strong_resolving_graph(cycle(2 * m)).core))
        rec.add("sr-shape/odd-cycles", f"C{2 * m - 1}",
                classify_shape(cycle(2 * m - 1)),
                classify_shape(strong_resolving_graph(cycle(2 * m - 1)).core))
    for name, t, _sigma in _tree_zoo():
        sigma = tree_stats(t).sigma
        rec.add("sr-shape/trees", f"{name} -> K{sigma}",
                classify_shape(complete(sigma)),
                classify_shape(strong_resolving_graph(t).core))
    for m in (3, 4, 5):
        ladder = cartesian(path(m), complete(2))
        rec.add("sr-shape/ladders", f"P{m} x K2", classify_shape(matching_graph(2)),
                classify_shape(strong_resolving_graph(ladder).core))
    pet = petersen()
    rec.add("sr-shape/petersen", "SR core vs complement", True,
            are_isomorphic(strong_resolving_graph(pet).core, complement(pet)))
    return rec.results


def check_monotonicity(cfg: VerifyConfig) -> list[CheckResult]:
    rec = Recorder()
    for m in range(3, 7):
        sdim_cycle = strong_metric_dimension(cycle(2 * m))[0]
        sdim_ladder = strong_metric_dimension(cartesian(path(m), complete(2)))[0]
        rec.add("monotonicity/unbounded-ratio", f"C{2 * m} inside P{m} x K2",
                f"{m}/2", f"{sdim_cycle}/{sdim_ladder}")
    rng = random.Random(cfg.seed)
    hits = 0
    violations = []
    for trial in range(300):
        n = rng.randint(4, 7)
        g = random_connected_graph(n, rng)
        edges = sorted(g.edges)
        if g.m > n - 1:
            drop = rng.choice(edges)
            h = Graph(n, g.edges - {drop})
            if not is_connected(h):
                h = g
        else:
            h = g
        gsr = strong_resolving_graph(g).parent_edges()
        hsr = strong_resolving_graph(h).parent_edges()
        if hsr <= gsr:
            hits += 1
            if strong_metric_dimension(h)[0] > strong_metric_dimension(g)[0]:
                violations.append(trial)
    rec.add("monotonicity/sr-subgraph", f"300 sampled pairs, {hits} with nested SR edges",
            "no violations", "no violations" if not violations else f"trials {violations[:5]}")
    return rec.results


def check_classifier_random(cfg: VerifyConfig) -> list[CheckResult]:
    rec = Recorder()
    rng = random.Random(cfg.seed)
    counts = {7: 0, 8: 0, 9: 0}
    mismatches = []
    for i in range(cfg.random_samples):
        n = 7 + i % 3
        g = random_connected_graph(n, rng)
        counts[n] += 1
        sr = strong_resolving_graph(g)
        if outcome_srg_classifier(sr) != cover_game_outcome(sr.core):
            mismatches.append((n, sorted(g.edges)))
    rec.add("classifier/random-7-9",
            f"{cfg.random_samples} random connected graphs {dict(counts)}",
            "no mismatches",
            "no mismatches" if not mismatches else f"first {mismatches[:2]}")
    return rec.results


def check_corona_structure(cfg: VerifyConfig) -> list[CheckResult]:
    rec = Recorder()
    k1 = complete(1)
    for m in (3, 4, 5):
        rec.add("corona/cone-complete", f"K1 corona K{m}", Outcome.B,
                outcome_srg_exact(corona(k1, complete(m))))
    diam2 = [("P3", path(3), Outcome.M), ("C4", cycle(4), Outcome.M),
             ("K2,3", complete_multipartite([2, 3]), Outcome.N),
             ("K1,2,3", complete_multipartite([1, 2, 3]), Outcome.N),
             ("K3,3", complete_multipartite([3, 3]), Outcome.B)]
    for name, h, expected in diam2:
        rec.add("corona/cone-diameter-2", f"K1 corona {name}", expected,
                outcome_srg_exact(corona(k1, h)))
    checked = 0
    bad = []
    for m in (4, 5):
        for h in connected_labeled_graphs(m):
            if all_pairs_distances(h).diameter != 3:
                continue
            checked += 1
            out = outcome_srg_exact(corona(k1, h))
            if out == Outcome.M:
                bad.append(sorted(h.edges))
    rec.add("corona/cone-diameter-3", f"{checked} connected graphs of order 4-5",
            "outcomes in {N, B}", "outcomes in {N, B}" if not bad else f"M for {bad[:2]}")
    for name, h in [("P5", path(5)), ("P6", path(6)), ("P8", path(8)),
                    ("C8", cycle(8)), ("spider(4,4,1)", spider(4, 4, 1))]:
        if all_pairs_distances(h).diameter >= 4:
            rec.add("corona/cone-diameter-4plus", f"K1 corona {name}", Outcome.B,
                    outcome_srg_exact(corona(k1, h)))
    # Cones whose SR graph is a star over a matching plus isolated vertices
    # stay first-player wins; check the shape along with the outcome.
    shape_cases = [
        ("K1 corona (K1+P3)", disjoint_union(edgeless(1), path(3))),
        ("K1 corona (K1+C4)", disjoint_union(edgeless(1), cycle(4))),
        ("K1 corona (K1+octahedron)",
         disjoint_union(edgeless(1), complete_multipartite([2, 2, 2]))),
    ]
    for name, h in shape_cases:
        prod = corona(k1, h)
        core = strong_resolving_graph(prod).core
        rec.add("corona/star-over-matching", f"{name}: outcome", Outcome.N,
                outcome_srg_classifier(strong_resolving_graph(prod)))
        hubs = [v for v in range(core.n) if core.degree(v) == core.n - 1]
        shape_ok = len(hubs) == 1 and all(
            v == hubs[0] or core.degree(v) <= 2 for v in range(core.n))
        rec.add("corona/star-over-matching", f"{name}: hub over matching", True, shape_ok)
    return rec.results


def check_cartesian_families(cfg: VerifyConfig) -> list[CheckResult]:
    rec = Recorder()
    gs = [("P4", path(4)), ("C5", cycle(5)), ("K1,3", star(3))]
    for name, g in gs:
        for n in (3, 4):
            sr = strong_resolving_graph(cartesian(g, complete(n)))
            rec.add("cartesian/with-completes", f"{name} x K{n}", Outcome.B,
                    outcome_srg_classifier(sr))
    for n in range(3, 8):
        sr = strong_resolving_graph(cartesian(path(4), cycle(n)))
        expected = Outcome.M if n % 2 == 0 else Outcome.B
        rec.add("cartesian/with-cycles", f"P4 x C{n} (path core is a matching)",
                expected, outcome_srg_classifier(sr))
        sr = strong_resolving_graph(cartesian(star(3), cycle(n)))
        rec.add("cartesian/with-cycles", f"K1,3 x C{n} (star core is not)",
                Outcome.B, outcome_srg_classifier(sr))
    for gname, g in [("P3", path(3)), ("C4", cycle(4))]:
        for tname, t in [("K1,3", star(3)), ("spider(2,1,1)", spider(2, 1, 1))]:
            sr = strong_resolving_graph(cartesian(g, t))
            rec.add("cartesian/with-nonpath-trees", f"{gname} x {tname}", Outcome.B,
                    outcome_srg_classifier(sr))
    return rec.results


# ---------------------------------------------------------------------------
# The exhaustive small-graph sweep


_SWEEP_CLAIMS = (
    "sweep/classifier-vs-exact",
    "sweep/board-reduction",
    "sweep/sdim-equals-cover",
    "sweep/strong-sets-are-covers",
    "sweep/twin-blocks-hit",
    "sweep/resolving-twin-blocks-hit",
    "sweep/outcome-order",
    "sweep/dim-le-sdim",
    "sweep/sdim-extremes",
    "sweep/sdim-n-minus-2",
    "sweep/resolving-twin-rules",
    "certificates/pairing-implies-M",
    "certificates/M-implies-pairing",
    "certificates/quasi-range",
    "certificates/high-degree-range",
    "certificates/majority-sdim",
    "certificates/maker-bound",
)


def _sweep_one(g: Graph, violations: list[tuple[str, str]]) -> None:
    n = g.n
    edges_label = None

    def flag(claim: str, detail: str) -> None:
        nonlocal edges_label
        if edges_label is None:
            edges_label = f"n={n} edges={sorted(g.edges)}"
        violations.append((claim, f"{edges_label}: {detail}"))

    sr = strong_resolving_graph(g)
    core = sr.core
    exact = cover_game_outcome(core)
    cls = outcome_srg_classifier(sr)
    if cls != exact:
        flag("sweep/classifier-vs-exact", f"classifier {cls} exact {exact}")
    full_board = system_outcome(srg_cover_system(sr, board="parent"))
    if full_board != exact:
        flag("sweep/board-reduction", f"full board {full_board} core board {exact}")

    tau, _ = min_vertex_cover(core)
    witness_masks = strong_resolving_witness_masks(g)
    res_masks = resolving_witness_masks(g)
    cover_masks = [(1 << sr.to_parent[u]) | (1 << sr.to_parent[v])
                   for u, v in core.edges]
    block_masks = []
    for block in twin_partition(g).non_singleton_blocks():
        mask = 0
        for v in block:
            mask |= 1 << v
        block_masks.append(mask)

    best_srs = None
    for s in range(1 << n):
        srs = True
        for w in witness_masks:
            if not s & w:
                srs = False
                break
        covers = True
        for cm in cover_masks:
            if not s & cm:
                covers = False
                break
        if srs != covers:
            flag("sweep/strong-sets-are-covers", f"subset {s:b}")
        if srs:
            pc = s.bit_count()
            if best_srs is None or pc < best_srs:
                best_srs = pc
            for bm in block_masks:
                if not s & bm:
                    flag("sweep/twin-blocks-hit", f"subset {s:b}")
                    break
        if block_masks and all(s & w for w in res_masks):
            for bm in block_masks:
                if not s & bm:
                    flag("sweep/resolving-twin-blocks-hit", f"subset {s:b}")
                    break
    if best_srs != tau:
        flag("sweep/sdim-equals-cover", f"brute {best_srs} cover {tau}")

    o_r = outcome_rg_exact(g)
    if exact > o_r:
        flag("sweep/outcome-order", f"strong {exact} resolving {o_r}")

    dim, _ = metric_dimension(g)
    if dim > tau:
        flag("sweep/dim-le-sdim", f"dim {dim} sdim {tau}")

    degs = sorted(g.degree_sequence)
    is_path_graph = degs == [1, 1] + [2] * (n - 2)
    is_complete_graph = g.m == n * (n - 1) // 2
    if (tau == 1) != is_path_graph or (tau == n - 1) != is_complete_graph:
        flag("sweep/sdim-extremes", f"sdim {tau}")
    if n >= 4:
        near = (all_pairs_distances(g).diameter == 2
                and twin_free_clique_number(g) == 2)
        if (tau == n - 2) != near:
            flag("sweep/sdim-n-minus-2", f"sdim {tau} near {near}")

    block_sizes = sorted(len(b) for b in twin_partition(g).non_singleton_blocks())
    triples = block_sizes.count(3)
    if any(s >= 4 for s in block_sizes) and o_r != Outcome.B:
        flag("sweep/resolving-twin-rules", f"big twin class but {o_r}")
    elif triples >= 2 and o_r != Outcome.B:
        flag("sweep/resolving-twin-rules", f"two 3-classes but {o_r}")
    elif triples == 1 and dim == block_sizes.count(2) + 2 and o_r != Outcome.N:
        flag("sweep/resolving-twin-rules", f"one 3-class, tight dim, but {o_r}")

    if exact == Outcome.M and tau > n // 2:
        flag("certificates/maker-bound", f"M but sdim {tau} > {n // 2}")
    if tau >= (n + 1) // 2 + 1 and exact != Outcome.B:
        flag("certificates/majority-sdim", f"sdim {tau} but {exact}")
    if max(core.degree_sequence) >= 2 and exact == Outcome.M:
        flag("certificates/high-degree-range", "degree >= 2 but outcome M")

    pairing = find_pairing_cover(sr)
    if pairing is not None and exact != Outcome.M:
        flag("certificates/pairing-implies-M", f"pairing {pairing} but {exact}")
    if exact == Outcome.M and pairing is None:
        flag("certificates/M-implies-pairing", "no pairing found")
    quasi = find_quasi_pairing_cover(sr)
    if quasi is not None and exact == Outcome.B:
        flag("certificates/quasi-range", f"quasi {quasi} but B")
    if quasi is None and exact != Outcome.B:
        flag("certificates/quasi-range", f"{exact} but no quasi pairing found")


def _emit_sweep_records(results: list[CheckResult], violations: list[tuple[str, str]],
                        instance: str, ms: float) -> None:
    per_claim: dict[str, list[str]] = {}
    for claim, detail in violations:
        per_claim.setdefault(claim, []).append(detail)
    for claim in _SWEEP_CLAIMS:
        bad = per_claim.get(claim, [])
        results.append(CheckResult(
            claim, instance, "no violations",
            "no violations" if not bad else f"{len(bad)} violations, first: {bad[0]}",
            not bad, ms / len(_SWEEP_CLAIMS)))


def check_small_graph_sweep(cfg: VerifyConfig) -> list[CheckResult]:
    results: list[CheckResult] = []
    for n in range(2, cfg.max_sweep_n + 1):
        t0 = time.perf_counter()
        violations: list[tuple[str, str]] = []
        count = 0
        for g in connected_labeled_graphs(n):
            count += 1
            _sweep_one(g, violations)
        ms = (time.perf_counter() - t0) * 1000.0
        _emit_sweep_records(results, violations,
                            f"all {count} connected labeled graphs on {n} vertices", ms)
    return results


def check_sampled_sweep(cfg: VerifyConfig) -> list[CheckResult]:
    """The same per-graph battery on random connected graphs just above the
    exhaustive ceiling."""
    results: list[CheckResult] = []
    rng = random.Random(cfg.seed)
    per_order = max(1, min(150, cfg.random_samples // 50))
    for n in (7, 8):
        t0 = time.perf_counter()
        violations: list[tuple[str, str]] = []
        for _ in range(per_order):
            _sweep_one(random_connected_graph(n, rng), violations)
        ms = (time.perf_counter() - t0) * 1000.0
        _emit_sweep_records(results, violations,
                            f"{per_order} random connected graphs on {n} vertices", ms)
    return results


# ---------------------------------------------------------------------------
# Registry and driver


GROUPS = {
    "sdim": check_sdim_formulas,
    "outcomes": check_outcome_tables,
    "corona": check_corona_tables,
    "cartesian": check_cartesian_products,
    "modular": check_modular_products,
    "modular-breaker": check_modular_breaker_cases,
    "distance3": check_distance3_predicate,
    "pair-witnesses": check_outcome_pair_witnesses,
    "realization": check_realization,
    "sr-shapes": check_sr_shapes,
    "monotonicity": check_monotonicity,
    "classifier-random": check_classifier_random,
    "corona-structure": check_corona_structure,
    "cartesian-families": check_cartesian_families,
    "sweep": check_small_graph_sweep,
    "sweep-sampled": check_sampled_sweep,
}


def _run_group(name: str, cfg: VerifyConfig) -> list[CheckResult]:
    return GROUPS[name](cfg)


def run_verification(group_names=None, cfg: VerifyConfig = VerifyConfig(),
                     workers: int = 1) -> list[CheckResult]:
    names = list(GROUPS) if group_names is None else list(group_names)
    unknown = [x for x in names if x not in GROUPS]
    if unknown:
        raise ValueError(f"unknown claim groups: {unknown}")
    if workers <= 1 or len(names) <= 1:
        results: list[CheckResult] = []
        for name in names:
            results.extend(_run_group(name, cfg))
        return results
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunks = pool.map(_run_group, names, itertools.repeat(cfg))
        results = []
        for chunk in chunks:
            results.extend(chunk)
        return results


def summarize(results: list[CheckResult]) -> str:
    by_claim: dict[str, list[CheckResult]] = {}
    for r in results:
        by_claim.setdefault(r.claim, []).append(r)
    lines = []
    for claim in sorted(by_claim):
        rs = by_claim[claim]
        failed = [r for r in rs if not r.passed]
        status = "ok" if not failed else f"FAIL({len(failed)}/{len(rs)})"
        lines.append(f"{status:>12}  {claim}  [{len(rs)} checks]")
    total_failed = sum(1 for r in results if not r.passed)
    lines.append(f"{len(results)} checks, {total_failed} failures")
    return "\n".join(lines)
