"""Metric and strong-metric resolution.

Covers resolving predicates and exact metric dimension, mutually maximally
distant pairs and the derived strong resolving graph, exact minimum vertex
cover (which yields the strong metric dimension), twin partitions, the
twin-free clique number, and boundary vertices.

All searches are exact and intended for desk-scale graphs; each has a
configurable vertex-count limit and raises LimitExceededError beyond it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .graphs import (
    DistanceMatrix,
    Graph,
    LimitExceededError,
    require_connected,
)

DEFAULT_DIM_LIMIT = 14
DEFAULT_COVER_LIMIT = 40
DEFAULT_CLIQUE_LIMIT = 40


@dataclass(frozen=True)
class SrGraph:
    """Strong resolving graph: one vertex per parent vertex that is mutually
    maximally distant with something, one edge per MMD pair.

    ``core`` is compactly labeled; ``to_parent[i]`` is the parent vertex
    behind core vertex ``i``.
    """

    core: Graph
    to_parent: tuple[int, ...]
    parent_n: int

    def __post_init__(self) -> None:
        if len(self.to_parent) != self.core.n:
            raise ValueError("to_parent must map every core vertex")
        if len(set(self.to_parent)) != len(self.to_parent):
            raise ValueError("to_parent must be injective")
        if any(not (0 <= p < self.parent_n) for p in self.to_parent):
            raise ValueError("to_parent target out of range")
        if any(self.core.degree(v) == 0 for v in range(self.core.n)):
            raise ValueError("strong resolving graph may not contain isolated vertices")

    @property
    def parent_vertices(self) -> frozenset[int]:
        return frozenset(self.to_parent)

    def parent_edges(self) -> frozenset[tuple[int, int]]:
        out = set()
        for u, v in self.core.edges:
            a, b = self.to_parent[u], self.to_parent[v]
            out.add((a, b) if a < b else (b, a))
        return frozenset(out)


def sr_from_parent_edges(parent_n: int, edges: Iterable[tuple[int, int]]) -> SrGraph:
    """Assemble an SrGraph from an edge set given in parent labels."""
    norm = {(u, v) if u < v else (v, u) for u, v in edges}
    verts = sorted({x for e in norm for x in e})
    index = {v: i for i, v in enumerate(verts)}
    core = Graph(len(verts), frozenset((index[u], index[v]) for u, v in norm))
    return SrGraph(core=core, to_parent=tuple(verts), parent_n=parent_n)


# ---------------------------------------------------------------------------
# Metric resolution


def metric_code(g: Graph, d: DistanceMatrix, s: Sequence[int], v: int) -> tuple[int, ...]:
    """Vector of distances from ``v`` to the ordered landmarks ``s``."""
    require_connected(g, "metric_code")
    if not s:
        raise ValueError("landmark list must be non-empty")
    return tuple(d.d(v, u) for u in s)


def is_resolving_set(g: Graph, s: Iterable[int]) -> bool:
    """True iff all metric codes with respect to ``s`` are pairwise distinct."""
    dm = require_connected(g, "is_resolving_set")
    landmarks = sorted(set(s))
    codes = {tuple(dm.d(v, u) for u in landmarks) for v in range(g.n)}
    return len(codes) == g.n


@lru_cache(maxsize=2048)
def resolving_witness_masks(g: Graph) -> tuple[int, ...]:
    """For each vertex pair, the bitmask of vertices whose distance to the
    two differs.  A set resolves the graph iff it hits every mask."""
    dm = require_connected(g, "resolving_witness_masks")
    masks = []
    for x in range(g.n):
        rx = dm.row(x)
        for y in range(x + 1, g.n):
            ry = dm.row(y)
            mask = 0
            for z in range(g.n):
                if rx[z] != ry[z]:
                    mask |= 1 << z
            masks.append(mask)
    return tuple(masks)


def metric_dimension(g: Graph, limit: int = DEFAULT_DIM_LIMIT) -> tuple[int, frozenset[int]]:
    """Exact metric dimension with a witness.

    Searches subsets by increasing size; the twin partition gives a sound
    lower bound (a resolving set misses at most one vertex per twin class)
    and a membership filter.
    """
    if g.n > limit:
        raise LimitExceededError(f"metric dimension search limited to {limit} vertices")
    dm = require_connected(g, "metric_dimension")
    if g.n == 1:
        return 0, frozenset()
    masks = resolving_witness_masks(g)
    blocks = [b for b in twin_partition(g).blocks if len(b) >= 2]
    block_lists = [sorted(b) for b in blocks]
    lower = sum(len(b) - 1 for b in blocks)
    for k in range(max(lower, 1), g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            smask = 0
            for v in combo:
                smask |= 1 << v
            skip = False
            for b in block_lists:
                missing = sum(1 for v in b if not (smask >> v) & 1)
                if missing > 1:
                    skip = True
                    break
            if skip:
                continue
            if all(smask & w for w in masks):
                return k, frozenset(combo)
    raise RuntimeError("unreachable: the full vertex set resolves any connected graph")


# ---------------------------------------------------------------------------
# Strong resolution


def lies_on_geodesic(d: DistanceMatrix, a: int, mid: int, b: int) -> bool:
    """True iff ``mid`` is on some shortest path between ``a`` and ``b``."""
    da, db, dab = d.d(a, mid), d.d(mid, b), d.d(a, b)
    if min(da, db, dab) < 0:
        raise ValueError("geodesic test on an unreachable pair")
    return da + db == dab


def is_strong_resolving_set(g: Graph, s: Iterable[int]) -> bool:
    """True iff every vertex pair has a member of ``s`` witnessing it: one of
    the two lies on a geodesic from the other to the witness."""
    require_connected(g, "is_strong_resolving_set")
    smask = 0
    for v in s:
        smask |= 1 << v
    return all(smask & w for w in strong_resolving_witness_masks(g))


@lru_cache(maxsize=2048)
def strong_resolving_witness_masks(g: Graph) -> tuple[int, ...]:
    """For each vertex pair (x, y), the bitmask of vertices z such that x is
    on a y-z geodesic or y is on an x-z geodesic."""
    dm = require_connected(g, "strong_resolving_witness_masks")
    rows = dm.rows
    masks = []
    for x in range(g.n):
        rx = rows[x]
        for y in range(x + 1, g.n):
            ry = rows[y]
            dxy = rx[y]
            mask = 0
            for z in range(g.n):
                if ry[z] == dxy + rx[z] or rx[z] == dxy + ry[z]:
                    mask |= 1 << z
            masks.append(mask)
    return tuple(masks)


def is_maximally_distant(g: Graph, d: DistanceMatrix, u: int, v: int) -> bool:
    """True iff no neighbor of ``u`` is farther from ``v`` than ``u`` is."""
    require_connected(g, "is_maximally_distant")
    duv = d.d(u, v)
    return all(d.d(w, v) <= duv for w in g.adj[u])


def mmd_pairs(g: Graph) -> frozenset[tuple[int, int]]:
    """All mutually maximally distant vertex pairs of a connected graph."""
    dm = require_connected(g, "mmd_pairs")
    rows = dm.rows
    adj = g.adj
    maxd = [[True] * g.n for _ in range(g.n)]
    for u in range(g.n):
        row_u = rows[u]
        for w in adj[u]:
            row_w = rows[w]
            for v in range(g.n):
                if row_w[v] > row_u[v]:
                    maxd[u][v] = False
    out = set()
    for u in range(g.n):
        mu = maxd[u]
        for v in range(u + 1, g.n):
            if mu[v] and maxd[v][u]:
                out.add((u, v))
    return frozenset(out)


def strong_resolving_graph(g: Graph) -> SrGraph:
    """Graph on the MMD-participating vertices whose edges are the MMD pairs."""
    if g.n < 2:
        raise ValueError("strong resolving graph needs order at least two")
    require_connected(g, "strong_resolving_graph")
    return sr_from_parent_edges(g.n, mmd_pairs(g))


# ---------------------------------------------------------------------------
# Vertex cover and strong metric dimension


def _greedy_cover(edges: set[tuple[int, int]]) -> set[int]:
    edges = set(edges)
    cover: set[int] = set()
    while edges:
        deg: dict[int, int] = {}
        for u, v in edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        pick = max(sorted(deg), key=lambda v: deg[v])
        cover.add(pick)
        edges = {e for e in edges if pick not in e}
    return cover


def _matching_lower_bound(edges: set[tuple[int, int]]) -> int:
    used: set[int] = set()
    size = 0
    for u, v in sorted(edges):
        if u not in used and v not in used:
            used.add(u)
            used.add(v)
            size += 1
    return size


def min_vertex_cover(g: Graph, limit: int = DEFAULT_COVER_LIMIT) -> tuple[int, frozenset[int]]:
    """Exact minimum vertex cover by branch and bound.

    Reductions: isolated vertices never enter; a degree-1 vertex forces its
    neighbor.  Branching takes a maximum-degree vertex (lowest id on ties)
    either into the cover or all of its neighbors instead.  The witness is
    one fixed optimum (deterministic branch order), not a canonical one.
    """
    if g.n > limit:
        raise LimitExceededError(f"vertex cover search limited to {limit} vertices")
    if not g.edges:
        return 0, frozenset()
    best_cover = _greedy_cover(set(g.edges))
    best_size = len(best_cover)

    def bb(edges: set[tuple[int, int]], chosen: set[int]) -> None:
        nonlocal best_cover, best_size
        edges = set(edges)
        chosen = set(chosen)
        while True:
            if not edges:
                if len(chosen) < best_size:
                    best_size = len(chosen)
                    best_cover = set(chosen)
                return
            deg: dict[int, int] = {}
            for u, v in edges:
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            forced = None
            for v in sorted(deg):
                if deg[v] == 1:
                    u, w = next(e for e in edges if v in e)
                    forced = u if u != v else w
                    break
            if forced is None:
                break
            chosen.add(forced)
            edges = {e for e in edges if forced not in e}
        if len(chosen) + _matching_lower_bound(edges) >= best_size:
            return
        pivot = max(sorted(deg), key=lambda v: deg[v])
        bb({e for e in edges if pivot not in e}, chosen | {pivot})
        nbrs = {u if v == pivot else v for u, v in edges if pivot in (u, v)}
        bb({e for e in edges if not (e[0] in nbrs or e[1] in nbrs)}, chosen | nbrs)

    bb(set(g.edges), set())
    return best_size, frozenset(best_cover)


def strong_metric_dimension(g: Graph,
                            cover_limit: int = DEFAULT_COVER_LIMIT) -> tuple[int, frozenset[int]]:
    """Minimum size of a strong resolving set, with a witness in parent labels.

    Computed as a minimum vertex cover of the strong resolving graph; a set
    strongly resolves the graph exactly when it covers every MMD pair.
    """
    sr = strong_resolving_graph(g)
    size, cover = min_vertex_cover(sr.core, limit=cover_limit)
    witness = frozenset(sr.to_parent[v] for v in cover)
    return size, witness


# ---------------------------------------------------------------------------
# Twins, twin-free cliques, boundary


@dataclass(frozen=True)
class TwinPartition:
    """Partition of the vertices into twin equivalence classes."""

    blocks: tuple[frozenset[int], ...]
    tags: tuple[str, ...]

    def non_singleton_blocks(self) -> list[frozenset[int]]:
        return [b for b in self.blocks if len(b) >= 2]


def are_twins(g: Graph, u: int, w: int) -> bool:
    """True iff N(u) - {w} equals N(w) - {u} (adjacent or non-adjacent twins)."""
    if u == w:
        return False
    masks = g.neighbor_masks
    return masks[u] & ~(1 << w) == masks[w] & ~(1 << u)


def twin_partition(g: Graph) -> TwinPartition:
    unseen = set(range(g.n))
    blocks = []
    tags = []
    while unseen:
        u = min(unseen)
        block = {u} | {w for w in unseen if are_twins(g, u, w)}
        unseen -= block
        members = sorted(block)
        if len(members) == 1:
            tag = "singleton"
        else:
            adjacent = g.has_edge(members[0], members[1])
            for a, b in itertools.combinations(members, 2):
                if not are_twins(g, a, b) or g.has_edge(a, b) != adjacent:
                    raise RuntimeError("twin relation failed to partition into "
                                       "cliques and independent sets")
            tag = "adjacent-twins" if adjacent else "non-adjacent-twins"
        blocks.append(frozenset(block))
        tags.append(tag)
    return TwinPartition(tuple(blocks), tuple(tags))


def twin_free_clique_number(g: Graph, limit: int = DEFAULT_CLIQUE_LIMIT) -> int:
    """Maximum size of a clique containing no twin pair."""
    if g.n > limit:
        raise LimitExceededError(f"twin-free clique search limited to {limit} vertices")
    if g.n == 0:
        return 0
    allowed = [0] * g.n
    for u, v in g.edges:
        if not are_twins(g, u, v):
            allowed[u] |= 1 << v
            allowed[v] |= 1 << u
    best = 0

    def expand(cand: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            bit = cand & -cand
            v = bit.bit_length() - 1
            cand ^= bit
            expand(cand & allowed[v], size + 1)

    expand((1 << g.n) - 1, 0)
    return best


def boundary_vertices(g: Graph) -> frozenset[int]:
    """Vertices realizing the diameter against at least one other vertex."""
    dm = require_connected(g, "boundary_vertices")
    diam = dm.diameter
    return frozenset(v for v in range(g.n) if max(dm.row(v)) == diam)
