"""Graph products, gamma pairs, twin edges, and the structural construction
of modular-product strong resolving graphs.

All products live on V(G) x V(H) with the row-major encoding
``(u, w) -> u * |V(H)| + w``.  The corona places the base graph's vertices
first and then one block of ``|V(H)|`` vertices per base vertex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import (
    Graph,
    LimitExceededError,
    UNREACHABLE,
    all_pairs_distances,
    complement,
    connected_components,
    is_connected,
)
from .resolving import SrGraph, sr_from_parent_edges, strong_resolving_graph

DEFAULT_DOMINATION_LIMIT = 16


class ModularPreconditionError(ValueError):
    """The structural construction's hypotheses do not hold for this pair;
    fall back to the direct MMD computation on the built product."""


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def pair_index(u: int, w: int, h_order: int) -> int:
    return u * h_order + w


# ---------------------------------------------------------------------------
# Product constructions


def corona(g: Graph, h: Graph) -> Graph:
    """Attach a private copy of ``h`` to every vertex of ``g``."""
    if g.n == 0:
        raise ValueError("corona base graph must be nonempty")
    n, m = g.n, h.n
    edges = list(g.edges)
    for i in range(n):
        base = n + i * m
        edges.extend((base + u, base + v) for u, v in h.edges)
        edges.extend((i, base + w) for w in range(m))
    return Graph.from_edges(n + n * m, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides."""
    if g.n == 0 or h.n == 0:
        raise ValueError("join factors must be nonempty")
    edges = list(g.edges)
    edges.extend((u + g.n, v + g.n) for u, v in h.edges)
    edges.extend((u, w + g.n) for u in range(g.n) for w in range(h.n))
    return Graph.from_edges(g.n + h.n, edges)


def _require_factors(g: Graph, h: Graph) -> None:
    if g.n == 0 or h.n == 0:
        raise ValueError("product factors must be nonempty")


def cartesian(g: Graph, h: Graph) -> Graph:
    _require_factors(g, h)
    m = h.n
    edges = []
    for u, v in g.edges:
        edges.extend((pair_index(u, w, m), pair_index(v, w, m)) for w in range(m))
    for u in range(g.n):
        edges.extend((pair_index(u, w, m), pair_index(u, x, m)) for w, x in h.edges)
    return Graph.from_edges(g.n * m, edges)


def direct(g: Graph, h: Graph) -> Graph:
    _require_factors(g, h)
    m = h.n
    edges = []
    for u, v in g.edges:
        for w, x in h.edges:
            edges.append((pair_index(u, w, m), pair_index(v, x, m)))
            edges.append((pair_index(u, x, m), pair_index(v, w, m)))
    return Graph.from_edges(g.n * m, edges)


def lexicographic(g: Graph, h: Graph) -> Graph:
    _require_factors(g, h)
    m = h.n
    edges = []
    for u, v in g.edges:
        edges.extend((pair_index(u, w, m), pair_index(v, x, m))
                     for w in range(m) for x in range(m))
    for u in range(g.n):
        edges.extend((pair_index(u, w, m), pair_index(u, x, m)) for w, x in h.edges)
    return Graph.from_edges(g.n * m, edges)


def modular(g: Graph, h: Graph) -> Graph:
    """Union of the Cartesian edges, the direct edges, and the direct edges
    of the two complements."""
    _require_factors(g, h)
    edges = set(cartesian(g, h).edges)
    edges |= direct(g, h).edges
    edges |= direct(complement(g), complement(h)).edges
    return Graph(g.n * h.n, frozenset(edges))


# ---------------------------------------------------------------------------
# Domination, gamma pairs, twin edges


def domination_number(g: Graph, limit: int = DEFAULT_DOMINATION_LIMIT) -> int:
    """Exact domination number by subset search under a greedy upper bound."""
    if g.n > limit:
        raise LimitExceededError(f"domination search limited to {limit} vertices")
    if g.n == 0:
        return 0
    closed = [g.neighbor_masks[v] | (1 << v) for v in range(g.n)]
    full = (1 << g.n) - 1
    covered, greedy = 0, 0
    while covered != full:
        pick = max(range(g.n), key=lambda v: (closed[v] & ~covered).bit_count())
        covered |= closed[pick]
        greedy += 1
    for k in range(1, greedy):
        for combo in itertools.combinations(range(g.n), k):
            acc = 0
            for v in combo:
                acc |= closed[v]
            if acc == full:
                return k
    return greedy


@dataclass(frozen=True)
class GammaPairSet:
    """All vertex pairs whose closed neighborhoods partition V(G) and form a
    minimum dominating set."""

    pairs: frozenset[tuple[int, int]]
    members: frozenset[int]
    n: int


def gamma_pairs(g: Graph, limit: int = DEFAULT_DOMINATION_LIMIT) -> GammaPairSet:
    gamma = domination_number(g, limit)
    found: set[tuple[int, int]] = set()
    if gamma == 2:
        closed = [g.neighbor_masks[v] | (1 << v) for v in range(g.n)]
        full = (1 << g.n) - 1
        for u in range(g.n):
            for w in range(u + 1, g.n):
                if closed[u] & closed[w] == 0 and closed[u] | closed[w] == full:
                    found.add((u, w))
    # Self-check against the set-level definition before handing pairs out.
    everything = set(range(g.n))
    for u, w in found:
        nu = set(g.adj[u]) | {u}
        nw = set(g.adj[w]) | {w}
        if nu & nw or nu | nw != everything or gamma != 2:
            raise RuntimeError(f"gamma-pair self-check failed for ({u}, {w})")
    members = frozenset(x for p in found for x in p)
    return GammaPairSet(frozenset(found), members, g.n)


def gp_graph(g: Graph, limit: int = DEFAULT_DOMINATION_LIMIT) -> Graph:
    """Graph on V(G) whose edges are exactly the gamma pairs."""
    return Graph(g.n, frozenset(gamma_pairs(g, limit).pairs))


def twin_edges(g: Graph) -> frozenset[tuple[int, int]]:
    """Edges whose endpoints have equal closed neighborhoods."""
    closed = [g.neighbor_masks[v] | (1 << v) for v in range(g.n)]
    return frozenset((u, v) for u, v in g.edges if closed[u] == closed[v])


def universal_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == g.n - 1]


def has_universal_vertex(g: Graph) -> bool:
    return any(g.degree(v) == g.n - 1 for v in range(g.n))


def is_complete_graph(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_two_clique_union(g: Graph) -> bool:
    comps = connected_components(g)
    if len(comps) != 2:
        return False
    return all(sum(1 for u, v in g.edges if u in set(c)) == len(c) * (len(c) - 1) // 2
               for c in comps)


def adjacent_twins_modular(g: Graph, h: Graph,
                           first: tuple[int, int], second: tuple[int, int],
                           gamma_g: GammaPairSet | None = None,
                           gamma_h: GammaPairSet | None = None) -> bool:
    """Whether two modular-product vertices are distinct adjacent twins,
    decided from factor structure alone: both coordinates are closed-twins,
    or both coordinate pairs are gamma pairs of their factors."""
    (a, b), (c, d) = first, second
    if (a, b) == (c, d):
        return False
    closed_g = [g.neighbor_masks[v] | (1 << v) for v in range(g.n)]
    closed_h = [h.neighbor_masks[v] | (1 << v) for v in range(h.n)]
    if closed_g[a] == closed_g[c] and closed_h[b] == closed_h[d]:
        return True
    if a == c or b == d:
        return False
    if gamma_g is None:
        gamma_g = gamma_pairs(g)
    if gamma_h is None:
        gamma_h = gamma_pairs(h)
    return _norm(a, c) in gamma_g.pairs and _norm(b, d) in gamma_h.pairs


# ---------------------------------------------------------------------------
# Structural strong resolving graph of a modular product


def modular_sr_dispatch(g: Graph, h: Graph) -> str:
    """Which structural rule applies: 'diameter-2', 'gamma-factor', or
    'clauses'.  Raises ModularPreconditionError when none does."""
    rule, _, _, _ = _dispatch(g, h)
    return rule


def _dispatch(g: Graph, h: Graph):
    if g.n < 2 or h.n < 2:
        raise ModularPreconditionError("factors must have order at least two")
    if is_complete_graph(g) or is_complete_graph(h):
        raise ModularPreconditionError("factors may not be complete")
    if is_two_clique_union(g) and is_two_clique_union(h):
        raise ModularPreconditionError("factors may not both be unions of two cliques")
    prod = modular(g, h)
    if not is_connected(prod):
        raise ModularPreconditionError("modular product is disconnected")
    dm = all_pairs_distances(prod)
    diam = dm.diameter
    if diam == 2:
        return "diameter-2", prod, dm, None
    if diam != 3:
        raise ModularPreconditionError(f"modular product diameter {diam} not in {{2, 3}}")
    gamma_g = gamma_pairs(g)
    gamma_h = gamma_pairs(h)
    if (gamma_g.pairs and not has_universal_vertex(h)) or \
            (gamma_h.pairs and not has_universal_vertex(g)):
        return "gamma-factor", prod, dm, (gamma_g, gamma_h)
    return "clauses", prod, dm, (gamma_g, gamma_h)


def modular_sr_structural(g: Graph, h: Graph) -> SrGraph:
    """Strong resolving graph of the modular product assembled from structure
    (twin edges, distance classes, gamma pairs, boundary and universal
    vertices) rather than from a direct MMD computation.

    Applies when neither factor is complete, the factors are not both
    disjoint unions of two cliques, and the product has diameter 2 or 3;
    otherwise raises ModularPreconditionError and the caller should fall back
    to ``strong_resolving_graph(modular(g, h))``.
    """
    rule, prod, dm, gammas = _dispatch(g, h)
    if rule == "diameter-2":
        edges = _sr_edges_diameter2(g, h, prod)
    elif rule == "gamma-factor":
        edges = _sr_edges_gamma_factor(g, h, prod, *gammas)
    else:
        edges = _sr_edges_diameter3_clauses(g, h, prod, dm, *gammas)
    return sr_from_parent_edges(prod.n, edges)


def _sr_edges_diameter2(g: Graph, h: Graph, prod: Graph) -> set[tuple[int, int]]:
    edges = set(twin_edges(prod))
    edges |= cartesian(complement(g), complement(h)).edges
    edges |= direct(g, complement(h)).edges
    edges |= direct(complement(g), h).edges
    return edges


def _sr_edges_gamma_factor(g: Graph, h: Graph, prod: Graph,
                           gamma_g: GammaPairSet, gamma_h: GammaPairSet) -> set[tuple[int, int]]:
    """One factor has a gamma pair, the other no universal vertex: the SR
    edges are the product's twin edges, the complement-Cartesian / mixed
    direct edges restricted to vertices in no gamma pair, the Cartesian
    product of the two gamma-pair graphs, and the direct products of each
    factor's twin-edge subgraph with the other's gamma-pair graph."""
    m = h.n
    eg, eh = g.edges, h.edges
    ebar_g, ebar_h = complement(g).edges, complement(h).edges
    pg, ph = gamma_g.members, gamma_h.members
    gpg, gph = gamma_g.pairs, gamma_h.pairs
    twg_v = {x for e in twin_edges(g) for x in e}
    twh_v = {x for e in twin_edges(h) for x in e}

    edges = set(twin_edges(prod))
    for i in range(prod.n):
        a, b = divmod(i, m)
        for j in range(i + 1, prod.n):
            c, d = divmod(j, m)
            ge = _norm(a, c) if a != c else None
            he = _norm(b, d) if b != d else None
            hit = False
            if a not in pg and c not in pg and b not in ph and d not in ph:
                if a == c:
                    hit = he in ebar_h
                elif b == d:
                    hit = ge in ebar_g
                elif ge in eg:
                    hit = he in ebar_h
                elif ge in ebar_g:
                    hit = he in eh
            if not hit:
                hit = (a == c and he in gph) or (b == d and ge in gpg)
            if not hit and ge in eg and a in twg_v and c in twg_v:
                hit = he in gph
            if not hit and ge in gpg and b in twh_v and d in twh_v:
                hit = he in eh
            if hit:
                edges.add((i, j))
    return edges


def _within_two(dm, x: int, z: int) -> bool:
    d = dm.d(x, z)
    return d != UNREACHABLE and d <= 2


def _sr_edges_diameter3_clauses(g: Graph, h: Graph, prod: Graph, dm_prod,
                                gamma_g: GammaPairSet,
                                gamma_h: GammaPairSet) -> set[tuple[int, int]]:
    """Diameter-3 clause evaluation: a product pair is an SR edge iff it is
    an adjacent-twin pair, at product distance 3, at product distance 2 with
    both endpoints off the boundary, or satisfies one of the two universal-
    vertex clauses (evaluated in both factor roles and both orientations)."""
    m = h.n
    dm_g = all_pairs_distances(g)
    dm_h = all_pairs_distances(h)
    diam = dm_prod.diameter
    boundary = {v for v in range(prod.n) if max(dm_prod.row(v)) == diam}
    uni_g = set(universal_vertices(g))
    uni_h = set(universal_vertices(h))

    h_sr_edges: frozenset[tuple[int, int]] = frozenset()
    g_sr_edges: frozenset[tuple[int, int]] = frozenset()
    if uni_g:
        if not is_connected(h):
            raise ModularPreconditionError(
                "universal vertex in one factor needs the other factor connected")
        h_sr_edges = strong_resolving_graph(h).parent_edges()
    if uni_h:
        if not is_connected(g):
            raise ModularPreconditionError(
                "universal vertex in one factor needs the other factor connected")
        g_sr_edges = strong_resolving_graph(g).parent_edges()

    def clause_d(a, b, c, d) -> bool:
        if a in uni_g and c in uni_g and dm_h.d(b, d) == 2 and _norm(b, d) in h_sr_edges:
            return True
        return (b in uni_h and d in uni_h and dm_g.d(a, c) == 2
                and _norm(a, c) in g_sr_edges)

    def clause_e_side(uni, dm_other, other_graph, gamma_members,
                      x_uni, x_other, y_uni, y_other) -> bool:
        # (x_uni, x_other) carries the universal coordinate, the other does not.
        if x_uni not in uni or y_uni in uni:
            return False
        if dm_other.d(x_other, y_other) != 2:
            return False
        if y_other in gamma_members:
            return False
        return all(_within_two(dm_other, x_other, z)
                   for z in other_graph.adj[y_other])

    def clause_e(a, b, c, d) -> bool:
        return (clause_e_side(uni_g, dm_h, h, gamma_h.members, a, b, c, d)
                or clause_e_side(uni_g, dm_h, h, gamma_h.members, c, d, a, b)
                or clause_e_side(uni_h, dm_g, g, gamma_g.members, b, a, d, c)
                or clause_e_side(uni_h, dm_g, g, gamma_g.members, d, c, b, a))

    edges: set[tuple[int, int]] = set()
    for i in range(prod.n):
        a, b = divmod(i, m)
        row = dm_prod.row(i)
        for j in range(i + 1, prod.n):
            c, d = divmod(j, m)
            dist = row[j]
            if dist == 3 \
                    or adjacent_twins_modular(g, h, (a, b), (c, d), gamma_g, gamma_h) \
                    or (dist == 2 and i not in boundary and j not in boundary) \
                    or clause_d(a, b, c, d) or clause_e(a, b, c, d):
                edges.add((i, j))
    return edges
