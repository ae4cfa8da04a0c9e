"""Parametric graph families and tree statistics."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph, all_pairs_distances, is_connected


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def edgeless(n: int) -> Graph:
    if n < 1:
        raise ValueError("edgeless graph needs at least one vertex")
    return Graph(n)


def star(leaves: int) -> Graph:
    """K_{1,leaves}: center 0 plus ``leaves`` pendant vertices."""
    if leaves < 0:
        raise ValueError("leaf count must be non-negative")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; part i occupies a consecutive id block."""
    sizes = list(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    n = starts[-1]
    edges = []
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            for u in range(starts[i], starts[i + 1]):
                for v in range(starts[j], starts[j + 1]):
                    edges.append((u, v))
    return Graph.from_edges(n, edges)


def petersen() -> Graph:
    """Petersen graph: outer cycle 0-4, inner pentagram 5-9, spokes i-(i+5)."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph.from_edges(10, edges)


def spider(*leg_lengths: int) -> Graph:
    """One center vertex with a path of each given length attached.

    Legs are sorted descending before construction, so the parameter order
    never changes the labeled result.  With fewer than three legs this
    degenerates to a path.
    """
    legs = sorted(leg_lengths, reverse=True)
    if not legs:
        raise ValueError("spider needs at least one leg")
    if any(l < 1 for l in legs):
        raise ValueError("leg lengths must be positive")
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def tree_from_parents(parents: Sequence[int | None]) -> Graph:
    """Tree from a parent array; index 0 is the root (parent None or -1)."""
    n = len(parents)
    if n == 0:
        raise ValueError("empty parent array")
    edges = []
    for v, p in enumerate(parents):
        if p is None or p == -1:
            if v != 0:
                raise ValueError(f"vertex {v}: only index 0 may be the root")
            continue
        if v == 0:
            raise ValueError("index 0 must be the root (parent None or -1)")
        if not (0 <= p < n):
            raise ValueError(f"vertex {v}: parent {p} out of range")
        edges.append((v, p))
    try:
        t = Graph.from_edges(n, edges)
    except ValueError as exc:
        raise ValueError(f"parent array does not encode a tree: {exc}") from None
    if t.m != n - 1 or not is_connected(t):
        raise ValueError("parent array contains a cycle or a forest")
    return t


@dataclass
class TreeStats:
    """Leaf count, exterior major vertex count, and per-major terminal degrees."""

    sigma: int
    ex: int
    terminal_degrees: dict[int, int]


def tree_stats(t: Graph) -> TreeStats:
    """Statistics of a tree of order >= 2.

    A leaf is terminal for the major vertex strictly closest to it; a major
    vertex (degree >= 3) is exterior when it has at least one terminal leaf.
    """
    if t.n < 2:
        raise ValueError("tree statistics need order at least two")
    if t.m != t.n - 1 or not is_connected(t):
        raise ValueError("input is not a tree")
    leaves = [v for v in range(t.n) if t.degree(v) == 1]
    majors = [v for v in range(t.n) if t.degree(v) >= 3]
    ter = {v: 0 for v in majors}
    if majors:
        dm = all_pairs_distances(t)
        for leaf in leaves:
            dists = [(dm.d(leaf, v), v) for v in majors]
            best = min(d for d, _ in dists)
            closest = [v for d, v in dists if d == best]
            if len(closest) == 1:
                ter[closest[0]] += 1
    ex = sum(1 for v in majors if ter[v] > 0)
    return TreeStats(sigma=len(leaves), ex=ex, terminal_degrees=ter)
