"""Immutable simple graphs: construction, parsing, BFS distances,
isomorphism on small graphs, and component-shape classification.

Vertices are dense integers ``0..n-1``.  Everything here is immutable after
construction and safe to share between workers; all operations are pure
functions.  Product constructions elsewhere in the package encode a vertex
pair ``(u, w)`` as ``u * |V(H)| + w`` (row-major).
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

#: Distance-table marker for vertex pairs with no connecting path.
UNREACHABLE = -1

#: Default vertex-count ceiling for the exact isomorphism search.
DEFAULT_ISO_LIMIT = 12


class GraphFormatError(ValueError):
    """Malformed edge-list or structured-graph document."""


class DisconnectedGraphError(ValueError):
    """The operation is only defined for connected graphs."""


class LimitExceededError(RuntimeError):
    """The instance exceeds the configured exact-computation limit."""


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``; construction
    rejects self-loops and out-of-range endpoints.  Use
    :meth:`Graph.from_edges` to build from arbitrary pair iterables (it
    normalizes orientation and rejects duplicates).
    """

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range or not normalized")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must have one entry per vertex")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[Sequence[int]],
                   labels: Sequence[str] | None = None) -> "Graph":
        seen: set[tuple[int, int]] = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = _norm_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(e)
        return cls(n, frozenset(seen), tuple(labels) if labels is not None else None)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @cached_property
    def _distance_matrix(self) -> "DistanceMatrix":
        rows = []
        for src in range(self.n):
            dist = [UNREACHABLE] * self.n
            dist[src] = 0
            queue = deque([src])
            while queue:
                u = queue.popleft()
                du = dist[u]
                for w in self.adj[u]:
                    if dist[w] == UNREACHABLE:
                        dist[w] = du + 1
                        queue.append(w)
            rows.append(tuple(dist))
        return DistanceMatrix(self.n, tuple(rows))


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop counts; ``UNREACHABLE`` marks disconnected pairs."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, u: int) -> tuple[int, ...]:
        return self.rows[u]

    def d(self, u: int, v: int) -> int:
        return self.rows[u][v]

    def row(self, v: int) -> tuple[int, ...]:
        return self.rows[v]

    @property
    def all_finite(self) -> bool:
        return all(UNREACHABLE not in row for row in self.rows)

    @property
    def diameter(self) -> int:
        best = 0
        for row in self.rows:
            for d in row:
                if d == UNREACHABLE:
                    raise DisconnectedGraphError("diameter of a disconnected graph")
                if d > best:
                    best = d
        return best


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS-exact distances between all vertex pairs (cached on the graph)."""
    return g._distance_matrix


def is_connected(g: Graph) -> bool:
    """True iff the graph has exactly one connected component (K1 counts)."""
    if g.n == 0:
        return False
    return UNREACHABLE not in g._distance_matrix.rows[0]


def require_connected(g: Graph, what: str = "operation") -> DistanceMatrix:
    dm = all_pairs_distances(g)
    if g.n == 0 or UNREACHABLE in dm.rows[0]:
        raise DisconnectedGraphError(f"{what} requires a connected graph")
    return dm


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def complement(g: Graph) -> Graph:
    edges = {(u, v) for u in range(g.n) for v in range(u + 1, g.n)
             if (u, v) not in g.edges}
    return Graph(g.n, frozenset(edges), g.labels)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``keep``, compactly relabeled.

    Returns ``(subgraph, mapping)`` where ``mapping[i]`` is the original id
    of the subgraph's vertex ``i``.
    """
    verts = sorted(set(keep))
    for v in verts:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(verts)}
    edges = {(index[u], index[v]) for u, v in g.edges if u in index and v in index}
    labels = tuple(g.labels[v] for v in verts) if g.labels is not None else None
    return Graph(len(verts), frozenset(edges), labels), tuple(verts)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Disjoint union; ``b``'s vertices are shifted up by ``a.n``."""
    edges = set(a.edges)
    edges.update((u + a.n, v + a.n) for u, v in b.edges)
    labels = None
    if a.labels is not None and b.labels is not None:
        labels = a.labels + b.labels
    return Graph(a.n + b.n, frozenset(edges), labels)


# ---------------------------------------------------------------------------
# Parsing and serialization


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    Grammar: '#' comment lines and blank lines are skipped; the first data
    line is ``n m``; exactly ``m`` lines ``u v`` follow with
    ``0 <= u, v < n``, ``u != v``, and no duplicate edge in either
    orientation.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise GraphFormatError(f"line {lineno}: expected header 'n m'")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: header fields must be integers") from None
            if n < 0 or m < 0:
                raise GraphFormatError(f"line {lineno}: header fields must be non-negative")
            header = (n, m)
            continue
        n, m = header
        if len(edges) == m:
            raise GraphFormatError(f"line {lineno}: unexpected data after {m} edges")
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected edge 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: edge endpoints must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: endpoint out of range 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        e = _norm_edge(u, v)
        if e in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(e)
        edges.append(e)
    if header is None:
        raise GraphFormatError("empty document: missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphFormatError(f"expected {header[1]} edges, found {len(edges)}")
    return Graph(header[0], frozenset(edges))


def format_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" if c else "#" for c in comments]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def graph_to_json_obj(g: Graph) -> dict:
    obj: dict = {"n": g.n, "edges": [[u, v] for u, v in g.sorted_edges()]}
    if g.labels is not None:
        obj["labels"] = list(g.labels)
    return obj


def graph_from_json_obj(obj: dict) -> Graph:
    try:
        n = int(obj["n"])
        raw_edges = obj["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"structured document needs integer 'n' and 'edges': {exc}") from None
    edges = []
    for idx, pair in enumerate(raw_edges):
        if len(pair) != 2:
            raise GraphFormatError(f"edges[{idx}] is not a 2-array")
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edges[{idx}] endpoint out of range 0..{n - 1}")
        edges.append((u, v))
    labels = obj.get("labels")
    try:
        return Graph.from_edges(n, edges, labels=labels)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def parse_graph_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from None
    return graph_from_json_obj(obj)


def to_dot(g: Graph) -> str:
    lines = ["graph G {"]
    for v in range(g.n):
        label = g.labels[v] if g.labels is not None else str(v)
        lines.append(f'  {v} [label="{label}"];')
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Isomorphism on small graphs


def _vertex_colors(g: Graph, rounds: int = 3) -> list:
    """Comparable per-vertex invariants: degree + distance profile, then a few
    rounds of neighborhood refinement.  Used both as a quick non-isomorphism
    filter and to prune the exact search."""
    dm = all_pairs_distances(g)
    colors: list = [(g.degree(v), tuple(sorted(dm.row(v)))) for v in range(g.n)]
    for _ in range(rounds):
        colors = [(colors[v], tuple(sorted(colors[w] for w in g.adj[v])))
                  for v in range(g.n)]
    return colors


def are_isomorphic(a: Graph, b: Graph, limit: int = DEFAULT_ISO_LIMIT) -> bool:
    """Exact isomorphism test by pruned permutation search.

    Raises LimitExceededError above ``limit`` vertices; callers that only
    need shape-level equality should compare ShapeDescriptions instead.
    """
    if a.n != b.n or a.m != b.m:
        return False
    if a.n > limit:
        raise LimitExceededError(f"isomorphism search limited to {limit} vertices")
    if a.n == 0:
        return True
    ca = _vertex_colors(a)
    cb = _vertex_colors(b)
    if sorted(ca) != sorted(cb):
        return False
    counts = Counter(ca)
    order = sorted(range(a.n), key=lambda v: (counts[ca[v]], ca[v], v))
    by_color: dict = {}
    for w in range(b.n):
        by_color.setdefault(cb[w], []).append(w)
    mapping = [-1] * a.n
    used = [False] * b.n

    def extend(i: int) -> bool:
        if i == a.n:
            return True
        v = order[i]
        for w in by_color.get(ca[v], ()):
            if used[w]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if a.has_edge(u, v) != b.has_edge(mapping[u], w):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return extend(0)


def graph_fingerprint(g: Graph) -> tuple:
    """Cheap isomorphism-invariant fingerprint (not a complete certificate)."""
    dm = all_pairs_distances(g)
    rows = tuple(sorted(tuple(sorted(dm.row(v))) for v in range(g.n)))
    return (g.n, g.m, tuple(sorted(g.degree_sequence)), rows)


# ---------------------------------------------------------------------------
# Component shapes


def _named_component(sub: Graph) -> tuple[str, int] | None:
    """Match one connected component against K/C/P families.

    Naming collisions resolve as K1, K2 and C3 (so P1/P2 report as complete
    graphs and K3 reports as a 3-cycle); equality between shapes is therefore
    a plain comparison of the normalized names.
    """
    k, m = sub.n, sub.m
    if k == 1:
        return ("K", 1)
    if k == 2:
        return ("K", 2)
    if m == k * (k - 1) // 2:
        return ("C", 3) if k == 3 else ("K", k)
    degs = sorted(sub.degree_sequence)
    if degs == [2] * k:
        return ("C", k)
    if degs == [1, 1] + [2] * (k - 2):
        return ("P", k)
    return None


@dataclass(frozen=True, eq=False)
class ShapeDescription:
    """Multiset of component shapes: named K/C/P parts plus leftover graphs.

    Equality matches named parts exactly and leftover components up to
    isomorphism; leftovers larger than the isomorphism limit fall back to
    fingerprint comparison (``exact`` is False then: shape-level only).
    """

    named: tuple[tuple[tuple[str, int], int], ...]
    others: tuple[Graph, ...]
    exact: bool = True

    @cached_property
    def _other_fingerprints(self) -> tuple[tuple, ...]:
        return tuple(graph_fingerprint(g) for g in self.others)

    @property
    def total_vertices(self) -> int:
        total = sum(size * count for (_, size), count in self.named)
        return total + sum(g.n for g in self.others)

    def counts(self) -> dict[str, int]:
        out = {f"{kind}{size}": count for (kind, size), count in self.named}
        for g in self.others:
            key = f"?(n={g.n},m={g.m})"
            out[key] = out.get(key, 0) + 1
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ShapeDescription):
            return NotImplemented
        if self.named != other.named:
            return False
        if Counter(self._other_fingerprints) != Counter(other._other_fingerprints):
            return False
        mine = sorted(self.others, key=graph_fingerprint)
        theirs = list(sorted(other.others, key=graph_fingerprint))

        def match(i: int, remaining: list[Graph]) -> bool:
            if i == len(mine):
                return True
            a = mine[i]
            for j, b in enumerate(remaining):
                if graph_fingerprint(a) != graph_fingerprint(b):
                    continue
                if a.n > DEFAULT_ISO_LIMIT or are_isomorphic(a, b):
                    if match(i + 1, remaining[:j] + remaining[j + 1:]):
                        return True
            return False

        return match(0, theirs)

    def __hash__(self) -> int:
        return hash((self.named, tuple(sorted(self._other_fingerprints))))

    def __str__(self) -> str:
        parts = []
        items = [(size, kind, count) for (kind, size), count in self.named]
        for size, kind, count in sorted(items, key=lambda t: (-t[0], t[1])):
            parts.append(f"{count}{kind}{size}" if count > 1 else f"{kind}{size}")
        for g in self.others:
            parts.append(f"?(n={g.n},m={g.m})")
        return " U ".join(parts) if parts else "empty"


def classify_shape(g: Graph, iso_limit: int = DEFAULT_ISO_LIMIT) -> ShapeDescription:
    """Classify each connected component as K/C/P by order, size and degree
    multiset; anything else is kept as a leftover graph."""
    named: Counter = Counter()
    others: list[Graph] = []
    for comp in connected_components(g):
        sub, _ = induced_subgraph(g, comp)
        tag = _named_component(sub)
        if tag is not None:
            named[tag] += 1
        else:
            others.append(sub)
    others.sort(key=graph_fingerprint)
    exact = all(o.n <= iso_limit for o in others)
    return ShapeDescription(tuple(sorted(named.items())), tuple(others), exact)
