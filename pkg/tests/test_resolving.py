import itertools
import random

import pytest

from srgame.families import complete, cycle, path, petersen, spider, star
from srgame.graphs import (
    DisconnectedGraphError,
    Graph,
    LimitExceededError,
    all_pairs_distances,
    are_isomorphic,
    complement,
    disjoint_union,
    is_connected,
)
from srgame.products import cartesian
from srgame.resolving import (
    boundary_vertices,
    is_maximally_distant,
    is_resolving_set,
    is_strong_resolving_set,
    lies_on_geodesic,
    metric_code,
    metric_dimension,
    min_vertex_cover,
    mmd_pairs,
    strong_metric_dimension,
    strong_resolving_graph,
    strong_resolving_witness_masks,
    twin_free_clique_number,
    twin_partition,
)


def random_connected(n, rng):
    while True:
        g = Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)
                               if rng.random() < 0.5))
        if is_connected(g):
            return g


def mmd_oracle(g):
    # definitional double loop, independent of the production mmd_pairs path
    dm = all_pairs_distances(g)

    def max_distant(u, v):
        return all(dm.d(w, v) <= dm.d(u, v) for w in g.adj[u])

    return {(u, v) for u in range(g.n) for v in range(u + 1, g.n)
            if max_distant(u, v) and max_distant(v, u)}


def brute_sdim(g):
    masks = strong_resolving_witness_masks(g)
    for k in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            s = 0
            for v in combo:
                s |= 1 << v
            if all(s & w for w in masks):
                return k
    raise AssertionError("full vertex set always strongly resolves")


class TestMetric:
    def test_metric_code_examples(self):
        p3 = path(3)
        dm = all_pairs_distances(p3)
        assert metric_code(p3, dm, [0], 2) == (2,)
        assert metric_code(p3, dm, [2], 2) == (0,)
        c4 = cycle(4)
        assert metric_code(c4, all_pairs_distances(c4), [0, 1], 2) == (2, 1)

    def test_resolving_sets(self):
        assert is_resolving_set(path(6), {0})
        assert not is_resolving_set(complete(4), {0, 1})
        for g in (cycle(5), star(4), petersen()):
            assert is_resolving_set(g, set(range(g.n - 1)))

    def test_disconnected_rejected(self):
        g = disjoint_union(complete(2), complete(2))
        with pytest.raises(DisconnectedGraphError):
            is_resolving_set(g, {0})
        with pytest.raises(DisconnectedGraphError):
            is_strong_resolving_set(g, {0})

    def test_metric_dimension_values(self):
        assert metric_dimension(path(6))[0] == 1
        assert metric_dimension(complete(5))[0] == 4
        assert metric_dimension(spider(2, 2, 1))[0] == 2
        assert metric_dimension(cycle(7))[0] == 2
        assert metric_dimension(petersen())[0] == 3

    def test_metric_dimension_witness_resolves(self):
        rng = random.Random(2)
        for _ in range(25):
            g = random_connected(rng.randint(2, 7), rng)
            k, witness = metric_dimension(g)
            assert len(witness) == k and is_resolving_set(g, witness)
            for smaller in itertools.combinations(range(g.n), k - 1):
                assert not is_resolving_set(g, smaller)

    def test_metric_dimension_limit(self):
        with pytest.raises(LimitExceededError):
            metric_dimension(cycle(15), limit=14)


class TestGeodesics:
    def test_examples(self):
        dm = all_pairs_distances(path(4))
        assert lies_on_geodesic(dm, 0, 1, 3)
        assert lies_on_geodesic(dm, 0, 0, 3)
        assert not lies_on_geodesic(dm, 0, 3, 1)
        dmc = all_pairs_distances(cycle(4))
        assert lies_on_geodesic(dmc, 0, 1, 2)
        assert lies_on_geodesic(dmc, 0, 3, 2)

    def test_strong_resolving_examples(self):
        assert is_strong_resolving_set(path(7), {0})
        assert is_strong_resolving_set(complete(4), {0, 1, 2})
        assert not is_strong_resolving_set(complete(4), {0, 1})
        for g in (cycle(6), petersen()):
            assert is_strong_resolving_set(g, set(range(g.n)))

    def test_strong_implies_resolving(self):
        rng = random.Random(9)
        for _ in range(30):
            g = random_connected(rng.randint(2, 7), rng)
            subset = {v for v in range(g.n) if rng.random() < 0.5}
            if is_strong_resolving_set(g, subset):
                assert is_resolving_set(g, subset)


class TestMMD:
    def test_path_endpoints(self):
        p = path(5)
        dm = all_pairs_distances(p)
        assert is_maximally_distant(p, dm, 0, 4)
        assert not is_maximally_distant(p, dm, 2, 0)

    def test_c5_distance_two(self):
        c5 = cycle(5)
        dm = all_pairs_distances(c5)
        # derived: neighbors of 0 are 1 and 4; both at distance <= 2 from 2
        assert dm.d(1, 2) <= dm.d(0, 2) and dm.d(4, 2) <= dm.d(0, 2)
        assert is_maximally_distant(c5, dm, 0, 2)

    def test_mmd_pairs_match_oracle(self):
        rng = random.Random(31)
        graphs = [path(5), cycle(6), petersen(), star(4)]
        graphs += [random_connected(rng.randint(2, 8), rng) for _ in range(20)]
        for g in graphs:
            assert mmd_pairs(g) == frozenset(mmd_oracle(g))


class TestSrGraph:
    def test_path_core_is_single_edge(self):
        for n in (2, 5, 9):
            sr = strong_resolving_graph(path(n))
            assert sr.core.n == 2 and sr.core.m == 1
            assert sr.parent_vertices == {0, n - 1}

    def test_cycles(self):
        sr = strong_resolving_graph(cycle(8))
        assert sr.core.n == 8 and sorted(sr.core.degree_sequence) == [1] * 8
        sr = strong_resolving_graph(cycle(7))
        assert are_isomorphic(sr.core, cycle(7))

    def test_ladder(self):
        for m in (3, 4):
            sr = strong_resolving_graph(cartesian(path(m), complete(2)))
            assert sr.core.n == 4 and sr.core.m == 2

    def test_petersen_core_is_complement(self):
        g = petersen()
        sr = strong_resolving_graph(g)
        oracle_edges = mmd_oracle(g)
        assert sr.parent_edges() == frozenset(oracle_edges)
        assert are_isomorphic(sr.core, complement(g))

    def test_rejects_k1_and_disconnected(self):
        with pytest.raises(ValueError):
            strong_resolving_graph(Graph(1))
        with pytest.raises(DisconnectedGraphError):
            strong_resolving_graph(disjoint_union(complete(2), complete(2)))

    def test_no_isolated_core_vertices(self):
        rng = random.Random(13)
        for _ in range(25):
            sr = strong_resolving_graph(random_connected(rng.randint(2, 7), rng))
            assert all(sr.core.degree(v) >= 1 for v in range(sr.core.n))

    def test_path_shaped_core_minus_center_is_matching(self):
        # removing the middle vertex of a 5-path core leaves two disjoint
        # edges: the residue Maker pairs up after opening on the center
        from srgame.graphs import classify_shape, induced_subgraph

        core = path(5)
        residue, _ = induced_subgraph(core, [0, 1, 3, 4])
        assert classify_shape(residue).counts() == {"K2": 2}


class TestVertexCover:
    def test_known_values(self):
        assert min_vertex_cover(complete(4))[0] == 3
        assert min_vertex_cover(Graph(8, frozenset((2 * i, 2 * i + 1) for i in range(4))))[0] == 4
        assert min_vertex_cover(cycle(5))[0] == 3
        assert min_vertex_cover(Graph(3))[0] == 0

    def test_witness_covers(self):
        rng = random.Random(23)
        for _ in range(40):
            n = rng.randint(2, 9)
            g = Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)
                                   if rng.random() < 0.4))
            size, cover = min_vertex_cover(g)
            assert len(cover) == size
            assert all(u in cover or v in cover for u, v in g.edges)

    def test_matches_brute_force(self):
        rng = random.Random(29)
        for _ in range(30):
            n = rng.randint(2, 7)
            g = Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)
                                   if rng.random() < 0.5))
            brute = min(
                (len(s) for k in range(n + 1)
                 for s in itertools.combinations(range(n), k)
                 if all(u in s or v in s for u, v in g.edges)),
                default=0)
            assert min_vertex_cover(g)[0] == brute

    def test_limit(self):
        with pytest.raises(LimitExceededError):
            min_vertex_cover(complete(8), limit=7)


class TestStrongDimension:
    def test_named_values(self):
        assert strong_metric_dimension(petersen())[0] == 8
        assert strong_metric_dimension(cycle(7))[0] == 4
        assert strong_metric_dimension(spider(1, 1, 1))[0] == 2
        assert strong_metric_dimension(complete(6))[0] == 5

    def test_witness_strongly_resolves_and_is_minimum(self):
        rng = random.Random(41)
        for _ in range(30):
            g = random_connected(rng.randint(2, 7), rng)
            size, witness = strong_metric_dimension(g)
            assert is_strong_resolving_set(g, witness)
            assert size == brute_sdim(g)

    def test_strong_set_iff_cover_random_n7_n8(self):
        rng = random.Random(43)
        for _ in range(25):
            g = random_connected(rng.choice((7, 8)), rng)
            sr = strong_resolving_graph(g)
            cover_masks = [(1 << sr.to_parent[u]) | (1 << sr.to_parent[v])
                           for u, v in sr.core.edges]
            masks = strong_resolving_witness_masks(g)
            for _ in range(60):
                s = rng.getrandbits(g.n)
                strong = all(s & w for w in masks)
                covers = all(s & cm for cm in cover_masks)
                assert strong == covers


class TestTwins:
    def test_star_leaf_block(self):
        tp = twin_partition(star(4))
        big = [b for b in tp.blocks if len(b) == 4]
        assert big and tp.tags[tp.blocks.index(big[0])] == "non-adjacent-twins"

    def test_path_all_singletons(self):
        tp = twin_partition(path(5))
        assert all(t == "singleton" for t in tp.tags)

    def test_complete_one_block(self):
        tp = twin_partition(complete(4))
        assert len(tp.blocks) == 1 and tp.tags[0] == "adjacent-twins"

    def test_blocks_partition(self):
        rng = random.Random(47)
        for _ in range(25):
            n = rng.randint(1, 8)
            g = Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)
                                   if rng.random() < 0.5))
            tp = twin_partition(g)
            seen = sorted(v for b in tp.blocks for v in b)
            assert seen == list(range(n))

    def test_twin_free_clique_number(self):
        assert twin_free_clique_number(complete(6)) == 1
        assert twin_free_clique_number(path(4)) == 2
        assert twin_free_clique_number(petersen()) == 2
        assert twin_free_clique_number(cycle(6)) == 2


class TestBoundary:
    def test_examples(self):
        assert boundary_vertices(path(5)) == {0, 4}
        assert boundary_vertices(cycle(6)) == frozenset(range(6))
        assert boundary_vertices(star(3)) == {1, 2, 3}

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            boundary_vertices(disjoint_union(complete(2), complete(2)))


class TestSdimBounds:
    def test_range_and_extremes_small(self):
        # equality cases: 1 exactly for paths, n-1 exactly for completes
        rng = random.Random(53)
        for _ in range(40):
            g = random_connected(rng.randint(2, 7), rng)
            sdim = strong_metric_dimension(g)[0]
            assert 1 <= sdim <= g.n - 1
            degs = sorted(g.degree_sequence)
            is_path = degs == [1, 1] + [2] * (g.n - 2)
            is_complete = g.m == g.n * (g.n - 1) // 2
            assert (sdim == 1) == is_path
            assert (sdim == g.n - 1) == is_complete

    def test_n_minus_2_characterization_n7_sample(self):
        rng = random.Random(59)
        for _ in range(60):
            g = random_connected(7, rng)
            sdim = strong_metric_dimension(g)[0]
            cond = (all_pairs_distances(g).diameter == 2
                    and twin_free_clique_number(g) == 2)
            assert (sdim == 5) == cond

    def test_unbounded_ratio_family(self):
        # even cycles sit inside ladders yet have much larger strong dimension
        for m in (3, 4, 5, 6):
            assert strong_metric_dimension(cycle(2 * m))[0] == m
            assert strong_metric_dimension(cartesian(path(m), complete(2)))[0] == 2
