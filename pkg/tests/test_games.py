import itertools
import random

import pytest

from srgame.families import complete, complete_multipartite, cycle, path, petersen, spider, star
from srgame.games import (
    MakerBreakerSolver,
    Outcome,
    Player,
    WinSystem,
    compare_outcomes,
    cover_game_outcome,
    is_pairing_vertex_cover,
    is_quasi_pairing_vertex_cover,
    outcome_rg_exact,
    outcome_srg_classifier,
    outcome_srg_exact,
    resolving_game_system,
    solve_mb,
    srg_cover_system,
    system_outcome,
    transversal_system,
    vertex_cover_system,
)
from srgame.graphs import Graph, LimitExceededError, is_connected
from srgame.resolving import sr_from_parent_edges, strong_resolving_graph


def sr_of(core_edges, n):
    return sr_from_parent_edges(n, core_edges)


def random_connected(n, rng):
    while True:
        g = Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)
                               if rng.random() < 0.5))
        if is_connected(g):
            return g


class TestSolver:
    def test_single_edge_cover_game(self):
        sys = vertex_cover_system(complete(2))
        assert solve_mb(sys, Player.MAKER) is Player.MAKER
        assert solve_mb(sys, Player.BREAKER) is Player.MAKER

    def test_p3_cover_game_breaker_first(self):
        sys = vertex_cover_system(path(3))
        assert solve_mb(sys, Player.MAKER) is Player.MAKER
        assert solve_mb(sys, Player.BREAKER) is Player.BREAKER

    def test_triangle_cover_game_first_player_wins(self):
        sys = vertex_cover_system(complete(3))
        assert solve_mb(sys, Player.MAKER) is Player.MAKER
        assert solve_mb(sys, Player.BREAKER) is Player.BREAKER

    def test_board_limit(self):
        with pytest.raises(LimitExceededError):
            solve_mb(vertex_cover_system(cycle(21)), Player.MAKER, limit=20)

    def test_generic_callable_system(self):
        # Maker claims both endpoints of some edge of C4.  Whoever moves
        # second, Maker grabs a vertex antipodal to Breaker's and owns a
        # double threat, so Maker wins both orders; this is the role-swapped
        # dual of the vertex-cover game on C4 being a Breaker win.
        edges = [(0, 1), (1, 2), (2, 3), (0, 3)]

        def maker_done(m):
            return any(m >> u & 1 and m >> v & 1 for u, v in edges)

        def breaker_done(b):
            return all(b >> u & 1 or b >> v & 1 for u, v in edges)

        sys = WinSystem(4, maker_done, breaker_done)
        assert solve_mb(sys, Player.MAKER) is Player.MAKER
        assert solve_mb(sys, Player.BREAKER) is Player.MAKER
        assert cover_game_outcome(cycle(4)) is Outcome.B

    def test_move_order_never_changes_value(self):
        rng = random.Random(61)
        for _ in range(20):
            g = random_connected(rng.randint(2, 6), rng)
            sr = strong_resolving_graph(g)
            masks = [(1 << u) | (1 << v) for u, v in sr.core.edges]
            base = system_outcome(transversal_system(sr.core.n, masks))
            for _ in range(3):
                rng.shuffle(masks)
                assert system_outcome(transversal_system(sr.core.n, masks)) == base

    def test_best_move_engine_vs_engine_matches_value(self):
        for g in (star(3), cycle(4), cycle(5), spider(2, 2, 1)):
            sr = strong_resolving_graph(g)
            system = srg_cover_system(sr, board="parent")
            solver = MakerBreakerSolver(system)
            for first in (Player.MAKER, Player.BREAKER):
                declared = solver.winner(first)
                maker = breaker = 0
                to_move = first
                while solver.status(maker, breaker) is None:
                    v = solver.best_move(maker, breaker, to_move is Player.MAKER)
                    if to_move is Player.MAKER:
                        maker |= 1 << v
                        to_move = Player.BREAKER
                    else:
                        breaker |= 1 << v
                        to_move = Player.MAKER
                assert solver.status(maker, breaker) is declared


class TestOutcomes:
    def test_outcome_ordering(self):
        assert Outcome.B < Outcome.N < Outcome.M
        assert max(Outcome.B, Outcome.M) is Outcome.M

    def test_strong_game_examples(self):
        assert outcome_srg_exact(cycle(4)) is Outcome.M
        assert outcome_srg_exact(star(3)) is Outcome.N
        assert outcome_srg_exact(petersen()) is Outcome.B
        assert outcome_srg_exact(path(9)) is Outcome.M

    def test_resolving_game_examples(self):
        assert outcome_rg_exact(path(8)) is Outcome.M
        assert outcome_rg_exact(spider(2, 2, 1)) is Outcome.M
        assert outcome_rg_exact(spider(2, 1, 1, 1)) is Outcome.N
        assert outcome_rg_exact(star(4)) is Outcome.B

    def test_multipartite_row(self):
        assert outcome_srg_exact(complete_multipartite([2, 2, 2])) is Outcome.M
        assert outcome_srg_exact(complete_multipartite([1, 1, 1, 2])) is Outcome.N
        assert outcome_srg_exact(complete_multipartite([3, 3])) is Outcome.B

    def test_compare_outcomes_pairs(self):
        assert compare_outcomes(path(6)) == (Outcome.M, Outcome.M)
        assert compare_outcomes(spider(2, 2, 1)) == (Outcome.N, Outcome.M)
        assert compare_outcomes(spider(2, 2, 2, 1)) == (Outcome.B, Outcome.M)
        assert compare_outcomes(spider(2, 1, 1, 1)) == (Outcome.B, Outcome.N)

    def test_k1_rejected(self):
        with pytest.raises(ValueError):
            outcome_srg_exact(Graph(1))


class TestClassifier:
    def test_matching_core(self):
        sr = sr_of([(0, 1), (2, 3), (4, 5), (6, 7), (8, 9)], 10)
        assert outcome_srg_classifier(sr) is Outcome.M

    def test_p5_core(self):
        sr = sr_of([(0, 1), (1, 2), (2, 3), (3, 4)], 5)
        assert outcome_srg_classifier(sr) is Outcome.N

    def test_k4_core(self):
        sr = sr_of([(u, v) for u in range(4) for v in range(u + 1, 4)], 4)
        assert outcome_srg_classifier(sr) is Outcome.B

    def test_c3_plus_matching_core(self):
        sr = sr_of([(0, 1), (1, 2), (0, 2), (3, 4), (5, 6)], 7)
        assert outcome_srg_classifier(sr) is Outcome.N

    def test_hub_over_matching_cores(self):
        # a universal hub joined onto a disjoint matching plus isolated
        # vertices: first player wins for every (a, b) with a >= 1 or b >= 2
        for a, b in [(0, 2), (0, 4), (1, 0), (1, 2), (2, 0), (3, 1), (2, 3)]:
            k = 2 * a + b
            edges = [(0, v) for v in range(1, k + 1)]
            edges += [(2 * i + 1, 2 * i + 2) for i in range(a)]
            sr = sr_of(edges, k + 1)
            assert outcome_srg_classifier(sr) is Outcome.N, (a, b)
            if k + 1 <= 10:
                assert cover_game_outcome(sr.core) is Outcome.N, (a, b)

    def test_two_triangles_core(self):
        sr = sr_of([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)], 6)
        assert outcome_srg_classifier(sr) is Outcome.B

    def test_classifier_matches_exact_randomly_7_to_9(self):
        rng = random.Random(20250811)
        samples = 10000
        for i in range(samples):
            g = random_connected(7 + i % 3, rng)
            sr = strong_resolving_graph(g)
            assert outcome_srg_classifier(sr) == cover_game_outcome(sr.core), \
                f"disagreement on {sorted(g.edges)}"


class TestBoardReduction:
    def test_full_board_equals_core_board(self):
        rng = random.Random(67)
        for _ in range(50):
            g = random_connected(rng.randint(2, 7), rng)
            sr = strong_resolving_graph(g)
            assert (system_outcome(srg_cover_system(sr, "parent"))
                    == system_outcome(srg_cover_system(sr, "core")))


class TestPairingCertificates:
    def test_matching_pairs(self):
        sr = sr_of([(0, 1), (2, 3), (4, 5)], 6)
        assert is_pairing_vertex_cover(sr, [(0, 1), (2, 3), (4, 5)])

    def test_p3_endpoint_pair_fails(self):
        sr = sr_of([(0, 1), (1, 2)], 3)
        assert not is_pairing_vertex_cover(sr, [(0, 2)])

    def test_c4_diagonal_pairs_fail(self):
        # derived by enumerating the four transversals of {{0,2},{1,3}} on
        # the 4-cycle 0-1-2-3: {0,1} leaves edge (2,3) uncovered, etc.
        edges = [(0, 1), (1, 2), (2, 3), (0, 3)]
        uncovered = []
        for t in itertools.product((0, 2), (1, 3)):
            team = set(t)
            uncovered.extend(e for e in edges if team.isdisjoint(e))
        assert uncovered
        sr = sr_of(edges, 4)
        assert not is_pairing_vertex_cover(sr, [(0, 2), (1, 3)])

    def test_quasi_pairing_c3(self):
        sr = sr_of([(0, 1), (1, 2), (0, 2)], 3)
        assert is_quasi_pairing_vertex_cover(sr, [(0, 2)], 1)

    def test_quasi_pairing_p4(self):
        sr = sr_of([(0, 1), (1, 2), (2, 3)], 4)
        assert is_quasi_pairing_vertex_cover(sr, [(2, 3)], 1)

    def test_quasi_pairing_k4_always_fails(self):
        # derived: whatever single pair and helper are chosen, two of the
        # remaining vertices form an uncovered edge in K4
        sr = sr_of([(u, v) for u in range(4) for v in range(u + 1, 4)], 4)
        for pair in itertools.combinations(range(4), 2):
            for v in range(4):
                if v in pair:
                    continue
                assert not is_quasi_pairing_vertex_cover(sr, [pair], v)

    def test_overlapg_pairs_rejected(self):
        sr = sr_of([(0, 1), (2, 3)], 4)
        with pytest.raises(ValueError):
            is_pairing_vertex_cover(sr, [(0, 1), (1, 2)])
        with pytest.raises(ValueError):
            is_quasi_pairing_vertex_cover(sr, [(0, 1)], 1)

    def test_pairing_implies_maker_sweep(self):
        rng = random.Random(71)
        for _ in range(40):
            g = random_connected(rng.randint(2, 6), rng)
            sr = strong_resolving_graph(g)
            edges = sorted(sr.core.edges)
            if is_pairing_vertex_cover(sr, edges if len(set(
                    x for e in edges for x in e)) == 2 * len(edges) else []):
                assert cover_game_outcome(sr.core) is Outcome.M


class TestWinSystemSanity:
    def test_never_both_done_on_reachable(self):
        rng = random.Random(73)
        for _ in range(20):
            g = random_connected(rng.randint(2, 6), rng)
            sys = resolving_game_system(g)
            for _ in range(50):
                claims = rng.getrandbits(g.n)
                maker = claims & rng.getrandbits(g.n)
                breaker = claims & ~maker
                assert not (sys.maker_done(maker) and sys.breaker_done(breaker))

    def test_maker_done_monotone(self):
        g = cycle(5)
        sys = resolving_game_system(g)
        for m in range(1 << g.n):
            if sys.maker_done(m):
                for v in range(g.n):
                    assert sys.maker_done(m | (1 << v))
