import json

from srgame.verify import (
    CheckResult,
    VerifyConfig,
    check_classifier_random,
    check_small_graph_sweep,
    connected_labeled_graphs,
    find_pairing_cover,
    find_quasi_pairing_cover,
    iter_pairings,
    labeled_graphs,
    random_connected_graph,
    random_tree,
    run_verification,
    summarize,
)
from srgame.families import tree_stats
from srgame.graphs import is_connected
from srgame.resolving import sr_from_parent_edges

import random


def test_labeled_graph_counts():
    assert sum(1 for _ in labeled_graphs(3)) == 8
    assert sum(1 for _ in connected_labeled_graphs(3)) == 4
    assert sum(1 for _ in connected_labeled_graphs(4)) == 38


def test_random_generators_deterministic():
    a = random_connected_graph(7, random.Random(5))
    b = random_connected_graph(7, random.Random(5))
    assert a == b and is_connected(a)
    t1 = random_tree(9, random.Random(6))
    t2 = random_tree(9, random.Random(6))
    assert t1 == t2 and t1.m == 8
    assert tree_stats(t1).sigma >= 2


def test_iter_pairings_counts():
    # involution numbers: 1, 1, 2, 4, 10, 26, 76
    for k, expect in [(0, 1), (2, 2), (4, 10), (6, 76)]:
        assert sum(1 for _ in iter_pairings(k)) == expect


def test_pairing_searches():
    sr = sr_from_parent_edges(4, [(0, 1), (2, 3)])
    assert find_pairing_cover(sr) is not None
    sr = sr_from_parent_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert find_pairing_cover(sr) is None
    assert find_quasi_pairing_cover(sr) is not None
    sr = sr_from_parent_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert find_quasi_pairing_cover(sr) is None


def test_sweep_small_orders_pass():
    results = check_small_graph_sweep(VerifyConfig(max_sweep_n=4))
    assert results and all(r.passed for r in results)


def test_classifier_random_deterministic():
    cfg = VerifyConfig(random_samples=200, seed=99)
    first = check_classifier_random(cfg)
    second = check_classifier_random(cfg)
    assert [r.computed for r in first] == [r.computed for r in second]
    assert all(r.passed for r in first)


def test_run_verification_subset_and_lines():
    results = run_verification(["realization"], VerifyConfig())
    assert all(r.passed for r in results)
    rec = json.loads(results[0].line())
    assert set(rec) == {"claim_id", "instance", "expected", "computed", "pass", "millis"}
    text = summarize(results)
    assert "realization/orders" in text


def test_run_verification_parallel_matches_sequential():
    names = ["realization", "pair-witnesses"]
    seq = run_verification(names, VerifyConfig())
    par = run_verification(names, VerifyConfig(), workers=2)
    assert [(r.claim, r.instance, r.passed) for r in seq] == \
        [(r.claim, r.instance, r.passed) for r in par]


def test_summarize_flags_failures():
    results = [CheckResult("demo/claim", "x", "1", "2", False, 0.1)]
    assert "FAIL" in summarize(results)
