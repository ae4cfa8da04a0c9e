import pytest

from srgame.families import (
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
from srgame.graphs import all_pairs_distances, are_isomorphic, is_connected


def girth(g):
    # shortest cycle by BFS from every root
    best = None
    for src in range(g.n):
        dist = {src: 0}
        parent = {src: None}
        frontier = [src]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif parent[u] != w:
                        length = dist[u] + dist[w] + 1
                        if best is None or length < best:
                            best = length
            frontier = nxt
    return best


def test_basic_families():
    assert path(1).n == 1
    assert path(6).m == 5
    assert cycle(3).m == 3
    assert complete(5).m == 10
    assert edgeless(3).m == 0
    assert star(4) == complete_multipartite([1, 4]) or star(4).m == 4


def test_bad_parameters():
    with pytest.raises(ValueError):
        cycle(2)
    with pytest.raises(ValueError):
        path(0)
    with pytest.raises(ValueError):
        complete_multipartite([])
    with pytest.raises(ValueError):
        spider()
    with pytest.raises(ValueError):
        spider(0, 1)


def test_petersen_structure():
    g = petersen()
    assert g.n == 10 and g.m == 15
    assert set(g.degree_sequence) == {3}
    assert girth(g) == 5
    assert all_pairs_distances(g).diameter == 2


def test_petersen_labeling_fixed():
    g = petersen()
    for i in range(5):
        assert g.has_edge(i, (i + 1) % 5)
        assert g.has_edge(i, i + 5)
        assert g.has_edge(5 + i, 5 + (i + 2) % 5)


def test_spider_shapes():
    assert are_isomorphic(spider(1, 1, 1), star(3))
    s = spider(2, 2, 1)
    assert s.n == 6 and s.degree(0) == 3


def test_spider_parameter_order_irrelevant():
    assert spider(1, 2, 2) == spider(2, 2, 1) == spider(2, 1, 2)


def test_spider_with_few_legs_degenerates_to_path():
    assert are_isomorphic(spider(3, 2), path(6))


def test_tree_from_parents():
    assert are_isomorphic(tree_from_parents([None, 0, 1, 2]), path(4))
    assert are_isomorphic(tree_from_parents([None, 0, 0, 0]), star(3))


def test_tree_from_parents_rejects_cycles_and_forests():
    with pytest.raises(ValueError):
        tree_from_parents([None, 2, 1])
    with pytest.raises(ValueError):
        tree_from_parents([None, 0, None])
    with pytest.raises(ValueError):
        tree_from_parents([None, 5])


def test_tree_stats_path():
    st = tree_stats(path(7))
    assert st.sigma == 2 and st.ex == 0 and st.terminal_degrees == {}


def test_tree_stats_spider():
    st = tree_stats(spider(2, 2, 1))
    assert st.sigma == 3 and st.ex == 1
    assert st.terminal_degrees == {0: 3}


def test_tree_stats_star():
    st = tree_stats(spider(1, 1, 1, 1))
    assert st.sigma == 4 and st.ex == 1


def test_tree_stats_caterpillar_from_parents():
    t = tree_from_parents([None, 0, 0, 1, 1])
    st = tree_stats(t)
    assert st.sigma == sum(1 for v in range(t.n) if t.degree(v) == 1) == 3


def test_tree_stats_two_majors():
    # two branch vertices joined by a path: 0 keeps leaves 1,2 and 4 keeps 5,6,7
    t = tree_from_parents([None, 0, 0, 0, 3, 4, 4, 4])
    st = tree_stats(t)
    assert st.ex == 2
    assert sorted(st.terminal_degrees.values()) == [2, 3]
    assert st.sigma == 5


def test_tree_stats_rejects_non_roots():
    with pytest.raises(ValueError):
        tree_stats(cycle(4))
    with pytest.raises(ValueError):
        tree_stats(edgeless(1))


def test_generators_deterministic():
    assert petersen() == petersen()
    assert spider(2, 2, 1) == spider(2, 2, 1)
    assert complete_multipartite([2, 3]) == complete_multipartite([2, 3])
    assert is_connected(spider(4, 4, 4))
