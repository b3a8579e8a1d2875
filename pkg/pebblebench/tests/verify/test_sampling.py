import pytest
from hypothesis import given, strategies as st

from pebblebench.exception import InvalidParameterError
from pebblebench.graph import (Graph, build, is_connected, is_isomorphic,
                               max_degree)
from pebblebench.graphconstant import Family
from pebblebench.pattern import contains
from pebblebench.verify.sampling import (connected_corpus, connected_graphs,
                                         dedupe_isomorphic, flip_edge,
                                         labeled_graphs,
                                         random_connected_graph,
                                         random_graph,
                                         random_nonisomorphic_pair,
                                         random_spider,
                                         random_star_path_graph, random_tree,
                                         relabeled, scenario_rng)


def test_scenario_rng_is_deterministic():
    a = scenario_rng(0, 'pvv').integers(1 << 30, size=5).tolist()
    b = scenario_rng(0, 'pvv').integers(1 << 30, size=5).tolist()
    assert a == b
    assert a != scenario_rng(1, 'pvv').integers(1 << 30, size=5).tolist()
    assert a != scenario_rng(0, 'phi-s').integers(1 << 30, size=5).tolist()


def test_random_graph_extremes():
    rng = scenario_rng(0, 'test')
    assert random_graph(rng, 5, 0.0) == Graph(5)
    assert random_graph(rng, 5, 1.0) == build(Family.COMPLETE, n=5)
    assert random_graph(rng, 0, 0.5) == Graph(0)


@given(st.integers(0, 1000), st.integers(1, 9))
def test_random_connected_graph(seed, n):
    g = random_connected_graph(scenario_rng(seed, 'test'), n)
    assert g.vertex_count == n
    assert is_connected(g)


@given(st.integers(0, 1000))
def test_relabeled(seed):
    rng = scenario_rng(seed, 'test')
    g = build(Family.SPARKLER, q=4, p=3)
    assert is_isomorphic(relabeled(rng, g), g)


@given(st.integers(0, 1000), st.integers(2, 7))
def test_flip_edge(seed, n):
    rng = scenario_rng(seed, 'test')
    g = random_graph(rng, n, 0.5)
    flipped = flip_edge(rng, g)
    assert len(set(g.edges()) ^ set(flipped.edges())) == 1


@given(st.integers(0, 1000), st.integers(2, 6))
def test_random_nonisomorphic_pair(seed, n):
    a, b = random_nonisomorphic_pair(scenario_rng(seed, 'test'), n)
    assert a.vertex_count == b.vertex_count == n
    assert not is_isomorphic(a, b)


def test_labeled_graphs():
    assert len(list(labeled_graphs(0))) == 1
    assert len(list(labeled_graphs(3))) == 8
    assert len(list(labeled_graphs(4))) == 64
    # labeled connected graphs: 1, 1, 4, 38
    assert [len(list(connected_graphs(n))) for n in range(1, 5)] == \
        [1, 1, 4, 38]


def test_dedupe_isomorphic():
    paths = [Graph(3, [(0, 1), (1, 2)]), Graph(3, [(0, 2), (1, 2)]),
             Graph(3, [(0, 1), (0, 2)])]
    unique = dedupe_isomorphic(paths + [build(Family.COMPLETE, n=3)])
    assert unique == [paths[0], build(Family.COMPLETE, n=3)]


def test_connected_corpus():
    # connected graphs up to isomorphism: 1, 1, 2, 6, 21
    assert len(connected_corpus(4)) == 10
    assert len(connected_corpus(5, min_vertices=5)) == 21


@pytest.mark.parametrize('n', [0, 1])
def test_random_nonisomorphic_pair_too_small(n):
    with pytest.raises(InvalidParameterError):
        random_nonisomorphic_pair(scenario_rng(0, 'test'), n)


@given(st.integers(0, 1000), st.integers(1, 12))
def test_random_tree(seed, n):
    g = random_tree(scenario_rng(seed, 'test'), n)
    assert g.vertex_count == n
    assert g.edge_count == n - 1
    assert is_connected(g)


@given(st.integers(0, 1000), st.integers(3, 6), st.integers(1, 3))
def test_random_spider(seed, legs, max_leg):
    g = random_spider(scenario_rng(seed, 'test'), legs, max_leg)
    assert is_connected(g)
    assert g.edge_count == g.vertex_count - 1
    assert g.degree(0) == legs
    assert legs + 1 <= g.vertex_count <= legs * max_leg + 1
    # no S_{q, max_leg + 1}: legs are too short for the tail
    assert not contains(g, build(Family.SPARKLER, q=3, p=max_leg + 1))


@given(st.integers(0, 1000), st.integers(3, 4), st.integers(4, 12))
def test_random_star_path_graph(seed, q, length):
    g = random_star_path_graph(scenario_rng(seed, 'test'), q, length)
    assert is_connected(g)
    assert max_degree(g) >= q
    assert all(g.has_edge(v, v + 1) for v in range(length - 1))
