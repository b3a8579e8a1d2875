import pytest

from pebblebench.exception import VertexRangeError
from pebblebench.game.position import (EMPTY_POSITION, add_pair,
                                       is_partial_isomorphism, lift_options,
                                       make_position, pack, pebbled,
                                       position_pairs, remove_pair,
                                       responses, unpack)
from pebblebench.graph import Graph, build
from pebblebench.graphconstant import Family, Side

K2 = build(Family.COMPLETE, n=2)
K3 = build(Family.COMPLETE, n=3)
P3 = build(Family.PATH, ell=3)


def test_pack():
    assert unpack(pack(5, 63)) == (5, 63)
    assert pack(0, 1) < pack(1, 0)


def test_positions_are_sets():
    a = make_position([(1, 0), (0, 1), (1, 0)])
    assert a == make_position([(0, 1), (1, 0)])
    assert position_pairs(a) == [(0, 1), (1, 0)]
    assert make_position([]) == EMPTY_POSITION


def test_add_remove_pair():
    position = make_position([(0, 0)])
    position = add_pair(position, pack(2, 1))
    assert position == make_position([(2, 1), (0, 0)])
    assert add_pair(position, pack(0, 0)) == position
    assert remove_pair(position, pack(0, 0)) == make_position([(2, 1)])


def test_partial_isomorphism():
    assert is_partial_isomorphism(K3, K2, [])
    assert is_partial_isomorphism(K3, K2, [(0, 0), (1, 1)])
    assert is_partial_isomorphism(K3, K2, make_position([(2, 1)]))
    # same vertex of G sent to two vertices of H
    assert not is_partial_isomorphism(K3, K2, [(0, 0), (0, 1)])
    # two vertices of G sent to one vertex of H
    assert not is_partial_isomorphism(K3, K2, [(0, 0), (1, 0)])
    # non-edge of P3 sent to an edge of K3
    assert not is_partial_isomorphism(P3, K3, [(0, 0), (2, 2)])
    assert is_partial_isomorphism(P3, K3, [(0, 0), (1, 2)])


def test_partial_isomorphism_range():
    with pytest.raises(VertexRangeError):
        is_partial_isomorphism(K3, K2, [(0, 2)])


def test_responses():
    assert responses(K3, K2, EMPTY_POSITION, Side.G, 0) == [0, 1]
    position = make_position([(0, 0), (1, 1)])
    assert responses(K3, K2, position, Side.G, 2) == []
    assert responses(K3, K2, position, Side.G, 1) == [1]
    assert responses(K3, K2, make_position([(0, 0)]), Side.H, 1) == [1, 2]


def test_responses_follow_non_edges():
    position = make_position([(0, 0)])
    # vertex 2 of P3 is not adjacent to 0, K3 has no such vertex but 0
    assert responses(P3, K3, position, Side.G, 2) == []
    assert responses(P3, K3, position, Side.G, 1) == [1, 2]


def test_responses_match_definition():
    g = build(Family.SPARKLER, q=4, p=2)
    h = build(Family.BROKEN_FAN, n=6)
    position = make_position([(0, 4), (5, 3)])
    assert is_partial_isomorphism(g, h, position)
    for side in Side:
        graph = g if side is Side.G else h
        other = h if side is Side.G else g
        for v in graph.vertices():
            expected = []
            for w in other.vertices():
                pair = (v, w) if side is Side.G else (w, v)
                if is_partial_isomorphism(g, h, position_pairs(position) +
                                          [pair]):
                    expected.append(w)
            assert responses(g, h, position, side, v) == expected


def test_pebbled():
    position = make_position([(0, 1), (2, 0)])
    assert pebbled(position, Side.G) == 0b101
    assert pebbled(position, Side.H) == 0b11
    assert pebbled(EMPTY_POSITION, Side.G) == 0


def test_lift_options():
    position = make_position([(0, 1), (2, 0)])
    assert lift_options(position, 3) == [(position, None)]
    options = lift_options(position, 2)
    assert len(options) == 2
    for base, lifted in options:
        assert len(base) == 1
        assert add_pair(base, lifted) == position


def test_empty_graph_has_no_response():
    assert responses(Graph(1), Graph(0), EMPTY_POSITION, Side.G, 0) == []
