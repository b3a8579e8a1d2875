import pytest

from pebblebench.exception import GraphFormatError
from pebblebench.graph import Graph, build, is_isomorphic
from pebblebench.graphconstant import Family, GraphFormat
from pebblebench.graphio import (dumps_graph, format_edge_list, from_graph6,
                                 guess_format, parse_edge_list, read_graph,
                                 to_graph6, write_graph)


def test_parse_edge_list():
    g = parse_edge_list('3 2\n0 1\n1 2\n')
    assert g == Graph(3, [(0, 1), (1, 2)])


def test_parse_edge_list_comments():
    text = '# a path\n3 2\n\n0 1  # first edge\n1 2\n'
    assert parse_edge_list(text) == build(Family.PATH, ell=3)


def test_parse_edge_list_isolated_vertices():
    g = parse_edge_list('4 0\n')
    assert g.vertex_count == 4
    assert g.edge_count == 0


@pytest.mark.parametrize('text', [
    '',
    '# only a comment\n',
    '3\n',
    '3 2\n0 1\n',
    '3 1\n0 1\n1 2\n',
    '3 1\n0 a\n',
    '3 1\n0 3\n',
    '3 1\n1 1\n',
    '3 1\n0 1 2\n',
])
def test_parse_edge_list_errors(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


def test_format_edge_list():
    assert format_edge_list(build(Family.PATH, ell=3)) == '3 2\n0 1\n1 2\n'


def test_graph6():
    assert to_graph6(build(Family.COMPLETE, n=3)) == 'Bw'
    assert from_graph6('Bw') == build(Family.COMPLETE, n=3)
    assert from_graph6('>>graph6<<Bw\n') == build(Family.COMPLETE, n=3)


def test_graph6_keeps_structure():
    g = build(Family.SPARKLER, q=4, p=2)
    assert is_isomorphic(from_graph6(to_graph6(g)), g)


@pytest.mark.parametrize('text', ['é', 'D', 'Dek\nDek', '~??'])
def test_graph6_error(text):
    with pytest.raises(GraphFormatError):
        from_graph6(text)


def test_guess_format():
    assert guess_format('a/b.g6') is GraphFormat.GRAPH6
    assert guess_format('b.GRAPH6') is GraphFormat.GRAPH6
    assert guess_format('b.txt') is GraphFormat.EDGE_LIST
    assert guess_format('b') is GraphFormat.EDGE_LIST


def test_dumps_graph():
    g = build(Family.COMPLETE, n=3)
    assert dumps_graph(g, GraphFormat.GRAPH6) == 'Bw\n'
    assert dumps_graph(g, 'edges') == '3 3\n0 1\n0 2\n1 2\n'


def test_read_write(tmp_path):
    g = build(Family.BROKEN_FAN, n=5)
    for name in ('fan.txt', 'fan.g6'):
        filepath = str(tmp_path / name)
        write_graph(g, filepath)
        assert read_graph(filepath) == g


def test_read_explicit_format(tmp_path):
    filepath = tmp_path / 'k3.dat'
    filepath.write_text('Bw\n')
    assert read_graph(str(filepath), GraphFormat.GRAPH6) == \
        build(Family.COMPLETE, n=3)


def test_read_missing(tmp_path):
    with pytest.raises(GraphFormatError):
        read_graph(str(tmp_path / 'missing.txt'))


def test_read_truncated_graph6(tmp_path):
    filepath = tmp_path / 'broken.g6'
    filepath.write_text('D\n')
    with pytest.raises(GraphFormatError):
        read_graph(str(filepath))
