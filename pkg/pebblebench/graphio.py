'''Graph files

Two formats are supported:

- the edge list: a first line `n m`, then `m` lines `u v` with 0-based
  vertex indices. Blank lines and `#` comments are ignored.
- graph6, delegated to networkx so that files interoperate with the usual
  graph corpora.

`read_graph` and `write_graph` pick the format from the file suffix
(`.g6`, `.graph6`) unless it is given explicitly.
'''
import logging

import networkx as nx
from path import Path

from pebblebench.exception import GraphFormatError, PebbleBenchError
from pebblebench.graph import Graph
from pebblebench.graphconstant import GRAPH6_SUFFIXES, GraphFormat

logger = logging.getLogger()


def parse_edge_list(text):
    '''Parse an edge list

    Args:
        text (str): Edge list content

    Returns:
        Graph

    Raises:
        GraphFormatError: Malformed header, line or edge count
    '''
    rows = []
    for number, line in enumerate(text.splitlines(), 1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            values = None
        if values is None or len(values) != 2:
            msg = "Line %d: expected two integers, got '%s'" % (number, line)
            logger.error(msg)
            raise GraphFormatError(msg)
        rows.append(values)

    if not rows:
        msg = "Edge list is empty, expected a 'n m' header"
        logger.error(msg)
        raise GraphFormatError(msg)

    (n, m), edges = rows[0], rows[1:]
    if n < 0 or m != len(edges):
        msg = "Header announces %d vertices and %d edges, found %d edges" % (
            n, m, len(edges))
        logger.error(msg)
        raise GraphFormatError(msg)

    try:
        return Graph(n, edges)
    except PebbleBenchError as e:
        msg = "Invalid edge list: %s" % e
        logger.error(msg)
        raise GraphFormatError(msg) from e


def format_edge_list(g):
    lines = ['{} {}'.format(g.vertex_count, g.edge_count)]
    lines.extend('{} {}'.format(u, v) for u, v in g.edges())
    return '\n'.join(lines) + '\n'


def to_graph6(g):
    '''Return the graph6 string of `g`, without header nor newline'''
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode(
        'ascii').strip()


def from_graph6(text):
    '''Decode a graph6 string (an optional `>>graph6<<` header is accepted)'''
    data = text.strip()
    try:
        return Graph.from_networkx(nx.from_graph6_bytes(data.encode('ascii')))
    except (ValueError, IndexError, UnicodeEncodeError,
            nx.NetworkXError) as e:
        msg = "Invalid graph6 string '%s': %s" % (data, e)
        logger.error(msg)
        raise GraphFormatError(msg) from e


def guess_format(filepath):
    if Path(filepath).ext.lower() in GRAPH6_SUFFIXES:
        return GraphFormat.GRAPH6
    return GraphFormat.EDGE_LIST


def read_graph(filepath, fmt=None):
    '''Read a graph file

    Args:
        filepath (str): File to read
        fmt (GraphFormat): Format, guessed from the suffix if None

    Returns:
        Graph
    '''
    filepath = Path(filepath)
    fmt = GraphFormat(fmt) if fmt else guess_format(filepath)
    if not filepath.isfile():
        msg = "Graph file %s not found" % filepath
        logger.error(msg)
        raise GraphFormatError(msg)

    with filepath.open() as f:
        text = f.read()
    logger.debug("Reading %s as %s", filepath, fmt.value)
    if fmt is GraphFormat.GRAPH6:
        return from_graph6(text)
    return parse_edge_list(text)


def dumps_graph(g, fmt=GraphFormat.EDGE_LIST):
    if GraphFormat(fmt) is GraphFormat.GRAPH6:
        return to_graph6(g) + '\n'
    return format_edge_list(g)


def write_graph(g, filepath, fmt=None):
    filepath = Path(filepath)
    fmt = GraphFormat(fmt) if fmt else guess_format(filepath)
    with filepath.open('w') as f:
        f.write(dumps_graph(g, fmt))
    logger.debug("Wrote %s as %s", filepath, fmt.value)
