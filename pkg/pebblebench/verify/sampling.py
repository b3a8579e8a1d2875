'''Graph sampling and enumeration for the scenarios

Random connected graphs are Erdos-Renyi graphs conditioned on
connectivity by rejection, with the edge probability drawn from
`EDGE_PROBABILITIES` unless given. Every scenario owns a numpy generator
seeded from `(seed, crc32(scenario id))`.
'''
import logging
import zlib

import networkx as nx
import numpy as np

from pebblebench.exception import InvalidParameterError
from pebblebench.graph import Graph, is_connected, is_isomorphic, relabel
from pebblebench.util import iter_bits

logger = logging.getLogger()

EDGE_PROBABILITIES = (0.1, 0.2, 0.3, 0.4, 0.5)
MAX_REJECTIONS = 10000


def scenario_rng(seed, scenario_id):
    '''Independent random stream for one scenario'''
    return np.random.default_rng([seed, zlib.crc32(scenario_id.encode())])


def random_graph(rng, n, p):
    '''G(n, p) graph'''
    rows, cols = np.triu_indices(n, k=1)
    keep = rng.random(len(rows)) < p
    return Graph(n, zip(rows[keep].tolist(), cols[keep].tolist()))


def random_connected_graph(rng, n, p=None):
    '''G(n, p) graph conditioned on being connected

    Raises:
        InvalidParameterError: No connected sample after `MAX_REJECTIONS`
    '''
    for _ in range(MAX_REJECTIONS):
        prob = p if p is not None else rng.choice(EDGE_PROBABILITIES)
        g = random_graph(rng, n, prob)
        if is_connected(g):
            return g
    msg = "No connected G(%d, %s) sample after %d tries" % (
        n, p, MAX_REJECTIONS)
    logger.error(msg)
    raise InvalidParameterError(msg)


def random_tree(rng, n):
    '''Random recursive tree: vertex v hangs from a uniform earlier vertex'''
    return Graph(n, [(int(rng.integers(v)), v) for v in range(1, n)])


def random_spider(rng, legs, max_leg):
    '''Centre 0 with `legs` paths of 1..`max_leg` vertices each'''
    edges = []
    count = 1
    for _ in range(legs):
        leg = list(range(count, count + int(rng.integers(1, max_leg + 1))))
        edges.extend(zip([0] + leg, leg))
        count += len(leg)
    return Graph(count, edges)


def random_star_path_graph(rng, q, length, extra=3):
    '''Connected graph holding a path on `length` vertices and a K_{1,q}

    The path is 0..length-1. The star centre is a path vertex or the end
    of a short path hanging from one, up to `extra` pendant vertices and
    up to `extra` chords are added at random.
    '''
    edges = set(zip(range(length - 1), range(1, length)))
    n = length
    centre = int(rng.integers(length))
    for _ in range(int(rng.integers(0, 3))):
        edges.add((centre, n))
        centre, n = n, n + 1
    for _ in range(q):
        edges.add((centre, n))
        n += 1
    for _ in range(int(rng.integers(0, extra + 1))):
        edges.add((int(rng.integers(n)), n))
        n += 1
    for _ in range(int(rng.integers(0, extra + 1))):
        u, v = sorted(int(x) for x in rng.choice(n, 2, replace=False))
        edges.add((u, v))
    return Graph(n, edges)


def random_permutation(rng, n):
    return rng.permutation(n).tolist()


def relabeled(rng, g):
    '''Isomorphic copy of `g` under a random vertex permutation'''
    return relabel(g, random_permutation(rng, g.vertex_count))


def flip_edge(rng, g):
    '''Copy of `g` with one random vertex pair toggled'''
    rows, cols = np.triu_indices(g.vertex_count, k=1)
    i = int(rng.integers(len(rows)))
    u, v = int(rows[i]), int(cols[i])
    edges = set(g.edges())
    edges.symmetric_difference_update({(u, v)})
    return Graph(g.vertex_count, edges)


def random_nonisomorphic_pair(rng, n):
    '''Two non-isomorphic graphs on `n` >= 2 vertices

    Half of the draws are independent, half differ in one vertex pair.

    Raises:
        InvalidParameterError: `n` < 2, all graphs are isomorphic
    '''
    if n < 2:
        msg = "Non-isomorphic pairs need at least 2 vertices, got %d" % n
        logger.error(msg)
        raise InvalidParameterError(msg)
    while True:
        a = random_graph(rng, n, rng.choice(EDGE_PROBABILITIES))
        if rng.random() < 0.5:
            b = random_graph(rng, n, rng.choice(EDGE_PROBABILITIES))
        else:
            b = flip_edge(rng, a)
        if not is_isomorphic(a, b):
            return a, b


def labeled_graphs(n):
    '''Yield every labeled graph on `n` vertices, one per bit mask of the
    vertex pairs'''
    rows, cols = np.triu_indices(n, k=1)
    pairs = list(zip(rows.tolist(), cols.tolist()))
    for bits in range(2 ** len(pairs)):
        yield Graph(n, [pairs[i] for i in iter_bits(bits)])


def connected_graphs(n):
    return (g for g in labeled_graphs(n) if is_connected(g))


def dedupe_isomorphic(graphs):
    '''Keep one graph per isomorphism class, in input order

    Graphs are bucketed by Weisfeiler-Leman hash and compared exactly
    inside a bucket.
    '''
    buckets = {}
    unique = []
    for g in graphs:
        key = (g.vertex_count,
               nx.weisfeiler_lehman_graph_hash(g.to_networkx()))
        bucket = buckets.setdefault(key, [])
        if not any(is_isomorphic(g, other) for other in bucket):
            bucket.append(g)
            unique.append(g)
    return unique


def connected_corpus(max_vertices, min_vertices=1):
    '''Connected graphs up to isomorphism on min..max vertices'''
    corpus = []
    for n in range(min_vertices, max_vertices + 1):
        corpus.extend(dedupe_isomorphic(connected_graphs(n)))
    return corpus
