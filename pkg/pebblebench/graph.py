'''Graph module

This module contains the `Graph` structure and the generators of every
graph family used by the workbench.

A `Graph` is a finite simple undirected graph over the vertices
`0..vertex_count-1`. Internally each vertex keeps its neighborhood as an
integer bit set, which is what the game solvers work on, and a read-only
numpy adjacency matrix is built on demand for the vectorised helpers.

Graphs are immutable: every operation returns a new graph.

**Note: generators document a fixed vertex layout (see `generate`) so that
        callers can address named vertices such as the centre of a
        sparkler or the twin removed from a lower-bound pair.**
'''
from collections import namedtuple
import logging

import networkx as nx
import numpy as np

from pebblebench.exception import (CapExceededError, InvalidParameterError,
                                   VertexRangeError)
from pebblebench.graphconstant import (
    ATTACH_ROLES, FAMILY_PARAMETERS, ISOMORPHISM_BRUTE_FORCE_LIMIT,
    SOLVER_VERTEX_CAP, Family, GlueRole)
from pebblebench.util import bit_count, iter_bits

logger = logging.getLogger()


class Graph():
    '''Immutable simple undirected graph

    *Exemple:*

    ```
    triangle = Graph(3, [(0, 1), (1, 2), (0, 2)])
    triangle.has_edge(0, 2)  # True
    triangle.adjacency       # 3x3 numpy bool matrix
    ```
    '''

    __slots__ = ('_vertex_count', '_neighbors', '_adjacency')

    def __init__(self, vertex_count, edges=()):
        '''
        *Parameters:*

        - `vertex_count`: Number of vertices (>= 0)
        - `edges`: iterable of `(u, v)` pairs, `u != v`
        '''
        if vertex_count < 0:
            msg = "Vertex count must be nonnegative, got %d" % vertex_count
            logger.error(msg)
            raise InvalidParameterError(msg)

        neighbors = [0] * vertex_count
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                msg = "Edge (%d, %d) out of range for %d vertices" % (
                    u, v, vertex_count)
                logger.error(msg)
                raise VertexRangeError(msg)
            if u == v:
                msg = "Loop on vertex %d is not allowed" % u
                logger.error(msg)
                raise InvalidParameterError(msg)
            neighbors[u] |= 1 << v
            neighbors[v] |= 1 << u

        self._vertex_count = vertex_count
        self._neighbors = tuple(neighbors)
        self._adjacency = None

    @classmethod
    def from_neighbors(cls, neighbors):
        '''Build a graph from a sequence of neighborhood bit sets

        *Parameters:*

        - `neighbors`: `list` of `int`, one bit set per vertex. The
          relation must already be symmetric and irreflexive.
        '''
        graph = cls.__new__(cls)
        graph._vertex_count = len(neighbors)
        graph._neighbors = tuple(neighbors)
        graph._adjacency = None
        return graph

    @classmethod
    def from_networkx(cls, nx_graph):
        '''Convert a networkx graph, vertices taken in sorted order'''
        index = {node: i for i, node in enumerate(sorted(nx_graph.nodes()))}
        edges = [(index[u], index[v]) for u, v in nx_graph.edges() if u != v]
        return cls(len(index), edges)

    def to_networkx(self):
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self._vertex_count))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    @property
    def vertex_count(self):
        return self._vertex_count

    @property
    def neighbors(self):
        '''Tuple of neighborhood bit sets'''
        return self._neighbors

    @property
    def adjacency(self):
        '''Read-only numpy adjacency matrix'''
        if self._adjacency is None:
            matrix = np.zeros((self._vertex_count, self._vertex_count),
                              dtype=bool)
            for u, v in self.edges():
                matrix[u, v] = True
                matrix[v, u] = True
            matrix.flags.writeable = False
            self._adjacency = matrix
        return self._adjacency

    @property
    def edge_count(self):
        return sum(bit_count(mask) for mask in self._neighbors) // 2

    def vertices(self):
        return range(self._vertex_count)

    def edges(self):
        '''Yield every edge once as `(u, v)` with `u < v`'''
        for u, mask in enumerate(self._neighbors):
            for v in iter_bits(mask >> (u + 1)):
                yield u, u + 1 + v

    def has_edge(self, u, v):
        return bool(self._neighbors[u] >> v & 1)

    def degree(self, v):
        return bit_count(self._neighbors[v])

    def degrees(self):
        '''Return the degree vector as a numpy array'''
        return self.adjacency.sum(axis=1)

    def __len__(self):
        return self._vertex_count

    def __eq__(self, other):
        return (isinstance(other, Graph) and
                self._neighbors == other.neighbors)

    def __hash__(self):
        return hash(self._neighbors)

    def __repr__(self):
        return 'Graph[n={}, edges={}]'.format(self._vertex_count,
                                              list(self.edges()))


# ----------
# TUPLES
# ----------
class FamilySpec(namedtuple('FamilySpec', ['family', 'parameters'])):
    '''Declarative description of a graph family member

    `parameters` is a tuple of integers ordered as in
    `graphconstant.FAMILY_PARAMETERS[family]`.
    '''
    __slots__ = ()

    @classmethod
    def of(cls, family, **parameters):
        '''Create a spec from named parameters

        *Exemple:*

        ```
        FamilySpec.of(Family.SPARKLER, q=4, p=2)
        ```
        '''
        try:
            family = Family(family)
        except ValueError as e:
            msg = "Unknown family '%s'" % family
            logger.error(msg)
            raise InvalidParameterError(msg) from e
        names = FAMILY_PARAMETERS[family]
        if set(parameters) != set(names):
            msg = "Family %s needs parameters %s, got %s" % (
                family.value, ', '.join(names), ', '.join(sorted(parameters)))
            logger.error(msg)
            raise InvalidParameterError(msg)
        try:
            values = tuple(int(parameters[name]) for name in names)
        except (TypeError, ValueError) as e:
            msg = "Family %s expects integer parameters: %s" % (
                family.value, e)
            logger.error(msg)
            raise InvalidParameterError(msg) from e
        return cls(family, values)

    def get(self, name):
        return self.parameters[FAMILY_PARAMETERS[self.family].index(name)]

    def as_dict(self):
        return dict(zip(FAMILY_PARAMETERS[self.family], self.parameters))

    def __str__(self):
        return '{}({})'.format(self.family.value, ', '.join(
            '{}={}'.format(k, v) for k, v in self.as_dict().items()))


GraphPair = namedtuple('GraphPair', ['g', 'h'])

SparklerPairLayout = namedtuple('SparklerPairLayout', [
    'a', 'b', 's', 'w', 'u_vertices', 'twins', 'leaves', 'tail',
    'designated_twin'])


# ----------
# FUNCTIONS
# ----------
def check_vertex(g, v):
    '''Raise `VertexRangeError` if `v` is not a vertex of `g`'''
    if not 0 <= v < g.vertex_count:
        msg = "Vertex %d out of range for %d vertices" % (v, g.vertex_count)
        logger.error(msg)
        raise VertexRangeError(msg)


def neighborhood(g, v):
    '''Return N(v) as a frozenset'''
    check_vertex(g, v)
    return frozenset(iter_bits(g.neighbors[v]))


def max_degree(g):
    '''Return the maximum degree, 0 for the empty graph'''
    if not g.vertex_count:
        return 0
    return int(g.degrees().max())


def is_connected(g):
    '''Return True if `g` has at most one connected component'''
    if g.vertex_count == 0:
        return True
    return component_mask(g, 0) == (1 << g.vertex_count) - 1


def component_mask(g, v, forbidden=0):
    '''Return the bit set of the component of `v` avoiding `forbidden`'''
    seen = 1 << v
    frontier = seen
    while frontier:
        reached = 0
        for u in iter_bits(frontier):
            reached |= g.neighbors[u]
        frontier = reached & ~seen & ~forbidden
        seen |= frontier
    return seen


def components(g):
    '''Return the list of connected components as bit sets'''
    result = []
    remaining = (1 << g.vertex_count) - 1
    while remaining:
        v = (remaining & -remaining).bit_length() - 1
        mask = component_mask(g, v)
        result.append(mask)
        remaining &= ~mask
    return result


def induced(g, vertices):
    '''Return the subgraph induced by `vertices`

    Relative vertex order is preserved: the i-th smallest vertex of
    `vertices` becomes vertex i.
    '''
    order = sorted(set(vertices))
    for v in order:
        check_vertex(g, v)
    index = {v: i for i, v in enumerate(order)}
    neighbors = []
    for v in order:
        mask = 0
        for u in iter_bits(g.neighbors[v]):
            if u in index:
                mask |= 1 << index[u]
        neighbors.append(mask)
    return Graph.from_neighbors(neighbors)


def remove_vertex(g, v):
    '''Return G-v with the indices above `v` shifted down by one'''
    check_vertex(g, v)
    return induced(g, [u for u in g.vertices() if u != v])


def disjoint_union(g, h):
    '''Return g + h, the vertices of `h` following those of `g`'''
    offset = g.vertex_count
    return Graph(offset + h.vertex_count, list(g.edges()) + [
        (u + offset, v + offset) for u, v in h.edges()])


def relabel(g, permutation):
    '''Return the copy of `g` where vertex i is renamed `permutation[i]`'''
    if sorted(permutation) != list(range(g.vertex_count)):
        msg = "Relabeling must be a permutation of 0..%d" % (
            g.vertex_count - 1)
        logger.error(msg)
        raise InvalidParameterError(msg)
    return Graph(g.vertex_count, [(permutation[u], permutation[v])
                                  for u, v in g.edges()])


def is_isomorphic(g, h):
    '''Isomorphism oracle

    Graphs up to `ISOMORPHISM_BRUTE_FORCE_LIMIT` vertices are compared by
    an exhaustive search over degree-preserving vertex permutations, larger
    ones with the VF2 matcher of networkx.
    '''
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    if sorted(g.degree(v) for v in g.vertices()) != \
            sorted(h.degree(v) for v in h.vertices()):
        return False
    if g.vertex_count <= ISOMORPHISM_BRUTE_FORCE_LIMIT:
        return _permutation_search(g, h, [], 0)
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())


def _permutation_search(g, h, image, used):
    u = len(image)
    if u == g.vertex_count:
        return True
    for x in h.vertices():
        if used >> x & 1 or h.degree(x) != g.degree(u):
            continue
        if all(g.has_edge(u, w) == h.has_edge(x, y)
               for w, y in enumerate(image)):
            image.append(x)
            if _permutation_search(g, h, image, used | 1 << x):
                return True
            image.pop()
    return False


def attach(g, at, part, glue_point):
    '''Glue a path, star or sparkler onto `g`

    The vertex `glue_point` of `part` is identified with `at`; the other
    vertices of `part` are appended after those of `g`, in the part's own
    layout order.

    Args:
        g (Graph): Host graph
        at (int): Vertex of `g`
        part (FamilySpec): Path, star or sparkler
        glue_point (GlueRole): Vertex of the part identified with `at`

    Returns:
        Graph
    '''
    check_vertex(g, at)
    glue_point = GlueRole(glue_point)
    if glue_point not in ATTACH_ROLES.get(part.family, ()):
        msg = "Cannot glue %s by its %s" % (part.family.value,
                                            glue_point.value)
        logger.error(msg)
        raise InvalidParameterError(msg)

    piece = generate(part, cap=None)
    glue = _glue_vertex(part, glue_point)
    index = {glue: at}
    for v in piece.vertices():
        if v != glue:
            index[v] = g.vertex_count + len(index) - 1

    edges = list(g.edges()) + [(index[u], index[v]) for u, v in piece.edges()]
    return Graph(g.vertex_count + piece.vertex_count - 1, edges)


def _glue_vertex(part, glue_point):
    if glue_point is GlueRole.TAIL_END:
        q, p = part.parameters
        return q + p - 1 if p else 0
    return 0


def sparkler_pair_parameters(q, p):
    '''Return `(a, b, s)` of the lower-bound pair for S_{q,p}

    b = 2 + (p mod 2), a = (p - b) / 2, s = q - 1
    '''
    b = 2 + p % 2
    return (p - b) // 2, b, q - 1


def sparkler_pair_layout(q, p, n):
    '''Return the named vertices of G_{a,b,n}

    *Parameters:*

    - `q`, `p`: Sparkler parameters (q >= 3, p >= 4)
    - `n`: Number of leaves of the S-component star

    *Returns:*

    `SparklerPairLayout`: `w` is the shared vertex, `u_vertices` the rest of
    the smaller part, `twins` the larger part and `designated_twin` the
    vertex whose removal gives H_{a,b,n}.
    '''
    _validate(FamilySpec(Family.SPARKLER_LOWER_PAIR, (q, p, n)))
    a, b, s = sparkler_pair_parameters(q, p)
    twins = tuple(range(a + 1, 2 * a + s + 1))
    leaves = tuple(range(2 * a + s + 1, 2 * a + s + 1 + n))
    tail = tuple(range(leaves[-1] + 1, leaves[-1] + 1 + b))
    return SparklerPairLayout(a=a, b=b, s=s, w=0,
                              u_vertices=tuple(range(1, a + 1)),
                              twins=twins, leaves=leaves, tail=tail,
                              designated_twin=twins[-1])


# ----------
# GENERATORS
# ----------
def _path_edges(vertices):
    return list(zip(vertices, vertices[1:]))


def _complete_edges(vertices):
    return [(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:]]


def _gen_path(ell):
    return Graph(ell, _path_edges(list(range(ell))))


def _gen_cycle(n):
    return Graph(n, _path_edges(list(range(n))) + [(n - 1, 0)])


def _gen_complete(n):
    return Graph(n, _complete_edges(list(range(n))))


def _gen_complete_bipartite(t, s):
    return Graph(t + s, [(u, t + v) for u in range(t) for v in range(s)])


def _gen_star(ell):
    return Graph(ell, [(0, v) for v in range(1, ell)])


def _gen_sparkler(q, p):
    # centre 0, leaves 1..q-1, tail q..q+p-1
    tail = list(range(q, q + p))
    edges = [(0, v) for v in range(1, q)] + _path_edges([0] + tail)
    return Graph(q + p, edges)


def _gen_broken_fan(n):
    # path y_1..y_{n-2}, hub n-2 misses y_{n-2} and holds y' = n-1
    path = list(range(n - 2))
    hub = n - 2
    edges = _path_edges(path) + [(hub, v) for v in path[:-1]]
    edges.append((hub, n - 1))
    return Graph(n, edges)


def _gen_subdivided_star(s, t):
    edges = []
    for i in range(s):
        branch = range(1 + i * t, 1 + (i + 1) * t)
        edges.extend(_path_edges([0] + list(branch)))
    return Graph(s * t + 1, edges)


def _sparkler_pair_side(a, twins, b, n):
    # K_{a+1,twins} with w = 0, S_{n+1,b} glued at w by its centre
    return attach(_gen_complete_bipartite(a + 1, twins), 0,
                  FamilySpec(Family.SPARKLER, (n + 1, b)),
                  GlueRole.STAR_CENTER)


def _gen_sparkler_lower_pair(q, p, n):
    a, b, s = sparkler_pair_parameters(q, p)
    return GraphPair(_sparkler_pair_side(a, a + s, b, n),
                     _sparkler_pair_side(a, a + s - 1, b, n))


def _gen_clique_pendant_path(k, n):
    return attach(_gen_complete(k), 0, FamilySpec(Family.PATH, (n,)),
                  GlueRole.PATH_END)


def _gen_clique_pendant_star(k, n):
    return attach(_gen_complete(k), 0, FamilySpec(Family.STAR, (n + 1,)),
                  GlueRole.STAR_CENTER)


def _gen_glued_clique_sparkler(ell, p, n):
    return attach(_gen_complete(ell), 0,
                  FamilySpec(Family.SPARKLER, (n, p + 1)), GlueRole.TAIL_END)


# family -> (generator, lower bounds per parameter, vertex count)
_GENERATORS = {
    Family.PATH: (_gen_path, (1,), lambda ell: ell),
    Family.CYCLE: (_gen_cycle, (3,), lambda n: n),
    Family.COMPLETE: (_gen_complete, (1,), lambda n: n),
    Family.COMPLETE_BIPARTITE: (_gen_complete_bipartite, (1, 1),
                                lambda t, s: t + s),
    Family.STAR: (_gen_star, (1,), lambda ell: ell),
    Family.SPARKLER: (_gen_sparkler, (2, 0), lambda q, p: q + p),
    Family.BROKEN_FAN: (_gen_broken_fan, (4,), lambda n: n),
    Family.SUBDIVIDED_STAR: (_gen_subdivided_star, (1, 1),
                             lambda s, t: s * t + 1),
    Family.SPARKLER_LOWER_PAIR: (
        _gen_sparkler_lower_pair, (3, 4, 1),
        lambda q, p, n: q + p + n),
    Family.CLIQUE_PENDANT_PATH: (_gen_clique_pendant_path, (1, 1),
                                 lambda k, n: k + n - 1),
    Family.CLIQUE_PENDANT_STAR: (_gen_clique_pendant_star, (1, 1),
                                 lambda k, n: k + n),
    Family.GLUED_CLIQUE_SPARKLER: (_gen_glued_clique_sparkler, (1, 0, 2),
                                   lambda ell, p, n: ell + p + n),
}


def _validate(spec):
    names = FAMILY_PARAMETERS[spec.family]
    _, minimums, _ = _GENERATORS[spec.family]
    if len(spec.parameters) != len(names):
        msg = "Family %s needs parameters %s" % (spec.family.value,
                                                 ', '.join(names))
        logger.error(msg)
        raise InvalidParameterError(msg)
    for name, value, minimum in zip(names, spec.parameters, minimums):
        if value < minimum:
            msg = "Family %s requires %s >= %d, got %d" % (
                spec.family.value, name, minimum, value)
            logger.error(msg)
            raise InvalidParameterError(msg)


def vertex_count_of(spec):
    '''Return the number of vertices `generate(spec)` will have

    For `SPARKLER_LOWER_PAIR` this is the size of G, H has one less.
    '''
    _validate(spec)
    return _GENERATORS[spec.family][2](*spec.parameters)


def generate(spec, cap=SOLVER_VERTEX_CAP):
    '''Generate the graph described by `spec`

    Vertex layouts:

    - path / cycle: vertices in order along the path or cycle
    - star: centre 0, leaves 1..ell-1
    - complete-bipartite: part of size t first, then part of size s
    - sparkler S_{q,p}: centre 0, leaves 1..q-1, tail q..q+p-1 (end last)
    - broken-fan B_n: path y_1..y_{n-2} on 0..n-3, hub n-2, extra n-1
    - subdivided-star M_{s,t}: centre 0, branch i on 1+i*t..(i+1)*t
    - clique-pendant-*: clique 0..k-1, part glued at 0 and appended
    - glued-clique-sparkler: clique 0..ell-1, tail end of S_{n,p+1} at 0,
      then the sparkler centre, its leaves and the rest of the tail
    - sparkler-lower-pair: see `sparkler_pair_layout`

    Args:
        spec (FamilySpec): Family and parameters
        cap (int): Refuse graphs with more vertices. `None` disables the
                   cap, for containment-only use.

    Returns:
        Graph, or GraphPair for `SPARKLER_LOWER_PAIR`
    '''
    count = vertex_count_of(spec)
    if cap is not None and count > cap:
        msg = "%s has %d vertices, above the cap of %d" % (spec, count, cap)
        logger.error(msg)
        raise CapExceededError(msg)
    return _GENERATORS[spec.family][0](*spec.parameters)


def build(family, cap=SOLVER_VERTEX_CAP, **parameters):
    '''Shortcut for `generate(FamilySpec.of(family, **parameters))`'''
    return generate(FamilySpec.of(family, **parameters), cap=cap)
