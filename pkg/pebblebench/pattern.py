'''Pattern analysis

Subgraph containment, the pattern parameters (longest pendant path,
largest pendant star, longest pendant sparkler tail) and twin classes.

A pendant path `v0 v1 ... vt` is an induced path with `deg v0 != 2`,
`deg vt = 1` and every inner vertex of degree 2. A pendant star is an
induced star whose leaves are pendant and whose centre carries no other
pendant vertex. A pendant sparkler is a `v`-branch (a component of `F - v`
together with `v`) isomorphic to a sparkler whose tail ends at `v`, where
`v` has degree 1 or at least 3.
'''
from collections import namedtuple, OrderedDict
from fractions import Fraction
import logging

from pebblebench.exception import DisconnectedPatternError, \
    InvalidParameterError
from pebblebench.graph import build, components, induced, is_connected, \
    max_degree
from pebblebench.graphconstant import Family
from pebblebench.util import bit_count, iter_bits

logger = logging.getLogger()


# ----------
# TUPLES
# ----------
Embedding = namedtuple('Embedding', ['mapping'])
Embedding.__doc__ = '''Injective map, `mapping[i]` is the host vertex of
pattern vertex `i`'''

PatternStats = namedtuple('PatternStats', ['pendant_path', 'pendant_star',
                                           'pendant_sparkler'])
PatternStats.__doc__ = '''p(F), s(F) and spa(F), the last being None when F
has no pendant sparkler'''

TwinDecomposition = namedtuple('TwinDecomposition', [
    'classes', 'sigma', 'largest_class_is_maximal_homogeneous'])

PendantSparkler = namedtuple('PendantSparkler', ['vertex', 'q', 'p'])


# ----------
# CONTAINMENT
# ----------
def search_order(pattern):
    '''Order pattern vertices so that each one, after the first of its
    component, has an already ordered neighbor when possible

    The next vertex is the one with the most ordered neighbors, then the
    highest degree, then the lowest index.
    '''
    order = []
    placed = 0
    for _ in pattern.vertices():
        best = max((v for v in pattern.vertices() if not placed >> v & 1),
                   key=lambda v: (bit_count(pattern.neighbors[v] & placed),
                                  pattern.degree(v), -v))
        order.append(best)
        placed |= 1 << best
    return order


def find_subgraph(host, pattern):
    '''Search a (not necessarily induced) copy of `pattern` in `host`

    Pattern vertices are matched in `search_order`, host candidates in
    increasing order, so the result is the least embedding for that order.

    Args:
        host (Graph): Host graph
        pattern (Graph): Pattern graph

    Returns:
        Embedding or None
    '''
    if pattern.vertex_count > host.vertex_count or \
            pattern.edge_count > host.edge_count:
        return None

    order = search_order(pattern)
    host_degrees = [host.degree(x) for x in host.vertices()]
    all_hosts = (1 << host.vertex_count) - 1
    image = [None] * pattern.vertex_count

    def extend(depth, used):
        if depth == len(order):
            return True
        u = order[depth]
        candidates = all_hosts & ~used
        for w in iter_bits(pattern.neighbors[u]):
            if image[w] is not None:
                candidates &= host.neighbors[image[w]]
        need = pattern.degree(u)
        for x in iter_bits(candidates):
            if host_degrees[x] < need:
                continue
            image[u] = x
            if extend(depth + 1, used | 1 << x):
                return True
        image[u] = None
        return False

    if not extend(0, 0):
        return None
    return Embedding(tuple(image))


def is_embedding(host, pattern, embedding):
    '''Check injectivity and that every pattern edge lands on a host edge'''
    mapping = embedding.mapping
    if len(mapping) != pattern.vertex_count or \
            len(set(mapping)) != len(mapping):
        return False
    if any(not 0 <= x < host.vertex_count for x in mapping):
        return False
    return all(host.has_edge(mapping[u], mapping[v])
               for u, v in pattern.edges())


def contains(host, pattern):
    return find_subgraph(host, pattern) is not None


# ----------
# SHAPES
# ----------
def is_path(f):
    return (f.vertex_count >= 1 and f.edge_count == f.vertex_count - 1 and
            max_degree(f) <= 2 and is_connected(f))


def is_star(f):
    '''True for K_{1,s}, s >= 1'''
    n = f.vertex_count
    return (n >= 2 and f.edge_count == n - 1 and
            any(f.degree(v) == n - 1 for v in f.vertices()))


def sparkler_from_tail(s, v):
    '''Recognise `s` as a sparkler S_{q,p} whose tail ends at `v`

    Returns:
        `(q, p)` with q >= 3 and p >= 1, or None
    '''
    if s.degree(v) != 1:
        return None
    previous, current, p = None, v, 0
    while current == v or s.degree(current) == 2:
        step = [u for u in iter_bits(s.neighbors[current]) if u != previous]
        previous, current, p = current, step[0], p + 1
        if current == v:
            return None

    q = s.degree(current)
    if q < 3:
        return None
    leaves = [u for u in iter_bits(s.neighbors[current]) if u != previous]
    if any(s.degree(u) != 1 for u in leaves):
        return None
    if s.vertex_count != q + p:
        return None
    return q, p


def sparkler_shape(f):
    '''Return `(q, p)` if `f` is a sparkler with q >= 3 and p >= 1

    The longest tail is reported, so a star K_{1,q} reads as S_{q,1}.
    '''
    if not f.vertex_count or f.edge_count != f.vertex_count - 1 or \
            not is_connected(f):
        return None
    shapes = [sparkler_from_tail(f, v) for v in f.vertices()
              if f.degree(v) == 1]
    shapes = [shape for shape in shapes if shape]
    if not shapes:
        return None
    return max(shapes, key=lambda shape: (shape[1], -shape[0]))


# ----------
# PENDANT PARAMETERS
# ----------
def _check_connected(f):
    if not is_connected(f):
        msg = "Pattern with %d vertices is not connected" % f.vertex_count
        logger.error(msg)
        raise DisconnectedPatternError(msg)


def _pendant_vertices(f):
    return [v for v in f.vertices() if f.degree(v) == 1]


def pendant_path_length(f):
    '''p(F): longest pendant path P_{t+1}, as its number of edges t'''
    best = 0
    for v in _pendant_vertices(f):
        previous, current, t = None, v, 0
        while True:
            step = [u for u in iter_bits(f.neighbors[current])
                    if u != previous]
            previous, current, t = current, step[0], t + 1
            if f.degree(current) != 2:
                break
        best = max(best, t)
    return best


def pendant_star_size(f):
    '''s(F): the most pendant neighbors of a single vertex'''
    pendant = 0
    for v in _pendant_vertices(f):
        pendant |= 1 << v
    return max((bit_count(mask & pendant) for mask in f.neighbors), default=0)


def pendant_sparklers(f):
    '''List every pendant sparkler of `f`

    Tail ends `v` with a branch isomorphic to S_{q,p}, p >= 1, come from
    the branch test; a vertex of degree >= 3 with at least two pendant
    neighbors also counts as the centre of a pendant S_{q,0}.

    Returns:
        `list` of `PendantSparkler(vertex, q, p)`
    '''
    _check_connected(f)
    found = []
    pendant = 0
    for v in _pendant_vertices(f):
        pendant |= 1 << v

    for v in f.vertices():
        degree = f.degree(v)
        if degree != 1 and degree < 3:
            continue
        for component in components_without(f, v):
            members = sorted(iter_bits(component | 1 << v))
            branch = induced(f, members)
            shape = sparkler_from_tail(branch, members.index(v))
            if shape:
                found.append(PendantSparkler(v, shape[0], shape[1]))

        leaves = bit_count(f.neighbors[v] & pendant)
        if degree >= 3 and leaves >= 2:
            found.append(PendantSparkler(v, leaves + 1, 0))
    return found


def components_without(f, v):
    '''Components of F - v, as bit sets over the vertices of `f`'''
    rest = induced(f, [u for u in f.vertices() if u != v])
    result = []
    for mask in components(rest):
        original = 0
        for u in iter_bits(mask):
            original |= 1 << (u if u < v else u + 1)
        result.append(original)
    return result


def pattern_stats(f):
    '''Compute p(F), s(F) and spa(F) of a connected pattern'''
    _check_connected(f)
    sparklers = pendant_sparklers(f)
    spa = max((s.p for s in sparklers), default=None)
    return PatternStats(pendant_path=pendant_path_length(f),
                        pendant_star=pendant_star_size(f),
                        pendant_sparkler=spa)


# ----------
# TWINS
# ----------
def are_twins(g, u, v):
    '''No third vertex is adjacent to exactly one of `u`, `v`'''
    return g.neighbors[u] & ~(1 << v) == g.neighbors[v] & ~(1 << u)


def is_homogeneous(g, vertices):
    '''True if `vertices` is a clique or an independent set'''
    vertices = list(vertices)
    pairs = [(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:]]
    adjacent = [g.has_edge(u, v) for u, v in pairs]
    return all(adjacent) or not any(adjacent)


def is_maximal_homogeneous(g, vertices):
    '''True if `vertices` is homogeneous and no vertex can be added to it'''
    if not is_homogeneous(g, vertices):
        return False
    members = set(vertices)
    return not any(is_homogeneous(g, list(members) + [w])
                   for w in g.vertices() if w not in members)


def twin_decomposition(g):
    '''Partition the vertices of `g` into twin classes

    Classes are tuples sorted by their smallest vertex. The largest class
    (the first one in case of ties) is checked for inclusion-maximal
    homogeneity.
    '''
    classes = []
    for v in g.vertices():
        for twin_class in classes:
            if are_twins(g, twin_class[0], v):
                twin_class.append(v)
                break
        else:
            classes.append([v])

    classes = tuple(tuple(c) for c in classes)
    if not classes:
        return TwinDecomposition((), 0, False)
    largest = max(classes, key=len)
    return TwinDecomposition(
        classes=classes, sigma=len(largest),
        largest_class_is_maximal_homogeneous=is_maximal_homogeneous(
            g, largest))


def twin_of_largest_class(g):
    '''Return `(sigma, v)` with `v` the last vertex of the largest class'''
    decomposition = twin_decomposition(g)
    largest = max(decomposition.classes, key=len)
    return decomposition.sigma, largest[-1]


# ----------
# PHI_ELL
# ----------
def phi_ell_holds(g, ell):
    '''True if `g` contains P_ell or K_{1,ell-1}'''
    if ell < 2:
        msg = "Phi_ell needs ell >= 2, got %d" % ell
        logger.error(msg)
        raise InvalidParameterError(msg)
    if g.vertex_count >= ell and max_degree(g) >= ell - 1:
        return True
    return contains(g, build(Family.PATH, cap=None, ell=ell))


def phi_ell_threshold(ell):
    '''N(ell): connected graphs with more vertices satisfy Phi_ell

    A connected graph without P_ell and K_{1,ell-1} has maximum degree
    d = ell - 2 and a spanning tree of radius r <= ceil((ell - 2) / 2), so
    it has at most 1 + d * sum((d - 1)^i, i < r) vertices.
    '''
    if ell < 2:
        msg = "Phi_ell needs ell >= 2, got %d" % ell
        logger.error(msg)
        raise InvalidParameterError(msg)
    d = ell - 2
    r = (ell - 1) // 2
    return 1 + d * sum((d - 1) ** i for i in range(r))


def large_degree_bound(q, p, degree):
    '''3 * degree^(2qp): an S_{q,p}-free connected graph with maximum
    degree `degree` >= q has at most this many vertices'''
    return 3 * degree ** (2 * q * p)


def large_degree_property(g, q, p):
    '''Either max degree < q or v(g) <= 3 * max degree^(2qp)'''
    delta = max_degree(g)
    return delta < q or g.vertex_count <= large_degree_bound(q, p, delta)


# ----------
# LOWER BOUNDS
# ----------
def sparkler_width_bound(q, p):
    '''max(p, ell - p/2 - 2 - (p mod 2)/2) for S_{q,p}, ell = q + p'''
    ell = q + p
    return max(Fraction(p), ell - Fraction(p, 2) - 2 - Fraction(p % 2, 2))


def lower_bound_terms(f):
    '''Certified lower bounds on the asymptotic width of `f`

    Returns:
        OrderedDict term name -> Fraction
    '''
    _check_connected(f)
    if f.vertex_count < 2:
        msg = "Lower bounds need at least 2 vertices, got %d" % (
            f.vertex_count)
        logger.error(msg)
        raise InvalidParameterError(msg)

    ell = f.vertex_count
    stats = pattern_stats(f)
    terms = OrderedDict()
    terms['pendant-star'] = Fraction(ell - stats.pendant_star - 1)
    terms['pendant-path'] = Fraction(ell - stats.pendant_path - 1)
    if stats.pendant_sparkler is not None:
        terms['pendant-sparkler'] = Fraction(
            ell - stats.pendant_sparkler - 3)

    shape = sparkler_shape(f)
    if shape and shape[1] >= 2:
        terms['sparkler'] = sparkler_width_bound(*shape)
    if is_star(f) and ell - 1 >= 3:
        terms['star'] = Fraction(ell - 1)
    if is_path(f) and ell >= 3:
        terms['path'] = Fraction(ell - 2)
    return terms


def combined_lower_bound(f):
    '''Largest of `lower_bound_terms`'''
    bound = max(lower_bound_terms(f).values())
    logger.debug("Combined lower bound of %r: %s", f, bound)
    return bound


# ----------
# PATH UPPER-BOUND CONDITIONS
# ----------
def path_condition_a(h):
    '''All pendant vertices have a common neighbor'''
    common = (1 << h.vertex_count) - 1
    for v in _pendant_vertices(h):
        common &= h.neighbors[v]
    return common != 0 or not _pendant_vertices(h)


def path_condition_b(h, ell):
    '''At most ell - 2 non-pendant vertices'''
    return h.vertex_count - len(_pendant_vertices(h)) <= ell - 2
