'''Game positions

A position is the set of pebbled pairs `(u, x)`, `u` in G and `x` in H.
Pebble identities are erased: a position is stored as the sorted tuple of
its packed pairs `u << VERTEX_BITS | x`, so equal sets give equal keys.

A position is live when its pairs induce a partial isomorphism: a
well-defined injective map in both directions preserving adjacency and
non-adjacency.
'''
import logging

from pebblebench.exception import VertexRangeError
from pebblebench.graphconstant import VERTEX_BITS, VERTEX_MASK, Side
from pebblebench.util import iter_bits

logger = logging.getLogger()

EMPTY_POSITION = ()


def pack(u, x):
    return u << VERTEX_BITS | x


def unpack(code):
    return code >> VERTEX_BITS, code & VERTEX_MASK


def make_position(pairs):
    '''Build a position from `(u, x)` pairs'''
    return tuple(sorted({pack(u, x) for u, x in pairs}))


def position_pairs(position):
    return [unpack(code) for code in position]


def add_pair(position, code):
    '''Return `position` with `code` added (no-op if already there)'''
    if code in position:
        return position
    return tuple(sorted(position + (code,)))


def remove_pair(position, code):
    return tuple(c for c in position if c != code)


def is_partial_isomorphism(g, h, pairs):
    '''Check that `pairs` is live

    Args:
        g (Graph): First graph
        h (Graph): Second graph
        pairs: iterable of `(u, x)` or a packed position

    Returns:
        bool
    '''
    pairs = [unpack(p) if isinstance(p, int) else tuple(p) for p in pairs]
    for u, x in pairs:
        if not (0 <= u < g.vertex_count and 0 <= x < h.vertex_count):
            msg = "Pair (%d, %d) out of range" % (u, x)
            logger.error(msg)
            raise VertexRangeError(msg)

    for i, (u, x) in enumerate(pairs):
        for v, y in pairs[i + 1:]:
            if (u == v) != (x == y):
                return False
            if g.has_edge(u, v) != h.has_edge(x, y):
                return False
    return True


def live_responses(g, h, position, side, vertex):
    '''Return the bit set of Duplicator's live replies

    `position` must be live. Spoiler pebbles `vertex` of the graph `side`
    and Duplicator answers in the other graph; a reply is live if the
    position extended with the new pair stays a partial isomorphism.
    '''
    if side is Side.G:
        own, other = g, h
    else:
        own, other = h, g
    mask = (1 << other.vertex_count) - 1
    own_neighbors = own.neighbors[vertex]
    other_neighbors = other.neighbors
    for code in position:
        u, x = code >> VERTEX_BITS, code & VERTEX_MASK
        if side is Side.H:
            u, x = x, u
        if u == vertex:
            mask &= 1 << x
        else:
            mask &= ~(1 << x)
            if own_neighbors >> u & 1:
                mask &= other_neighbors[x]
            else:
                mask &= ~other_neighbors[x]
        if not mask:
            break
    return mask


def responses(g, h, position, side, vertex):
    '''List Duplicator's live replies to Spoiler pebbling `vertex`'''
    return list(iter_bits(live_responses(g, h, position, Side(side), vertex)))


def pair_of(side, vertex, reply):
    '''Pack the pair made by a Spoiler move and a Duplicator reply'''
    if side is Side.G:
        return pack(vertex, reply)
    return pack(reply, vertex)


def pebbled(position, side):
    '''Bit set of the vertices of `side` carrying a pebble'''
    mask = 0
    for code in position:
        u, x = unpack(code)
        mask |= 1 << (u if side is Side.G else x)
    return mask


def lift_options(position, pebbles):
    '''Positions Spoiler may place from, paired with the lifted pair

    With a free pebble Spoiler places without lifting; with every pebble
    on the board Spoiler lifts one pair first.
    '''
    if len(position) < pebbles:
        return [(position, None)]
    return [(remove_pair(position, code), code) for code in position]
