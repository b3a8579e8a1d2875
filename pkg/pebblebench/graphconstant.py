'''
This module contains the constants shared by the graph, game and
verification modules.

Graph families are translated to a Python `Enum` whose value is the name
used on the command line. `FAMILY_PARAMETERS` gives, for each family, the
ordered parameter names a `FamilySpec` must carry.
'''
from enum import Enum, IntEnum


# ----------
# CONSTANTS
# ----------
# Solver positions pack one vertex per 6 bits
SOLVER_VERTEX_CAP = 64
ISOMORPHISM_BRUTE_FORCE_LIMIT = 10
VERTEX_BITS = 6
VERTEX_MASK = (1 << VERTEX_BITS) - 1


# ----------
# ENUMS
# ----------
class Family(Enum):
    PATH = 'path'
    CYCLE = 'cycle'
    COMPLETE = 'complete'
    COMPLETE_BIPARTITE = 'complete-bipartite'
    STAR = 'star'
    SPARKLER = 'sparkler'
    BROKEN_FAN = 'broken-fan'
    SUBDIVIDED_STAR = 'subdivided-star'
    SPARKLER_LOWER_PAIR = 'sparkler-lower-pair'
    CLIQUE_PENDANT_PATH = 'clique-pendant-path'
    CLIQUE_PENDANT_STAR = 'clique-pendant-star'
    GLUED_CLIQUE_SPARKLER = 'glued-clique-sparkler'


class GlueRole(Enum):
    PATH_END = 'end'
    STAR_CENTER = 'center'
    TAIL_END = 'tail-end'


class Side(IntEnum):
    G = 0
    H = 1

    def other(self):
        return Side.H if self is Side.G else Side.G


FAMILY_PARAMETERS = {
    Family.PATH: ('ell',),
    Family.CYCLE: ('n',),
    Family.COMPLETE: ('n',),
    Family.COMPLETE_BIPARTITE: ('t', 's'),
    Family.STAR: ('ell',),
    Family.SPARKLER: ('q', 'p'),
    Family.BROKEN_FAN: ('n',),
    Family.SUBDIVIDED_STAR: ('s', 't'),
    Family.SPARKLER_LOWER_PAIR: ('q', 'p', 'n'),
    Family.CLIQUE_PENDANT_PATH: ('k', 'n'),
    Family.CLIQUE_PENDANT_STAR: ('k', 'n'),
    Family.GLUED_CLIQUE_SPARKLER: ('ell', 'p', 'n'),
}

# Parts that `attach` accepts, with the roles each one can be glued by
ATTACH_ROLES = {
    Family.PATH: (GlueRole.PATH_END,),
    Family.STAR: (GlueRole.STAR_CENTER,),
    Family.SPARKLER: (GlueRole.TAIL_END, GlueRole.STAR_CENTER),
}


class GraphFormat(Enum):
    EDGE_LIST = 'edges'
    GRAPH6 = 'graph6'


# File suffixes read and written as graph6, anything else is an edge list
GRAPH6_SUFFIXES = ('.g6', '.graph6')
