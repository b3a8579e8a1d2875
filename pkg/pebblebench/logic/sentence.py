'''Explicit sentences

- the canonical sentence of a pattern F on l vertices: l existentials,
  pairwise distinct, adjacent along every edge of F. It holds exactly on
  the graphs containing F.
- Phi_s: there are s distinct vertices and, for each of them, a common
  neighbor of the s - 1 others. The inner quantifier reuses the variable
  it stands for, so s variables suffice.
'''
import logging

from pebblebench.exception import InvalidParameterError
from pebblebench.logic.formula import (Adjacent, And, Equal, Exists, Not,
                                       exists_all)

logger = logging.getLogger()


def variable_name(i):
    return 'x{}'.format(i + 1)


def distinctness(names):
    return [Not(Equal(a, b)) for i, a in enumerate(names)
            for b in names[i + 1:]]


def canonical_subgraph_sentence(f):
    '''Sentence true exactly on graphs containing `f` as a subgraph'''
    if f.vertex_count < 1:
        msg = "Pattern needs at least one vertex"
        logger.error(msg)
        raise InvalidParameterError(msg)
    names = [variable_name(i) for i in f.vertices()]
    conjuncts = distinctness(names) + [
        Adjacent(names[u], names[v]) for u, v in f.edges()]
    return exists_all(names, And(tuple(conjuncts)))


def phi_s_sentence(s):
    '''Width-s sentence equivalent to containing K_{1,s} on large
    connected graphs'''
    if s < 3:
        msg = "Phi_s needs s >= 3, got %d" % s
        logger.error(msg)
        raise InvalidParameterError(msg)
    names = [variable_name(i) for i in range(s)]
    common_neighbors = [
        Exists(x, And(tuple(Adjacent(x, y) for y in names if y != x)))
        for x in names]
    return exists_all(names, And(tuple(distinctness(names) +
                                       common_neighbors)))
