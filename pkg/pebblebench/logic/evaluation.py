'''Formula evaluation

Direct recursive enumeration of assignments over the vertex set.
'''
import logging

from pebblebench.exception import MalformedFormulaError
from pebblebench.logic.formula import (Adjacent, And, Equal, Exists, Forall,
                                       Not, Or, free_variables)

logger = logging.getLogger()


def check(f, g, assignment):
    '''Truth of `f` in `g` under `assignment` (variable -> vertex)'''
    if isinstance(f, And):
        return all(check(o, g, assignment) for o in f.operands)
    elif isinstance(f, Or):
        return any(check(o, g, assignment) for o in f.operands)
    elif isinstance(f, Not):
        return not check(f.body, g, assignment)
    elif isinstance(f, Adjacent):
        return g.has_edge(assignment[f.left], assignment[f.right])
    elif isinstance(f, Equal):
        return assignment[f.left] == assignment[f.right]
    elif isinstance(f, Exists):
        inner = dict(assignment)
        for v in g.vertices():
            inner[f.var] = v
            if check(f.body, g, inner):
                return True
        return False
    elif isinstance(f, Forall):
        inner = dict(assignment)
        for v in g.vertices():
            inner[f.var] = v
            if not check(f.body, g, inner):
                return False
        return True
    msg = "Not a formula node: %r" % (f,)
    logger.error(msg)
    raise MalformedFormulaError(msg)


def evaluate(f, g, assignment=None):
    '''Evaluate `f` on `g`

    Args:
        f (Formula): Sentence, or formula whose free variables are covered
                     by `assignment`
        g (Graph): Graph
        assignment (dict): Optional variable -> vertex

    Returns:
        bool

    Raises:
        MalformedFormulaError: Unassigned free variable
    '''
    assignment = assignment or {}
    unbound = free_variables(f) - set(assignment)
    if unbound:
        msg = "Free variables %s" % ', '.join(sorted(unbound))
        logger.error(msg)
        raise MalformedFormulaError(msg)
    return check(f, g, assignment)
