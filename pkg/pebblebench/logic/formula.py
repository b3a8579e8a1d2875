'''First-order formulas over the vocabulary {~, =}

Formulas are immutable trees of namedtuples. Variables are plain strings,
identified by name: the same name may be bound again in a nested or
sibling scope, and the variable width counts distinct names only.
'''
from collections import namedtuple
import logging

from pebblebench.exception import MalformedFormulaError

logger = logging.getLogger()


# ----------
# NODES
# ----------
Exists = namedtuple('Exists', ['var', 'body'])
Forall = namedtuple('Forall', ['var', 'body'])
And = namedtuple('And', ['operands'])
Or = namedtuple('Or', ['operands'])
Not = namedtuple('Not', ['body'])
Adjacent = namedtuple('Adjacent', ['left', 'right'])
Equal = namedtuple('Equal', ['left', 'right'])

QUANTIFIERS = (Exists, Forall)
CONNECTIVES = (And, Or)
ATOMS = (Adjacent, Equal)

TRUE = And(())
FALSE = Or(())


def exists_all(variables, body):
    '''Prefix `body` with one existential per variable, outermost first'''
    for var in reversed(list(variables)):
        body = Exists(var, body)
    return body


def _check(f):
    if not isinstance(f, QUANTIFIERS + CONNECTIVES + ATOMS + (Not,)):
        msg = "Not a formula node: %r" % (f,)
        logger.error(msg)
        raise MalformedFormulaError(msg)


# ----------
# METRICS
# ----------
def quantifier_depth(f):
    '''Maximum nesting of quantifiers'''
    _check(f)
    if isinstance(f, QUANTIFIERS):
        return 1 + quantifier_depth(f.body)
    if isinstance(f, CONNECTIVES):
        return max((quantifier_depth(o) for o in f.operands), default=0)
    if isinstance(f, Not):
        return quantifier_depth(f.body)
    return 0


def variables(f):
    '''Set of every variable name occurring in `f`'''
    _check(f)
    if isinstance(f, QUANTIFIERS):
        return {f.var} | variables(f.body)
    if isinstance(f, CONNECTIVES):
        return set().union(*(variables(o) for o in f.operands))
    if isinstance(f, Not):
        return variables(f.body)
    return {f.left, f.right}


def variable_width(f):
    '''Number of distinct variable names'''
    return len(variables(f))


def free_variables(f):
    _check(f)
    if isinstance(f, QUANTIFIERS):
        return free_variables(f.body) - {f.var}
    if isinstance(f, CONNECTIVES):
        return set().union(*(free_variables(o) for o in f.operands))
    if isinstance(f, Not):
        return free_variables(f.body)
    return {f.left, f.right}


def is_sentence(f):
    return not free_variables(f)


def rename_variables(f, mapping):
    '''Rename every occurrence, bound or free, through `mapping`

    Names missing from `mapping` are kept.
    '''
    _check(f)

    def name(var):
        return mapping.get(var, var)

    if isinstance(f, QUANTIFIERS):
        return type(f)(name(f.var), rename_variables(f.body, mapping))
    if isinstance(f, CONNECTIVES):
        return type(f)(tuple(rename_variables(o, mapping)
                             for o in f.operands))
    if isinstance(f, Not):
        return Not(rename_variables(f.body, mapping))
    return type(f)(name(f.left), name(f.right))


# ----------
# TYPES
# ----------
def atomic_type(var, others, g, assignment):
    '''Conjunction describing how `var` sits among `others` in `g`

    For each other variable `z`, the literal `var = z` if both are mapped
    to the same vertex, else `NOT var = z` together with `var ~ z` or
    `NOT var ~ z`.

    Args:
        var (str): Variable being described
        others (iterable of str): Variables already assigned
        g (Graph): Graph
        assignment (dict): Variable -> vertex, must cover `var` and
                           `others`

    Returns:
        Formula
    '''
    literals = []
    v = assignment[var]
    for z in others:
        if z == var:
            continue
        w = assignment[z]
        if v == w:
            literals.append(Equal(var, z))
            continue
        literals.append(Not(Equal(var, z)))
        if g.has_edge(v, w):
            literals.append(Adjacent(var, z))
        else:
            literals.append(Not(Adjacent(var, z)))
    return And(tuple(literals))
