import pytest

from pebblebench.exception import MalformedFormulaError
from pebblebench.graph import build
from pebblebench.graphconstant import Family
from pebblebench.logic.formula import (FALSE, TRUE, Adjacent, And, Equal,
                                       Exists, Forall, Not, Or, atomic_type,
                                       exists_all,
                                       free_variables, is_sentence,
                                       quantifier_depth, rename_variables,
                                       variable_width, variables)
from pebblebench.logic.sentence import (canonical_subgraph_sentence,
                                        phi_s_sentence, variable_name)

EDGE = Exists('x', Exists('y', Adjacent('x', 'y')))


def test_quantifier_depth():
    assert quantifier_depth(Adjacent('x', 'y')) == 0
    assert quantifier_depth(EDGE) == 2
    assert quantifier_depth(And((EDGE, Exists('z', Equal('z', 'z'))))) == 2
    assert quantifier_depth(Not(Forall('x', EDGE))) == 3
    assert quantifier_depth(TRUE) == 0


def test_variables_counted_by_name():
    f = Exists('x', Exists('y', And((Adjacent('x', 'y'),
                                     Exists('x', Adjacent('x', 'y'))))))
    assert variables(f) == {'x', 'y'}
    assert variable_width(f) == 2
    assert quantifier_depth(f) == 3


def test_free_variables():
    assert free_variables(Exists('x', Adjacent('x', 'y'))) == {'y'}
    assert free_variables(Or((Equal('a', 'b'), FALSE))) == {'a', 'b'}
    assert is_sentence(EDGE)
    assert is_sentence(TRUE)
    assert not is_sentence(Not(Equal('x', 'x')))


def test_malformed():
    with pytest.raises(MalformedFormulaError):
        quantifier_depth(('x', 'y'))
    with pytest.raises(MalformedFormulaError):
        variables(And((Adjacent('x', 'y'), 'z')))


def test_rename_variables():
    f = rename_variables(EDGE, {'x': 'a'})
    assert f == Exists('a', Exists('y', Adjacent('a', 'y')))


def test_exists_all():
    body = Adjacent('x', 'y')
    assert exists_all(['x', 'y'], body) == EDGE
    assert exists_all([], body) == body


def test_atomic_type():
    g = build(Family.PATH, ell=3)
    assignment = {'x': 0, 'y': 1, 'z': 2, 'w': 0}
    tau = atomic_type('x', ['y', 'z', 'w', 'x'], g, assignment)
    assert tau == And((
        Not(Equal('x', 'y')), Adjacent('x', 'y'),
        Not(Equal('x', 'z')), Not(Adjacent('x', 'z')),
        Equal('x', 'w')))


def test_canonical_subgraph_sentence():
    f = canonical_subgraph_sentence(build(Family.PATH, ell=3))
    assert quantifier_depth(f) == 3
    assert variable_width(f) == 3
    assert is_sentence(f)
    assert variable_name(0) == 'x1'


def test_phi_s_sentence():
    f = phi_s_sentence(4)
    assert variable_width(f) == 4
    assert quantifier_depth(f) == 5
    assert is_sentence(f)
