# flake8: noqa
from pebblebench.logic.formula import (Adjacent, And, Equal, Exists, Forall,
                                       Not, Or, atomic_type, free_variables,
                                       quantifier_depth, rename_variables,
                                       variable_width, variables)
from pebblebench.logic.evaluation import evaluate
from pebblebench.logic.sentence import (canonical_subgraph_sentence,
                                        phi_s_sentence)
from pebblebench.logic.syntax import parse, read_formula, render, \
    write_formula
