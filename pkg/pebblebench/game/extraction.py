'''Distinguishing sentences from Spoiler strategies

Each node of a winning tree becomes one quantifier over the variable
named after the pebble label. With `tau` the atomic type of the pebbled
vertex against the other pebbled variables:

- a move in G gives `EXISTS y . (tau_G AND child_1 AND ...)`
- a move in H gives `NOT EXISTS y . (tau_H AND NOT child_1 AND ...)`

Every sub-formula holds in G and fails in H under the pebbled vertices,
so the root is a sentence true on G and false on H, with depth the tree
depth and width at most the number of pebbles.
'''
import logging

from pebblebench.exception import StrategyError
from pebblebench.game.bounded import BoundedSolver
from pebblebench.game.position import add_pair, pair_of, remove_pair, unpack
from pebblebench.game.solver import GameQuery, check_query
from pebblebench.graphconstant import Side
from pebblebench.logic.formula import And, Exists, Not, atomic_type
from pebblebench.logic.sentence import variable_name

logger = logging.getLogger()


def sentence_from_strategy(g, h, tree):
    '''Turn a winning strategy tree into a distinguishing sentence'''
    def build(node, position, names):
        base = remove_pair(position, node.lift) if node.lift is not None \
            else position
        var = variable_name(node.label)
        others = [names[code] for code in base]
        graph = g if node.side is Side.G else h
        assignment = {names[code]: unpack(code)[node.side]
                      for code in base}
        assignment[var] = node.vertex
        tau = atomic_type(var, others, graph, assignment)

        children = []
        for reply, child in node.responses:
            code = pair_of(node.side, node.vertex, reply)
            child_names = {c: names[c] for c in base}
            child_names[code] = var
            children.append(build(child, add_pair(base, code), child_names))

        if node.side is Side.G:
            return Exists(var, And((tau,) + tuple(children)))
        return Not(Exists(var, And((tau,) + tuple(
            Not(child) for child in children))))

    return build(tree, (), {})


def extract_sentence(g, h, pebbles, rounds):
    '''Build a sentence of depth <= `rounds` and width <= `pebbles` true on
    `g` and false on `h`

    Raises:
        StrategyError: Spoiler does not win the game
    '''
    check_query(GameQuery(g, h, pebbles, rounds))
    solver = BoundedSolver(g, h, pebbles)
    needed = solver.rounds_needed(rounds)
    if needed is None:
        msg = "Spoiler does not win the %d-round %d-pebble game" % (
            rounds, pebbles)
        logger.error(msg)
        raise StrategyError(msg)
    return sentence_from_strategy(g, h, solver.strategy(needed))
