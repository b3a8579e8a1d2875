'''Solver entry points

`solve_bounded` and `solve_unbounded` decide the k-pebble game on two
graphs, `depth_search` and `width_search` look for the least number of
pebbles Spoiler wins with, in k rounds or in any number of rounds.
'''
from collections import namedtuple
import logging

from tqdm import tqdm

from pebblebench.exception import (CapExceededError, IndistinguishableError,
                                   InvalidParameterError)
from pebblebench.game.attractor import AttractorSolver
from pebblebench.game.bounded import BoundedSolver
from pebblebench.game.position import EMPTY_POSITION
from pebblebench.graph import is_isomorphic
from pebblebench.graphconstant import SOLVER_VERTEX_CAP

logger = logging.getLogger()


# ----------
# TUPLES
# ----------
GameQuery = namedtuple('GameQuery', ['g', 'h', 'pebbles', 'rounds'])
GameQuery.__new__.__defaults__ = (None,)
GameQuery.__doc__ = '''k-pebble game on G and H, `rounds` None for the
unbounded game'''

GameOutcome = namedtuple('GameOutcome', ['spoiler_wins', 'rounds_needed',
                                         'strategy'])
GameOutcome.__doc__ = '''`rounds_needed` and `strategy` are None unless
Spoiler wins; `strategy` is only built on request'''

SolverConfiguration = namedtuple('SolverConfiguration', [
    'cap', 'progress', 'with_strategy'])
SolverConfiguration.__new__.__defaults__ = (SOLVER_VERTEX_CAP, False, False)

PebbleSearch = namedtuple('PebbleSearch', ['pebbles', 'outcome'])
PebbleSearch.__doc__ = '''Least number of pebbles Spoiler wins with, and the
outcome of that game'''

DEFAULT_CONFIGURATION = SolverConfiguration()


# ----------
# FUNCTIONS
# ----------
def check_query(query, configuration=DEFAULT_CONFIGURATION):
    '''Validate pebbles, rounds and graph sizes of `query`

    Raises:
        InvalidParameterError: Pebbles or rounds below 1, cap above the
                               position encoding limit
        CapExceededError: A graph is larger than the cap
    '''
    cap = configuration.cap
    if cap > SOLVER_VERTEX_CAP:
        msg = "Cap %d is above the encoding limit of %d vertices" % (
            cap, SOLVER_VERTEX_CAP)
        logger.error(msg)
        raise InvalidParameterError(msg)
    if query.pebbles < 1:
        msg = "At least one pebble is needed, got %d" % query.pebbles
        logger.error(msg)
        raise InvalidParameterError(msg)
    if query.rounds is not None and query.rounds < 1:
        msg = "At least one round is needed, got %d" % query.rounds
        logger.error(msg)
        raise InvalidParameterError(msg)
    for name, graph in (('G', query.g), ('H', query.h)):
        if graph.vertex_count > cap:
            msg = "%s has %d vertices, above the solver cap of %d" % (
                name, graph.vertex_count, cap)
            logger.error(msg)
            raise CapExceededError(msg)


def _bounded_outcome(solver, rounds, configuration):
    needed = solver.rounds_needed(rounds)
    if needed is None:
        return GameOutcome(False, None, None)
    strategy = solver.strategy(needed) if configuration.with_strategy \
        else None
    return GameOutcome(True, needed, strategy)


def _unbounded_outcome(g, h, pebbles, configuration, progress=False):
    level = AttractorSolver(g, h, pebbles, progress).solve()
    if level is None:
        return GameOutcome(False, None, None)
    strategy = None
    if configuration.with_strategy:
        strategy = BoundedSolver(g, h, pebbles).strategy(level)
    return GameOutcome(True, level, strategy)


def solve_bounded(query, configuration=DEFAULT_CONFIGURATION):
    '''Decide the `query.rounds`-round `query.pebbles`-pebble game

    Returns:
        GameOutcome: `rounds_needed` is the least winning budget
    '''
    if query.rounds is None:
        msg = "Bounded game needs a number of rounds"
        logger.error(msg)
        raise InvalidParameterError(msg)
    check_query(query, configuration)
    logger.debug("Bounded game: %d vs %d vertices, %d pebbles, %d rounds",
                 query.g.vertex_count, query.h.vertex_count, query.pebbles,
                 query.rounds)

    solver = BoundedSolver(query.g, query.h, query.pebbles)
    return _bounded_outcome(solver, query.rounds, configuration)


def solve_unbounded(g, h, pebbles, configuration=DEFAULT_CONFIGURATION):
    '''Decide the unbounded k-pebble game with the attractor solver

    Returns:
        GameOutcome: `rounds_needed` is the attractor level of the empty
        position, the strategy is the bounded one for that many rounds
    '''
    check_query(GameQuery(g, h, pebbles), configuration)
    logger.debug("Unbounded game: %d vs %d vertices, %d pebbles",
                 g.vertex_count, h.vertex_count, pebbles)
    return _unbounded_outcome(g, h, pebbles, configuration,
                              configuration.progress)


def solve(query, configuration=DEFAULT_CONFIGURATION):
    if query.rounds is None:
        return solve_unbounded(query.g, query.h, query.pebbles,
                               configuration)
    return solve_bounded(query, configuration)


def duplicator_survives(g, h, pebbles, rounds=None,
                        configuration=DEFAULT_CONFIGURATION):
    '''True if Spoiler cannot win with `pebbles` (within `rounds`)

    With 0 pebbles or 0 rounds Duplicator survives trivially.
    '''
    if pebbles < 1 or (rounds is not None and rounds < 1):
        return True
    outcome = solve(GameQuery(g, h, pebbles, rounds),
                    configuration._replace(with_strategy=False))
    return not outcome.spoiler_wins


def _check_distinguishable(g, h, configuration):
    check_query(GameQuery(g, h, 1), configuration)
    if is_isomorphic(g, h):
        msg = "Graphs are isomorphic, no sentence distinguishes them"
        logger.error(msg)
        raise IndistinguishableError(msg)


def _least_pebbles(g, h, decide, configuration, name):
    _check_distinguishable(g, h, configuration)
    top = max(g.vertex_count, h.vertex_count)
    for k in tqdm(range(1, top + 1), disable=not configuration.progress,
                  desc=name, leave=False):
        outcome = decide(k)
        if outcome.spoiler_wins:
            logger.debug("%s = %d", name, k)
            return PebbleSearch(k, outcome)

    msg = "No k <= %d lets Spoiler win, graphs are indistinguishable" % top
    logger.error(msg)
    raise IndistinguishableError(msg)


def depth_search(g, h, configuration=DEFAULT_CONFIGURATION):
    '''Least k such that Spoiler wins the k-round k-pebble game, with the
    outcome of that game'''
    def decide(k):
        solver = BoundedSolver(g, h, k)
        if not solver.wins(EMPTY_POSITION, k):
            return GameOutcome(False, None, None)
        return _bounded_outcome(solver, k, configuration)
    return _least_pebbles(g, h, decide, configuration, 'D')


def width_search(g, h, configuration=DEFAULT_CONFIGURATION):
    '''Least k such that Spoiler wins the unbounded k-pebble game, with the
    outcome of that game'''
    return _least_pebbles(
        g, h, lambda k: _unbounded_outcome(g, h, k, configuration),
        configuration, 'W')


def depth_D(g, h, configuration=DEFAULT_CONFIGURATION):
    # pylint: disable=C0103
    return depth_search(g, h, configuration).pebbles


def width_W(g, h, configuration=DEFAULT_CONFIGURATION):
    # pylint: disable=C0103
    return width_search(g, h, configuration).pebbles
