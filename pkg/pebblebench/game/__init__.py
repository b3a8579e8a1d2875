# flake8: noqa
from pebblebench.game.position import (is_partial_isomorphism, make_position,
                                       position_pairs, responses)
from pebblebench.game.solver import (GameOutcome, GameQuery, PebbleSearch,
                                     SolverConfiguration, depth_D,
                                     depth_search, duplicator_survives,
                                     solve_bounded, solve_unbounded, width_W,
                                     width_search)
from pebblebench.game.tree import (StrategyNode, replay_strategy,
                                   strategy_from_json, strategy_to_json)
from pebblebench.game.extraction import extract_sentence
