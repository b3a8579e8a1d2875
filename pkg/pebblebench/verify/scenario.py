'''Scenarios and verdicts

A scenario is a registered function checking one finite claim. It is
deterministic given its parameters and seed, and returns a `Verdict`.
'''
from collections import namedtuple, OrderedDict
import logging

from pebblebench.exception import InvalidParameterError, UnknownScenarioError
from pebblebench.util import millis, time_since_millis

logger = logging.getLogger()


# ----------
# TUPLES
# ----------
Scenario = namedtuple('Scenario', ['id', 'claim', 'parameters', 'seed'])

Verdict = namedtuple('Verdict', ['scenario', 'claim', 'parameters', 'seed',
                                 'observed', 'expected', 'passed', 'runtime',
                                 'witness', 'note'])
Verdict.__doc__ = '''Outcome of a scenario

`observed` maps names to numbers or booleans, `expected` states the
relation they must satisfy, `witness` is None unless the claim failed.
`runtime` is in milliseconds.'''

ScenarioEntry = namedtuple('ScenarioEntry', ['function', 'claim', 'defaults',
                                             'sampled'])

REGISTRY = OrderedDict()


def register(scenario_id, claim, sampled=False, **defaults):
    '''Register a scenario function under `scenario_id`

    The function receives the merged parameters as keyword arguments
    (plus `seed` when `sampled`) and returns
    `(observed, expected, passed, witness)`.
    '''
    def decorator(function):
        REGISTRY[scenario_id] = ScenarioEntry(function, claim, defaults,
                                              sampled)
        return function
    return decorator


def scenario_ids():
    return list(REGISTRY)


def get_entry(scenario_id):
    try:
        return REGISTRY[scenario_id]
    except KeyError:
        msg = "Unknown scenario '%s', known: %s" % (
            scenario_id, ', '.join(REGISTRY))
        logger.error(msg)
        raise UnknownScenarioError(msg)


def make_scenario(scenario_id, parameters=None, seed=0):
    '''Merge `parameters` over the registered defaults'''
    entry = get_entry(scenario_id)
    merged = OrderedDict(entry.defaults)
    for key, value in (parameters or {}).items():
        if key not in merged:
            msg = "Scenario %s has no parameter '%s' (known: %s)" % (
                scenario_id, key, ', '.join(merged))
            logger.error(msg)
            raise InvalidParameterError(msg)
        merged[key] = value
    return Scenario(scenario_id, entry.claim, merged, seed)


def run(scenario, note=None):
    '''Execute a scenario and wrap its result in a `Verdict`'''
    entry = get_entry(scenario.id)
    logger.info("Scenario %s %s started", scenario.id,
                dict(scenario.parameters))
    start = millis()
    kwargs = dict(scenario.parameters)
    if entry.sampled:
        kwargs['seed'] = scenario.seed
    observed, expected, passed, witness = entry.function(**kwargs)
    runtime = time_since_millis(start)
    logger.info("Scenario %s %s in %.0f ms", scenario.id,
                'passed' if passed else 'FAILED', runtime)
    return Verdict(scenario=scenario.id, claim=scenario.claim,
                   parameters=dict(scenario.parameters), seed=scenario.seed,
                   observed=observed, expected=expected, passed=bool(passed),
                   runtime=runtime, witness=None if passed else witness,
                   note=note)
