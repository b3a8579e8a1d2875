'''Scenario dispatch and manifest runs

The manifest is a versioned JSON file:

```
{
    "version": 1,
    "runs": [
        {"id": "star-theorem", "parameters": {"s": 3, "t": 4}, "seed": 0,
         "note": "..."}
    ]
}
```
'''
from collections import namedtuple
import json
import logging

from joblib import Parallel, delayed
from path import Path

from pebblebench import PATH_PEBBLEBENCH_MANIFEST
from pebblebench.exception import InvalidParameterError
from pebblebench.verify import scenarios  # noqa: F401 registers scenarios
from pebblebench.verify.scenario import make_scenario, run

logger = logging.getLogger()


# ----------
# TUPLES
# ----------
ManifestRun = namedtuple('ManifestRun', ['scenario', 'note'])
Manifest = namedtuple('Manifest', ['version', 'runs'])


# ----------
# FUNCTIONS
# ----------
def run_scenario(scenario_id, parameters=None, seed=0, note=None):
    '''Run one registered scenario and return its `Verdict`'''
    return run(make_scenario(scenario_id, parameters, seed), note)


def parse_manifest(data):
    '''Build a `Manifest` from decoded JSON'''
    if 'version' not in data or 'runs' not in data:
        msg = "Manifest needs 'version' and 'runs' fields"
        logger.error(msg)
        raise InvalidParameterError(msg)

    runs = []
    for entry in data['runs']:
        scenario = make_scenario(entry['id'], entry.get('parameters'),
                                 entry.get('seed', 0))
        runs.append(ManifestRun(scenario, entry.get('note')))
    return Manifest(data['version'], runs)


def load_manifest(filepath=PATH_PEBBLEBENCH_MANIFEST):
    '''Load and validate a manifest file'''
    filepath = Path(filepath)
    if not filepath.isfile():
        msg = "Manifest %s doesn't exist" % filepath
        logger.error(msg)
        raise InvalidParameterError(msg)

    with filepath.open() as f:
        try:
            data = json.load(f)
        except ValueError as e:
            msg = "Manifest %s is not valid JSON: %s" % (filepath, e)
            logger.error(msg)
            raise InvalidParameterError(msg)
    return parse_manifest(data)


def select_runs(manifest, selected):
    '''Keep the runs whose scenario id is in `selected`

    An empty selection keeps every run. Unknown ids raise
    `UnknownScenarioError`.
    '''
    if not selected:
        return manifest
    for scenario_id in selected:
        make_scenario(scenario_id)
    runs = [r for r in manifest.runs if r.scenario.id in selected]
    return Manifest(manifest.version, runs)


def _run_one(scenario, note):
    return run(scenario, note)


def run_manifest(manifest, jobs=1):
    '''Run every scenario of the manifest

    Scenarios are independent, so they can be spread over `jobs` worker
    processes. Verdicts come back in manifest order.

    Returns:
        `list` of `Verdict`
    '''
    logger.info("Running %d scenarios of manifest v%s on %d job(s)",
                len(manifest.runs), manifest.version, jobs)
    if jobs == 1:
        return [_run_one(r.scenario, r.note) for r in manifest.runs]
    tasks = [delayed(_run_one)(r.scenario, r.note) for r in manifest.runs]
    return Parallel(n_jobs=jobs)(tasks)
