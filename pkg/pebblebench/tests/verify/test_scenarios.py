from fractions import Fraction

import pytest

from pebblebench.exception import InvalidParameterError, UnknownScenarioError
from pebblebench.graph import Graph, build
from pebblebench.graphconstant import Family
from pebblebench.verify.harness import run_scenario
from pebblebench.verify.scenario import make_scenario, run, scenario_ids
from pebblebench.verify.scenarios import (path_pair, pvv_bound,
                                          run_clique_separation,
                                          run_pendant_lemma,
                                          run_pendant_sparkler_lemma,
                                          run_phi_s,
                                          run_structure_properties,
                                          run_twin_lemma)
from pebblebench.verify.sampling import connected_corpus

SCENARIOS = ['twin-lemma', 'clique-separation', 'pvv', 'sparkler-pair',
             'structure', 'lemma7-exploration', 'star-theorem', 'phi-s',
             'path-theorem', 'path-upper', 'theorem2-catalog', 'phi-ell',
             'pendant-lemma', 'pendant-sparkler', 'cross-oracle',
             'extraction']


def test_registry():
    assert sorted(scenario_ids()) == sorted(SCENARIOS)


def test_make_scenario():
    scenario = make_scenario('sparkler-pair', {'n': 4}, seed=3)
    assert scenario.id == 'sparkler-pair'
    assert dict(scenario.parameters) == {'q': 3, 'p': 4, 'n': 4,
                                         'max_width_pebbles': 2}
    assert scenario.seed == 3
    assert scenario.claim


def test_make_scenario_errors():
    with pytest.raises(UnknownScenarioError):
        make_scenario('no-such-scenario')
    with pytest.raises(InvalidParameterError):
        make_scenario('clique-separation', {'max_n': 3})


def test_clique_separation():
    observed, _, passed, witness = run_clique_separation(3)
    assert passed
    assert witness is None
    assert dict(observed) == {'depth_2': 2, 'width_2': 2, 'depth_3': 3,
                              'width_3': 3}


def test_twin_lemma():
    observed, _, passed, _ = run_twin_lemma(connected_corpus(4))
    assert passed
    assert observed['graphs'] == 10
    assert observed['checked'] + observed['skipped'] == 10
    assert observed['checked'] > 0


def test_pvv_bound():
    assert pvv_bound(build(Family.COMPLETE, n=3)) == 4
    assert pvv_bound(build(Family.PATH, ell=3)) == 4
    assert pvv_bound(Graph(4)) == 5
    assert pvv_bound(build(Family.PATH, ell=5)) == Fraction(5)


def test_sparkler_pair():
    verdict = run_scenario('sparkler-pair')
    assert verdict.passed
    assert verdict.observed['g_contains']
    assert not verdict.observed['h_contains']
    assert verdict.observed['width_bound'] == 3
    assert verdict.observed['width_checked']


def test_sparkler_pair_skips_width():
    verdict = run_scenario('sparkler-pair', {'q': 4, 'p': 5,
                                             'max_width_pebbles': 2})
    assert verdict.passed
    assert verdict.observed['width_bound'] == 4
    assert not verdict.observed['width_checked']


def test_path_theorem():
    g, h = path_pair(4, 3)
    assert g.vertex_count == 3 + 3
    assert h.vertex_count == 2 + 3
    verdict = run_scenario('path-theorem', {'ell': 4, 'n': 3})
    assert verdict.passed
    assert verdict.witness is None


def test_pendant_lemma():
    observed, _, passed, _ = run_pendant_lemma('sparkler', 4, q=4, p=2,
                                               n=None)
    assert passed
    assert observed['ell'] == 6
    assert observed['pendant_star'] == 3
    assert observed['star_g_contains']
    assert not observed['star_h_contains']


def test_pendant_sparkler_lemma():
    observed, _, passed, _ = run_pendant_sparkler_lemma(
        'glued-clique-sparkler', 3, ell=4, p=0, n=3)
    assert passed
    assert observed['applicable']
    assert observed['ell'] == 7
    assert observed['width_bound'] == 7 - observed['pendant_sparkler'] - 3


def test_pendant_sparkler_not_applicable():
    observed, _, passed, _ = run_pendant_sparkler_lemma(
        'path', 3, ell=3)
    assert passed
    assert not observed['applicable']


@pytest.mark.parametrize('q, p', [(3, 2), (3, 3)])
def test_structure_tiers_apply(q, p):
    observed, _, passed, witness = run_structure_properties(q, p, 30, 0)
    assert passed
    assert witness is None
    assert observed['path_star_graphs'] == 30
    assert observed['free_with_star'] >= 10
    assert observed['cycle_fan_applicable'] > 0
    assert observed['empty_tiers'] == []


def test_structure_without_samples_fails():
    observed, _, passed, _ = run_structure_properties(3, 2, 0, 0)
    assert not passed
    assert observed['empty_tiers'] == ['path_star', 'degree', 'cycle_fan']


def test_phi_s():
    observed, _, passed, witness = run_phi_s(3, 12, 0)
    assert passed
    assert witness is None
    assert observed['samples'] == 12


@pytest.mark.parametrize('scenario_id, parameters', [
    ('pvv', {'pairs': 5, 'max_vertices': 4}),
    ('structure', {'samples': 30}),
    ('lemma7-exploration', {'samples': 20}),
    ('phi-ell', {'samples': 10}),
    ('path-upper', {'samples': 2}),
    ('theorem2-catalog', {'max_ell': 4, 'samples': 5}),
    ('cross-oracle', {'pairs': 30}),
    ('extraction', {'pairs': 5, 'max_vertices': 4}),
])
def test_sampled_scenarios(scenario_id, parameters):
    verdict = run_scenario(scenario_id, parameters, seed=1)
    assert verdict.passed
    assert verdict.witness is None
    assert verdict.seed == 1


def test_sampled_scenarios_are_deterministic():
    first = run_scenario('phi-ell', {'samples': 10}, seed=7)
    second = run_scenario('phi-ell', {'samples': 10}, seed=7)
    assert first._replace(runtime=0) == second._replace(runtime=0)


def test_run_keeps_note():
    verdict = run(make_scenario('clique-separation', {'max_ell': 2}),
                  note='smoke')
    assert verdict.note == 'smoke'
    assert verdict.parameters == {'max_ell': 2}
    assert verdict.runtime >= 0
