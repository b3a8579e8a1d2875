import json

import pytest

from pebblebench import cli
from pebblebench.graph import build, is_isomorphic
from pebblebench.graphconstant import Family
from pebblebench.graphio import read_graph, write_graph
from pebblebench.logic.evaluation import evaluate
from pebblebench.logic.syntax import parse


@pytest.fixture
def cliques(tmp_path):
    k3, k2 = str(tmp_path / 'k3.txt'), str(tmp_path / 'k2.g6')
    write_graph(build(Family.COMPLETE, n=3), k3)
    write_graph(build(Family.COMPLETE, n=2), k2)
    return k3, k2


def lines(text):
    return text.splitlines()


def test_help(capsys):
    with pytest.raises(SystemExit):
        cli.main(['--help'])
    out = capsys.readouterr().out
    assert 'Families:' in out
    assert 'sparkler-lower-pair' in out
    assert 'theorem2-catalog' in out
    assert '--max-width-pebbles=<value>' in out


def test_parameter_names():
    names = cli.parameter_names()
    assert 'family' not in names
    assert {'ell', 'q', 'p', 'n', 'max_ell', 'samples'} <= set(names)


def test_usage_error():
    assert cli.main(['solve', 'only-one.txt']) == cli.EXIT_USAGE
    assert cli.main(['frobnicate']) == cli.EXIT_USAGE


def test_gen(tmp_path):
    output = str(tmp_path / 'k3.txt')
    assert cli.main(['gen', '--family', 'complete', '--n', '3',
                     '-o', output]) == cli.EXIT_OK
    assert read_graph(output) == build(Family.COMPLETE, n=3)


def test_gen_stdout(capsys):
    assert cli.main(['gen', '--family=complete', '--n=3',
                     '--graph6']) == cli.EXIT_OK
    assert capsys.readouterr().out == 'Bw\n'


def test_gen_pair(tmp_path):
    output = tmp_path / 'pair.g6'
    assert cli.main(['gen', '--family', 'sparkler-lower-pair', '--q', '3',
                     '--p', '4', '--n', '3', '-o', str(output)]) == 0
    g = read_graph(str(tmp_path / 'pair-g.g6'))
    h = read_graph(str(tmp_path / 'pair-h.g6'))
    assert g.vertex_count == h.vertex_count + 1


def test_gen_errors(tmp_path):
    assert cli.main(['gen', '--family', 'hypercube']) == cli.EXIT_USAGE
    assert cli.main(['gen', '--family', 'sparkler', '--q', '3']) == \
        cli.EXIT_USAGE
    assert cli.main(['gen', '--family', 'path', '--ell', 'x']) == \
        cli.EXIT_USAGE
    assert cli.main(['gen', '--family', 'path', '--ell', '80']) == \
        cli.EXIT_USAGE


def test_solve_depth(cliques, capsys):
    assert cli.main(['solve', '--depth', *cliques]) == cli.EXIT_OK
    assert 'D=3' in lines(capsys.readouterr().out)


def test_solve_width_sentence(cliques, capsys):
    assert cli.main(['solve', '--width', '--sentence', '--format', 'json',
                     *cliques]) == cli.EXIT_OK
    record = json.loads(capsys.readouterr().out)
    assert record['W'] == 3
    sentence = parse(record['sentence'])
    assert evaluate(sentence, build(Family.COMPLETE, n=3))
    assert not evaluate(sentence, build(Family.COMPLETE, n=2))


def test_solve_game(cliques, capsys):
    assert cli.main(['solve', '--pebbles', '2', *cliques]) == cli.EXIT_OK
    out = lines(capsys.readouterr().out)
    assert 'spoiler_wins=false' in out
    assert 'rounds=null' in out

    assert cli.main(['solve', '--pebbles', '3', '--rounds', '4',
                     '--strategy', '--format', 'json', *cliques]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record['spoiler_wins']
    assert record['rounds_needed'] == 3
    assert record['strategy']['label'] == 0


def test_solve_csv(cliques, capsys):
    assert cli.main(['solve', '--depth', '--format', 'csv', *cliques]) == 0
    assert lines(capsys.readouterr().out) == ['D,rounds_needed', '3,3']


def test_solve_errors(cliques, tmp_path):
    k3, _ = cliques
    assert cli.main(['solve', '--depth', k3, k3]) == cli.EXIT_USAGE
    assert cli.main(['solve', '--depth', k3,
                     str(tmp_path / 'missing.txt')]) == cli.EXIT_USAGE
    assert cli.main(['solve', '--depth', '--cap', '2', *cliques]) == \
        cli.EXIT_USAGE
    assert cli.main(['solve', '--depth', '--format', 'xml', *cliques]) == \
        cli.EXIT_USAGE


@pytest.mark.parametrize('content', ['D\n', 'Dek\nDek\n', '~??\n'])
def test_solve_malformed_graph6(cliques, tmp_path, capsys, content):
    broken = tmp_path / 'broken.g6'
    broken.write_text(content)
    assert cli.main(['solve', '--depth', cliques[0], str(broken)]) == \
        cli.EXIT_USAGE
    assert 'GraphFormatError' in capsys.readouterr().err


def test_eval(cliques, tmp_path, capsys):
    formula = tmp_path / 'triangle.fo'
    formula.write_text('(EXISTS x . (EXISTS y . (EXISTS z . '
                       '(AND (x ~ y) (y ~ z) (x ~ z)))))\n')
    k3, k2 = cliques
    assert cli.main(['eval', str(formula), k3]) == cli.EXIT_OK
    assert capsys.readouterr().out == 'true\n'
    assert cli.main(['eval', str(formula), k2, '--format', 'json']) == 0
    assert json.loads(capsys.readouterr().out) == {'value': False}


def test_eval_errors(cliques, tmp_path):
    formula = tmp_path / 'free.fo'
    formula.write_text('(x ~ y)\n')
    assert cli.main(['eval', str(formula), cliques[0]]) == cli.EXIT_USAGE
    formula.write_text('(EXISTS x')
    assert cli.main(['eval', str(formula), cliques[0]]) == cli.EXIT_USAGE


def test_stats(tmp_path, capsys):
    filepath = str(tmp_path / 's42.txt')
    write_graph(build(Family.SPARKLER, q=4, p=2), filepath)
    assert cli.main(['stats', filepath]) == cli.EXIT_OK
    out = lines(capsys.readouterr().out)
    assert 'vertices=6' in out
    assert 'max_degree=4' in out
    assert 'sparkler=[4, 2]' in out
    assert 'pendant_star=3' in out


def test_verify_scenario(capsys):
    assert cli.main(['verify', '--scenario', 'clique-separation',
                     '--max-ell', '3']) == cli.EXIT_OK
    out = capsys.readouterr().out
    assert 'clique-separation' in out
    assert 'PASS' in out


def test_verify_errors():
    assert cli.main(['verify', '--scenario', 'nope']) == cli.EXIT_USAGE
    assert cli.main(['verify', '--max-ell', '3']) == cli.EXIT_USAGE
    assert cli.main(['verify', '--scenario', 'clique-separation',
                     '--samples', '3']) == cli.EXIT_USAGE


def test_verify_manifest(tmp_path):
    manifest = tmp_path / 'manifest.json'
    manifest.write_text(json.dumps({'version': 1, 'runs': [
        {'id': 'clique-separation', 'parameters': {'max_ell': 3}},
        {'id': 'phi-ell', 'parameters': {'samples': 5}, 'seed': 4}]}))
    report = tmp_path / 'report.json'
    assert cli.main(['verify', '--manifest', str(manifest), '--seed', '9',
                     '--format', 'json', '-o', str(report)]) == cli.EXIT_OK
    data = json.loads(report.read_text())
    assert [d['scenario'] for d in data] == ['clique-separation', 'phi-ell']
    assert {d['seed'] for d in data} == {9}
    assert all('runtime_ms' not in d for d in data)


def test_verify_selects_from_manifest(tmp_path, capsys):
    manifest = tmp_path / 'manifest.json'
    manifest.write_text(json.dumps({'version': 1, 'runs': [
        {'id': 'clique-separation', 'parameters': {'max_ell': 3}},
        {'id': 'phi-ell', 'parameters': {'samples': 5}}]}))
    assert cli.main(['verify', '--manifest', str(manifest), '--scenario',
                     'phi-ell', '--format', 'csv', '--timings']) == 0
    out = lines(capsys.readouterr().out)
    assert out[0] == 'scenario,seed,pass,observed,runtime_ms'
    assert len(out) == 2
    assert out[1].startswith('phi-ell,0,true,')


def test_gen_graph6_file(tmp_path):
    g6 = str(tmp_path / 'fan.g6')
    assert cli.main(['gen', '--family', 'broken-fan', '--n', '5',
                     '-o', g6]) == 0
    assert is_isomorphic(read_graph(g6), build(Family.BROKEN_FAN, n=5))
