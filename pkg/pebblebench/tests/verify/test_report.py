from collections import OrderedDict
import csv
import io
import json

from pebblebench.verify.report import (CSV_COLUMNS, dumps_csv_report,
                                       dumps_json_report, dumps_text_report,
                                       verdict_to_dict, write_csv_report,
                                       write_json_report)
from pebblebench.verify.scenario import Verdict


def make_verdict(passed=True, note=None):
    return Verdict(scenario='clique-separation', claim='K_l vs K_(l-1)',
                   parameters={'max_ell': 3}, seed=0,
                   observed=OrderedDict([('depth_2', 2), ('width_2', 2)]),
                   expected='depth_l == width_l == l', passed=passed,
                   runtime=12.3456,
                   witness=None if passed else {'g': 'Bw', 'h': 'A_'},
                   note=note)


def test_verdict_to_dict():
    data = verdict_to_dict(make_verdict(note='small'))
    assert list(data) == ['scenario', 'claim', 'parameters', 'seed',
                          'observed', 'expected', 'pass', 'witness', 'note']
    assert data['pass'] is True
    assert 'runtime_ms' not in data


def test_verdict_to_dict_timings():
    data = verdict_to_dict(make_verdict(), timings=True)
    assert data['runtime_ms'] == 12.346
    assert 'note' not in data


def test_json_report():
    text = dumps_json_report([make_verdict(), make_verdict(passed=False)])
    data = json.loads(text)
    assert [d['pass'] for d in data] == [True, False]
    assert data[1]['witness'] == {'g': 'Bw', 'h': 'A_'}
    assert text.endswith('\n')


def test_reports_are_reproducible():
    verdicts = [make_verdict()]
    other = [make_verdict()._replace(runtime=99.0)]
    assert dumps_json_report(verdicts) == dumps_json_report(other)
    assert dumps_csv_report(verdicts) == dumps_csv_report(other)
    assert dumps_json_report(verdicts, True) != \
        dumps_json_report(other, True)


def test_csv_report():
    rows = list(csv.reader(io.StringIO(dumps_csv_report(
        [make_verdict(), make_verdict(passed=False)]))))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert rows[1] == ['clique-separation', '0', 'true',
                       'depth_2=2;width_2=2']
    assert rows[2][2] == 'false'


def test_csv_report_timings():
    rows = list(csv.reader(io.StringIO(dumps_csv_report([make_verdict()],
                                                        timings=True))))
    assert rows[0][-1] == 'runtime_ms'
    assert rows[1][-1] == '12.346'


def test_text_report():
    text = dumps_text_report([make_verdict(), make_verdict(passed=False)])
    lines = text.splitlines()
    assert len(lines) == 2
    assert 'PASS' in lines[0]
    assert 'FAIL' in lines[1]
    assert 'ms' not in text


def test_write_reports(tmp_path):
    verdicts = [make_verdict()]
    json_path = tmp_path / 'report.json'
    csv_path = tmp_path / 'report.csv'
    write_json_report(verdicts, str(json_path))
    write_csv_report(verdicts, str(csv_path), timings=True)
    assert json_path.read_text() == dumps_json_report(verdicts)
    assert csv_path.read_text() == dumps_csv_report(verdicts, timings=True)
