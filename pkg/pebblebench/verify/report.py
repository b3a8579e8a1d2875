'''Verdict reports

JSON reports are an array of verdict objects, CSV reports one summary
row per verdict. Runtimes are included only when `timings` is set so
that two runs with the same seeds give byte-identical files.
'''
from collections import OrderedDict
import csv
import io
import json
import logging

from path import Path

logger = logging.getLogger()


CSV_COLUMNS = ('scenario', 'seed', 'pass', 'observed')


def verdict_to_dict(verdict, timings=False):
    '''Ordered, JSON ready view of a `Verdict`'''
    result = OrderedDict()
    result['scenario'] = verdict.scenario
    result['claim'] = verdict.claim
    result['parameters'] = OrderedDict(verdict.parameters)
    result['seed'] = verdict.seed
    result['observed'] = verdict.observed
    result['expected'] = verdict.expected
    result['pass'] = verdict.passed
    if timings:
        result['runtime_ms'] = round(verdict.runtime, 3)
    result['witness'] = verdict.witness
    if verdict.note:
        result['note'] = verdict.note
    return result


def dumps_json_report(verdicts, timings=False):
    data = [verdict_to_dict(v, timings) for v in verdicts]
    return json.dumps(data, indent=2) + '\n'


def _format_observed(observed):
    return ';'.join('%s=%s' % (k, v) for k, v in observed.items())


def dumps_csv_report(verdicts, timings=False):
    columns = CSV_COLUMNS + (('runtime_ms',) if timings else ())
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(columns)
    for v in verdicts:
        row = [v.scenario, v.seed, 'true' if v.passed else 'false',
               _format_observed(v.observed)]
        if timings:
            row.append('%.3f' % v.runtime)
        writer.writerow(row)
    return out.getvalue()


def dumps_text_report(verdicts, timings=False):
    '''Human readable, one line per verdict'''
    lines = []
    for v in verdicts:
        line = '%-20s %s  %s' % (v.scenario, 'PASS' if v.passed else 'FAIL',
                                 _format_observed(v.observed))
        if timings:
            line += '  (%.0f ms)' % v.runtime
        lines.append(line)
    return '\n'.join(lines) + '\n'


def _write(text, filepath):
    filepath = Path(filepath)
    with filepath.open('w') as f:
        f.write(text)
    logger.info("Report written to %s", filepath)


def write_json_report(verdicts, filepath, timings=False):
    _write(dumps_json_report(verdicts, timings), filepath)


def write_csv_report(verdicts, filepath, timings=False):
    _write(dumps_csv_report(verdicts, timings), filepath)
