'''Command line front end

`main` parses arguments with docopt, runs one command and returns the
exit status: 0 on success, 1 when a verification scenario fails, 2 on
usage or input errors.
'''
from collections import namedtuple, OrderedDict
import csv
import io
import json
import logging
import sys

from docopt import DocoptExit, docopt
from path import Path

from pebblebench import PATH_PEBBLEBENCH_MANIFEST, __version__
from pebblebench.exception import InvalidParameterError, PebbleBenchError
from pebblebench.game.extraction import extract_sentence
from pebblebench.game.solver import (GameQuery, SolverConfiguration,
                                     depth_search, solve, width_search)
from pebblebench.game.tree import strategy_to_json
from pebblebench.graph import GraphPair, FamilySpec, generate, is_connected, \
    max_degree
from pebblebench.graphconstant import (FAMILY_PARAMETERS, SOLVER_VERTEX_CAP,
                                       Family, GraphFormat)
from pebblebench.graphio import dumps_graph, read_graph, write_graph
from pebblebench.logic.evaluation import evaluate
from pebblebench.logic.syntax import read_formula, render
from pebblebench.pattern import (lower_bound_terms, pattern_stats,
                                 sparkler_shape, twin_decomposition)
from pebblebench.verify.harness import (Manifest, ManifestRun, load_manifest,
                                        run_manifest, select_runs)
from pebblebench.verify.report import (dumps_csv_report, dumps_json_report,
                                       dumps_text_report, write_csv_report,
                                       write_json_report)
from pebblebench.verify.scenario import REGISTRY, make_scenario

logger = logging.getLogger()


# ----------
# CONSTANTS
# ----------
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

FORMATS = ('json', 'csv', 'text')

USAGE = '''pebblebench {version}

Ehrenfeucht-Fraisse pebble game workbench.

Usage:
  pebblebench gen --family=<name> [--output=<file>] [--graph6] [options]
  pebblebench solve (--depth | --width | --pebbles=<k>) [--rounds=<r>]
                    [--strategy] [--sentence] <g> <h> [options]
  pebblebench eval <formula> <graph> [options]
  pebblebench stats <graph> [options]
  pebblebench verify [--scenario=<id>]... [--manifest=<file>]
                     [--jobs=<n>] [--timings] [--output=<file>] [options]
  pebblebench (-h | --help)
  pebblebench --version

Commands:
  gen       Write a member of a graph family (edge list or graph6)
  solve     Compute D or W of two graphs, or play one k-pebble game
  eval      Evaluate a first-order sentence on a graph
  stats     Print degree, twin and pendant statistics of a graph
  verify    Run verification scenarios, print a report

Options:
  -h --help             Show this screen.
  --version             Show version.
  -o --output=<file>    Write to this file instead of standard output.
  --family=<name>       Graph family, see below.
  --graph6              Write graph6 instead of an edge list.
  --depth               Compute D(G, H).
  --width               Compute W(G, H).
  --pebbles=<k>         Number of pebbles.
  --rounds=<r>          Number of rounds, unbounded game if omitted.
  --strategy            Print the Spoiler strategy tree.
  --sentence            Print a sentence distinguishing G from H.
  --cap=<n>             Solver vertex cap [default: {cap}].
  --seed=<n>            Seed overriding the scenario seeds.
  --format=<fmt>        Output format: json, csv or text [default: text].
  --manifest=<file>     Verification manifest [default: {manifest}].
  --jobs=<n>            Scenarios run in parallel [default: 1].
  --timings             Include runtimes in the report.
  --progress            Show solver progress on standard error.
  -v --verbose          Log at INFO level.
  --debug               Log at DEBUG level.
{parameters}
Families:
{families}

Scenarios:
{scenarios}
'''

WorkbenchConfiguration = namedtuple('WorkbenchConfiguration', [
    'fmt', 'cap', 'seed', 'jobs', 'timings', 'progress', 'verbose',
    'debug'])


# ----------
# HELP
# ----------
def parameter_names():
    '''Family and scenario parameters, each becomes a `--name` option'''
    names = set()
    for family_names in FAMILY_PARAMETERS.values():
        names.update(family_names)
    for entry in REGISTRY.values():
        names.update(entry.defaults)
    names.discard('family')
    return sorted(names)


def _option(name):
    return '--' + name.replace('_', '-')


def usage():
    parameters = ''.join('  %-21s  %s\n' % (
        _option(name) + '=<value>', 'Family or scenario parameter.')
        for name in parameter_names())
    families = '\n'.join('  %-24s %s' % (f.value, ', '.join(
        FAMILY_PARAMETERS[f])) for f in Family)
    scenarios = '\n'.join('  %-20s %s' % (scenario_id, ', '.join(
        '%s=%s' % kv for kv in entry.defaults.items()))
        for scenario_id, entry in REGISTRY.items())
    return USAGE.format(version=__version__, cap=SOLVER_VERTEX_CAP,
                        manifest=PATH_PEBBLEBENCH_MANIFEST,
                        parameters=parameters, families=families,
                        scenarios=scenarios)


# ----------
# SETUP
# ----------
def _init_logger(verbose=False, debug=False):
    if debug:
        logger.setLevel(logging.DEBUG)
    elif verbose:
        logger.setLevel(logging.INFO)
    else:
        logger.setLevel(logging.WARNING)

    formatter = logging.Formatter('%(asctime)s :: %(levelname)s '
                                  ':: %(message)s')
    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setFormatter(formatter)
    stream_handler.setLevel(logging.DEBUG)
    logger.addHandler(stream_handler)
    return stream_handler


def _integer(args, key):
    value = args[key]
    if value is None:
        return None
    try:
        return int(value)
    except ValueError:
        msg = "%s expects an integer, got '%s'" % (key, value)
        logger.error(msg)
        raise InvalidParameterError(msg)


def make_configuration(args):
    fmt = args['--format']
    if fmt not in FORMATS:
        msg = "Unknown format '%s', use one of %s" % (fmt, ', '.join(FORMATS))
        logger.error(msg)
        raise InvalidParameterError(msg)
    return WorkbenchConfiguration(
        fmt=fmt, cap=_integer(args, '--cap'), seed=_integer(args, '--seed'),
        jobs=_integer(args, '--jobs'), timings=args['--timings'],
        progress=args['--progress'], verbose=args['--verbose'],
        debug=args['--debug'])


def solver_configuration(configuration, with_strategy=False):
    if configuration.cap != SOLVER_VERTEX_CAP:
        logger.warning("Solver vertex cap overridden: %d", configuration.cap)
    return SolverConfiguration(cap=configuration.cap,
                               progress=configuration.progress,
                               with_strategy=with_strategy)


def given_parameters(args):
    '''Parameter options present on the command line'''
    result = OrderedDict()
    for name in parameter_names():
        value = args[_option(name)]
        if value is not None:
            try:
                result[name] = int(value)
            except ValueError:
                result[name] = value
    return result


# ----------
# OUTPUT
# ----------
def _plain(value):
    if value is None or isinstance(value, (bool, dict, list, tuple)):
        return json.dumps(value)
    return value


def format_record(record, fmt):
    '''Render one ordered record as json, a csv row or text lines'''
    if fmt == 'json':
        return json.dumps(record, indent=2) + '\n'
    if fmt == 'csv':
        out = io.StringIO()
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(list(record))
        writer.writerow([_plain(v) for v in record.values()])
        return out.getvalue()
    return ''.join('%s=%s\n' % (k, _plain(v)) for k, v in record.items())


def emit(text, output=None):
    if output:
        with Path(output).open('w') as f:
            f.write(text)
        logger.info("Wrote %s", output)
    else:
        sys.stdout.write(text)


# ----------
# COMMANDS
# ----------
def command_gen(args, configuration):
    try:
        family = Family(args['--family'])
    except ValueError:
        msg = "Unknown family '%s', known: %s" % (
            args['--family'], ', '.join(f.value for f in Family))
        logger.error(msg)
        raise InvalidParameterError(msg)

    given = given_parameters(args)
    parameters = {name: given.get(name) for name in FAMILY_PARAMETERS[family]
                  if given.get(name) is not None}
    result = generate(FamilySpec.of(family, **parameters),
                      cap=configuration.cap)
    fmt = GraphFormat.GRAPH6 if args['--graph6'] else None
    output = args['--output']
    graphs = result if isinstance(result, GraphPair) else (result,)

    if not output:
        text = '\n'.join(dumps_graph(g, fmt or GraphFormat.EDGE_LIST)
                         for g in graphs)
        emit(text)
    elif isinstance(result, GraphPair):
        output = Path(output)
        for name, g in zip(('g', 'h'), result):
            write_graph(g, output.stripext() + '-' + name + output.ext, fmt)
    else:
        write_graph(result, output, fmt)
    return EXIT_OK


def command_solve(args, configuration):
    g, h = read_graph(args['<g>']), read_graph(args['<h>'])
    wants_tree = args['--strategy'] or args['--sentence']
    solver_config = solver_configuration(configuration, wants_tree)
    record = OrderedDict()

    if args['--depth'] or args['--width']:
        search = depth_search if args['--depth'] else width_search
        pebbles, outcome = search(g, h, solver_config)
        record['D' if args['--depth'] else 'W'] = pebbles
    else:
        pebbles = _integer(args, '--pebbles')
        rounds = _integer(args, '--rounds')
        outcome = solve(GameQuery(g, h, pebbles, rounds), solver_config)
        record['pebbles'] = pebbles
        record['rounds'] = rounds
        record['spoiler_wins'] = outcome.spoiler_wins
    record['rounds_needed'] = outcome.rounds_needed

    if args['--strategy']:
        record['strategy'] = strategy_to_json(outcome.strategy) \
            if outcome.strategy else None
    if args['--sentence']:
        record['sentence'] = render(extract_sentence(
            g, h, pebbles, outcome.rounds_needed)) \
            if outcome.spoiler_wins else None
    emit(format_record(record, configuration.fmt))
    return EXIT_OK


def command_eval(args, configuration):
    formula = read_formula(args['<formula>'])
    g = read_graph(args['<graph>'])
    value = evaluate(formula, g)
    if configuration.fmt == 'text':
        emit('true\n' if value else 'false\n')
    else:
        emit(format_record(OrderedDict(value=value), configuration.fmt))
    return EXIT_OK


def command_stats(args, configuration):
    g = read_graph(args['<graph>'])
    decomposition = twin_decomposition(g)
    record = OrderedDict()
    record['vertices'] = g.vertex_count
    record['edges'] = g.edge_count
    record['max_degree'] = max_degree(g)
    record['connected'] = is_connected(g)
    record['twin_classes'] = [list(c) for c in decomposition.classes]
    record['sigma'] = decomposition.sigma
    record['largest_class_is_maximal_homogeneous'] = \
        decomposition.largest_class_is_maximal_homogeneous

    if record['connected'] and g.vertex_count >= 2:
        stats = pattern_stats(g)
        record['pendant_path'] = stats.pendant_path
        record['pendant_star'] = stats.pendant_star
        record['pendant_sparkler'] = stats.pendant_sparkler
        shape = sparkler_shape(g)
        record['sparkler'] = list(shape) if shape else None
        record['lower_bounds'] = OrderedDict(
            (k, str(v)) for k, v in lower_bound_terms(g).items())
    emit(format_record(record, configuration.fmt))
    return EXIT_OK


def verification_runs(args, configuration):
    '''Manifest runs, or direct runs when parameters are given'''
    selected = args['--scenario']
    given = given_parameters(args)
    if args['--family'] is not None:
        given['family'] = args['--family']

    if given:
        if not selected:
            msg = "Scenario parameters need --scenario"
            logger.error(msg)
            raise InvalidParameterError(msg)
        runs = [ManifestRun(make_scenario(i, given), None) for i in selected]
        manifest = Manifest(None, runs)
    else:
        manifest = select_runs(load_manifest(args['--manifest']), selected)
        listed = set(r.scenario.id for r in manifest.runs)
        manifest.runs.extend(ManifestRun(make_scenario(i), None)
                             for i in selected if i not in listed)

    if configuration.seed is not None:
        manifest = manifest._replace(runs=[
            r._replace(scenario=r.scenario._replace(seed=configuration.seed))
            for r in manifest.runs])
    return manifest


def command_verify(args, configuration):
    manifest = verification_runs(args, configuration)
    verdicts = run_manifest(manifest, jobs=configuration.jobs)
    output = args['--output']
    timings = configuration.timings

    if output and configuration.fmt == 'json':
        write_json_report(verdicts, output, timings)
    elif output and configuration.fmt == 'csv':
        write_csv_report(verdicts, output, timings)
    else:
        dumps = {'json': dumps_json_report, 'csv': dumps_csv_report,
                 'text': dumps_text_report}[configuration.fmt]
        emit(dumps(verdicts, timings), output)

    failed = [v.scenario for v in verdicts if not v.passed]
    if failed:
        logger.warning("Failed scenarios: %s", ', '.join(failed))
        return EXIT_FAILED
    return EXIT_OK


COMMANDS = OrderedDict([('gen', command_gen), ('solve', command_solve),
                        ('eval', command_eval), ('stats', command_stats),
                        ('verify', command_verify)])


# ----------
# ENTRY POINT
# ----------
def main(argv=None):
    '''Run the command line and return the exit status'''
    try:
        args = docopt(usage(), argv=argv, version=__version__)
    except DocoptExit as e:
        sys.stderr.write(str(e) + '\n')
        return EXIT_USAGE

    handler = _init_logger(args['--verbose'], args['--debug'])
    try:
        configuration = make_configuration(args)
        command = next(c for name, c in COMMANDS.items() if args[name])
        return command(args, configuration)
    except PebbleBenchError as e:
        logger.critical("%s: %s", type(e).__name__, e)
        return EXIT_USAGE
    finally:
        logger.removeHandler(handler)


def run():
    sys.exit(main())


if __name__ == '__main__':
    run()
