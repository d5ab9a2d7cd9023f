"""
Command line front end: eval, verify and scan.

Exit codes:
    0  everything ran, no fail verdicts
    1  at least one fail verdict
    2  bad arguments, or a function that could not be evaluated
    3  bad configuration
"""
import argparse
import csv
from dataclasses import replace
import itertools
import logging
import math
import os
import sys

from . import settings
from .config import INTEGER_GRIDS, load_config
from .errors import ConfigError, LommelError
from .identities.models import IdentityId, SUITES
from .identities.utils import (ReportCSVWriter, ReportJSONWriter, any_failed, default_report_path, identities_for,
                               run_grid, summarize)
from .oracle.conventions import read_conventions, resolve_conventions, write_conventions
from .specfun.chebyshev import chebyshev_t, chebyshev_u
from .specfun.lommel import PARITIES, lommel_s, lommel_s_via_chebyshev
from .specfun.models import EvalResult
from .specfun.series import bessel_j0, bessel_j2k, hyp1f2, struve_h0

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CONFIG = 3

# function -> (parameter names, evaluator taking (params, series options))
EVAL_FUNCTIONS = {
    'lommel_s': (('mu', 'nu', 'z'), lambda p, o: lommel_s(p['mu'], p['nu'], p['z'], **o)),
    'struve_h0': (('z',), lambda p, o: struve_h0(p['z'], **o)),
    'bessel_j0': (('z',), lambda p, o: bessel_j0(p['z'], **o)),
    'bessel_j2k': (('k', 'w'), lambda p, o: bessel_j2k(p['k'], p['w'], **o)),
    'hyp1f2': (('b1', 'b2', 'x'), lambda p, o: hyp1f2(p['b1'], p['b2'], p['x'], **o)),
    'chebyshev_t': (('n', 'x'), lambda p, o: EvalResult(chebyshev_t(p['n'], p['x']), 0.0)),
    'chebyshev_u': (('n', 'x'), lambda p, o: EvalResult(chebyshev_u(p['n'], p['x']), 0.0)),
    'lommel_cheb': (('n', 't'), lambda p, o: lommel_s_via_chebyshev(p['parity'], p['n'], p['t'])),
}
EVAL_PARAMS = ('mu', 'nu', 'z', 'k', 'w', 'b1', 'b2', 'x', 'n', 't')
# eval parameters that have to be whole numbers
INTEGER_PARAMS = ('k', 'n')

GRID_NAMES = tuple(settings.DEFAULT_GRIDS)
VERIFY_SUITES = tuple(SUITES) + ('conventions', 'all')


def parse_range(text, name='value'):
    """
    Parses a range spec into a tuple of floats.

        "0:5:0.5"    start:stop:step, stop included when within step/2
        "0.5,1,2"    explicit list
        "3"          a single value

    Raises:
        ValueError on anything else
    """
    text = text.strip()
    if ':' in text:
        pieces = text.split(':')
        if len(pieces) != 3:
            raise ValueError('{}: range needs start:stop:step, got {!r}'.format(name, text))
        start, stop, step = (float(p) for p in pieces)
        if not step > 0:
            raise ValueError('{}: step must be > 0, got {!r}'.format(name, text))
        if stop < start:
            raise ValueError('{}: stop below start in {!r}'.format(name, text))
        count = int(math.floor((stop - start) / step + 0.5)) + 1
        # strips the rounding noise of start + i*step
        return tuple(float('{:.12g}'.format(start + i * step)) for i in range(count))
    values = tuple(float(p) for p in text.split(',') if p.strip())
    if not values:
        raise ValueError('{}: empty value list'.format(name))
    return values


def _whole(values, name):
    if any(not math.isfinite(v) or v != int(v) for v in values):
        raise ValueError('{} needs whole numbers, got {}'.format(name, ', '.join(repr(v) for v in values)))
    return tuple(int(v) for v in values)


def _positive(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError('must be > 0, got {!r}'.format(text))
    return value


def _format(value):
    if isinstance(value, float):
        return '{:.16g}'.format(value)
    return str(value)


def print_table(columns, rows, out):
    table = [list(columns)] + [[_format(v) for v in row] for row in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(columns))]
    for row in table:
        out.write('  '.join(cell.rjust(width) for cell, width in zip(row, widths)) + '\n')


def cmd_eval(args, config, out):
    names, evaluate = EVAL_FUNCTIONS[args.function]
    grids = []
    try:
        for name in names:
            raw = getattr(args, name)
            if raw is None:
                raise ValueError('{} needs --{}'.format(args.function, name))
            values = parse_range(raw, name)
            grids.append(_whole(values, name) if name in INTEGER_PARAMS else values)
    except ValueError as e:
        print('error: {}'.format(e), file=sys.stderr)
        return EXIT_USAGE

    options = config.series_options()
    rows = []
    for values in itertools.product(*grids):
        params = dict(zip(names, values), parity=args.parity)
        try:
            result = evaluate(params, options)
        except LommelError as e:
            print('error: {}({}): {}'.format(
                args.function, ', '.join('{}={}'.format(k, params[k]) for k in names), e), file=sys.stderr)
            return EXIT_USAGE
        rows.append(list(values) + [result.value, result.abs_error_estimate])

    columns = list(names) + ['value', 'error_estimate']
    print_table(columns, rows, out)
    if args.csv:
        os.makedirs(os.path.dirname(os.path.abspath(args.csv)), exist_ok=True)
        with open(args.csv, 'w', newline='') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(columns)
            for row in rows:
                writer.writerow([repr(float(v)) if isinstance(v, float) else v for v in row])
        log.info("Wrote {} rows to {}".format(len(rows), args.csv))
    return EXIT_OK


def cmd_verify(args, config, out):
    conventions = None
    if args.suite in ('conventions', 'all'):
        report = resolve_conventions(config)
        write_conventions(report, config.conventions_path)
        for line in report.lines():
            out.write(line + '\n')
        conventions = report.as_mapping()
        if args.suite == 'conventions':
            return EXIT_OK
    if conventions is None:
        conventions = read_conventions(config.conventions_path)

    records = run_grid(identities_for([args.suite]), config, conventions=conventions)
    ReportJSONWriter(args.out or default_report_path(config), args.timings).write(records, conventions)
    if args.csv:
        ReportCSVWriter(args.csv, args.timings).write(records)

    for identity_id, counts, worst in summarize(records):
        out.write('{}: {} pass, {} fail, {} unresolved, worst residual {:.3e}\n'.format(
            identity_id, counts['pass'], counts['fail'], counts['unresolved'], worst))
    if any_failed(records):
        log.warning("Suite {} has failing cases".format(args.suite))
        return EXIT_FAIL
    return EXIT_OK


def cmd_scan(args, config, out):
    try:
        identity_id = IdentityId.parse(args.identity)
        overrides = {}
        for name in GRID_NAMES:
            raw = getattr(args, 'grid_' + name)
            if raw is not None:
                values = parse_range(raw, name)
                overrides[name] = _whole(values, name) if name in INTEGER_GRIDS else values
    except ValueError as e:
        print('error: {}'.format(e), file=sys.stderr)
        return EXIT_USAGE

    config = config.with_grids(**overrides)
    records = run_grid([identity_id], config)
    filename = args.csv or args.out or default_report_path(config, settings.CSV_FILENAME)
    ReportCSVWriter(filename, args.timings).write(records)
    out.write('{} rows written to {}\n'.format(len(records), filename))
    return EXIT_OK


COMMANDS = {
    'eval': cmd_eval,
    'verify': cmd_verify,
    'scan': cmd_scan,
}


def make_parser():
    parser = argparse.ArgumentParser(prog='lommel', description="Lommel function numerics and identity checks")

    parser.add_argument('--config', type=str, help="INI file with tolerances, grids and the output directory")
    parser.add_argument('--tol', type=_positive, help="Tolerance used for every identity case")
    parser.add_argument('--workers', type=int, help="Threads used to evaluate cases")
    parser.add_argument('--verbose', action='store_true', help="Log per case progress")

    commands = parser.add_subparsers(dest='command', required=True)

    eval_parser = commands.add_parser('eval', help="Tabulate one function over a range of inputs")
    eval_parser.add_argument('function', choices=sorted(EVAL_FUNCTIONS))
    for name in EVAL_PARAMS:
        eval_parser.add_argument('--' + name, type=str, help="value, list a,b,c or range start:stop:step")
    eval_parser.add_argument('--parity', choices=PARITIES, default='even', help="Route used by lommel_cheb")
    eval_parser.add_argument('--csv', type=str, help="Also write the table to this CSV file")

    verify_parser = commands.add_parser('verify', help="Run a verification suite")
    verify_parser.add_argument('suite', choices=VERIFY_SUITES)
    verify_parser.add_argument('--out', type=str, help="Where the JSON report goes")
    verify_parser.add_argument('--csv', type=str, help="Also write every record to this CSV file")
    verify_parser.add_argument('--timings', action='store_true', help="Fill in wall_ms (output is then not reproducible)")

    scan_parser = commands.add_parser('scan', help="Residuals of one identity over a grid, as CSV")
    scan_parser.add_argument('identity', type=str, help="Identity id, e.g. T1b or E17")
    for name in GRID_NAMES:
        scan_parser.add_argument('--' + name, dest='grid_' + name, type=str,
                                 help="Grid for {}: list or start:stop:step".format(name))
    scan_parser.add_argument('--csv', type=str, help="CSV file to write")
    scan_parser.add_argument('--out', type=str, help="Same as --csv")
    scan_parser.add_argument('--timings', action='store_true', help="Fill in wall_ms (output is then not reproducible)")

    return parser


def main(argv=None, out=None):
    try:
        args = make_parser().parse_args(argv)
    except SystemExit as e:
        return e.code

    if args.verbose:
        logging.getLogger('lommel').setLevel(logging.DEBUG)

    try:
        config = load_config(args.config)
        if args.tol is not None:
            config = replace(config, case_tol=args.tol)
        if args.workers is not None:
            config = replace(config, workers=args.workers)
    except ConfigError as e:
        print('config error: {}'.format(e), file=sys.stderr)
        return EXIT_CONFIG

    return COMMANDS[args.command](args, config, out or sys.stdout)
