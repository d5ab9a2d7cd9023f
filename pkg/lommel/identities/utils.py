from concurrent.futures import ThreadPoolExecutor
import csv
import itertools
import json
import logging
import math
import os
import time
import traceback

from .. import settings
from ..config import Config
from ..oracle.conventions import read_conventions
from .models import CSV_HEADER, IdentityCase, IdentityId, ReportRecord, SUITES, Verdict
from .residuals import (residual_eq13_15b, residual_eq13_14, residual_eq16, residual_eq17, residual_recurrence,
                        residual_theorem1, residual_theorem2_rep, residual_theorem2_transform)

log = logging.getLogger(__name__)


def _product(**grids):
    names = list(grids)
    for values in itertools.product(*(grids[name] for name in names)):
        yield dict(zip(names, values))


def _in_theorem1_range(value):
    return 0 < value <= settings.THEOREM1_MAX_ARG


def _param_sets(identity_id, config):
    g = config.grid
    if identity_id.suite == 'theorem1':
        if identity_id.primed:
            return [p for p in _product(a=g('a')) if _in_theorem1_range(p['a'])]
        return [p for p in _product(a=g('a'), b=g('b'))
                if _in_theorem1_range(p['a']) and _in_theorem1_range(p['b'])]
    if identity_id in (IdentityId.T2_9A, IdentityId.T2_9B):
        return [p for p in _product(n=g('n'), t=g('t')) if p['n'] <= 8 and 0 <= p['t'] <= 10]
    if identity_id in (IdentityId.T2_8A, IdentityId.T2_8B):
        return [p for p in _product(n=g('n'), u=g('u')) if p['n'] <= 4 and p['u'] > 0]
    a_values = [a for a in g('a') if _in_theorem1_range(a)]
    if identity_id in (IdentityId.E10A, IdentityId.E10B):
        return list(_product(x=g('order'), a=a_values))
    if identity_id in (IdentityId.E11, IdentityId.E12):
        return list(_product(m=g('m'), x=g('order'), a=a_values))
    if identity_id == IdentityId.E15A:
        return list(_product(m=(0,), x=g('order'), a=a_values))
    if identity_id == IdentityId.E13:
        return [p for p in _product(n=g('n'), x=g('xc')) if p['n'] <= 3 and 0.1 < p['x'] < 0.9]
    if identity_id == IdentityId.E14:
        return [p for p in _product(n=g('n'), x=g('xc')) if p['n'] <= 3 and 0.1 < p['x'] < 0.9]
    if identity_id == IdentityId.E15B:
        return [p for p in _product(n=g('n'), x=g('xc')) if p['n'] >= 1]
    if identity_id == IdentityId.E16:
        return [p for p in _product(n=g('n'), x=g('x')) if p['n'] <= 5 and p['x'] <= 5]
    if identity_id == IdentityId.E17:
        return [p for p in _product(K=g('K'), w=g('w'), t=g('t')) if p['t'] <= 3 and p['w'] <= 3]
    raise ValueError('no grid for {}'.format(identity_id))


def build_cases(identity_id, config=None, start_index=0):
    """
    Expands the configured grids into the cases of one identity. Grid
    points outside the explored domain are dropped here.

    Arguments:
        identity_id: IdentityId or its string form
        config: Config holding the grids
        start_index: index given to the first case, so several identities
            can be numbered in one sequence
    Returns:
        list of IdentityCase
    """
    config = config or Config()
    identity_id = IdentityId.parse(str(identity_id))
    params = _param_sets(identity_id, config)

    tolerance = config.tolerance_for(identity_id)
    cases = [IdentityCase(identity_id, p, tolerance, start_index + i) for i, p in enumerate(params)]
    if not cases:
        log.debug("{}: empty grid".format(identity_id))
    else:
        log.debug("{}: {} cases".format(identity_id, len(cases)))
    return cases


def evaluate_case(case, config=None, conventions=None):
    """
    Runs the residual evaluator for one case. Never raises: anything that
    escapes the evaluator is logged and reported as unresolved.
    """
    config = config or Config()
    which = case.identity_id
    p = case.params
    try:
        if which.suite == 'theorem1':
            return residual_theorem1(which, p['a'], p.get('b'), config, case, conventions)
        if which in (IdentityId.T2_9A, IdentityId.T2_9B):
            return residual_theorem2_rep(which, p['n'], p['t'], config, case)
        if which in (IdentityId.T2_8A, IdentityId.T2_8B):
            return residual_theorem2_transform(which, p['n'], p['u'], config, case)
        if which in (IdentityId.E10A, IdentityId.E10B, IdentityId.E11, IdentityId.E12, IdentityId.E15A):
            return residual_recurrence(which, p.get('m', 0), p['x'], p['a'], config, case, conventions)
        if which == IdentityId.E14:
            return residual_eq13_14(which, p['n'], p['x'], config, case, conventions)
        if which in (IdentityId.E13, IdentityId.E15B):
            return residual_eq13_15b(which, p['n'], p['x'], config, case)
        if which == IdentityId.E16:
            return residual_eq16(p['n'], p['x'], config, case)
        if which == IdentityId.E17:
            return residual_eq17(p['K'], p['w'], p['t'], config, case, conventions)
        raise ValueError('no evaluator for {}'.format(which))
    except Exception as e:
        log.error("{} {} raised {}".format(which, p, e))
        log.error(traceback.format_exc())
        return ReportRecord.unresolved(case, '{}: {}'.format(type(e).__name__, e))


def identities_for(names):
    """
    Turns suite names and identity ids into an ordered list of IdentityId,
    without repeats. 'all' means every suite.
    """
    out = []
    for name in names:
        if name == 'all':
            found = [i for members in SUITES.values() for i in members]
        elif name in SUITES:
            found = list(SUITES[name])
        else:
            found = [IdentityId.parse(name)]
        out.extend(i for i in found if i not in out)
    return out


def run_grid(identity_ids, config=None, workers=None, conventions=None):
    """
    Evaluates every case of the given identities.

    The conventions record is read from the output directory unless passed
    in. Records come back in case order whatever the number of workers.

    Returns:
        list of ReportRecord
    """
    config = config or Config()
    workers = workers or config.workers
    if conventions is None:
        conventions = read_conventions(config.conventions_path)

    cases = []
    for identity_id in identity_ids:
        cases.extend(build_cases(identity_id, config, start_index=len(cases)))
    log.info("Evaluating {} cases with {} worker(s)".format(len(cases), workers))

    started = time.perf_counter()
    if workers == 1:
        records = [evaluate_case(case, config, conventions) for case in cases]
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(evaluate_case, case, config, conventions) for case in cases]
            records = [future.result() for future in futures]
    records.sort(key=lambda r: r.case.index)
    log.info("Finished {} cases in {:.1f}s".format(len(records), time.perf_counter() - started))
    return records


def summarize(records):
    """
    Per identity counts, in first-seen order.

    Returns:
        list of (identity_id, {verdict: count}, worst abs residual)
    """
    table = {}
    for record in records:
        counts, worst = table.get(record.identity_id, ({'pass': 0, 'fail': 0, 'unresolved': 0}, 0.0))
        counts[str(record.verdict)] += 1
        if math.isfinite(record.abs_residual):
            worst = max(worst, record.abs_residual)
        table[record.identity_id] = (counts, worst)
    return [(identity_id, counts, worst) for identity_id, (counts, worst) in table.items()]


class ReportCSVWriter:
    """
    Writes report records to a CSV file, one row per record, header first
    """
    def __init__(self, filename, timings=False):
        self.filename = filename
        self.timings = timings

    def write(self, records):
        directory = os.path.dirname(os.path.abspath(self.filename))
        os.makedirs(directory, exist_ok=True)
        with open(self.filename, 'w', newline='') as fout:
            writer = csv.writer(fout, lineterminator='\n')
            writer.writerow(CSV_HEADER)
            for record in records:
                writer.writerow(record.row(self.timings))
        log.info("Wrote {} rows to {}".format(len(records), self.filename))


class ReportJSONWriter:
    """
    Writes the verification report: every record plus the per identity
    summary and the conventions in force
    """
    def __init__(self, filename, timings=False):
        self.filename = filename
        self.timings = timings

    def document(self, records, conventions=None):
        return {
            'conventions': dict(sorted((conventions or {}).items())),
            'summary': [
                {'identity_id': str(identity_id), 'worst_abs_residual': worst, **counts}
                for identity_id, counts, worst in summarize(records)
            ],
            'records': [record.to_dict(self.timings) for record in records],
        }

    def write(self, records, conventions=None):
        directory = os.path.dirname(os.path.abspath(self.filename))
        os.makedirs(directory, exist_ok=True)
        with open(self.filename, 'w') as fout:
            json.dump(self.document(records, conventions), fout, indent=2)
            fout.write('\n')
        log.info("Wrote report to {}".format(self.filename))


def default_report_path(config, name=settings.REPORT_FILENAME):
    return os.path.join(config.output_dir, name)


def any_failed(records):
    return any(r.verdict == Verdict.FAIL for r in records)


