"""
Settles which published form of an identity is the right one, by numbers.

Each adjudication computes a ground truth over a grid, measures every
candidate's worst deviation from it and picks the candidate that stays
within tolerance everywhere. The verdicts are written to a small text file:

    # identity chosen_form max_deviation
    T1a theorem1 1.234e-13

which the identities layer reads back.
"""
import logging
import math
import os
from dataclasses import dataclass, field

from .. import settings
from ..config import Config
from ..errors import LommelError
from ..identities.integrands import (eq10b_sides, eq14_candidates, eq14_integrand, eq17_candidates, eq17_lhs,
                                     theorem1_closed_form, transform_frequencies)
from ..quadrature.oscillatory import integrate_beating
from ..specfun.chebyshev import chebyshev_u
from .brute import oracle_lhs_parseval

log = logging.getLogger(__name__)

UNRESOLVED = 'unresolved'

# tolerances a candidate has to meet at every grid point
T1A_TOLERANCE = 1e-7
E10B_TOLERANCE = 1e-10
E14_TOLERANCE = 1e-3
E17_TOLERANCE = 1e-5
# quadrature tolerance for the E14 integrals
E14_QUAD_TOL = 1e-4
# w -> 0 stand in for the E17 limit case
E17_SMALL_W = 1e-6


@dataclass
class ConventionVerdict:
    identity_id: str
    chosen_form: str
    max_deviation: float
    # candidate name -> worst deviation over the grid
    deviations: dict = field(default_factory=dict)
    points: int = 0

    def line(self):
        return '{} {} {:.3e}'.format(self.identity_id, self.chosen_form, self.max_deviation)


@dataclass
class ConventionsReport:
    verdicts: list
    notes: list = field(default_factory=list)

    def as_mapping(self):
        return {v.identity_id: v.chosen_form for v in self.verdicts}

    def lines(self):
        out = ['# identity chosen_form max_deviation']
        out.extend(v.line() for v in self.verdicts)
        out.extend('# {}'.format(note) for note in self.notes)
        return out


def _decide(identity_id, deviations, tolerance, points):
    """
    Picks the single candidate within tolerance; several or none means
    unresolved.
    """
    if not points:
        log.warning("{}: no grid point could be evaluated".format(identity_id))
        return ConventionVerdict(identity_id, UNRESOLVED, math.inf, deviations, 0)
    matching = [name for name, worst in deviations.items() if worst <= tolerance]
    if len(matching) == 1:
        chosen = matching[0]
        return ConventionVerdict(identity_id, chosen, deviations[chosen], deviations, points)
    log.warning("{}: {} candidates match, verdict unresolved".format(identity_id, len(matching)))
    best = min(deviations.values()) if deviations else math.inf
    return ConventionVerdict(identity_id, UNRESOLVED, best, deviations, points)


def _track(deviations, candidates, truth):
    for name, candidate in candidates:
        deviation = abs(candidate.value - truth)
        deviations[name] = max(deviations.get(name, 0.0), deviation)


def adjudicate_theorem1a(config):
    """
    T1a against the Simpson value of its Fourier pairing. The
    integrand pairs s_{0,x} with b, so b goes with the sine.
    """
    deviations = {}
    points = 0
    for a in config.grid('a'):
        for b in config.grid('b'):
            truth = oracle_lhs_parseval(b, a).value
            _track(deviations, theorem1_closed_form('a', a, b, **config.series_options()), truth)
            points += 1
    return _decide('T1a', deviations, T1A_TOLERANCE, points)


def literal_pairing_note(config):
    """
    Which closed form the pairing with a on the sine reproduces. Written
    to the record as a comment only.
    """
    deviations = {}
    for a in config.grid('a'):
        for b in config.grid('b'):
            truth = oracle_lhs_parseval(a, b).value
            _track(deviations, theorem1_closed_form('a', a, b, **config.series_options()), truth)
    verdict = _decide('T1a', deviations, T1A_TOLERANCE, 1)
    return 'T1a with a on the sine matches {} (deviation {:.3e})'.format(verdict.chosen_form, verdict.max_deviation)


def adjudicate_eq10b(config):
    deviations = {}
    points = 0
    for x in config.grid('order'):
        for a in config.grid('a'):
            lhs, candidates = eq10b_sides(x, a, **config.series_options())
            _track(deviations, candidates, lhs.value)
            points += 1
    return _decide('E10b', deviations, E10B_TOLERANCE, points)


def adjudicate_eq14(config):
    """U_2n(x) against the accelerated integral, for n in {0, 1}"""
    deviations = {}
    points = 0
    for n in (0, 1):
        for x in config.grid('xc'):
            u = math.sqrt(1 - x * x)
            if abs(1 - u) < settings.TRANSFORM_EDGE:
                continue
            try:
                integral = integrate_beating(eq14_integrand(n, x), transform_frequencies(u), 0.5, tol=E14_QUAD_TOL,
                                             max_segments=config.max_segments)
            except LommelError as e:
                log.warning("E14 at n={} x={}: {}, point skipped".format(n, x, e))
                continue
            _track(deviations, eq14_candidates(n, x, integral), chebyshev_u(2 * n, x))
            points += 1
    return _decide('E14', deviations, E14_TOLERANCE, points)


def adjudicate_eq17(config):
    """
    Over the w, t grid for every K, plus the small w limit case where the
    sum collapses to s_{0,0}(t) = pi/2 H0(t). The same form has to win for
    every K.
    """
    grid_t = [t for t in config.grid('t') if t <= 3] or [1.0]
    grid_w = [w for w in config.grid('w') if w <= 3] + [E17_SMALL_W]
    per_k = []
    for K in config.grid('K'):
        deviations = {}
        points = 0
        for w in grid_w:
            for t in grid_t:
                lhs = eq17_lhs(K, w, t, **config.series_options())
                _track(deviations, eq17_candidates(w, t, **config.series_options()), lhs.value)
                points += 1
        per_k.append(_decide('E17', deviations, E17_TOLERANCE, points))
    if not per_k:
        return _decide('E17', {}, E17_TOLERANCE, 0)
    chosen = {v.chosen_form for v in per_k}
    if len(chosen) > 1:
        log.warning("E17 verdict depends on the truncation K: {}".format(sorted(chosen)))
        worst = max(per_k, key=lambda v: v.max_deviation)
        return ConventionVerdict('E17', UNRESOLVED, worst.max_deviation, worst.deviations, worst.points)
    return max(per_k, key=lambda v: v.max_deviation)


def resolve_conventions(config=None):
    """
    Runs every adjudication over the configured grids.

    Returns:
        ConventionsReport
    """
    config = config or Config()
    verdicts = []
    for adjudicate in (adjudicate_theorem1a, adjudicate_eq14, adjudicate_eq17, adjudicate_eq10b):
        verdict = adjudicate(config)
        log.info("Convention {}: {} (max deviation {:.3e})".format(
            verdict.identity_id, verdict.chosen_form, verdict.max_deviation))
        verdicts.append(verdict)
    return ConventionsReport(verdicts, [literal_pairing_note(config)])


def write_conventions(report, path):
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, 'w') as f:
        for line in report.lines():
            f.write("{}\n".format(line))
    log.info("Wrote conventions record to {}".format(path))


def read_conventions(path):
    """
    Reads a conventions record back into {identity_id: chosen_form}.
    A missing file reads as empty.
    """
    if not (os.path.exists(path) and os.path.isfile(path)):
        return {}
    chosen = {}
    with open(path, 'r') as f:
        for line in f:
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            parts = line.split()
            if len(parts) >= 2:
                chosen[parts[0]] = parts[1]
    return chosen
