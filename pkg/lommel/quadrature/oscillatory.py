"""
Semi-infinite integrals of oscillating, algebraically decaying integrands.

[start, inf) is cut into segments of length zero_spacing. Each segment is a
fixed Gauss pair. What happens to the sequence of partial sums depends on
the mode:

    absolute: the segment integrals are one-signed, so the partial sum gets a
              c/x^p tail fitted on the last few segments
    accelerated: the partial sums oscillate, Wynn's epsilon extrapolates them

auto looks at the last segments and picks one. integrate_beating handles
integrands mixing several frequencies by choosing the segment length.
"""
import logging
import math

import numpy as np

from .. import settings
from ..errors import ArgumentOutOfRange, BadFit, NoConvergence, SpecMismatch, UnstableSegmentation
from .acceleration import wynn_epsilon
from .gauss import gauss_panel
from .models import OscillatorySpec, QuadratureResult

log = logging.getLogger(__name__)

# successive estimates that have to agree before we stop
AGREEMENTS = 2


def tail_power_estimate(samples, p, X, fit_limit=settings.TAIL_FIT_LIMIT):
    """
    Fits f ~ c/x^p on (x, f) samples and returns int_X^inf c/x^p dx.

    The fit is least squares on f*x^p, which is the oscillation averaged
    envelope when the samples are segment means.
    """
    tail, residual = _fit_tail(samples, p, X)
    if residual > fit_limit * abs(tail):
        raise BadFit(residual, tail)
    return tail


def _fit_tail(samples, p, X):
    if not X > 0:
        raise ArgumentOutOfRange('X', X, 0.0)
    if not p > 1:
        raise ArgumentOutOfRange('p', p, 1.0)
    x = np.array([s[0] for s in samples], dtype=float)
    f = np.array([s[1] for s in samples], dtype=float)
    if x.size == 0:
        raise ValueError('tail_power_estimate needs samples')
    scaled = f * x ** p
    c = float(np.mean(scaled))
    spread = float(np.sqrt(np.mean((scaled - c) ** 2)))
    return c * X ** (1 - p) / (p - 1), spread * X ** (1 - p) / (p - 1)


def _effective_abscissa(left, right, p):
    # point where x^-p equals its mean over the segment
    mean = (left ** (1 - p) - right ** (1 - p)) / ((p - 1) * (right - left))
    return mean ** (-1 / p)


def _pick_mode(spec, segments):
    if spec.mode != 'auto':
        return spec.mode
    recent = np.array(segments[-settings.TAIL_WINDOW:])
    one_signed = bool(np.all(recent > 0) or np.all(recent < 0))
    if one_signed and spec.algebraic_decay_order > 1:
        return 'absolute'
    return 'accelerated'


def measured_decay(segments, start, spacing):
    """
    Decay exponent of the segment envelope, from the largest segment in each
    of the last two windows. None while fewer than three windows exist, the
    first one is usually not asymptotic yet.
    """
    window = settings.TAIL_WINDOW
    n = len(segments)
    if n < 3 * window:
        return None
    magnitudes = np.abs(np.asarray(segments))
    first = n - 2 * window + int(np.argmax(magnitudes[-2 * window:-window]))
    second = n - window + int(np.argmax(magnitudes[-window:]))
    if magnitudes[first] == 0 or magnitudes[second] == 0:
        return None
    x1 = start + spacing * (first + 0.5)
    x2 = start + spacing * (second + 0.5)
    if x1 <= 0:
        return None
    return math.log(magnitudes[first] / magnitudes[second]) / math.log(x2 / x1)


def _check_decay(spec, segments, mode):
    # faster decay than declared only hurts the fitted tail
    measured = measured_decay(segments, spec.start, spec.zero_spacing)
    if measured is None:
        return
    slower = spec.algebraic_decay_order - measured > settings.DECAY_SLACK
    faster = measured - spec.algebraic_decay_order > settings.DECAY_SLACK
    if slower or (faster and mode == 'absolute'):
        raise SpecMismatch(spec.algebraic_decay_order, measured)


def _segment_samples(spec, segments, first, last):
    p = spec.algebraic_decay_order
    samples = []
    for k in range(max(0, first), last):
        left = spec.start + k * spec.zero_spacing
        if left <= 0:
            continue
        samples.append((_effective_abscissa(left, left + spec.zero_spacing, p), segments[k] / spec.zero_spacing))
    return samples


def _absolute_estimate(spec, segments, partial):
    """
    Partial sum plus fitted tail. The model error is how far the tail moves
    when the window slides back two segments, which keeps the parity of a
    period-two sign pattern.
    """
    p = spec.algebraic_decay_order
    n = len(segments)
    window = settings.TAIL_WINDOW
    X = spec.start + n * spec.zero_spacing
    tail = tail_power_estimate(_segment_samples(spec, segments, n - window, n), p, X)
    if n >= window + 2:
        earlier, _ = _fit_tail(_segment_samples(spec, segments, n - window - 2, n - 2), p, X)
        model_error = abs(tail - earlier)
    else:
        model_error = abs(tail)
    return partial + tail, model_error, tail


def integrate_oscillatory(spec, tol=settings.QUAD_TOL_OSC, max_segments=settings.MAX_SEGMENTS,
                          min_segments=settings.MIN_SEGMENTS):
    """
    int_start^inf spec.integrand(x) dx.

    Converged once AGREEMENTS successive estimates agree within tol and the
    combined error estimate is below tol.

    Arguments:
        spec: OscillatorySpec
        tol: absolute tolerance
        max_segments: cutoff, NoConvergence past it
        min_segments: segments integrated before any estimate is trusted
    Returns:
        QuadratureResult
    """
    segments = []
    quad_error = 0.0
    estimates = []
    agreements = 0
    change = None
    mode = spec.mode
    panels = spec.panels_per_segment
    for k in range(max_segments):
        left = spec.start + k * spec.zero_spacing
        value, error = gauss_panel(spec.integrand, left, left + spec.zero_spacing,
                                   settings.SEGMENT_ORDER_LOW, settings.SEGMENT_ORDER_HIGH, panels)
        segments.append(value)
        quad_error += error
        if k + 1 < max(min_segments, 3):
            continue

        mode = _pick_mode(spec, segments)
        partial = math.fsum(segments)
        if mode == 'absolute':
            try:
                estimate, model_error, tail = _absolute_estimate(spec, segments, partial)
            except BadFit as e:
                # not asymptotic yet, keep integrating
                log.debug("Segment {}: {}".format(k + 1, e))
                estimates.clear()
                agreements = 0
                continue
        else:
            estimate, model_error = wynn_epsilon(np.cumsum(segments))
            tail = 0.0
        estimates.append(estimate)
        if len(estimates) < 2:
            continue

        change = abs(estimates[-1] - estimates[-2])
        agreements = agreements + 1 if change <= tol else 0
        error = max(change, model_error) + quad_error
        if agreements >= AGREEMENTS and error <= tol:
            _check_decay(spec, segments, mode)
            log.debug("Oscillatory integral converged ({}) after {} segments, error {:.2e}".format(
                mode, k + 1, error))
            return QuadratureResult(estimate, error, True, k + 1, tail, mode)

    _check_decay(spec, segments, mode)
    raise NoConvergence('oscillatory integral', max_segments, change)


def beat_spacings(frequencies, span=settings.BEAT_SPAN, steps=settings.BEAT_SPACING_STEPS,
                  separation=settings.BEAT_SEPARATION):
    """
    Two segment lengths for an integrand that is a sum of oscillations at
    the given angular frequencies.

    A component at frequency w moves its phase by w*L per segment; when that
    is close to a whole turn its segment integrals stop alternating and the
    epsilon algorithm stalls on it. Lengths between one and `span` half
    periods of the slowest component are scored by how far the worst
    component stays from a whole turn.

    Returns:
        (best length, best length at least `separation` away from it)
    """
    frequencies = np.array([w for w in frequencies if w > 0], dtype=float)
    if frequencies.size == 0:
        raise ValueError('beat_spacings needs a positive frequency')
    lengths = math.pi / frequencies.min() * np.linspace(1.0, span, steps)
    turns = np.multiply.outer(lengths, frequencies) / (2 * math.pi)
    score = np.min(np.abs(turns - np.round(turns)), axis=1)
    # ties go to the shorter length
    order = np.lexsort((lengths, -np.round(score, 2)))
    first = lengths[order[0]]
    for i in order[1:]:
        if abs(lengths[i] - first) >= separation * first:
            return float(first), float(lengths[i])
    raise ValueError('no second segment length {} away from {}'.format(separation, first))


def integrate_beating(integrand, frequencies, algebraic_decay_order, tol=settings.QUAD_TOL_OSC,
                      max_segments=settings.MAX_SEGMENTS, min_segments=settings.MIN_SEGMENTS,
                      agreement=settings.BEAT_AGREEMENT):
    """
    int_0^inf of an integrand mixing several frequencies, e.g. a product of
    two oscillations whose difference frequency beats slowly.

    The integral is taken in accelerated mode on both lengths from
    beat_spacings. Their distance is folded into the error estimate, and
    when it exceeds agreement*tol neither value is trusted.

    Raises:
        UnstableSegmentation when the two lengths disagree
    """
    spacings = beat_spacings(frequencies)
    fastest = max(frequencies)
    results = [integrate_oscillatory(OscillatorySpec(integrand, spacing, algebraic_decay_order, mode='accelerated',
                                                     max_frequency=fastest),
                                     tol, max_segments, min_segments)
               for spacing in spacings]
    gap = abs(results[0].value - results[1].value)
    if gap > agreement * tol:
        raise UnstableSegmentation(spacings, gap, agreement * tol)
    error = max(results[0].abs_error_estimate, results[1].abs_error_estimate, gap)
    log.debug("Beating integral over lengths {:.4g}, {:.4g}: gap {:.2e}".format(spacings[0], spacings[1], gap))
    return QuadratureResult(results[0].value, error, True, results[0].segments_used + results[1].segments_used,
                            0.0, 'accelerated')
