"""
Residual evaluators, one per family of identities.

Each returns a ReportRecord. Numerical failures never escape: a LommelError
turns into an unresolved record with the message in its notes.
"""
import logging
import math
import time

import numpy as np

from .. import settings
from ..config import Config
from ..errors import LommelError
from ..quadrature.gauss import integrate_cheb_weight
from ..quadrature.models import OscillatorySpec
from ..quadrature.oscillatory import integrate_beating, integrate_oscillatory
from ..specfun.chebyshev import chebyshev_t, chebyshev_u
from ..specfun.lommel import (lommel_derivative, lommel_recur_mu, lommel_s, lommel_s_central_difference,
                              lommel_s_prime, lommel_s_via_chebyshev)
from ..specfun.models import EvalResult, combine
from ..specfun.series import struve_h0
from .integrands import (eq10b_sides, eq14_candidates, eq14_integrand, eq17_candidates, eq17_lhs,
                         theorem1_closed_form, theorem1_integrand, transform_frequencies, transform_integrand)
from .models import IdentityCase, IdentityId, ReportRecord, Verdict, decide_verdict

log = logging.getLogger(__name__)

# quadrature tolerance for the conditionally convergent transforms, whose
# records are only held to 1e-3
TRANSFORM_QUAD_TOL = 1e-4


class OutsideDomain(LommelError):
    def __init__(self, what):
        self.what = what

    def __str__(self):
        return 'outside the explored domain: {}'.format(self.what)


def _case(identity_id, params, config, case=None):
    if case is not None:
        return case
    return IdentityCase(identity_id, params, config.tolerance_for(identity_id))


def _record(case, lhs, candidates, started, conventions=None):
    """
    Builds the record from the left side and the candidate right sides.
    A single candidate passes or fails; with several the best match is
    reported and no match at all is unresolved.
    """
    best = None
    for name, rhs in candidates:
        residual = abs(lhs.value - rhs.value)
        verdict = decide_verdict(residual, case.tolerance, lhs.abs_error_estimate, rhs.abs_error_estimate)
        if best is None or (verdict == Verdict.PASS and best[2] != Verdict.PASS) or \
                (verdict == best[2] and residual < best[1]):
            best = (name, residual, verdict, rhs)
    name, residual, verdict, rhs = best

    notes = ''
    if len(candidates) > 1:
        if verdict != Verdict.PASS:
            verdict = Verdict.UNRESOLVED
            notes = 'no candidate form matches'
            name = ''
        elif conventions and conventions.get(str(case.identity_id), name) != name:
            notes = 'matches {}, conventions record says {}'.format(
                name, conventions[str(case.identity_id)])

    scale = max(abs(lhs.value), abs(rhs.value))
    return ReportRecord(
        case,
        lhs=lhs.value,
        rhs=rhs.value,
        abs_residual=residual,
        rel_residual=residual / scale if scale > 0 else 0.0,
        lhs_error_estimate=lhs.abs_error_estimate,
        rhs_error_estimate=rhs.abs_error_estimate,
        wall_time=time.perf_counter() - started,
        verdict=verdict,
        convention=name if len(candidates) > 1 else '',
        notes=notes,
    )


def _guarded(case, compute, conventions=None):
    started = time.perf_counter()
    try:
        lhs, candidates = compute()
    except LommelError as e:
        log.warning("{} {} unresolved: {}".format(case.identity_id, case.params, e))
        return ReportRecord.unresolved(case, str(e), time.perf_counter() - started)
    record = _record(case, lhs, candidates, started, conventions)
    log.debug("{} {}: {} (residual {:.2e})".format(case.identity_id, case.params, record.verdict,
                                                    record.abs_residual))
    return record


def _from_quadrature(result):
    return EvalResult(result.value, result.abs_error_estimate, result.segments_used)


def residual_theorem1(variant, a, b=None, config=None, case=None, conventions=None):
    """
    Index integral T1a, T1b or T1c against its closed form. Primed variants
    ignore b and use b = a.
    """
    config = config or Config()
    variant = IdentityId.parse(str(variant))
    letter = variant.value[2]
    if variant.primed:
        b = a
    case = _case(variant, {'a': a} if variant.primed else {'a': a, 'b': b}, config, case)

    def compute():
        for name, value in (('a', a), ('b', b)):
            if not 0 < value <= settings.THEOREM1_MAX_ARG:
                raise OutsideDomain('{} = {!r} not in (0, {}]'.format(name, value, settings.THEOREM1_MAX_ARG))
        integrand, decay = theorem1_integrand(letter, a, b, **config.series_options())
        spec = OscillatorySpec(integrand, 1.0, decay)
        lhs = integrate_oscillatory(spec, tol=config.quad_tol_osc, max_segments=config.max_segments)
        candidates = theorem1_closed_form(letter, a, b, **config.series_options())
        if variant.primed:
            candidates = candidates[:1]
        return _from_quadrature(lhs), candidates

    return _guarded(case, compute, conventions)


def residual_theorem2_rep(variant, n, t, config=None, case=None):
    """Chebyshev representation of s_{0,2n} (T2_9a) or s_{-1,2n+1} (T2_9b) against the series"""
    config = config or Config()
    variant = IdentityId.parse(str(variant))
    case = _case(variant, {'n': n, 't': t}, config, case)

    def compute():
        if n > 8 or not 0 <= t <= 10:
            raise OutsideDomain('n = {} t = {}'.format(n, t))
        options = config.series_options()
        if variant == IdentityId.T2_9A:
            lhs = lommel_s(0, 2 * n, t, **options)
            rhs = lommel_s_via_chebyshev('even', n, t, tol=config.quad_tol_finite)
        else:
            lhs = lommel_s(-1, 2 * n + 1, t, **options)
            rhs = lommel_s_via_chebyshev('odd', n, t, tol=config.quad_tol_finite)
        return lhs, [('', rhs)]

    return _guarded(case, compute)


def residual_theorem2_transform(variant, n, u, config=None, case=None):
    """
    T_2n(u)/sqrt(1-u^2) (T2_8a) or T_2n+1(u)/sqrt(1-u^2) (T2_8b), zero for u > 1,
    against the semi-infinite integral of the Lommel function.
    """
    config = config or Config()
    variant = IdentityId.parse(str(variant))
    case = _case(variant, {'n': n, 'u': u}, config, case)

    def compute():
        if n > 4 or u <= 0 or abs(1 - u) < settings.TRANSFORM_EDGE:
            raise OutsideDomain('n = {} u = {}'.format(n, u))
        order = 2 * n if variant == IdentityId.T2_8A else 2 * n + 1
        lhs = chebyshev_t(order, u) / math.sqrt(1 - u * u) if u < 1 else 0.0
        integrand = transform_integrand('8a' if variant == IdentityId.T2_8A else '8b', n, u)
        integral = integrate_beating(integrand, transform_frequencies(u), 0.5,
                                     tol=max(config.quad_tol_osc, TRANSFORM_QUAD_TOL), max_segments=config.max_segments)
        if variant == IdentityId.T2_8A:
            factor = (-1) ** n * 2 / math.pi
        else:
            factor = (-1) ** (n + 1) * (2 * n + 1) * 2 / math.pi
        return EvalResult(lhs, 0.0), [('', _from_quadrature(integral).scaled(factor))]

    return _guarded(case, compute)


def residual_recurrence(which, m, x, a, config=None, case=None, conventions=None):
    """
    E10a  (1-x^2) s_{0,x}(a) + s_{2,x}(a) = a
    E10b  x^2 s_{-1,x}(a) - s_{1,x}(a) = -1, against the printed 0
    E11   s_{m,x}(a) from the mu recurrence
    E12   s'_{m,x}(a) term by term against the recurrence form
    E15a  2 s'_{m,x}(a) by central differences against the Chebyshev form
    """
    config = config or Config()
    which = IdentityId.parse(str(which))
    if which in (IdentityId.E10A, IdentityId.E10B):
        params = {'x': x, 'a': a}
    else:
        params = {'m': m, 'x': x, 'a': a}
    case = _case(which, params, config, case)
    options = config.series_options()

    def compute():
        if not 0 < a <= settings.THEOREM1_MAX_ARG:
            raise OutsideDomain('a = {!r}'.format(a))
        if which == IdentityId.E10A:
            lhs = combine((1 - x * x, lommel_s(0, x, a, **options)), (1.0, lommel_s(2, x, a, **options)))
            return lhs, [('', EvalResult(a, 0.0))]
        if which == IdentityId.E10B:
            return eq10b_sides(x, a, **options)
        if which == IdentityId.E11:
            return lommel_s(m, x, a, **options), [('', lommel_recur_mu(m, x, a, **options))]
        if which == IdentityId.E12:
            return lommel_s_prime(m, x, a, **options), [('', lommel_derivative(m, x, a, **options))]
        if which == IdentityId.E15A:
            slope = lommel_s_central_difference(m, x, a, **options).scaled(2)
            rhs = lommel_derivative(m, x, a, form='chebyshev', **options).scaled(2)
            return slope, [('', rhs)]
        raise ValueError('{} is not a recurrence'.format(which))

    return _guarded(case, compute, conventions)


def residual_eq13_14(which, n, x, config=None, case=None, conventions=None):
    """
    E13  U_2n(x) = (-1)^n T_2n+1(sqrt(1-x^2)) / sqrt(1-x^2), exact
    E14  U_2n(x) against the cosine integral of s_{-1,2n+1}, three normalisations
    """
    config = config or Config()
    which = IdentityId.parse(str(which))
    case = _case(which, {'n': n, 'x': x}, config, case)

    def compute():
        if n > 3 or not 0.1 < x < 0.9:
            raise OutsideDomain('n = {} x = {}'.format(n, x))
        lhs = EvalResult(chebyshev_u(2 * n, x), 0.0)
        root = math.sqrt(1 - x * x)
        if which == IdentityId.E13:
            return lhs, [('', EvalResult((-1) ** n * chebyshev_t(2 * n + 1, root) / root, 0.0))]
        if abs(1 - root) < settings.TRANSFORM_EDGE:
            raise OutsideDomain('x = {} puts sqrt(1-x^2) within {} of 1'.format(x, settings.TRANSFORM_EDGE))
        integral = integrate_beating(eq14_integrand(n, x), transform_frequencies(root), 0.5,
                                     tol=max(config.quad_tol_osc, TRANSFORM_QUAD_TOL), max_segments=config.max_segments)
        return lhs, eq14_candidates(n, x, integral)

    return _guarded(case, compute, conventions)


def residual_eq15b(n, x, config=None, case=None):
    """T_2n+1(x) + T_2n-1(x) = 2x T_2n(x)"""
    config = config or Config()
    case = _case(IdentityId.E15B, {'n': n, 'x': x}, config, case)

    def compute():
        if n < 1:
            raise OutsideDomain('n = {} needs n >= 1'.format(n))
        lhs = chebyshev_t(2 * n + 1, x) + chebyshev_t(2 * n - 1, x)
        return EvalResult(lhs, 0.0), [('', EvalResult(2 * x * chebyshev_t(2 * n, x), 0.0))]

    return _guarded(case, compute)


def residual_eq13_15b(which, n, x, config=None, case=None):
    """The two exact polynomial identities, E13 and E15b"""
    which = IdentityId.parse(str(which))
    if which == IdentityId.E15B:
        return residual_eq15b(n, x, config, case)
    return residual_eq13_14(which, n, x, config, case)


def _eq16_sides(n, x, config):
    options = config.series_options()
    lhs = combine(*[((-1) ** k, lommel_s(0, 2 * k, x, **options)) for k in range(n + 1)])
    integral = integrate_cheb_weight(lambda u: np.sin(x * u) * chebyshev_u(2 * n, u), tol=config.quad_tol_finite,
                                     initial_panels=max(1, int(math.ceil((x + 2 * n) / math.pi))))
    rhs = combine((math.pi / 4, struve_h0(x, **options)),
                  (0.5, EvalResult(integral.value, integral.abs_error_estimate)))
    return lhs, rhs


def residual_eq16(n, x, config=None, case=None):
    """sum_{k<=n} (-1)^k s_{0,2k}(x) = pi/4 H0(x) + 1/2 int sin(xu) U_2n(u)/sqrt(1-u^2)"""
    config = config or Config()
    case = _case(IdentityId.E16, {'n': n, 'x': x}, config, case)

    def compute():
        if n > 5 or not 0 < x <= 5:
            raise OutsideDomain('n = {} x = {}'.format(n, x))
        lhs, rhs = _eq16_sides(n, x, config)
        return lhs, [('', rhs)]

    return _guarded(case, compute)


def telescoped_eq16(n, x, config=None):
    """
    The difference of the sum rule at n and n-1:

        (-1)^n s_{0,2n}(x) - 1/2 int sin(xu) (U_2n - U_2n-2)(u) / sqrt(1-u^2) du

    Returns an EvalResult that should vanish.
    """
    config = config or Config()
    if n < 1:
        raise OutsideDomain('n = {} needs n >= 1'.format(n))
    term = lommel_s(0, 2 * n, x, **config.series_options())

    def g(u):
        return np.sin(x * u) * (chebyshev_u(2 * n, u) - chebyshev_u(2 * n - 2, u))

    integral = integrate_cheb_weight(g, tol=config.quad_tol_finite,
                                     initial_panels=max(1, int(math.ceil((x + 2 * n) / math.pi))))
    return combine(((-1) ** n, term), (-0.5, EvalResult(integral.value, integral.abs_error_estimate)))


def residual_eq17(K, w, t, config=None, case=None, conventions=None):
    """
    sum_{k<=K} J_2k(w) s_{0,2k}(t) against the halved and the printed
    constant.
    """
    config = config or Config()
    case = _case(IdentityId.E17, {'K': K, 'w': w, 't': t}, config, case)

    def compute():
        if K < 20 or not (0 < w <= 3 and 0 < t <= 3):
            raise OutsideDomain('K = {} w = {} t = {}'.format(K, w, t))
        options = config.series_options()
        return eq17_lhs(K, w, t, **options), eq17_candidates(w, t, **options)

    return _guarded(case, compute, conventions)
