"""
Ascending series: the 1F2 kernel that s_{mu,nu} is built from, Struve H0
and the even-order Bessel functions.

The kernel works on numpy arrays so the index integrals can evaluate a whole
panel of orders in one go; the scalar entry points wrap it.
"""
import logging
import math

import numpy as np

from .. import settings
from ..errors import ArgumentOutOfRange, DegenerateParameter, InvalidOrder, NoConvergence
from .models import EvalResult

log = logging.getLogger(__name__)

MACHINE_EPS = np.finfo(float).eps


def is_nonpositive_integer(b, integer_eps=settings.INTEGER_EPS):
    """Works elementwise on arrays"""
    b = np.asarray(b, dtype=float)
    return (b < 0.5) & (np.abs(b - np.round(b)) <= integer_eps)


def hyp1f2_array(b1, b2, x, series_eps=settings.SERIES_EPS, max_terms=settings.MAX_TERMS):
    """
    Vectorised sum_k x^k / ((b1)_k (b2)_k).

    b1, b2 and x broadcast against each other. Each element stops on its own
    once two consecutive terms fall below series_eps times its partial sum,
    but never before k passes max(-b1, -b2), where the terms are still allowed
    to grow.

    Returns:
        (values, errors, terms) arrays of the broadcast shape
    """
    b1, b2, x = np.broadcast_arrays(*(np.asarray(v, dtype=float) for v in (b1, b2, x)))
    total = np.ones(x.shape)
    term = np.ones(x.shape)
    abs_sum = np.ones(x.shape)
    small = np.zeros(x.shape, dtype=int)
    terms = np.ones(x.shape, dtype=int)
    done = np.zeros(x.shape, dtype=bool)
    min_k = np.maximum(np.maximum(-b1, -b2), 0.0)

    with np.errstate(over='ignore', under='ignore', invalid='ignore'):
        for k in range(max_terms):
            active = ~done
            if not active.any():
                break
            term = np.where(active, term * x / ((b1 + k) * (b2 + k)), term)
            total = np.where(active, total + term, total)
            abs_sum = np.where(active, abs_sum + np.abs(term), abs_sum)
            terms = np.where(active, terms + 1, terms)
            below = np.abs(term) <= series_eps * np.abs(total)
            small = np.where(active & below, small + 1, np.where(active, 0, small))
            done |= active & (small >= 2) & (k + 1 > min_k)

        if not done.all():
            raise NoConvergence('1F2 series', max_terms, float(np.max(np.abs(term[~done]))))

        # geometric bound on what is left after the last term, plus rounding
        # in the partial sums; the second part is what grows with |x|
        ratio = np.abs(x) / np.abs((b1 + terms - 1) * (b2 + terms - 1))
        tail = np.where(ratio < 1, np.abs(term) * ratio / (1 - ratio), np.abs(term))
        errors = tail + 2 * MACHINE_EPS * abs_sum
    return total, errors, terms


def hyp1f2(b1, b2, x, series_eps=settings.SERIES_EPS, max_terms=settings.MAX_TERMS,
           integer_eps=settings.INTEGER_EPS):
    """
    1F2(1; b1, b2; x) for scalar arguments.

    Raises DegenerateParameter when b1 or b2 is a nonpositive integer and
    ArgumentOutOfRange past the configured argument limit.
    """
    for name, value in (('b1', b1), ('b2', b2)):
        if is_nonpositive_integer(value, integer_eps):
            raise DegenerateParameter(name, value)
    limit = settings.ARGUMENT_LIMIT ** 2 / 4
    if abs(x) > limit:
        raise ArgumentOutOfRange('x', x, limit)
    if abs(x) > settings.CERTIFIED_ARGUMENT ** 2 / 4:
        log.warning("1F2 argument {} outside the certified range, error estimate widened".format(x))

    values, errors, terms = hyp1f2_array(b1, b2, x, series_eps, max_terms)
    return EvalResult(float(values), float(errors), int(terms))


def struve_h0(z, series_eps=settings.SERIES_EPS, max_terms=settings.MAX_TERMS, **kwargs):
    """
    H0(z) = sum_k (-1)^k (z/2)^(2k+1) / Gamma(k+3/2)^2, evaluated at |z| and
    given the sign of z afterwards.
    """
    sign = -1.0 if z < 0 else 1.0
    z = abs(z)
    if z > settings.ARGUMENT_LIMIT:
        raise ArgumentOutOfRange('z', z, settings.ARGUMENT_LIMIT)
    if z > settings.CERTIFIED_ARGUMENT:
        log.warning("H0({}) outside the certified range, error estimate widened".format(z))
    if z == 0:
        return EvalResult(0.0, 0.0, 1)

    half = z / 2
    # Gamma(3/2)^2 = pi/4; terms come from their ratio so nothing overflows
    term = half / (math.pi / 4)
    total = term
    abs_sum = abs(term)
    small = 0
    for k in range(1, max_terms):
        term *= -half * half / (k + 0.5) ** 2
        total += term
        abs_sum += abs(term)
        small = small + 1 if abs(term) <= series_eps * abs(total) else 0
        if small >= 2:
            ratio = half * half / (k + 1.5) ** 2
            tail = abs(term) * ratio / (1 - ratio) if ratio < 1 else abs(term)
            rounding = 2 * MACHINE_EPS * abs_sum
            if z > settings.CERTIFIED_ARGUMENT:
                # each term carries the rounding of the k ratios before it
                rounding *= k + 1
            return EvalResult(sign * total, tail + rounding, k + 1)
    raise NoConvergence('Struve H0 series', max_terms, abs(term))


def bessel_j0(z, **kwargs):
    return bessel_j2k(0, z, **kwargs)


def _even_bessel_series(k, w, series_eps=settings.SERIES_EPS, max_terms=settings.MAX_TERMS, **kwargs):
    # J_2k(w) = (w/2)^2k / (2k)! * 1F2(1; 1, 2k+1; -w^2/4)
    w = abs(w)
    if w > settings.ARGUMENT_LIMIT:
        raise ArgumentOutOfRange('w', w, settings.ARGUMENT_LIMIT)
    if w > settings.CERTIFIED_ARGUMENT:
        log.warning("J_{}({}) outside the certified range, error estimate widened".format(2 * k, w))
    values, errors, terms = hyp1f2_array(1.0, 2 * k + 1.0, -w * w / 4, series_eps, max_terms)
    if k == 0:
        prefactor = 1.0
    elif w == 0:
        return EvalResult(0.0, 0.0, 1)
    else:
        prefactor = math.exp(2 * k * math.log(w / 2) - math.lgamma(2 * k + 1))
    return EvalResult(prefactor * float(values), prefactor * float(errors), int(terms))


def _miller_even(k, w, start):
    """
    Backward recurrence J_{m-1} = (2m/w) J_m - J_{m+1} from order `start`,
    normalised with J0 + 2 sum J_2j = 1.
    """
    above, here = 0.0, 1e-30
    norm = 0.0
    target = 0.0
    for m in range(start, 0, -1):
        if m % 2 == 0:
            norm += 2 * here
        if m == 2 * k:
            target = here
        above, here = here, 2 * m / w * here - above
        if abs(here) > 1e250:
            above, here, norm, target = above * 1e-250, here * 1e-250, norm * 1e-250, target * 1e-250
    norm += here
    if k == 0:
        target = here
    return target / norm


def bessel_j2k(k, w, **kwargs):
    """
    J_2k(w). Ascending series for |w| <= BESSEL_SERIES_LIMIT, Miller's
    backward recurrence above it, where the series cancels too badly.
    """
    if isinstance(k, bool) or not math.isfinite(k) or int(k) != k or k < 0:
        raise InvalidOrder(k)
    k = int(k)
    w = abs(w)
    if w <= settings.BESSEL_SERIES_LIMIT:
        return _even_bessel_series(k, w, **kwargs)
    if w > settings.ARGUMENT_LIMIT:
        raise ArgumentOutOfRange('w', w, settings.ARGUMENT_LIMIT)

    start = 2 * (int(w) + settings.MILLER_EXTRA_ORDERS + k)
    value = _miller_even(k, w, start)
    check = _miller_even(k, w, start + 10)
    return EvalResult(check, abs(check - value) + 4 * MACHINE_EPS * abs(check), start + 10)
