"""
The Lommel function s_{mu,nu}(z) and the things built directly on it.

    s_{mu,nu}(z) = z^(mu+1) / ((mu+1)^2 - nu^2) * 1F2(1; (mu-nu+3)/2, (mu+nu+3)/2; -z^2/4)

Two routes are offered: the ascending series above and, for mu in {0, -1}
with integer order, the finite Chebyshev integral

    s_{0,2n}(t)    = (-1)^n         int_0^1 sin(ut) T_2n(u)   / sqrt(1-u^2) du
    s_{-1,2n+1}(t) = (-1)^(n+1)/(2n+1) int_0^1 cos(ut) T_2n+1(u) / sqrt(1-u^2) du

The series is what everything else is checked against; the Chebyshev route
is what the semi-infinite integrands use, since t runs far past the point
where the series keeps any digits there.
"""
import logging
import math

import numpy as np

from .. import settings
from ..errors import ArgumentOutOfRange, DegenerateParameter, NoConvergence, PoleAtOrder, ZeroOrder
from ..quadrature.gauss import gauss_legendre, integrate_cheb_weight
from .chebyshev import chebyshev_t
from .models import ChebDegree, EvalResult, LommelParams, combine
from .series import MACHINE_EPS, hyp1f2, hyp1f2_array, is_nonpositive_integer

log = logging.getLogger(__name__)

PARITIES = ('even', 'odd')


def _as_params(p, *args):
    if isinstance(p, LommelParams):
        return p
    return LommelParams(p, *args)


def _check_pole(p, integer_eps):
    if abs(p.denominator) <= integer_eps:
        raise PoleAtOrder(p.mu, p.nu)


def _check_degenerate(p, integer_eps):
    for name, value in zip(('(mu-nu+3)/2', '(mu+nu+3)/2'), p.series_parameters):
        if is_nonpositive_integer(value, integer_eps):
            raise DegenerateParameter(name, value)


def lommel_s(p, *args, series_eps=settings.SERIES_EPS, max_terms=settings.MAX_TERMS,
             integer_eps=settings.INTEGER_EPS):
    """
    s_{mu,nu}(z) by its ascending series.

    Accepts a LommelParams or (mu, nu, z).

    Raises:
        PoleAtOrder: (mu+1)^2 = nu^2
        DegenerateParameter: a 1F2 parameter is a nonpositive integer
        ArgumentOutOfRange: z < 0, or z = 0 with mu < -1
    """
    p = _as_params(p, *args)
    _check_pole(p, integer_eps)
    _check_degenerate(p, integer_eps)
    if p.z < 0:
        raise ArgumentOutOfRange('z', p.z, 0.0)
    if p.z == 0:
        if p.mu > -1 + integer_eps:
            return EvalResult(0.0, 0.0, 1)
        if abs(p.mu + 1) <= integer_eps:
            return EvalResult(1 / p.denominator, 0.0, 1)
        raise ArgumentOutOfRange('z', p.z, 'z > 0 when mu < -1')

    b1, b2 = p.series_parameters
    series = hyp1f2(b1, b2, -p.z * p.z / 4, series_eps=series_eps, max_terms=max_terms, integer_eps=integer_eps)
    prefactor = p.z ** (p.mu + 1) / p.denominator
    return series.scaled(prefactor)


def lommel_s_prime(p, *args, series_eps=settings.SERIES_EPS, max_terms=settings.MAX_TERMS,
                   integer_eps=settings.INTEGER_EPS):
    """
    d/dz s_{mu,nu}(z), differentiating the series term by term:

        z^mu / ((mu+1)^2 - nu^2) * sum_k (mu+1+2k) (-z^2/4)^k / ((b1)_k (b2)_k)
    """
    p = _as_params(p, *args)
    _check_pole(p, integer_eps)
    _check_degenerate(p, integer_eps)
    if p.z < 0:
        raise ArgumentOutOfRange('z', p.z, 0.0)
    if p.z == 0:
        if p.mu > integer_eps:
            return EvalResult(0.0, 0.0, 1)
        if abs(p.mu) <= integer_eps:
            return EvalResult(1 / p.denominator, 0.0, 1)
        raise ArgumentOutOfRange('z', p.z, 'z > 0 when mu < 0')

    b1, b2 = p.series_parameters
    x = -p.z * p.z / 4
    term = 1.0
    total = p.mu + 1
    abs_sum = abs(total)
    small = 0
    min_k = max(-b1, -b2, 0)
    for k in range(max_terms):
        term *= x / ((b1 + k) * (b2 + k))
        weighted = (p.mu + 1 + 2 * (k + 1)) * term
        total += weighted
        abs_sum += abs(weighted)
        small = small + 1 if abs(weighted) <= series_eps * abs(total) else 0
        if small >= 2 and k + 1 > min_k:
            prefactor = p.z ** p.mu / p.denominator
            error = abs(weighted) + 2 * MACHINE_EPS * abs_sum
            return EvalResult(prefactor * total, abs(prefactor) * error, k + 2)
    raise NoConvergence("s' series", max_terms, abs(term))


def nudge_orders(mu, nu, integer_eps=settings.INTEGER_EPS):
    """
    Moves orders that sit within integer_eps of a pole or a degenerate
    parameter by NUDGE_FACTOR * integer_eps. Used inside integrands, where
    the accompanying trigonometric factor kills the singularity anyway.
    """
    nu = np.asarray(nu, dtype=float)
    step = settings.NUDGE_FACTOR * integer_eps
    bad = (np.abs((mu + 1) ** 2 - nu ** 2) <= integer_eps) \
        | is_nonpositive_integer((mu - nu + 3) / 2, integer_eps) \
        | is_nonpositive_integer((mu + nu + 3) / 2, integer_eps)
    return np.where(bad, nu + step, nu)


def lommel_s_array(mu, nu, z, series_eps=settings.SERIES_EPS, max_terms=settings.MAX_TERMS,
                   integer_eps=settings.INTEGER_EPS):
    """
    Series route over an array of orders nu at fixed mu and z.

    Returns:
        (values, errors) arrays shaped like nu
    """
    nu = nudge_orders(mu, nu, integer_eps)
    denominator = (mu + 1) ** 2 - nu ** 2
    if z < 0:
        raise ArgumentOutOfRange('z', z, 0.0)
    if z == 0:
        if mu > -1 + integer_eps:
            return np.zeros_like(nu), np.zeros_like(nu)
        if abs(mu + 1) <= integer_eps:
            return 1 / denominator, np.zeros_like(nu)
        raise ArgumentOutOfRange('z', z, 'z > 0 when mu < -1')
    values, errors, _ = hyp1f2_array((mu - nu + 3) / 2, (mu + nu + 3) / 2, -z * z / 4, series_eps, max_terms)
    prefactor = z ** (mu + 1) / denominator
    return prefactor * values, np.abs(prefactor) * errors


def _route_sign(parity, n):
    if parity == 'even':
        return (-1) ** n, 2 * n
    return (-1) ** (n + 1) / (2 * n + 1), 2 * n + 1


def _check_route(parity, n):
    if parity not in PARITIES:
        raise ValueError("parity must be 'even' or 'odd', got {!r}".format(parity))
    n = n.n if isinstance(n, ChebDegree) else ChebDegree(n).n
    return n


def lommel_s_via_chebyshev(parity, n, t, quad=integrate_cheb_weight, tol=settings.QUAD_TOL_FINITE):
    """
    s_{0,2n}(t) (even) or s_{-1,2n+1}(t) (odd) from the finite Chebyshev
    integral, done by quad (integrate_cheb_weight unless told otherwise).
    """
    n = _check_route(parity, n)
    if t < 0:
        raise ArgumentOutOfRange('t', t, 0.0)
    sign, order = _route_sign(parity, n)
    carrier = np.sin if parity == 'even' else np.cos

    def g(u):
        return carrier(u * t) * chebyshev_t(order, u)

    # roughly one panel per half oscillation
    panels = max(1, int(math.ceil((t + order) / math.pi)))
    result = quad(g, tol=tol, initial_panels=panels)
    return EvalResult(sign * result.value, abs(sign) * result.abs_error_estimate, result.segments_used)


def lommel_s_chebyshev_array(parity, n, t):
    """
    Vectorised Chebyshev route over an array of t, with a fixed composite
    Gauss rule in theta whose panel count follows max(t).
    """
    n = _check_route(parity, n)
    t = np.asarray(t, dtype=float)
    sign, order = _route_sign(parity, n)
    t_max = float(np.max(np.abs(t))) if t.size else 0.0
    panels = int(math.ceil((t_max + order) * math.pi / 4)) + 2

    nodes, weights = gauss_legendre(settings.CHEB_ROUTE_ORDER)
    edges = np.linspace(0.0, math.pi / 2, panels + 1)
    half = np.diff(edges) / 2
    theta = (edges[:-1, None] + half[:, None] * (nodes[None, :] + 1)).ravel()
    w = (half[:, None] * weights[None, :]).ravel()

    u = np.cos(theta)
    carrier = np.sin if parity == 'even' else np.cos
    values = carrier(np.multiply.outer(t, u)) @ (w * chebyshev_t(order, u))
    return sign * values


def lommel_recur_mu(m, x, a, **kwargs):
    """
    s_{m,x}(a) from one order lower in mu:

        (a/2x) [(m+x-1) s_{m-1,x-1}(a) - (m-x-1) s_{m-1,x+1}(a)]
    """
    if abs(x) <= kwargs.get('integer_eps', settings.INTEGER_EPS):
        raise ZeroOrder()
    lower = lommel_s(m - 1, x - 1, a, **kwargs)
    upper = lommel_s(m - 1, x + 1, a, **kwargs)
    scale = a / (2 * x)
    return combine((scale * (m + x - 1), lower), (-scale * (m - x - 1), upper))


DERIVATIVE_FORMS = ('recurrence', 'chebyshev')


def lommel_derivative(m, x, a, form='recurrence', **kwargs):
    """
    d/da s_{m,x}(a) from order mu - 1.

    Arguments:
        form: 'recurrence' gives (1/2)[(m+x-1) s_{m-1,x-1} + (m-x-1) s_{m-1,x+1}],
              'chebyshev' gives (1/2)[(x-1) s_{m-1,x-1} - (x+1) s_{m-1,x+1}],
              the form the Chebyshev representation produces. The two agree
              only at m = 0.
    """
    if form not in DERIVATIVE_FORMS:
        raise ValueError("form must be one of {}, got {!r}".format(DERIVATIVE_FORMS, form))
    if not a > 0:
        raise ArgumentOutOfRange('a', a, 0.0)
    lower = lommel_s(m - 1, x - 1, a, **kwargs)
    upper = lommel_s(m - 1, x + 1, a, **kwargs)
    if form == 'recurrence':
        return combine((0.5 * (m + x - 1), lower), (0.5 * (m - x - 1), upper))
    return combine((0.5 * (x - 1), lower), (-0.5 * (x + 1), upper))


def lommel_s_central_difference(m, x, a, h=settings.FD_STEP, **kwargs):
    """
    (s(a+h) - s(a-h)) / 2h, with the error taken from the h versus 2h
    difference plus the rounding the division amplifies.
    """
    if not a - 2 * h > 0:
        raise ArgumentOutOfRange('a', a, 2 * h)

    def s(z):
        return lommel_s(m, x, z, **kwargs).value

    fine = (s(a + h) - s(a - h)) / (2 * h)
    coarse = (s(a + 2 * h) - s(a - 2 * h)) / (4 * h)
    rounding = 4 * MACHINE_EPS * abs(s(a)) / h
    return EvalResult(fine, abs(fine - coarse) / 3 + rounding, 0)
