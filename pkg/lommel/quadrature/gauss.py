"""
Gauss-Legendre panels and the adaptive integrator built on them.
"""
import heapq
import logging
import math
from functools import lru_cache

import numpy as np

from .. import settings
from ..errors import ArgumentOutOfRange, MaxDepth, UnsupportedOrder
from .models import QuadratureResult

log = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _leggauss(order):
    nodes, weights = np.polynomial.legendre.leggauss(order)
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return nodes, weights


def gauss_legendre(order):
    """
    Nodes and weights on [-1, 1].

    The arrays are cached and read only, copy them before changing anything.
    """
    if isinstance(order, bool) or not math.isfinite(order) or int(order) != order or not \
            settings.GAUSS_MIN_ORDER <= order <= settings.GAUSS_MAX_ORDER:
        raise UnsupportedOrder(order, settings.GAUSS_MIN_ORDER, settings.GAUSS_MAX_ORDER)
    return _leggauss(int(order))


def _evaluate(f, x):
    values = np.asarray(f(x), dtype=float)
    if values.shape != x.shape:
        values = np.broadcast_to(values, x.shape)
    return values


def gauss_rule(f, a, b, order, panels=1):
    """[a, b] cut into equal panels, f called once with all nodes"""
    nodes, weights = gauss_legendre(order)
    edges = np.linspace(a, b, panels + 1)
    half = np.diff(edges)[:, None] / 2
    x = (edges[:-1, None] + half * (nodes[None, :] + 1)).ravel()
    return float(np.dot((half * weights[None, :]).ravel(), _evaluate(f, x)))


def gauss_panel(f, a, b, low=settings.GAUSS_ORDER_LOW, high=settings.GAUSS_ORDER_HIGH, panels=1):
    """
    Returns (value, error) from an embedded pair of orders: the higher
    order result and its distance to the lower one.
    """
    coarse = gauss_rule(f, a, b, low, panels)
    fine = gauss_rule(f, a, b, high, panels)
    return fine, abs(fine - coarse)


def integrate_adaptive(f, a, b, tol=settings.QUAD_TOL_FINITE, max_depth=settings.MAX_DEPTH,
                       initial_panels=1, max_panels=settings.MAX_PANELS):
    """
    Global adaptive Gauss-Legendre quadrature.

    Keeps every panel in a heap keyed on its error estimate and bisects the
    worst one until the summed estimate drops below tol.

    Arguments:
        f: vectorised integrand
        a, b: finite limits, a < b
        tol: absolute tolerance on the summed error estimate
        max_depth: bisections allowed on any one panel
        initial_panels: equal panels to start from
    Returns:
        QuadratureResult
    """
    if not (math.isfinite(a) and math.isfinite(b)) or not a < b:
        raise ArgumentOutOfRange('[a, b]', (a, b), 'finite with a < b')

    heap = []
    edges = np.linspace(a, b, int(initial_panels) + 1)
    for left, right in zip(edges[:-1], edges[1:]):
        value, error = gauss_panel(f, float(left), float(right))
        heapq.heappush(heap, (-error, float(left), float(right), value, 0))
    total_error = sum(-item[0] for item in heap)

    while True:
        if total_error <= tol:
            # the running sum drifts, recheck it exactly before trusting it
            total_error = math.fsum(-item[0] for item in heap)
            if total_error <= tol:
                break
        neg_error, left, right, value, depth = heapq.heappop(heap)
        if depth + 1 > max_depth or len(heap) + 2 > max_panels:
            raise MaxDepth(left, right, depth + 1)
        middle = (left + right) / 2
        total_error += neg_error
        for lo, hi in ((left, middle), (middle, right)):
            part, error = gauss_panel(f, lo, hi)
            total_error += error
            heapq.heappush(heap, (-error, lo, hi, part, depth + 1))

    value = math.fsum(item[3] for item in heap)
    log.debug("Adaptive quadrature on [{}, {}]: {} panels, error {:.2e}".format(a, b, len(heap), total_error))
    return QuadratureResult(value, total_error, True, len(heap))


def integrate_cheb_weight(g, tol=settings.QUAD_TOL_FINITE, initial_panels=1, **kwargs):
    """
    int_0^1 g(u) / sqrt(1 - u^2) du, done as int_0^(pi/2) g(cos theta) dtheta
    so the weight's endpoint singularity never reaches the integrator.
    """
    return integrate_adaptive(lambda theta: g(np.cos(theta)), 0.0, math.pi / 2, tol=tol,
                              initial_panels=initial_panels, **kwargs)
