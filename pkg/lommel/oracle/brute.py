"""
Brute force reference values.

Nothing in here calls the quadrature package or the series in specfun; the
point is to have a second opinion that fails differently. Everything is a
fixed composite Simpson rule on a smooth integrand over [0, pi/2].
"""
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from .. import settings

log = logging.getLogger(__name__)

LOMMEL_KINDS = ('6a', '6b')


@dataclass(frozen=True)
class OracleResult:
    value: float
    method: str
    grid_points: int


def oracle_simpson(f, a, b, panels):
    """
    Composite Simpson rule with `panels` (even) panels. f takes an array.
    """
    if int(panels) != panels or panels < 2 or panels % 2:
        raise ValueError('Simpson needs an even number of panels >= 2, got {!r}'.format(panels))
    x = np.linspace(a, b, int(panels) + 1)
    y = np.broadcast_to(np.asarray(f(x), dtype=float), x.shape)
    return OracleResult(float(simpson(y, x=x)), 'simpson', int(panels) + 1)


def richardson_change(f, a, b, panels=settings.ORACLE_PANELS):
    """How much the Simpson value moves when the panel count doubles"""
    coarse = oracle_simpson(f, a, b, panels)
    fine = oracle_simpson(f, a, b, 2 * panels)
    return abs(fine.value - coarse.value)


def oracle_lhs_parseval(a, b, panels=settings.ORACLE_PANELS):
    """
    -pi * int_0^(pi/2) sin(a cos x) cos(b cos x) dx

    The first argument goes with the sine.
    """
    def f(x):
        c = np.cos(x)
        return np.sin(a * c) * np.cos(b * c)

    result = oracle_simpson(f, 0.0, math.pi / 2, panels)
    return OracleResult(-math.pi * result.value, 'parseval-simpson', result.grid_points)


def oracle_lommel_finite(kind, y, arg, panels=settings.ORACLE_PANELS):
    """
    int_0^1 sin(arg u) cos(y arccos u) / sqrt(1-u^2) du  (kind 6a, cos(arg u) for 6b)

    done in theta = arccos u, where it is int_0^(pi/2) sin(arg cos theta) cos(y theta).
    For real y this equals cos(pi y/2) s_{0,y}(arg) (6a) or
    -y sin(pi y/2) s_{-1,y}(arg) (6b).
    """
    if kind not in LOMMEL_KINDS:
        raise ValueError('kind must be one of {}, got {!r}'.format(LOMMEL_KINDS, kind))
    carrier = np.sin if kind == '6a' else np.cos

    def f(theta):
        return carrier(arg * np.cos(theta)) * np.cos(y * theta)

    result = oracle_simpson(f, 0.0, math.pi / 2, panels)
    return OracleResult(result.value, 'lommel-{}-simpson'.format(kind), result.grid_points)


def lommel_factor(kind, y):
    """The trigonometric factor oracle_lommel_finite carries in front of s"""
    if kind == '6a':
        return math.cos(math.pi * y / 2)
    return -y * math.sin(math.pi * y / 2)


def oracle_struve_h0(z, panels=settings.ORACLE_PANELS):
    """H0(z) = (2/pi) int_0^(pi/2) sin(z cos theta) dtheta"""
    result = oracle_simpson(lambda th: np.sin(z * np.cos(th)), 0.0, math.pi / 2, panels)
    return OracleResult(2 / math.pi * result.value, 'struve-simpson', result.grid_points)


def oracle_bessel_j0(z, terms=200):
    """
    J0 by its own ascending series, every term summed with fsum, no early
    exit, so it never depends on the stopping rule of the main series.
    """
    quarter = -z * z / 4
    term = 1.0
    parts = [term]
    for k in range(1, terms):
        term *= quarter / (k * k)
        parts.append(term)
        if term == 0.0:
            break
    return OracleResult(math.fsum(parts), 'j0-series', len(parts))
