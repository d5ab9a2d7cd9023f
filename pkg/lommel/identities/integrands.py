"""
Integrands and closed forms shared by the residual evaluators and the
conventions adjudication.

Where the published form of an identity is in doubt, the candidates are
listed as (name, value) pairs in a fixed order; the first one is the form
believed correct.
"""
import math

import numpy as np

from .. import settings
from ..specfun.lommel import lommel_s, lommel_s_array, lommel_s_chebyshev_array
from ..specfun.models import EvalResult, combine
from ..specfun.series import bessel_j0, bessel_j2k, struve_h0

# (mu of the first factor, mu of the second factor, decay exponent)
THEOREM1_SHAPES = {
    'a': (-1, 0, 3.0),
    'b': (0, 0, 4.0),
    'c': (-1, -1, 2.0),
}


def theorem1_integrand(letter, a, b, integer_eps=settings.INTEGER_EPS, **series):
    """
    Returns (integrand, decay order) for T1a, T1b or T1c.

        a: x sin(pi x)      s_{-1,x}(a) s_{0,x}(b)
        b: cos^2(pi x/2)    s_{0,x}(a)  s_{0,x}(b)
        c: x^2 sin^2(pi x/2) s_{-1,x}(a) s_{-1,x}(b)
    """
    mu_a, mu_b, decay = THEOREM1_SHAPES[letter]

    def integrand(x):
        x = np.asarray(x, dtype=float)
        first, _ = lommel_s_array(mu_a, x, a, integer_eps=integer_eps, **series)
        second, _ = lommel_s_array(mu_b, x, b, integer_eps=integer_eps, **series)
        if letter == 'a':
            weight = x * np.sin(np.pi * x)
        elif letter == 'b':
            weight = np.cos(np.pi * x / 2) ** 2
        else:
            weight = (x * np.sin(np.pi * x / 2)) ** 2
        return weight * first * second

    return integrand, decay


def theorem1_closed_form(letter, a, b, **series):
    """
    Right hand sides of T1a, T1b and T1c, as candidate lists.

    For (a) the stated form comes first and the form obtained from the
    Fourier pairing written out for it second.
    """
    if letter == 'a':
        minus = struve_h0(a - b, **series)
        plus = struve_h0(a + b, **series)
        scale = math.pi ** 2 / 4
        return [
            ('theorem1', combine((scale, minus), (-scale, plus))),
            ('eq5', combine((-scale, minus), (-scale, plus))),
        ]
    minus = bessel_j0(abs(a - b), **series)
    plus = bessel_j0(a + b, **series)
    scale = math.pi ** 2 / 8
    sign = -1 if letter == 'b' else 1
    return [('theorem1', combine((scale, minus), (sign * scale, plus)))]


def transform_integrand(variant, n, u):
    """
    The T2_8a and T2_8b integrands in t:
        8a: sin(ut) s_{0,2n}(t)
        8b: cos(ut) s_{-1,2n+1}(t)
    with s from the vectorised Chebyshev route.
    """
    if variant == '8a':
        return lambda t: np.sin(u * t) * lommel_s_chebyshev_array('even', n, t)
    return lambda t: np.cos(u * t) * lommel_s_chebyshev_array('odd', n, t)


def transform_frequencies(u):
    """
    Angular frequencies in the transform integrands: the carrier u beating
    against the unit frequency of the Bessel part of s gives 1+u and |1-u|.
    """
    return (u, 1 + u, abs(1 - u))


def eq14_integrand(n, x):
    """cos(t sqrt(1-x^2)) s_{-1,2n+1}(t)"""
    return transform_integrand('8b', n, math.sqrt(1 - x * x))


def eq14_candidates(n, x, integral):
    """
    U_2n(x) against three normalisations of
    -(2n+1) int_0^inf cos(t sqrt(1-x^2)) s_{-1,2n+1}(t) dt.

    Arguments:
        integral: QuadratureResult of the integral above
    """
    root = math.sqrt(1 - x * x)
    base = EvalResult(integral.value, integral.abs_error_estimate)
    factor = -(2 * n + 1)
    return [
        ('composed', base.scaled(factor * 2 / math.pi * x / root)),
        ('two_over_pi', base.scaled(factor * 2 / math.pi)),
        ('printed', base.scaled(factor)),
    ]


def eq17_lhs(K, w, t, **series):
    """sum_{k=0}^K J_2k(w) s_{0,2k}(t)"""
    terms = []
    for k in range(K + 1):
        j = bessel_j2k(k, w, **series)
        s = lommel_s(0, 2 * k, t, **series)
        # product rule for the error of j*s
        terms.append((1.0, EvalResult(j.value * s.value,
                                      abs(j.value) * s.abs_error_estimate + abs(s.value) * j.abs_error_estimate)))
    return combine(*terms)


def eq17_candidates(w, t, **series):
    """
    halved:  pi/8 [H0(t-w) + H0(t+w)] + pi/4 J0(w) H0(t)
    printed: pi/4 [H0(t-w) + H0(t+w) + 2 J0(w) H0(t)]
    """
    minus = struve_h0(t - w, **series)
    plus = struve_h0(t + w, **series)
    h0 = struve_h0(t, **series)
    j0 = bessel_j0(w, **series)
    product = EvalResult(j0.value * h0.value,
                         abs(j0.value) * h0.abs_error_estimate + abs(h0.value) * j0.abs_error_estimate)
    return [
        ('halved', combine((math.pi / 8, minus), (math.pi / 8, plus), (math.pi / 4, product))),
        ('printed', combine((math.pi / 4, minus), (math.pi / 4, plus), (math.pi / 2, product))),
    ]


def eq10b_sides(x, a, **series):
    """
    x^2 s_{-1,x}(a) - s_{1,x}(a) and its candidate values: -1 (exact) and 0
    (the relation as usually printed).
    """
    lower = lommel_s(-1, x, a, **series)
    upper = lommel_s(1, x, a, **series)
    lhs = combine((x * x, lower), (-1.0, upper))
    return lhs, [('corrected', EvalResult(-1.0, 0.0)), ('printed', EvalResult(0.0, 0.0))]
