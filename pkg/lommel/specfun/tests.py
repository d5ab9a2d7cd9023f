import math
from unittest import TestCase

import numpy as np
from numpy.testing import assert_allclose
from scipy import integrate, special

from ..errors import DegenerateParameter, InvalidOrder, PoleAtOrder, ZeroOrder
from .chebyshev import chebyshev_t, chebyshev_u
from .lommel import (lommel_derivative, lommel_recur_mu, lommel_s, lommel_s_array, lommel_s_central_difference,
                     lommel_s_chebyshev_array, lommel_s_prime, lommel_s_via_chebyshev)
from .models import ChebDegree, LommelParams
from .series import bessel_j0, bessel_j2k, hyp1f2, struve_h0


def theta_integral(f):
    """int_0^(pi/2) f(cos theta) dtheta with scipy, for reference values"""
    value, _ = integrate.quad(lambda th: f(math.cos(th)), 0, math.pi / 2, epsabs=1e-14, epsrel=1e-14, limit=200)
    return value


class SeriesTests(TestCase):
    def test_hyp1f2_at_zero(self):
        self.assertEqual(hyp1f2(1.5, 2.5, 0).value, 1.0)

    def test_hyp1f2_is_j0(self):
        z = 1.3
        result = hyp1f2(1, 1, -z * z / 4)
        assert_allclose(result.value, bessel_j0(z).value, rtol=0, atol=1e-15)
        assert_allclose(result.value, special.jv(0, z), rtol=0, atol=1e-14)

    def test_hyp1f2_degenerate(self):
        with self.assertRaises(DegenerateParameter):
            hyp1f2(0, 2.5, 0.1)
        with self.assertRaises(DegenerateParameter):
            hyp1f2(1.5, -2, 0.1)

    def test_struve_h0(self):
        self.assertEqual(struve_h0(0).value, 0.0)
        self.assertEqual(struve_h0(-2.7).value, -struve_h0(2.7).value)
        expected = 2 / math.pi * theta_integral(math.sin)
        assert_allclose(struve_h0(1).value, expected, rtol=0, atol=1e-13)
        for z in (0.3, 2.0, 7.5):
            assert_allclose(struve_h0(z).value, special.struve(0, z), rtol=0, atol=1e-11)

    def test_bessel_j0(self):
        self.assertEqual(bessel_j0(0).value, 1.0)
        assert_allclose(bessel_j0(2).value, 0.2238907791, rtol=0, atol=1e-10)
        self.assertEqual(bessel_j0(-1.7).value, bessel_j0(1.7).value)

    def test_struve_h0_large_argument(self):
        # individual terms pass 1e300 well before z = 150
        for z in (80.0, 150.0):
            result = struve_h0(z)
            self.assertTrue(math.isfinite(result.value) and math.isfinite(result.abs_error_estimate))
            self.assertLessEqual(abs(result.value - special.struve(0, z)), result.abs_error_estimate)

    def test_bessel_j0_large_argument(self):
        self.assertEqual(bessel_j0(30.0).value, bessel_j2k(0, 30.0).value)
        for z in (12.0, 30.0, 50.0):
            result = bessel_j0(z)
            assert_allclose(result.value, special.j0(z), rtol=0, atol=1e-12)
            self.assertLess(result.abs_error_estimate, 1e-10)

    def test_bessel_j2k(self):
        self.assertEqual(bessel_j2k(0, 1.5).value, bessel_j0(1.5).value)
        for w in (0.5, 3.0, 9.5, 12.0, 25.0):
            for k in range(5):
                assert_allclose(bessel_j2k(k, w).value, special.jv(2 * k, w), rtol=0, atol=1e-11,
                                err_msg='k={} w={}'.format(k, w))

    def test_bessel_j2k_bad_order(self):
        with self.assertRaises(InvalidOrder):
            bessel_j2k(-1, 1.0)
        with self.assertRaises(InvalidOrder):
            bessel_j2k(1.5, 1.0)
        with self.assertRaises(InvalidOrder):
            bessel_j2k(math.inf, 1.0)


class ChebyshevTests(TestCase):
    def test_small_orders(self):
        self.assertEqual(chebyshev_t(0, 0.73), 1.0)
        assert_allclose(chebyshev_t(2, 0.5), -0.5, atol=1e-16)
        self.assertEqual(chebyshev_u(0, 0.3), 1.0)
        assert_allclose(chebyshev_u(1, 0.3), 0.6)

    def test_three_term_identity(self):
        n, x = 3, 0.4
        residual = chebyshev_t(2 * n + 1, x) + chebyshev_t(2 * n - 1, x) - 2 * x * chebyshev_t(2 * n, x)
        self.assertLess(abs(residual), 1e-14)

    def test_trigonometric_form(self):
        theta = np.linspace(0, math.pi, 41)
        for n in range(21):
            assert_allclose(chebyshev_t(n, np.cos(theta)), np.cos(n * theta), rtol=0, atol=1e-12)
        inner = theta[1:-1]
        for n in range(10):
            assert_allclose(chebyshev_u(n, np.cos(inner)), np.sin((n + 1) * inner) / np.sin(inner),
                            rtol=0, atol=1e-11)

    def test_bad_order(self):
        with self.assertRaises(InvalidOrder):
            chebyshev_t(-1, 0.5)
        with self.assertRaises(InvalidOrder):
            ChebDegree(2.5)
        for order in (math.inf, math.nan):
            with self.assertRaises(InvalidOrder):
                ChebDegree(order)
            with self.assertRaises(InvalidOrder):
                chebyshev_t(order, 0.5)


class LommelTests(TestCase):
    def test_zero_argument(self):
        self.assertEqual(lommel_s(0, 2.5, 0).value, 0.0)
        self.assertEqual(lommel_s(-1, 1, 0).value, -1.0)
        assert_allclose(lommel_s(-1, 3, 0).value, -1 / 9)

    def test_pole(self):
        with self.assertRaises(PoleAtOrder):
            lommel_s(0, 1, 1)
        with self.assertRaises(PoleAtOrder):
            lommel_s(LommelParams(mu=1, nu=-2, z=0.5))

    def test_degenerate_orders(self):
        # (mu-nu+3)/2 = 0
        with self.assertRaises(DegenerateParameter):
            lommel_s(-1, 2, 1)

    def test_against_chebyshev_integral(self):
        expected = -theta_integral(lambda u: math.sin(u) * (2 * u * u - 1))
        assert_allclose(lommel_s(0, 2, 1).value, expected, rtol=0, atol=1e-13)

    def test_struve_special_case(self):
        for z in (0.5, 1.0, 4.0):
            assert_allclose(lommel_s(0, 0, z).value, math.pi / 2 * struve_h0(z).value, rtol=1e-12, atol=1e-13)

    def test_symmetric_in_nu(self):
        for mu, nu, z in ((0, 2.5, 1.2), (-1, 1.5, 3.0), (1.3, 0.7, 2.2)):
            self.assertEqual(lommel_s(mu, nu, z).value, lommel_s(mu, -nu, z).value)

    def test_error_estimate_is_honest(self):
        for mu, nu, z in ((0, 2.5, 1.0), (-1, 3.5, 6.0), (2, 0.5, 12.0)):
            result = lommel_s(mu, nu, z)
            tight = lommel_s(mu, nu, z, series_eps=1e-22, max_terms=2000)
            self.assertLessEqual(abs(result.value - tight.value), 10 * result.abs_error_estimate)

    def test_mu_recurrences(self):
        # s_{mu+2,nu} = z^(mu+1) - ((mu+1)^2 - nu^2) s_{mu,nu}
        for x in (0.5, 1.5, 3.3):
            for a in (0.5, 2.0, 4.0):
                lhs = (1 - x * x) * lommel_s(0, x, a).value + lommel_s(2, x, a).value
                assert_allclose(lhs, a, rtol=0, atol=1e-10)
                corrected = x * x * lommel_s(-1, x, a).value - lommel_s(1, x, a).value
                assert_allclose(corrected, -1.0, rtol=0, atol=1e-10)

    def test_array_matches_scalar(self):
        nu = np.array([0.5, 1.5, 2.3, 4.7])
        for mu in (0, -1):
            values, errors = lommel_s_array(mu, nu, 2.0)
            expected = [lommel_s(mu, v, 2.0).value for v in nu]
            assert_allclose(values, expected, rtol=1e-13)
            self.assertTrue(np.all(errors >= 0))

    def test_array_nudges_poles(self):
        values, _ = lommel_s_array(0, np.array([1.0, 3.0]), 1.0)
        self.assertTrue(np.all(np.isfinite(values)))


class ChebyshevRouteTests(TestCase):
    def test_struve_case(self):
        result = lommel_s_via_chebyshev('even', 0, 1.0)
        assert_allclose(result.value, math.pi / 2 * struve_h0(1.0).value, rtol=0, atol=1e-10)

    def test_even_n1(self):
        route = lommel_s_via_chebyshev('even', ChebDegree(1), 2.0)
        series = lommel_s(0, 2, 2.0)
        self.assertLessEqual(abs(route.value - series.value),
                             route.abs_error_estimate + series.abs_error_estimate + 1e-9)

    def test_odd_at_zero(self):
        assert_allclose(lommel_s_via_chebyshev('odd', 0, 0.0).value, -1.0, rtol=0, atol=1e-12)
        self.assertEqual(lommel_s(-1, 1, 0).value, -1.0)

    def test_route_agreement(self):
        for n in (0, 1, 3, 5, 8):
            for t in (0.5, 2.0, 5.0, 10.0):
                for parity, mu, nu in (('even', 0, 2 * n), ('odd', -1, 2 * n + 1)):
                    route = lommel_s_via_chebyshev(parity, n, t)
                    series = lommel_s(mu, nu, t)
                    bound = route.abs_error_estimate + series.abs_error_estimate + 1e-9 * max(1.0, abs(series.value))
                    self.assertLessEqual(abs(route.value - series.value), bound,
                                         '{} n={} t={}'.format(parity, n, t))

    def test_vectorised_route(self):
        t = np.array([0.5, 3.0, 40.0, 150.0])
        for parity in ('even', 'odd'):
            for n in (0, 2):
                values = lommel_s_chebyshev_array(parity, n, t)
                expected = [lommel_s_via_chebyshev(parity, n, v).value for v in t]
                assert_allclose(values, expected, rtol=0, atol=1e-9)

    def test_bad_parity(self):
        with self.assertRaises(ValueError):
            lommel_s_via_chebyshev('both', 0, 1.0)


class DerivativeTests(TestCase):
    def test_recur_mu(self):
        for m, x, a in ((0, 2.5, 1.0), (1, 0.5, 2.0), (2, 3.3, 3.0)):
            residual = lommel_recur_mu(m, x, a).value - lommel_s(m, x, a).value
            self.assertLess(abs(residual), 1e-10)

    def test_recur_mu_zero_order(self):
        with self.assertRaises(ZeroOrder):
            lommel_recur_mu(0, 0, 1.0)

    def test_series_derivative(self):
        for m, x, a in ((0, 2.5, 1.0), (1, 0.5, 2.0), (2, 1.5, 3.0)):
            assert_allclose(lommel_s_prime(m, x, a).value, lommel_derivative(m, x, a).value, rtol=0, atol=1e-10)

    def test_finite_difference(self):
        fd = lommel_s_central_difference(0, 2.5, 1.0, h=1e-5)
        self.assertLess(abs(fd.value - lommel_derivative(0, 2.5, 1.0).value), 1e-6)

    def test_chebyshev_form_only_at_mu_zero(self):
        for x, a in ((4, 1.5), (2.5, 1.0)):
            recurrence = lommel_derivative(0, x, a).value
            chebyshev = lommel_derivative(0, x, a, form='chebyshev').value
            self.assertLess(abs(recurrence - chebyshev), 1e-12)
        recurrence = lommel_derivative(1, 0.5, 2.0).value
        chebyshev = lommel_derivative(1, 0.5, 2.0, form='chebyshev').value
        self.assertGreater(abs(recurrence - chebyshev), 1e-3)

    def test_derivative_near_zero(self):
        # leading term z^(mu+1)/((mu+1)^2 - nu^2) has slope 1/(1 - 6.25)
        assert_allclose(lommel_s_prime(0, 2.5, 1e-6).value, 1 / (1 - 6.25), rtol=1e-9)
        assert_allclose(lommel_s_prime(0, 2.5, 0.0).value, 1 / (1 - 6.25))
