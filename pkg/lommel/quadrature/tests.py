import math
from unittest import TestCase

import numpy as np
from numpy.testing import assert_allclose
from scipy import integrate

from .. import settings
from ..errors import ArgumentOutOfRange, BadFit, MaxDepth, SpecMismatch, UnstableSegmentation, UnsupportedOrder
from .acceleration import wynn_epsilon
from .gauss import gauss_legendre, gauss_rule, integrate_adaptive, integrate_cheb_weight
from .models import OscillatorySpec
from .oscillatory import beat_spacings, integrate_beating, integrate_oscillatory, tail_power_estimate


class GaussTests(TestCase):
    def test_exact_for_polynomials(self):
        for order in (2, 5, 10, 20, 64):
            nodes, weights = gauss_legendre(order)
            degree = 2 * order - 1
            # odd part integrates to zero, x^(degree-1) to 2/degree
            values = nodes ** degree + nodes ** (degree - 1)
            assert_allclose(np.dot(weights, values), 2 / degree, rtol=0, atol=1e-14)
            assert_allclose(weights.sum(), 2.0, rtol=0, atol=1e-14)
            assert_allclose(nodes, -nodes[::-1], rtol=0, atol=1e-15)

    def test_two_point_rule(self):
        nodes, weights = gauss_legendre(2)
        assert_allclose(nodes, [-1 / math.sqrt(3), 1 / math.sqrt(3)], rtol=0, atol=1e-15)
        assert_allclose(weights, [1.0, 1.0], rtol=0, atol=1e-15)

    def test_composite_rule(self):
        assert_allclose(gauss_rule(np.cos, 0, 20 * math.pi, 12, panels=10), 0.0, rtol=0, atol=1e-12)
        assert_allclose(gauss_rule(np.exp, 0, 1, 5, panels=3), math.e - 1, rtol=0, atol=1e-14)

    def test_unsupported_order(self):
        for order in (1, 65, 2.5, math.inf):
            with self.assertRaises(UnsupportedOrder):
                gauss_legendre(order)

    def test_adaptive(self):
        result = integrate_adaptive(np.sin, 0, math.pi)
        assert_allclose(result.value, 2.0, rtol=0, atol=1e-12)
        self.assertTrue(result.converged)
        self.assertLessEqual(result.abs_error_estimate, settings.QUAD_TOL_FINITE)

    def test_additivity(self):
        def f(x):
            return np.exp(-x) * np.cos(7 * x)

        whole = integrate_adaptive(f, 0, 3)
        left = integrate_adaptive(f, 0, 1.2)
        right = integrate_adaptive(f, 1.2, 3)
        bound = whole.abs_error_estimate + left.abs_error_estimate + right.abs_error_estimate + 1e-14
        self.assertLessEqual(abs(whole.value - left.value - right.value), bound)

    def test_interior_singularity(self):
        with self.assertRaises(MaxDepth):
            integrate_adaptive(lambda x: 1 / np.sqrt(np.abs(x - 1 / 3)), 0, 1, tol=1e-12)

    def test_bad_limits(self):
        with self.assertRaises(ArgumentOutOfRange):
            integrate_adaptive(np.sin, 1, 0)
        with self.assertRaises(ArgumentOutOfRange):
            integrate_adaptive(np.sin, 0, math.inf)

    def test_cheb_weight(self):
        assert_allclose(integrate_cheb_weight(np.ones_like).value, math.pi / 2, rtol=0, atol=1e-14)
        assert_allclose(integrate_cheb_weight(lambda u: u).value, 1.0, rtol=0, atol=1e-14)

        def g(u):
            return np.exp(u) * np.sin(3 * u)

        weighted = integrate_cheb_weight(g)
        direct = integrate_adaptive(lambda th: g(np.cos(th)), 0, math.pi / 2)
        assert_allclose(weighted.value, direct.value, rtol=0, atol=1e-15)


class AccelerationTests(TestCase):
    def test_alternating_log2(self):
        partial = np.cumsum([(-1) ** k / (k + 1) for k in range(20)])
        estimate, error = wynn_epsilon(partial)
        assert_allclose(estimate, math.log(2), rtol=0, atol=1e-10)
        self.assertLess(error, 1e-8)

    def test_constant_sequence(self):
        estimate, error = wynn_epsilon([0.0] * 15)
        self.assertEqual(estimate, 0.0)
        self.assertEqual(error, 0.0)


class TailTests(TestCase):
    def test_exact_power_laws(self):
        x = np.linspace(5, 15, 11)
        assert_allclose(tail_power_estimate(list(zip(x, 1 / x ** 2)), 2, 10), 0.1, rtol=1e-14)
        assert_allclose(tail_power_estimate(list(zip(x, 3 / x ** 3)), 3, 10), 0.015, rtol=1e-14)

    def test_wrong_power(self):
        x = np.linspace(5, 15, 11)
        with self.assertRaises(BadFit):
            tail_power_estimate(list(zip(x, 1 / x ** 2)), 4, 10)

    def test_preconditions(self):
        with self.assertRaises(ArgumentOutOfRange):
            tail_power_estimate([(1.0, 1.0)], 1.0, 10)
        with self.assertRaises(ArgumentOutOfRange):
            tail_power_estimate([(1.0, 1.0)], 2.0, 0)


class OscillatoryTests(TestCase):
    def test_smoke(self):
        spec = OscillatorySpec(lambda x: x * np.sin(np.pi * x) / (1 + x * x), 1.0, 1.0)
        result = integrate_oscillatory(spec)
        self.assertTrue(result.converged)
        self.assertEqual(result.mode, 'accelerated')
        assert_allclose(result.value, math.pi / 2 * math.exp(-math.pi), rtol=0, atol=1e-6)

    def test_zero_integrand(self):
        result = integrate_oscillatory(OscillatorySpec(np.zeros_like, 1.0, 2.0))
        self.assertTrue(result.converged)
        self.assertEqual(result.value, 0.0)

    def test_one_signed_uses_tail(self):
        spec = OscillatorySpec(lambda x: (1 + 0.5 * np.cos(np.pi * x)) / x ** 2, 1.0, 2.0, start=1.0)
        result = integrate_oscillatory(spec)
        wiggle, _ = integrate.quad(lambda x: 1 / x ** 2, 1, np.inf, weight='cos', wvar=np.pi)
        self.assertEqual(result.mode, 'absolute')
        self.assertNotEqual(result.tail_contribution, 0.0)
        assert_allclose(result.value, 1 + 0.5 * wiggle, rtol=0, atol=1e-5)

    def test_declared_decay_checked(self):
        spec = OscillatorySpec(lambda x: np.sin(np.pi * x) / (1 + x), 1.0, 3.0)
        with self.assertRaises(SpecMismatch):
            integrate_oscillatory(spec, min_segments=3 * settings.TAIL_WINDOW)

    def test_faster_decay_accepted_when_accelerated(self):
        spec = OscillatorySpec(lambda x: np.sin(np.pi * x) / (1 + x) ** 3, 1.0, 1.0, mode='accelerated')
        result = integrate_oscillatory(spec, min_segments=3 * settings.TAIL_WINDOW)
        expected, _ = integrate.quad(lambda x: 1 / (1 + x) ** 3, 0, np.inf, weight='sin', wvar=np.pi)
        assert_allclose(result.value, expected, rtol=0, atol=1e-5)

    def test_faster_decay_flagged_when_absolute(self):
        spec = OscillatorySpec(lambda x: (1 + 0.5 * np.cos(np.pi * x)) / x ** 4, 1.0, 2.0, mode='absolute', start=1.0)
        with self.assertRaises(SpecMismatch):
            integrate_oscillatory(spec, min_segments=3 * settings.TAIL_WINDOW)

    def test_panels_follow_max_frequency(self):
        self.assertEqual(OscillatorySpec(np.sin, 10.0, 1.0).panels_per_segment, 1)
        self.assertEqual(OscillatorySpec(np.sin, 10 * math.pi, 1.0, max_frequency=1.9).panels_per_segment, 10)
        with self.assertRaises(ArgumentOutOfRange):
            OscillatorySpec(np.sin, 1.0, 1.0, max_frequency=0.0)

    def test_bad_spec(self):
        with self.assertRaises(ArgumentOutOfRange):
            OscillatorySpec(np.sin, 0.0, 1.0)
        with self.assertRaises(ArgumentOutOfRange):
            OscillatorySpec(np.sin, 1.0, 0.5, mode='absolute')
        with self.assertRaises(ValueError):
            OscillatorySpec(np.sin, 1.0, 2.0, mode='fast')


class BeatingTests(TestCase):
    @staticmethod
    def product_integrand(t):
        return np.cos(0.9 * t) * np.cos(t) / np.sqrt(1 + t)

    @staticmethod
    def product_reference():
        # cos(0.9t)cos(t) = (cos(0.1t) + cos(1.9t))/2
        parts = [integrate.quad(lambda t: 1 / np.sqrt(1 + t), 0, np.inf, weight='cos', wvar=w)[0] for w in (0.1, 1.9)]
        return sum(parts) / 2

    def test_spacings_avoid_whole_turns(self):
        first, second = beat_spacings((0.9, 1.9, 0.1))
        assert_allclose(first, 10 * math.pi, rtol=1e-12)
        self.assertGreaterEqual(abs(second - first), settings.BEAT_SEPARATION * first)
        for length in (first, second):
            turns = np.array([0.9, 1.9, 0.1]) * length / (2 * math.pi)
            self.assertTrue(np.all(np.abs(turns - np.round(turns)) >= 0.2), length)

    def test_spacings_skip_resonant_length(self):
        # half a period of the slowest component is a whole turn of the 2.0 one
        first, _ = beat_spacings((0.5, 2.0))
        turns = 2.0 * first / (2 * math.pi)
        self.assertGreater(abs(turns - round(turns)), 0.2)
        with self.assertRaises(ValueError):
            beat_spacings((0.0,))

    def test_slow_beat(self):
        result = integrate_beating(self.product_integrand, (0.1, 1.9), 0.5, tol=1e-6)
        expected = self.product_reference()
        self.assertTrue(result.converged)
        self.assertEqual(result.mode, 'accelerated')
        assert_allclose(result.value, expected, rtol=0, atol=1e-5)
        self.assertLessEqual(abs(result.value - expected), max(3 * result.abs_error_estimate, 1e-7))

    def test_disagreement_refused(self):
        with self.assertRaises(UnstableSegmentation):
            integrate_beating(self.product_integrand, (0.1, 1.9), 0.5, tol=1e-6, agreement=0.0)
