import math
import os
import tempfile
from unittest import TestCase

import numpy as np
from numpy.testing import assert_allclose
from scipy import special

from ..config import Config
from ..specfun.lommel import lommel_s
from ..specfun.series import bessel_j0, struve_h0
from .brute import (lommel_factor, oracle_bessel_j0, oracle_lhs_parseval, oracle_lommel_finite, oracle_simpson,
                    oracle_struve_h0, richardson_change)
from .conventions import read_conventions, resolve_conventions, write_conventions


class SimpsonTests(TestCase):
    def test_polynomial(self):
        result = oracle_simpson(lambda x: x * x, 0, 1, 8)
        assert_allclose(result.value, 1 / 3, rtol=0, atol=1e-10)
        self.assertEqual(result.grid_points, 9)

    def test_sine(self):
        assert_allclose(oracle_simpson(np.sin, 0, math.pi, 64).value, 2.0, rtol=0, atol=1e-7)
        assert_allclose(oracle_simpson(np.sin, 0, math.pi, 256).value, 2.0, rtol=0, atol=1e-9)

    def test_fourth_order(self):
        coarse = abs(oracle_simpson(np.exp, 0, 1, 16).value - (math.e - 1))
        fine = abs(oracle_simpson(np.exp, 0, 1, 32).value - (math.e - 1))
        self.assertTrue(14 < coarse / fine < 18)

    def test_odd_panels(self):
        with self.assertRaises(ValueError):
            oracle_simpson(np.sin, 0, 1, 7)
        with self.assertRaises(ValueError):
            oracle_simpson(np.sin, 0, 1, 0)


class ParsevalTests(TestCase):
    def test_b_zero_is_struve(self):
        for a in (0.5, 1.0, 3.0):
            expected = -math.pi * math.pi / 2 * struve_h0(a).value
            assert_allclose(oracle_lhs_parseval(a, 0).value, expected, rtol=0, atol=1e-9)

    def test_a_zero(self):
        self.assertEqual(oracle_lhs_parseval(0, 1.5).value, 0.0)

    def test_stable_under_doubling(self):
        def f(x):
            return np.sin(2 * np.cos(x)) * np.cos(2 * np.cos(x))

        self.assertLess(richardson_change(f, 0, math.pi / 2), 1e-8)


class LommelOracleTests(TestCase):
    def test_examples(self):
        result = oracle_lommel_finite('6a', 0.5, 1)
        assert_allclose(result.value, math.cos(math.pi / 4) * lommel_s(0, 0.5, 1).value, rtol=0, atol=1e-8)
        self.assertEqual(oracle_lommel_finite('6a', 2, 0).value, 0.0)
        self.assertEqual(lommel_s(0, 2, 0).value, 0.0)
        result = oracle_lommel_finite('6b', 1, 2)
        assert_allclose(result.value, -lommel_s(-1, 1, 2).value, rtol=0, atol=1e-8)

    def test_real_orders(self):
        for y in (0.3, 0.7, 1.5, 2.5, 3.3):
            for arg in (1.0, 4.0):
                for kind, mu in (('6a', 0), ('6b', -1)):
                    expected = lommel_factor(kind, y) * lommel_s(mu, y, arg).value
                    assert_allclose(oracle_lommel_finite(kind, y, arg).value, expected, rtol=0, atol=1e-7,
                                    err_msg='{} y={} arg={}'.format(kind, y, arg))

    def test_bad_kind(self):
        with self.assertRaises(ValueError):
            oracle_lommel_finite('6c', 0.5, 1)


class ReferenceFunctionTests(TestCase):
    def test_struve(self):
        for z in (0.5, 1.0, 4.0):
            assert_allclose(oracle_struve_h0(z).value, struve_h0(z).value, rtol=0, atol=1e-9)
            assert_allclose(oracle_struve_h0(z).value, special.struve(0, z), rtol=0, atol=1e-9)

    def test_bessel(self):
        assert_allclose(oracle_bessel_j0(2).value, 0.2238907791, rtol=0, atol=1e-10)
        for z in (0.0, 0.7, 2.0, 5.5):
            assert_allclose(oracle_bessel_j0(z).value, bessel_j0(z).value, rtol=0, atol=1e-12)


class ConventionsTests(TestCase):
    @classmethod
    def setUpClass(cls):
        config = Config().with_grids(a=[0.5, 1.0, 2.0], b=[0.5, 1.0, 2.0], xc=[math.sqrt(3) / 2],
                                     K=[40], w=[0.5, 1.0], t=[0.5, 1.0, 2.0], order=[0.5, 2.5])
        cls.config = config
        cls.report = resolve_conventions(config)

    def test_verdicts(self):
        chosen = self.report.as_mapping()
        self.assertEqual(chosen['T1a'], 'theorem1')
        self.assertEqual(chosen['E10b'], 'corrected')
        self.assertEqual(chosen['E17'], 'halved')
        self.assertEqual(chosen['E14'], 'composed')

    def test_literal_pairing_noted(self):
        self.assertTrue(any('eq5' in note for note in self.report.notes))

    def test_record_round_trip(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'conventions.txt')
            write_conventions(self.report, path)
            self.assertEqual(read_conventions(path), self.report.as_mapping())
            with open(path) as f:
                self.assertEqual(f.read().splitlines(), self.report.lines())

    def test_rerun_reproduces(self):
        again = resolve_conventions(self.config)
        self.assertEqual(again.lines(), self.report.lines())

    def test_missing_record(self):
        self.assertEqual(read_conventions('/nonexistent/conventions.txt'), {})
