import math
import os
import tempfile
from dataclasses import replace
from unittest import TestCase

from numpy.testing import assert_allclose
from scipy import special

from ..config import Config
from ..quadrature.models import OscillatorySpec
from ..quadrature.oscillatory import integrate_oscillatory
from .integrands import theorem1_integrand
from .models import CSV_HEADER, IdentityCase, IdentityId, ReportRecord, Verdict, decide_verdict
from .residuals import (residual_eq13_14, residual_eq13_15b, residual_eq16, residual_eq17, residual_recurrence,
                        residual_theorem1, residual_theorem2_rep, residual_theorem2_transform, telescoped_eq16)
from .utils import ReportCSVWriter, ReportJSONWriter, build_cases, identities_for, run_grid, summarize


class ModelTests(TestCase):
    def test_parse(self):
        self.assertEqual(IdentityId.parse('T1ap'), IdentityId.T1A_PRIME)
        self.assertEqual(IdentityId.parse("T1c'"), IdentityId.T1C_PRIME)
        self.assertEqual(IdentityId.parse('t2_8a'), IdentityId.T2_8A)
        with self.assertRaises(ValueError):
            IdentityId.parse('E99')

    def test_suites(self):
        self.assertEqual(IdentityId.E14.suite, 'theorem2')
        self.assertEqual(IdentityId.E15A.suite, 'recurrences')
        self.assertEqual(identities_for(['sums', 'E16', 'E13']), [IdentityId.E16, IdentityId.E17, IdentityId.E13])
        self.assertEqual(len(identities_for(['all'])), len(IdentityId))

    def test_verdict(self):
        self.assertEqual(decide_verdict(1e-9, 1e-8, 0, 0), Verdict.PASS)
        self.assertEqual(decide_verdict(1e-7, 1e-8, 0, 0), Verdict.FAIL)
        # a wide error estimate widens the acceptance band
        self.assertEqual(decide_verdict(1e-7, 1e-8, 1e-7, 0), Verdict.PASS)
        self.assertEqual(decide_verdict(math.nan, 1e-8, 0, 0), Verdict.UNRESOLVED)

    def test_row_puts_u_in_x(self):
        case = IdentityCase(IdentityId.T2_8A, {'n': 1, 'u': 0.5}, 1e-3)
        row = ReportRecord.unresolved(case, 'skipped').row()
        self.assertEqual(len(row), len(CSV_HEADER))
        self.assertEqual(row[CSV_HEADER.index('x')], '0.5')
        self.assertEqual(row[CSV_HEADER.index('n')], '1')
        self.assertEqual(row[CSV_HEADER.index('lhs')], '')
        self.assertEqual(row[-1], 'unresolved')


class Theorem1Tests(TestCase):
    def test_b_prime(self):
        record = residual_theorem1("T1b'", 1.0)
        self.assertEqual(record.verdict, Verdict.PASS, record.notes)
        expected = math.pi ** 2 / 8 * (1 - special.j0(2.0))
        assert_allclose(record.lhs, expected, rtol=0, atol=1e-4)

    def test_primed_is_diagonal(self):
        primed = residual_theorem1("T1a'", 1.0)
        full = residual_theorem1('T1a', 1.0, 1.0)
        assert_allclose(primed.lhs, full.lhs, rtol=0, atol=1e-6)
        self.assertEqual(primed.case.params, {'a': 1.0})

    def test_a_picks_stated_form(self):
        record = residual_theorem1('T1a', 0.5, 2.0)
        self.assertEqual(record.verdict, Verdict.PASS, record.notes)
        self.assertEqual(record.convention, 'theorem1')

    def test_c(self):
        record = residual_theorem1('T1c', 1.0, 2.0)
        self.assertEqual(record.verdict, Verdict.PASS, record.notes)

    def test_c_prime_small_argument(self):
        # s_{-1,x}(0) = -1/x^2 leaves int sin^2(pi x/2)/x^2 = pi^2/4
        record = residual_theorem1("T1c'", 1e-3)
        self.assertEqual(record.verdict, Verdict.PASS, record.notes)
        assert_allclose(record.rhs, math.pi ** 2 / 4, rtol=0, atol=1e-5)
        assert_allclose(record.lhs, math.pi ** 2 / 4, rtol=0, atol=1e-3)

    def test_cutoff_independence(self):
        integrand, decay = theorem1_integrand('b', 1.0, 2.0)
        spec = OscillatorySpec(integrand, 1.0, decay)
        short = integrate_oscillatory(spec, max_segments=200, min_segments=60)
        long = integrate_oscillatory(spec, max_segments=200, min_segments=120)
        self.assertGreater(short.segments_used, 60)
        self.assertGreater(long.segments_used, 120)
        self.assertLessEqual(abs(short.value - long.value),
                             2 * (short.abs_error_estimate + long.abs_error_estimate))

    def test_outside_domain(self):
        record = residual_theorem1('T1a', 7.0, 1.0)
        self.assertEqual(record.verdict, Verdict.UNRESOLVED)
        self.assertIn('outside', record.notes)
        self.assertTrue(math.isnan(record.lhs))


class Theorem2Tests(TestCase):
    def test_representations(self):
        for variant, n, t in (('T2_9a', 2, 3.0), ('T2_9a', 0, 0.5), ('T2_9b', 1, 2.0), ('T2_9b', 3, 5.0)):
            record = residual_theorem2_rep(variant, n, t)
            self.assertEqual(record.verdict, Verdict.PASS, '{} n={} t={}: {}'.format(variant, n, t, record.notes))

    def test_representation_at_zero(self):
        # s_{-1,3}(0) = -1/9
        record = residual_theorem2_rep('T2_9b', 1, 0.0)
        self.assertEqual(record.verdict, Verdict.PASS, record.notes)
        assert_allclose(record.lhs, -1 / 9, rtol=0, atol=1e-15)
        self.assertLessEqual(record.abs_residual, 1e-10)

    def test_transform_slow_beat(self):
        # 1 - u = 0.1: the Bessel part of s beats slowly against the carrier
        for variant, n in (('T2_8b', 3), ('T2_8a', 2)):
            record = residual_theorem2_transform(variant, n, 0.9)
            self.assertNotEqual(record.verdict, Verdict.FAIL, '{} n={}: {}'.format(variant, n, record.notes))
            if record.verdict == Verdict.PASS:
                self.assertLessEqual(record.abs_residual, max(record.case.tolerance, 3 * record.rhs_error_estimate))

    def test_transform(self):
        record = residual_theorem2_transform('T2_8a', 0, 0.5)
        assert_allclose(record.lhs, 1 / math.sqrt(0.75), rtol=0, atol=1e-14)
        self.assertEqual(record.verdict, Verdict.PASS, record.notes)

    def test_transform_vanishes_past_one(self):
        record = residual_theorem2_transform('T2_8a', 0, 2.0)
        self.assertEqual(record.lhs, 0.0)
        self.assertEqual(record.verdict, Verdict.PASS, record.notes)

    def test_transform_edge(self):
        record = residual_theorem2_transform('T2_8b', 1, 0.98)
        self.assertEqual(record.verdict, Verdict.UNRESOLVED)

    def test_eq13_exact(self):
        for n in range(4):
            for x in (0.3, 0.6, math.sqrt(3) / 2):
                record = residual_eq13_15b('E13', n, x)
                self.assertEqual(record.verdict, Verdict.PASS)
                self.assertLess(record.abs_residual, 1e-12)

    def test_eq14_composed(self):
        record = residual_eq13_14('E14', 0, math.sqrt(3) / 2)
        self.assertEqual(record.verdict, Verdict.PASS, record.notes)
        self.assertEqual(record.convention, 'composed')

    def test_eq14_higher_orders(self):
        for n in (2, 3):
            record = residual_eq13_14('E14', n, 0.4)
            self.assertNotIn('decay', record.notes)
            # an untrusted integral is refused, not matched
            self.assertNotIn('no candidate', record.notes)
            if record.verdict == Verdict.PASS:
                self.assertEqual(record.convention, 'composed')
            else:
                self.assertIn('segment lengths', record.notes)

    def test_eq14_near_resonance(self):
        # sqrt(1 - 0.2^2) is within 0.05 of 1
        record = residual_eq13_14('E14', 2, 0.2)
        self.assertEqual(record.verdict, Verdict.UNRESOLVED)
        self.assertIn('sqrt(1-x^2)', record.notes)


class RecurrenceTests(TestCase):
    def test_eq10a(self):
        for x in (0.5, 2.5, 4.7):
            record = residual_recurrence('E10a', 0, x, 1.5)
            self.assertEqual(record.verdict, Verdict.PASS)

    def test_eq10a_pole(self):
        record = residual_recurrence('E10a', 0, 1.0, 1.5)
        self.assertEqual(record.verdict, Verdict.UNRESOLVED)
        self.assertIn('pole', record.notes)

    def test_eq10b_corrected(self):
        record = residual_recurrence('E10b', 0, 2.5, 1.0)
        self.assertEqual(record.verdict, Verdict.PASS)
        self.assertEqual(record.convention, 'corrected')
        assert_allclose(record.lhs, -1.0, rtol=0, atol=1e-10)

    def test_eq11_eq12(self):
        for which in ('E11', 'E12'):
            record = residual_recurrence(which, 1, 1.5, 2.0)
            self.assertEqual(record.verdict, Verdict.PASS, '{}: {}'.format(which, record.notes))

    def test_eq15a(self):
        record = residual_recurrence('E15a', 0, 2.5, 1.0)
        self.assertEqual(record.verdict, Verdict.PASS, record.notes)

    def test_eq15b(self):
        record = residual_eq13_15b('E15b', 2, 0.8)
        self.assertEqual(record.verdict, Verdict.PASS)
        record = residual_eq13_15b('E15b', 0, 0.8)
        self.assertEqual(record.verdict, Verdict.UNRESOLVED)


class SumTests(TestCase):
    def test_eq16(self):
        for n, x in ((0, 1.0), (2, 1.5), (5, 4.0)):
            record = residual_eq16(n, x)
            self.assertEqual(record.verdict, Verdict.PASS, 'n={} x={}: {}'.format(n, x, record.notes))

    def test_eq16_telescoped(self):
        for n in (1, 2, 3):
            self.assertLess(abs(telescoped_eq16(n, 1.5).value), 1e-8)

    def test_eq17_halved(self):
        record = residual_eq17(40, 1.0, 1.0)
        self.assertEqual(record.verdict, Verdict.PASS, record.notes)
        self.assertEqual(record.convention, 'halved')

    def test_eq17_short_sum(self):
        self.assertEqual(residual_eq17(10, 1.0, 1.0).verdict, Verdict.UNRESOLVED)


class GridTests(TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.config = replace(Config(), output_dir=self.tmp.name).with_grids(n=[0, 1, 2], xc=[0.6, 0.8])

    def tearDown(self):
        self.tmp.cleanup()

    def test_build_cases(self):
        self.assertEqual(len(build_cases('T1a', self.config)), 9)
        self.assertEqual(len(build_cases("T1a'", self.config)), 3)
        self.assertEqual(len(build_cases('E15b', self.config)), 4)
        cases = build_cases('E15a', self.config, start_index=7)
        self.assertTrue(all(case.params['m'] == 0 for case in cases))
        self.assertEqual(cases[0].index, 7)

    def test_out_of_domain_points_dropped(self):
        config = self.config.with_grids(a=[-1.0, 0.5, 7.0], xc=[0.05, 0.6], n=[0, 3, 5])
        self.assertEqual([c.params for c in build_cases("T1a'", config)], [{'a': 0.5}])
        self.assertEqual(len(build_cases('T1b', config)), 3)
        self.assertTrue(all(c.params['a'] == 0.5 for c in build_cases('E10a', config)))
        self.assertEqual(len(build_cases('E11', config)), len(config.grid('m')) * len(config.grid('order')))
        self.assertEqual([c.params for c in build_cases('E14', config)], [{'n': 0, 'x': 0.6}, {'n': 3, 'x': 0.6}])

    def test_empty_grid(self):
        self.assertEqual(run_grid(['T1a'], self.config.with_grids(a=[])), [])

    def test_order_kept_with_workers(self):
        serial = run_grid(['E13', 'E15b'], self.config, workers=1)
        threaded = run_grid(['E13', 'E15b'], self.config, workers=4)
        self.assertEqual([r.case for r in serial], [r.case for r in threaded])
        self.assertEqual([r.lhs for r in serial], [r.lhs for r in threaded])

    def test_csv(self):
        path = os.path.join(self.tmp.name, 'scan.csv')
        records = run_grid(['E13', 'E15b'], self.config)
        ReportCSVWriter(path).write(records)
        with open(path, 'rb') as f:
            first = f.read()
        self.assertEqual(first.decode().splitlines()[0], ','.join(CSV_HEADER))
        self.assertEqual(len(first.decode().splitlines()), len(records) + 1)

        ReportCSVWriter(path).write(run_grid(['E13', 'E15b'], self.config))
        with open(path, 'rb') as f:
            self.assertEqual(f.read(), first)

    def test_summary_and_json(self):
        records = run_grid(['E15b'], self.config)
        [(identity_id, counts, worst)] = summarize(records)
        self.assertEqual(identity_id, IdentityId.E15B)
        self.assertEqual(counts['pass'], 4)
        self.assertLess(worst, 1e-12)
        document = ReportJSONWriter(os.path.join(self.tmp.name, 'report.json')).document(records, {'E17': 'halved'})
        self.assertEqual(document['conventions'], {'E17': 'halved'})
        self.assertEqual(len(document['records']), 4)
        self.assertIsNone(document['records'][0]['wall_ms'])
