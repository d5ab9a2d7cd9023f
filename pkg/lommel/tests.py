import io
import json
import os
import tempfile
from contextlib import redirect_stderr
from dataclasses import replace
from unittest import TestCase

from . import settings
from .cli import main, parse_range
from .config import Config, dump_config, load_config, parse_number_list
from .errors import ConfigError
from .identities.models import CSV_HEADER


class ConfigTests(TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def write(self, text, name='lommel.ini'):
        path = os.path.join(self.tmp.name, name)
        with open(path, 'w') as f:
            f.write(text)
        return path

    def test_defaults(self):
        config = load_config(environ={})
        self.assertEqual(config, Config())
        self.assertEqual(config.series_eps, settings.SERIES_EPS)
        self.assertEqual(config.grid('K'), (40, 60))

    def test_file_values(self):
        path = self.write("[series]\nmax_terms = 300\n\n[grids]\nK = 20, 30\na = 0.25,0.75\n\n"
                          "[identities]\ntolerance = 1e-6\n")
        config = load_config(path, environ={})
        self.assertEqual(config.max_terms, 300)
        self.assertEqual(config.grid('K'), (20, 30))
        self.assertEqual(config.grid('a'), (0.25, 0.75))
        self.assertEqual(config.tolerance_for('E13'), 1e-6)

    def test_round_trip(self):
        config = replace(Config(), max_segments=80, workers=3, case_tol=1e-5).with_grids(n=[0, 2], w=[0.1, 0.3])
        path = self.write(dump_config(config))
        self.assertEqual(load_config(path, environ={}), config)

    def test_environment_override(self):
        config = load_config(environ={settings.OUTPUT_DIR_ENV: self.tmp.name})
        self.assertEqual(config.output_dir, self.tmp.name)
        self.assertEqual(config.conventions_path, os.path.join(self.tmp.name, settings.CONVENTIONS_FILENAME))

    def test_bad_values(self):
        with self.assertRaises(ConfigError):
            load_config(self.write("[quadrature]\nquad_tol_osc = -1\n"), environ={})
        with self.assertRaises(ConfigError):
            load_config(self.write("[series]\nmax_terms = many\n"), environ={})
        with self.assertRaises(ConfigError):
            load_config(os.path.join(self.tmp.name, 'missing.ini'), environ={})
        with self.assertRaises(ConfigError):
            parse_number_list('1, 2.5', 'n')
        for bad in ('inf', '-inf', 'nan'):
            with self.assertRaises(ConfigError):
                parse_number_list(bad, 'n')


class RangeTests(TestCase):
    def test_inclusive_stop(self):
        values = parse_range('0:5:0.5')
        self.assertEqual(len(values), 11)
        self.assertEqual(values[3], 1.5)
        self.assertEqual(values[-1], 5.0)
        self.assertEqual(parse_range('0:1:0.3'), (0.0, 0.3, 0.6, 0.9))

    def test_lists(self):
        self.assertEqual(parse_range('0.5, 1,2'), (0.5, 1.0, 2.0))
        self.assertEqual(parse_range('3'), (3.0,))

    def test_malformed(self):
        for text in ('0:5', '0:5:0', '5:0:1', 'a,b', ''):
            with self.assertRaises(ValueError):
                parse_range(text)


class CommandTests(TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.config_path = os.path.join(self.tmp.name, 'lommel.ini')
        config = replace(Config(), output_dir=self.tmp.name)
        with open(self.config_path, 'w') as f:
            f.write(dump_config(config))

    def tearDown(self):
        self.tmp.cleanup()

    def run_cli(self, *argv):
        out = io.StringIO()
        err = io.StringIO()
        with redirect_stderr(err):
            code = main(['--config', self.config_path] + list(argv), out=out)
        return code, out.getvalue(), err.getvalue()

    def test_eval_range(self):
        path = os.path.join(self.tmp.name, 'eval.csv')
        code, out, _ = self.run_cli('eval', 'lommel_s', '--mu', '0', '--nu', '2', '--z', '0:5:0.5', '--csv', path)
        self.assertEqual(code, 0)
        self.assertEqual(len(out.splitlines()), 12)
        with open(path) as f:
            lines = f.read().splitlines()
        self.assertEqual(lines[0], 'mu,nu,z,value,error_estimate')
        self.assertEqual(len(lines), 12)

    def test_eval_struve_at_zero(self):
        code, out, _ = self.run_cli('eval', 'struve_h0', '--z', '0')
        self.assertEqual(code, 0)
        row = out.splitlines()[1].split()
        self.assertEqual(float(row[1]), 0.0)

    def test_eval_pole(self):
        code, _, err = self.run_cli('eval', 'lommel_s', '--mu', '0', '--nu', '1', '--z', '1')
        self.assertEqual(code, 2)
        self.assertIn('pole', err)

    def test_eval_bad_arguments(self):
        self.assertEqual(self.run_cli('eval', 'lommel_s', '--mu', '0', '--z', '1')[0], 2)
        self.assertEqual(self.run_cli('eval', 'chebyshev_t', '--n', '1.5', '--x', '0.3')[0], 2)
        self.assertEqual(self.run_cli('eval', 'no_such_function')[0], 2)
        self.assertEqual(self.run_cli('eval', 'chebyshev_t', '--n', 'inf', '--x', '0.3')[0], 2)
        self.assertEqual(self.run_cli('eval', 'bessel_j2k', '--k', 'nan', '--w', '1')[0], 2)

    def test_eval_struve_large_argument(self):
        code, out, _ = self.run_cli('eval', 'struve_h0', '--z', '80')
        self.assertEqual(code, 0)
        self.assertEqual(len(out.splitlines()), 2)

    def test_config_error(self):
        bad = os.path.join(self.tmp.name, 'bad.ini')
        with open(bad, 'w') as f:
            f.write("[series]\nseries_eps = 0\n")
        with redirect_stderr(io.StringIO()):
            self.assertEqual(main(['--config', bad, 'eval', 'struve_h0', '--z', '1'], out=io.StringIO()), 3)

    def test_scan(self):
        path = os.path.join(self.tmp.name, 'scan.csv')
        code, _, _ = self.run_cli('scan', 'E15b', '--n', '1,2', '--xc', '0.3,0.6', '--csv', path)
        self.assertEqual(code, 0)
        with open(path) as f:
            lines = f.read().splitlines()
        self.assertEqual(lines[0], ','.join(CSV_HEADER))
        self.assertEqual(len(lines), 5)

    def test_scan_malformed_grid(self):
        self.assertEqual(self.run_cli('scan', 'E15b', '--n', '1:x:1')[0], 2)
        self.assertEqual(self.run_cli('scan', 'E15b', '--n', '0.5')[0], 2)
        self.assertEqual(self.run_cli('scan', 'E15b', '--n', 'inf')[0], 2)

    def test_verify_writes_report(self):
        path = os.path.join(self.tmp.name, 'recurrences.json')
        code, out, _ = self.run_cli('verify', 'recurrences', '--out', path)
        self.assertEqual(code, 0)
        self.assertIn('E15b:', out)
        with open(path) as f:
            report = json.load(f)
        self.assertTrue(report['records'])
        self.assertEqual({r['verdict'] for r in report['records']}, {'pass'})
