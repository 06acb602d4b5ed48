# -*- coding: utf-8 -*-
#
# Copyright 2026 The Szegolab Authors
#
# This file is part of Szegolab.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
import cmath
import contextlib
import io
import math
import tempfile
import unittest
from pathlib import Path

from parameterized import parameterized

from szegolab.driver.__main__ import HelpFlag, HelpfullFlag, main, parse_expname
from szegolab.driver.config import presets
from szegolab.exps import Checks, sweep, tail_median_decreasing
from szegolab.exps import arc_limit, clt, compare, cumulants, right_limit, szego, weak
from szegolab.exps.right_limit import default_subsequence
from szegolab.utils import CheckFailed, DomainError, UsageError


class TestHelpers(unittest.TestCase):
    @parameterized.expand([
        ('halving', [1e-2, 5e-3, 2e-3, 1e-3, 5e-4, 2e-4], True),
        ('growing', [1e-4, 2e-4, 5e-4, 1e-3, 2e-3, 5e-3], False),
        ('at floor', [1e-12, 3e-11, 1e-12, 5e-11, 2e-12, 1e-13], True),
        ('noisy but falling', [1e-2, 3e-2, 2e-2, 1e-3, 4e-2, 5e-4], True),
    ])
    def test_tail_median(self, _, errors, expected):
        self.assertEqual(tail_median_decreasing(errors), expected)

    def test_checks_collect_failures(self):
        checks = Checks('unit')
        self.assertTrue(checks.at_most(1.0, None, 'unbounded'))
        self.assertTrue(checks.at_most(1.0, 2.0, 'bounded'))
        self.assertFalse(checks.at_most(3.0, 2.0, 'exceeded'))
        self.assertTrue(checks.decreasing([1.0, 2.0], 'too short'))
        self.assertEqual(checks.passed, 1)
        self.assertEqual([f.check for f in checks.failures], ['exceeded'])

    def test_sweep_keeps_order(self):
        def square(x):
            return x * x

        self.assertEqual(sweep(square, range(20), workers=4), [x * x for x in range(20)])
        self.assertEqual(sweep(square, [], workers=4), [])
        self.assertEqual(sweep(square, [3], workers=1), [9])

    def test_default_subsequence(self):
        self.assertEqual(default_subsequence(64), [32, 48, 64])
        self.assertEqual(default_subsequence(30), [14, 22, 30])
        for n in (7, 31, 64, 101):
            subseq = default_subsequence(n)
            self.assertEqual(subseq[-1], n)
            self.assertTrue(all((k - n) % 2 == 0 for k in subseq))

    def test_parse_expname(self):
        self.assertEqual(parse_expname(['szegolab', '--n=8,16', 'szego', '--h=cos:1']),
                         ('szego', ['szegolab', '--n=8,16', '--h=cos:1']))
        with self.assertRaises(UsageError):
            parse_expname(['szegolab', '--n=8'])
        with self.assertRaises(ValueError):
            parse_expname([])

    def test_help_flags_exit_only_when_set(self):
        for flag in (HelpFlag(), HelpfullFlag()):
            flag.parse('false')
            self.assertFalse(flag.value)
            flag.parse(False)
            self.assertFalse(flag.value)
        out = io.StringIO()
        with contextlib.redirect_stdout(out):
            with self.assertRaises(SystemExit):
                HelpFlag().parse('true')
        self.assertIn('USAGE', out.getvalue())

    def test_unknown_experiment(self):
        with self.assertRaises(UsageError):
            main(['szegolab', 'fredholm'])


class TestExperiments(unittest.TestCase):
    def test_szego(self):
        report = szego.run(presets.Szego(n_list=[8, 16, 24, 32, 48, 64], workers=2))
        self.assertEqual([row.n for row in report.rows], [8, 16, 24, 32, 48, 64])
        self.assertAlmostEqual(report.metadata['szego_sum'], 0.16)
        self.assertLess(report.rows[-1].abs_error, 1e-8)

    def test_szego_zero_symbol(self):
        cfg = presets.Szego(h='0', n_list=[4, 8])
        cfg.pad = None
        report = szego.run(cfg)
        self.assertEqual(report.metadata['pad'], 8)
        for row in report.rows:
            self.assertLess(row.abs_error, 1e-10)

    def test_compare_identical_sequences(self):
        report = compare.run(presets.Compare(seq_ref='const:0.5,0', n_list=[16, 24, 32, 48, 64, 96]))
        self.assertLess(max(report.errors), 1e-14)

    def test_compare_needs_reference(self):
        cfg = presets.Compare()
        cfg.seq_ref = None
        with self.assertRaises(UsageError):
            compare.run(cfg)

    def test_failed_check_still_writes_report(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            out = Path(tmpdir) / 'compare.csv'
            cfg = presets.Compare(n_list=[16, 24], out=str(out), tolerances={'decay_factor': 1e-12})
            with self.assertRaises(CheckFailed):
                compare.run(cfg)
            self.assertEqual(len(out.read_text().splitlines()), 3)
            report = compare.run(cfg.copy(checks=False))
            self.assertEqual(len(report.rows), 2)

    def test_weak_needs_sector(self):
        with self.assertRaises(DomainError):
            weak.run(presets.Weak(h='cos:4j'))

    def test_cumulants_free(self):
        report = cumulants.run(presets.Cumulants())
        values = report.metadata['cumulants'][16]
        self.assertAlmostEqual(values[0], 0.09, places=10)
        for value in values[1:]:
            self.assertAlmostEqual(abs(value), 0, places=10)

    def test_cumulants_remainder_scaling(self):
        report = cumulants.run(presets.CumulantsRandom())
        self.assertEqual(len(report.rows), 2)

    def test_cumulants_pad_too_small(self):
        with self.assertRaises(UsageError):
            cumulants.run(presets.Cumulants(pad=4))

    @parameterized.expand([('constant', presets.RightLimit), ('free', presets.RightLimitFree)])
    def test_right_limit(self, _, preset):
        report = right_limit.run(preset())
        self.assertEqual([row.param for row in report.rows], [1.0, 2.0, 3.0])
        self.assertEqual(report.metadata['subseq'], [32, 48, 64])
        self.assertEqual(report.metadata['parity'], 0)

    def test_right_limit_rejects_short_window(self):
        with self.assertRaises(UsageError):
            right_limit.run(presets.RightLimit(truncation=14, window=20))

    def test_arc_limit_metadata(self):
        report = arc_limit.run(presets.ArcLimit(n_list=[8, 16], checks=False))
        self.assertAlmostEqual(report.metadata['q_alpha'], 0.050625, places=10)
        self.assertAlmostEqual(report.metadata['q_alpha_sampling'], 0.050625, places=10)
        self.assertAlmostEqual(report.metadata['half_commutator_trace'], 0.050625, places=5)
        self.assertEqual(len(report.rows), 2)
        self.assertAlmostEqual(report.rows[0].predicted, math.exp(0.050625))

    def test_clt_layout(self):
        report = clt.run(presets.Clt(n_list=[8, 16], t_list=[0.0, 1.0], checks=False))
        self.assertEqual([(row.param, row.n) for row in report.rows], [(0.0, 8), (0.0, 16), (1.0, 8), (1.0, 16)])
        self.assertAlmostEqual(report.metadata['q_alpha'], 0.5625, places=10)
        self.assertAlmostEqual(report.rows[0].psi, 1)
        self.assertAlmostEqual(report.rows[2].predicted, math.exp(-0.5625))

    def test_clt_rejects_complex_f(self):
        with self.assertRaises(DomainError):
            clt.run(presets.Clt(h='pos:0.5'))


class TestDefaultPresets(unittest.TestCase):
    """Full-size runs with every check enabled"""

    def test_szego_atom(self):
        report = szego.run(presets.SzegoAtom())
        self.assertEqual(report.rows[-1].n, 128)
        self.assertLessEqual(report.rows[-1].abs_error, 1e-2)
        self.assertLessEqual(max(row.route_disagreement for row in report.rows), 1e-6)
        self.assertAlmostEqual(report.metadata['hankel_hs_norm'] ** 2, report.metadata['szego_sum'].real)

    def test_arc_limit(self):
        report = arc_limit.run(presets.ArcLimit())
        self.assertEqual(report.rows[-1].n, 128)
        self.assertLessEqual(report.rows[-1].abs_error, 5e-3)
        self.assertLessEqual(max(row.route_disagreement for row in report.rows), 1e-6)
        self.assertEqual(report.metadata['tail_modulus'], 0.5)

    def test_arc_limit_lopez(self):
        report = arc_limit.run(presets.ArcLimitLopez())
        self.assertIsNone(report.metadata['measure'])
        self.assertAlmostEqual(report.metadata['tail_modulus'], 0.5, places=12)
        self.assertLess(report.metadata['tail_ratio'], 0.04)
        self.assertLessEqual(report.rows[-1].abs_error, 1e-2)
        self.assertTrue(all(math.isnan(row.route_disagreement) for row in report.rows))

    @parameterized.expand([('cos', 'cos:1'), ('analytic', 'pos:0.3')])
    def test_weak(self, _, h):
        report = weak.run(presets.Weak(h=h))
        self.assertLessEqual(report.rows[-1].abs_error, 5e-2)
        self.assertLessEqual(max(row.route_disagreement for row in report.rows), 1e-6)

    def test_clt_variance(self):
        report = clt.run(presets.Clt())
        q = report.metadata['q_alpha'].real
        self.assertAlmostEqual(q, 0.5625, places=10)
        self.assertLessEqual(max(row.route_disagreement for row in report.rows), 1e-6)
        for row in report.rows:
            if row.n == 128 and row.param > 0:
                variance = -cmath.log(row.psi).real / row.param ** 2
                self.assertAlmostEqual(variance, q, delta=1e-3)

    def test_compare_decay_factor(self):
        cfg = presets.Compare()
        report = compare.run(cfg)
        errors = report.errors
        self.assertGreater(errors[0], 0)
        self.assertLessEqual(errors[-1], cfg.tol('decay_factor') * errors[0])


if __name__ == '__main__':
    unittest.main()
