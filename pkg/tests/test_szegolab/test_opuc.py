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
import math
import tempfile
import unittest
from pathlib import Path
from unittest import mock

import numpy as np
import scipy.linalg
from parameterized import parameterized
from scipy.special import iv

from szegolab import opuc
from szegolab.fourier import TrigPoly
from szegolab.measure import exp_perturb, fisher_hartwig, geronimus, lebesgue, moment_matrix, moments
from szegolab.opuc import (VerblunskySeq, kernel_diag_quadrature, kernel_diag_trace, log_det_ratio,
                           log_psi_moment, log_toeplitz_det, monic_state, orthonormal_values, psi_moment,
                           szego_from_measure, szego_from_moments)
from szegolab.utils import DomainError, OrthogonalityLossError, PositivityError, RangeError

from . import assertAllClose


def bessel_toeplitz_logdet(a, b, n):
    """log det of the n x n Toeplitz matrix of exp(a z + b / z)"""
    x = 2 * cmath.sqrt(a * b)
    ks = np.arange(n)
    pos = np.array([(a / b) ** (k / 2) * iv(k, x) for k in ks], dtype=complex)
    neg = np.array([(b / a) ** (k / 2) * iv(k, x) for k in ks], dtype=complex)
    sign, logabs = np.linalg.slogdet(scipy.linalg.toeplitz(pos, neg))
    return sign, logabs


class TestVerblunskySeq(unittest.TestCase):
    def test_validation(self):
        with self.assertRaises(DomainError):
            VerblunskySeq([0.5, 1.0])
        with self.assertRaises(DomainError):
            VerblunskySeq([0.5], mass=0)

    def test_prefix_and_rhos(self):
        v = VerblunskySeq.constant(0.6, 5, mass=2)
        assertAllClose(v.rhos, [0.8] * 5)
        self.assertEqual(len(v.prefix(3)), 3)
        self.assertEqual(v.prefix(3).mass, 2)
        with self.assertRaises(RangeError):
            v.prefix(6)

    def test_csv(self):
        v = VerblunskySeq.from_function(lambda j: 0.1 * j + 0.05j, 4)
        with tempfile.TemporaryDirectory() as d:
            path = Path(d) / 'alphas.csv'
            v.to_csv(path)
            back = VerblunskySeq.from_csv(path)
            path.write_text('0,0.1,0\n2,0.2,0\n')
            with self.assertRaises(DomainError):
                VerblunskySeq.from_csv(path)
        assertAllClose(back.alphas, v.alphas, atol=0)


class TestSzegoRecursion(unittest.TestCase):
    def test_free_case(self):
        state = monic_state(VerblunskySeq.constant(0, 4), 4)
        assertAllClose(state.phi, [0, 0, 0, 0, 1], atol=0)
        self.assertEqual(state.degree, 4)

    def test_monic_state_is_orthogonal(self):
        mu = geronimus(0.3)
        c = moments(mu, 6)
        state = monic_state(szego_from_moments(c), 5)
        gram = moment_matrix(c, 6)
        # <Phi_5, z^k> = sum_j p_j c_{k-j} vanishes for k < 5
        inner = gram @ state.phi
        assertAllClose(inner[:5], np.zeros(5), atol=1e-10)
        self.assertAlmostEqual(inner[5].real, state.norms_sq[5], places=10)

    def test_moments_recover_geronimus(self):
        v = szego_from_moments(moments(geronimus(0.5), 10))
        assertAllClose(v.alphas, [0.5] * 10, atol=1e-6)

    def test_moments_positivity_loss(self):
        with self.assertRaises(PositivityError):
            szego_from_moments([1, 1, 1])
        with self.assertRaises(DomainError):
            szego_from_moments([0, 0])

    @parameterized.expand([(0.3,), (-0.4,), (0.5j,), (0.6,), (0,), (-0.4 + 0.2j,)])
    def test_measure_recovers_geronimus(self, alpha):
        v = szego_from_measure(geronimus(alpha), 32)
        self.assertLessEqual(np.max(np.abs(v.alphas - alpha)), 1e-6)
        self.assertAlmostEqual(v.mass, 1.0, places=8)

    @parameterized.expand([
        ('gap_atom', 0.5),
        ('heavy_gap_atom', 0.6),
        ('no_atom', -0.4 + 0.2j),
    ])
    def test_measure_recovers_geronimus_long(self, _, alpha):
        v = szego_from_measure(geronimus(alpha), 128)
        errors = np.abs(v.alphas - alpha)
        self.assertLessEqual(np.max(errors), 1e-6, f'first bad index {int(np.argmax(errors > 1e-6))}')

    def test_long_basis_stays_orthonormal(self):
        theta, w, values = orthonormal_values(geronimus(0.5), 128)
        gram = (np.conj(values) * w) @ values.T
        assertAllClose(gram, np.eye(128), atol=1e-10)

    def test_orthogonality_loss_is_reported(self):
        with mock.patch.object(opuc, 'REORTHOGONALIZATION_PASSES', 0):
            with self.assertRaises(OrthogonalityLossError) as ctx:
                szego_from_measure(geronimus(0.5), 8)
        self.assertEqual(ctx.exception.index, 0)
        self.assertAlmostEqual(ctx.exception.defect, 1 - math.sqrt(0.75), places=6)

    @parameterized.expand([
        ('lebesgue', lebesgue()),
        ('geronimus_atom', geronimus(0.5)),
        ('geronimus', geronimus(-0.4 + 0.2j)),
        ('point_mass', lebesgue().with_atom(0.0, 0.5)),
        ('fh', fisher_hartwig([(math.pi, 0.5, 0.2)])),
    ])
    def test_recovered_polynomials_are_orthogonal(self, _, mu):
        v = szego_from_measure(mu, 16)
        c = moments(mu, 16)
        for n in range(1, 17):
            state = monic_state(v, n)
            inner = moment_matrix(c, n + 1) @ state.phi
            self.assertLessEqual(np.max(np.abs(inner[:n])), 1e-8 * state.norms_sq[n], f'n={n}')

    def test_orthonormal_values(self):
        theta, w, values = orthonormal_values(geronimus(0.4), 6)
        gram = (np.conj(values) * w) @ values.T
        assertAllClose(gram, np.eye(6), atol=1e-10)

    def test_log_toeplitz_det_matches_bessel(self):
        t = 0.4
        v = szego_from_measure(exp_perturb(lebesgue(), TrigPoly({-1: t, 1: t})), 8)
        _, logabs = bessel_toeplitz_logdet(t, t, 8)
        self.assertAlmostEqual(log_toeplitz_det(v, 8), logabs, places=10)
        self.assertEqual(log_toeplitz_det(v, 0), 0.0)
        with self.assertRaises(RangeError):
            log_toeplitz_det(v, 9)


class TestDeterminantRatio(unittest.TestCase):
    def test_zero_symbol(self):
        self.assertEqual(log_det_ratio(lebesgue(), TrigPoly.constant(0), 5), 0j)

    def test_real_symbol(self):
        t = 0.4
        _, logabs = bessel_toeplitz_logdet(t, t, 10)
        ratio = log_det_ratio(lebesgue(), TrigPoly({-1: t, 1: t}), 10)
        self.assertAlmostEqual(ratio, logabs, places=9)

    def test_complex_symbol(self):
        a, b = 0.3, 0.2
        sign, logabs = bessel_toeplitz_logdet(a, b, 10)
        ratio = log_det_ratio(lebesgue(), TrigPoly({1: a, -1: b}), 10)
        self.assertAlmostEqual(cmath.exp(ratio), sign * math.exp(logabs), places=9)

    @parameterized.expand([
        ('lebesgue', lebesgue(), TrigPoly({-1: 0.4, 1: 0.4}), 12),
        ('geronimus_atom', geronimus(0.5), TrigPoly({-1: 0.3, 1: 0.3}), 24),
        ('fh', fisher_hartwig([(1.0, 0.5, 0)]), TrigPoly({-2: 0.1 - 0.2j, 0: 0.3, 2: 0.1 + 0.2j}), 16),
    ])
    def test_ratio_reciprocity(self, _, mu, h, n):
        forward = log_det_ratio(mu, h, n)
        backward = log_det_ratio(exp_perturb(mu, h), -h, n)
        self.assertLessEqual(abs(forward + backward), 1e-9)

    def test_analytic_symbol_has_unit_ratio(self):
        h = TrigPoly({1: 0.3, 2: 0.1j})
        self.assertAlmostEqual(log_det_ratio(lebesgue(), h, 8), 0, places=10)
        self.assertAlmostEqual(psi_moment(lebesgue(), h, 8), 1, places=10)

    def test_constant_symbol(self):
        mu = geronimus(0.4)
        self.assertAlmostEqual(log_psi_moment(mu, TrigPoly.constant(0.7), 6), 0, places=9)

    def test_kernel_diag_lebesgue(self):
        h = TrigPoly({-1: 1, 0: 2, 1: 1})
        self.assertAlmostEqual(kernel_diag_quadrature(lebesgue(), h, 5), 10, places=10)

    @parameterized.expand([
        ('geronimus', geronimus(0.5), TrigPoly({-1: 0.4, 1: 0.4})),
        ('fh', fisher_hartwig([(math.pi, 0.5, 0)]), TrigPoly({-2: 0.1, 1: 0.3j, 2: -0.2})),
    ])
    def test_kernel_diag_trace_matches_quadrature(self, _, mu, h):
        self.assertAlmostEqual(kernel_diag_trace(mu, h, 10), kernel_diag_quadrature(mu, h, 10), places=8)

    def test_kernel_diag_trace_needs_coefficients(self):
        with self.assertRaises(RangeError):
            kernel_diag_trace(VerblunskySeq.constant(0.2, 8), TrigPoly({1: 1}), 8)


if __name__ == '__main__':
    unittest.main()
