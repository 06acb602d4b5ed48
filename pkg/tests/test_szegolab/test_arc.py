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
import math
import unittest

import numpy as np
from parameterized import parameterized

from szegolab.arc import (ArcGeometry, QtSymbol, ab_symbols, q_alpha, sk_closed, sk_vk, sk_vk_recurrence, stretch,
                          trace_commutator, unwrap, unwrap_positions, unwrapped_symbol, vk_closed)
from szegolab.cmv import build_cmv
from szegolab.fourier import TrigPoly, from_cos_sin, szego_sum
from szegolab.opuc import VerblunskySeq
from szegolab.utils import DomainError, TruncationError

from . import assertAllClose

GRID = 2 * np.pi * np.arange(256) / 256
TWO_COS = TrigPoly({-1: 1, 1: 1})


class TestSkVk(unittest.TestCase):
    @parameterized.expand([(0.3,), (0.5,), (0.8,)])
    def test_recurrence_matches_closed_form(self, abs_alpha):
        geom = ArcGeometry(abs_alpha)
        table = sk_vk_recurrence(geom, 20)
        for entry in table:
            assertAllClose(entry.s.at_angles(GRID), sk_closed(geom, entry.k, GRID), rtol=0, atol=1e-10)
            assertAllClose(entry.v.at_angles(GRID), vk_closed(geom, entry.k, GRID), rtol=0, atol=1e-10)

    @parameterized.expand([(0.3,), (0.5,), (0.8,)])
    def test_coefficient_identities(self, abs_alpha):
        geom = ArcGeometry(abs_alpha)
        z_minus_one = TrigPoly({0: -1, 1: 1})
        for entry in sk_vk_recurrence(geom, 20):
            lhs = entry.v * z_minus_one
            rhs = -(geom.abs_alpha / geom.rho) * (entry.s.tilde() - entry.s)
            self.assertTrue(lhs.allclose(rhs, atol=1e-11), f'k={entry.k}')
            self.assertTrue(entry.v.tilde().allclose(entry.v.shift(1), atol=1e-11), f'k={entry.k}')
            self.assertLess(np.max(np.abs(entry.s.coeffs.imag)), 1e-14)
            self.assertLess(np.max(np.abs(entry.v.coeffs.imag)), 1e-14)

    @parameterized.expand([(0.3,), (0.5,), (0.8,)])
    def test_transfer_matrix_is_unitary(self, abs_alpha):
        table = sk_vk_recurrence(ArcGeometry(abs_alpha), 12)
        s1, v1 = table[1].s, table[1].v
        theta = 2 * np.pi * np.arange(32) / 32
        z = np.exp(1j * theta)
        for t, zt in zip(theta, z):
            a = np.array([[s1.at_angles(t), -zt * v1.at_angles(t)],
                          [v1.at_angles(t), s1.tilde().at_angles(t)]], dtype=complex)
            assertAllClose(a.conj().T @ a, np.eye(2), atol=1e-13)
        for entry in table:
            norm = np.abs(entry.s.at_angles(theta)) ** 2 + np.abs(entry.v.at_angles(theta)) ** 2
            assertAllClose(norm, np.ones(32), atol=1e-11)

    def test_negative_index(self):
        geom = ArcGeometry(0.5)
        entry = sk_vk(geom, -3)
        assertAllClose(entry.s.at_angles(GRID), sk_closed(geom, -3, GRID), rtol=0, atol=1e-12)
        assertAllClose(entry.v.at_angles(GRID), vk_closed(geom, -3, GRID), rtol=0, atol=1e-12)

    def test_recurrence_needs_order(self):
        with self.assertRaises(ValueError):
            sk_vk_recurrence(ArcGeometry(0.5), 0)

    def test_stretch(self):
        theta = np.linspace(0, 2 * np.pi, 9)[:-1]
        assertAllClose(stretch(ArcGeometry(0), theta), theta, atol=1e-12)
        omega = stretch(ArcGeometry(0.5), GRID)
        self.assertGreaterEqual(omega.min(), math.pi / 3 - 1e-12)
        self.assertLessEqual(omega.max(), 2 * math.pi - math.pi / 3 + 1e-12)


class TestQAlpha(unittest.TestCase):
    def test_two_cos(self):
        self.assertAlmostEqual(q_alpha(ArcGeometry(0.5), TWO_COS), 0.5625, places=12)
        self.assertAlmostEqual(q_alpha(ArcGeometry(0.5), 0.3 * TWO_COS), 0.050625, places=12)

    def test_free_case_is_szego_sum(self):
        h = from_cos_sin(0.3, [0.2, -0.1], [0.15, 0.05])
        self.assertAlmostEqual(q_alpha(ArcGeometry(0), h), szego_sum(h), places=12)

    @parameterized.expand([(0.3,), (0.5j,), (0.8,), (-0.6 + 0.2j,)])
    def test_routes_agree(self, alpha):
        geom = ArcGeometry(alpha)
        h = from_cos_sin(0.1, [0.4, 0.0, -0.2], [0.3, 0.1])
        chebyshev = ab_symbols(geom, h)
        sampling = ab_symbols(geom, h, method='sampling')
        self.assertTrue(chebyshev.A.allclose(sampling.A, atol=1e-12))
        self.assertTrue(chebyshev.B.allclose(sampling.B, atol=1e-12))
        self.assertAlmostEqual(q_alpha(geom, h), q_alpha(geom, h, method='sampling'), places=10)

    @parameterized.expand([(seed,) for seed in range(6)])
    def test_nonnegative_for_real_symbols(self, seed):
        rng = np.random.RandomState(seed)
        alpha = 0.9 * rng.uniform() * np.exp(2j * np.pi * rng.uniform())
        degree = 1 + seed % 4
        h = from_cos_sin(rng.randn(), rng.randn(degree), rng.randn(degree))
        q = q_alpha(ArcGeometry(alpha), h)
        self.assertAlmostEqual(q.imag, 0, places=10)
        self.assertGreaterEqual(q.real, -1e-12)

    def test_odd_symbol_uses_b_only(self):
        geom = ArcGeometry(0.5)
        A, B = ab_symbols(geom, from_cos_sin(0, [], [0.2]))
        self.assertTrue(A.allclose(TrigPoly.constant(0)))
        self.assertGreater(np.max(np.abs(B.coeffs)), 0)

    def test_constant_symbol(self):
        self.assertEqual(q_alpha(ArcGeometry(0.5), TrigPoly.constant(2.0)), 0)

    def test_validation(self):
        geom = ArcGeometry(0.5)
        with self.assertRaises(DomainError):
            ab_symbols(geom, TrigPoly({1: 0.3}))
        with self.assertRaises(ValueError):
            ab_symbols(geom, TWO_COS, method='magic')
        with self.assertRaises(DomainError):
            ArcGeometry(1.0)


class TestQtSymbols(unittest.TestCase):
    def test_identity(self):
        x = QtSymbol(TrigPoly({-1: 1j, 0: 2}), TrigPoly({1: 0.5}), TrigPoly({0: -1, 2: 3}), TrigPoly({-2: 1}))
        self.assertTrue((QtSymbol.identity() @ x).allclose(x))
        self.assertTrue((x @ QtSymbol.identity()).allclose(x))

    def test_adjoint_is_conjugate_transpose(self):
        x = QtSymbol(TrigPoly({-1: 1j, 0: 2}), TrigPoly({1: 0.5, -1: 0.2j}), TrigPoly({0: -1, 2: 3}), TrigPoly({-2: 1}))
        dense = x.dense(6)
        assertAllClose(x.adjoint().dense(6), dense.conj().T, atol=0)

    @parameterized.expand([(0.5,), (0.3 - 0.4j,)])
    def test_unwrapped_symbol_is_unitary(self, alpha):
        u = unwrapped_symbol(ArcGeometry(alpha))
        self.assertTrue((u.adjoint() @ u).allclose(QtSymbol.identity()))

    @parameterized.expand([(0.5,), (0.3 - 0.4j,)])
    def test_unwrapped_cmv_matches_symbol_in_the_bulk(self, alpha):
        half = 10
        geom = ArcGeometry(alpha)
        unwrapped = unwrap(build_cmv(VerblunskySeq.constant(alpha, 2 * half), 2 * half).entries)
        dense = unwrapped_symbol(geom).dense(half)
        keep = [j + half - 1 for j in range(-half + 1, half + 1) if j not in (0, 1) and abs(j) < half - 3]
        assertAllClose(unwrapped[np.ix_(keep, keep)], dense[np.ix_(keep, keep)], rtol=0, atol=1e-14)

    def test_unwrap_positions(self):
        self.assertEqual(list(unwrap_positions(4)), [2, 1, 3, 0])
        with self.assertRaises(ValueError):
            unwrap_positions(5)


class TestCommutatorTrace(unittest.TestCase):
    def test_routes_agree(self):
        result = trace_commutator(ArcGeometry(0.5), TWO_COS)
        self.assertAlmostEqual(result.ab, 1.125, places=10)
        self.assertAlmostEqual(result.numerical, result.ab, places=5)
        self.assertAlmostEqual(result.symbol, result.ab, places=8)

    def test_limits(self):
        with self.assertRaises(DomainError):
            trace_commutator(ArcGeometry(0), TWO_COS)
        with self.assertRaises(TruncationError):
            trace_commutator(ArcGeometry(0.5), TWO_COS, T=16)


if __name__ == '__main__':
    unittest.main()
