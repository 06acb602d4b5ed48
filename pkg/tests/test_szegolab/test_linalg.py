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
import unittest

import numpy as np
import scipy.linalg
from parameterized import parameterized

from szegolab.linalg import expm, log_det_tracked
from szegolab.utils import SingularSymbolError

from . import assertAllClose


class TestExpm(unittest.TestCase):
    @parameterized.expand([(0.1,), (3.0,), (12.0,)])
    def test_matches_scipy(self, scale):
        rng = np.random.RandomState(3)
        a = scale * (rng.randn(12, 12) + 1j * rng.randn(12, 12)) / 12
        expected = scipy.linalg.expm(a)
        assertAllClose(expm(a), expected, rtol=1e-9, atol=1e-11 * np.abs(expected).max())

    def test_diagonal(self):
        d = np.array([0.5, -1.0, 2j])
        assertAllClose(np.diag(expm(np.diag(d))), np.exp(d), rtol=1e-13)


class TestLogDet(unittest.TestCase):
    def test_pivoted_matches_slogdet(self):
        rng = np.random.RandomState(5)
        a = rng.randn(8, 8) + 1j * rng.randn(8, 8)
        sign, logabs = np.linalg.slogdet(a)
        value = log_det_tracked(a)
        self.assertAlmostEqual(value.real, logabs, places=10)
        self.assertAlmostEqual(cmath.exp(1j * value.imag), sign, places=10)

    def test_tracked_argument_is_continuous(self):
        # tau * a = identity, so every pivot is 1 and the argument is n * arg(1 / tau)
        n, phase = 6, 1.0
        a = np.exp(1j * phase) * np.eye(n)
        value = log_det_tracked(a, tau=np.exp(-1j * phase))
        self.assertAlmostEqual(value.imag, n * phase, places=12)
        self.assertAlmostEqual(value.real, 0, places=12)

    def test_positive_definite(self):
        rng = np.random.RandomState(7)
        b = rng.randn(6, 6)
        a = b @ b.T + 6 * np.eye(6)
        self.assertAlmostEqual(log_det_tracked(a, tau=1.0), math.log(np.linalg.det(a)), places=10)

    def test_singular(self):
        with self.assertRaises(SingularSymbolError):
            log_det_tracked(np.zeros((3, 3)))
        with self.assertRaises(SingularSymbolError):
            log_det_tracked(np.array([[0, 1], [1, 0]], dtype=complex), tau=1.0)

    def test_empty(self):
        self.assertEqual(log_det_tracked(np.zeros((0, 0))), 0j)


if __name__ == '__main__':
    unittest.main()
