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
"""Numerical laboratory for ratios of Toeplitz determinants and their limit theorems."""
from .fourier import TrigPoly, b_half_norm, coeffs_from_samples, hankel_hs_norm, sym_exp, sym_mul, triangular_parts
from .measure import CircleMeasure, exp_perturb, fisher_hartwig, geronimus, lebesgue, moments
from .opuc import (VerblunskySeq, kernel_diag_trace, log_det_ratio, log_toeplitz_det, psi_moment,
                   szego_from_measure, szego_from_moments)
from .cmv import F_m_truncated, build_cmv, cumulant_E, h_of_cmv, psi_fredholm, right_limit
from .arc import ArcGeometry, ab_symbols, q_alpha, qt_mul, sk_vk_recurrence, stretch, trace_commutator

__version__ = '0.1.0'
