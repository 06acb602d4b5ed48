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
"""
Laurent coefficient arithmetic for symbols on the unit circle.

A symbol h(z) = sum_k h_k z^k, |z| = 1, is stored as a dense two-sided array
indexed -K..K. All sampling transforms use the uniform grid
theta_m = 2*pi*m/M.
"""
import json
import logging
import math
from collections import namedtuple
from typing import Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from .utils import DegreeError

logger = logging.getLogger(__name__)

TNumber = Union[int, float, complex]

TriangularParts = namedtuple('TriangularParts', ['plus', 'minus', 'zero', 'plus_closed', 'minus_closed'])
CosSin = namedtuple('CosSin', ['a0', 'a', 'b'])


class TrigPoly(object):
    """Finite two-sided Fourier series with coefficients h_{-K}..h_K"""
    __slots__ = ('_c',)

    def __init__(self, coeffs=None, k_min=None):
        """Build from a mapping {k: h_k} or from a dense sequence starting at index k_min.

        When k_min is omitted the sequence must have odd length and is centered at 0.
        """
        if coeffs is None:
            coeffs = [0]
        if isinstance(coeffs, Mapping):
            if not coeffs:
                self._c = np.zeros(1, dtype=complex)
                return
            degree = max(abs(int(k)) for k in coeffs)
            c = np.zeros(2 * degree + 1, dtype=complex)
            for k, v in coeffs.items():
                c[int(k) + degree] += v
            self._c = c
            return

        arr = np.array(coeffs, dtype=complex).ravel()
        if k_min is None:
            if arr.size % 2 != 1:
                raise ValueError(f'A centered coefficient array needs odd length, got {arr.size}')
            self._c = arr.copy()
            return
        k_max = k_min + arr.size - 1
        degree = max(abs(k_min), abs(k_max))
        c = np.zeros(2 * degree + 1, dtype=complex)
        c[k_min + degree:k_max + degree + 1] = arr
        self._c = c

    # ---- construction helpers ------------------------------------------------
    @classmethod
    def constant(cls, value):
        # type: (TNumber) -> TrigPoly
        return cls([value])

    @classmethod
    def monomial(cls, k, value=1.0):
        # type: (int, TNumber) -> TrigPoly
        return cls({k: value})

    @classmethod
    def from_json(cls, obj):
        # type: (Union[str, Mapping]) -> TrigPoly
        """Load from {"k_min": int, "coeffs": [[re, im], ...]}"""
        if isinstance(obj, str):
            obj = json.loads(obj)
        values = []
        for pair in obj['coeffs']:
            if isinstance(pair, (list, tuple)):
                re_part = pair[0]
                im_part = pair[1] if len(pair) > 1 else 0.0
                values.append(complex(re_part, im_part))
            else:
                values.append(complex(pair))
        return cls(values, k_min=int(obj['k_min']))

    def to_json(self):
        # type: () -> dict
        return {
            'k_min': -self.degree,
            'coeffs': [[float(v.real), float(v.imag)] for v in self._c],
        }

    # ---- accessors -------------------------------------------------------------
    @property
    def degree(self):
        # type: () -> int
        return (self._c.size - 1) // 2

    @property
    def coeffs(self):
        # type: () -> np.ndarray
        """Copy of the dense coefficient array, index k stored at k + degree"""
        return self._c.copy()

    @property
    def indices(self):
        # type: () -> np.ndarray
        return np.arange(-self.degree, self.degree + 1)

    def coeff(self, k):
        # type: (int) -> complex
        if abs(k) > self.degree:
            return 0j
        return complex(self._c[k + self.degree])

    def effective_degree(self, tol=0.0):
        # type: (float) -> int
        """Largest |k| with |h_k| > tol"""
        nz = np.nonzero(np.abs(self._c) > tol)[0]
        if nz.size == 0:
            return 0
        return int(np.max(np.abs(nz - self.degree)))

    def __call__(self, z):
        """Evaluate sum_k h_k z^k"""
        z = np.asarray(z, dtype=complex)
        return np.polynomial.polynomial.polyval(z, self._c) * z ** (-self.degree)

    def at_angles(self, theta):
        """Evaluate on z = exp(i theta)"""
        return self(np.exp(1j * np.asarray(theta, dtype=float)))

    # ---- involutions -----------------------------------------------------------
    def tilde(self):
        # type: () -> TrigPoly
        """h(1/z)"""
        return TrigPoly(self._c[::-1])

    def bar(self):
        # type: () -> TrigPoly
        """Coefficientwise complex conjugate"""
        return TrigPoly(np.conj(self._c))

    def star(self):
        # type: () -> TrigPoly
        """conj(h(z)) on the circle, i.e. tilde of bar"""
        return TrigPoly(np.conj(self._c[::-1]))

    def is_real_symbol(self, tol=1e-12):
        # type: (float) -> bool
        return bool(np.max(np.abs(self._c - np.conj(self._c[::-1]))) <= tol)

    # ---- reshaping -------------------------------------------------------------
    def pad(self, degree):
        # type: (int) -> TrigPoly
        if degree <= self.degree:
            return self
        c = np.zeros(2 * degree + 1, dtype=complex)
        c[degree - self.degree:degree + self.degree + 1] = self._c
        return TrigPoly(c)

    def truncate(self, degree):
        # type: (int) -> TrigPoly
        if degree >= self.degree:
            return self
        return TrigPoly(self._c[self.degree - degree:self.degree + degree + 1])

    def trim(self, tol=0.0):
        # type: (float) -> TrigPoly
        return self.truncate(self.effective_degree(tol))

    def shift(self, j):
        # type: (int) -> TrigPoly
        """Multiply by z^j"""
        return TrigPoly(self._c, k_min=j - self.degree)

    # ---- arithmetic ------------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, TrigPoly):
            other = TrigPoly.constant(other)
        degree = max(self.degree, other.degree)
        return TrigPoly(self.pad(degree)._c + other.pad(degree)._c)

    __radd__ = __add__

    def __neg__(self):
        return TrigPoly(-self._c)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TrigPoly):
            return sym_mul(self, other)
        return TrigPoly(self._c * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return TrigPoly(self._c / other)

    def allclose(self, other, atol=1e-12):
        # type: (TrigPoly, float) -> bool
        degree = max(self.degree, other.degree)
        return bool(np.max(np.abs(self.pad(degree)._c - other.pad(degree)._c)) <= atol)

    def __repr__(self):
        terms = {int(k): complex(v) for k, v in zip(self.indices, self._c) if v != 0}
        return f'TrigPoly({terms!r})'


def from_cos_sin(a0, a=(), b=()):
    # type: (TNumber, Sequence[TNumber], Sequence[TNumber]) -> TrigPoly
    """Symbol a0 + 2 sum_j a_j cos(j theta) + 2 sum_j b_j sin(j theta)"""
    degree = max(len(a), len(b))
    c = {0: a0}
    for j in range(1, degree + 1):
        aj = a[j - 1] if j <= len(a) else 0.0
        bj = b[j - 1] if j <= len(b) else 0.0
        c[j] = aj - 1j * bj
        c[-j] = aj + 1j * bj
    return TrigPoly(c)


def cos_sin_coeffs(h):
    # type: (TrigPoly) -> CosSin
    """Inverse of from_cos_sin: a_j = (h_j + h_-j)/2, b_j = i(h_j - h_-j)/2"""
    K = h.degree
    a = np.array([(h.coeff(j) + h.coeff(-j)) / 2 for j in range(1, K + 1)], dtype=complex)
    b = np.array([1j * (h.coeff(j) - h.coeff(-j)) / 2 for j in range(1, K + 1)], dtype=complex)
    return CosSin(h.coeff(0), a, b)


def from_trig_series(const=0.0, cos=(), sin=(), pos=(), neg=()):
    # type: (TNumber, Iterable, Iterable, Iterable, Iterable) -> TrigPoly
    """c + sum_j cos_j cos(j theta) + sum_j sin_j sin(j theta) + sum_k pos_k z^k + sum_k neg_k z^-k"""
    c = {0: complex(const)}

    def put(k, v):
        c[k] = c.get(k, 0j) + v

    for j, v in enumerate(cos, 1):
        put(j, v / 2)
        put(-j, v / 2)
    for j, v in enumerate(sin, 1):
        put(j, v / 2j)
        put(-j, -v / 2j)
    for k, v in enumerate(pos, 1):
        put(k, v)
    for k, v in enumerate(neg, 1):
        put(-k, v)
    return TrigPoly(c)


def grid_size(degree):
    # type: (int) -> int
    """Next power of two >= 4K + 4"""
    need = 4 * degree + 4
    return 1 << (need - 1).bit_length()


def sample(h, M):
    # type: (TrigPoly, int) -> np.ndarray
    """Values of h at theta_m = 2 pi m / M"""
    if M <= 2 * h.degree:
        raise DegreeError(f'{M} samples cannot represent degree {h.degree}')
    spread = np.zeros(M, dtype=complex)
    spread[h.indices % M] = h.coeffs
    return np.fft.ifft(spread) * M


def coeffs_from_samples(samples, degree):
    # type: (Sequence[complex], int) -> TrigPoly
    """h_k = (1/M) sum_m samples[m] exp(-i k theta_m), |k| <= degree"""
    samples = np.asarray(samples, dtype=complex)
    M = samples.size
    if M < 4 * degree + 4:
        raise DegreeError(f'Need at least {4 * degree + 4} samples for degree {degree}, got {M}')
    spectrum = np.fft.fft(samples) / M
    return TrigPoly(spectrum[np.arange(-degree, degree + 1) % M])


def b_half_norm(h):
    # type: (TrigPoly) -> float
    """sum_k sqrt(1 + |k|) |h_k|"""
    return float(np.sum(np.sqrt(1.0 + np.abs(h.indices)) * np.abs(h.coeffs)))


def hankel_hs_norm(h):
    # type: (TrigPoly) -> float
    """Hilbert-Schmidt norm of the Hankel operator H(h) = [h_{j+k+1}]_{j,k>=0}

    ||H(h)||_2^2 = sum_{j>=1} j |h_j|^2, bounded by b_half_norm(h)^2.
    """
    j = np.arange(1, h.degree + 1)
    return math.sqrt(float(np.sum(j * np.abs(h.coeffs[h.degree + 1:]) ** 2)))


def sym_mul(f, g):
    # type: (TrigPoly, TrigPoly) -> TrigPoly
    return TrigPoly(np.convolve(f.coeffs, g.coeffs))


def sup_norm(h, M=None):
    # type: (TrigPoly, Optional[int]) -> float
    """Max of |h| over a uniform grid"""
    if M is None:
        M = max(grid_size(4 * h.degree), 512)
    return float(np.max(np.abs(sample(h, M))))


def default_exp_degree(h):
    # type: (TrigPoly) -> int
    return max(8, 4 * h.degree + int(math.ceil(4 * sup_norm(h))))


def sym_exp(h, degree=None):
    # type: (TrigPoly, Optional[int]) -> TrigPoly
    """Coefficients of exp(h) up to the given degree"""
    if degree is None:
        degree = default_exp_degree(h)
    M = grid_size(degree)
    logger.debug(f'sym_exp: degree {degree} on {M} points')
    return coeffs_from_samples(np.exp(sample(h, M)), degree)


def triangular_parts(l):
    # type: (TrigPoly) -> TriangularParts
    K = l.degree
    c = l.coeffs
    plus = c.copy()
    plus[:K + 1] = 0
    minus = c.copy()
    minus[K:] = 0
    zero = np.zeros_like(c)
    zero[K] = c[K]
    plus, minus, zero = TrigPoly(plus), TrigPoly(minus), TrigPoly(zero)
    return TriangularParts(plus, minus, zero, plus + zero, minus + zero)


def sector_direction(h, M=None):
    # type: (TrigPoly, Optional[int]) -> Optional[complex]
    """Unimodular tau with Re(tau exp(h)) > 0 on the circle, or None

    exp(h) lies in a half-plane iff the range of Im h fits in an interval shorter
    than pi; tau rotates the middle of that interval onto the positive axis.
    """
    if M is None:
        M = max(grid_size(4 * h.degree), 512)
    im = sample(h, M).imag
    lo, hi = float(np.min(im)), float(np.max(im))
    if hi - lo >= math.pi - 1e-6:
        return None
    return complex(np.exp(-0.5j * (hi + lo)))


def szego_sum(h):
    # type: (TrigPoly) -> complex
    """sum_{k>=1} k h_k h_{-k}"""
    return complex(sum(k * h.coeff(k) * h.coeff(-k) for k in range(1, h.degree + 1)))
