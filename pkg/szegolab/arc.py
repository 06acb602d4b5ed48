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
The single-arc case alpha_n = alpha.

Symbols here depend on |alpha| only; the phase of alpha is carried explicitly
where a QT quadruple needs it. Fourier convention for real symbols:
h = a_0 + 2 sum_j a_j cos(j theta) + 2 sum_j b_j sin(j theta).
"""
import logging
import math
from collections import namedtuple
from typing import List, Optional, Tuple

import numpy as np

from .cmv import build_cmv, h_of_cmv
from .fourier import TrigPoly, coeffs_from_samples, cos_sin_coeffs, grid_size, sym_mul
from .opuc import VerblunskySeq
from .utils import DomainError, TruncationError

logger = logging.getLogger(__name__)

SkVk = namedtuple('SkVk', ['k', 's', 'v'])
ABSymbols = namedtuple('ABSymbols', ['A', 'B'])
CommutatorTrace = namedtuple('CommutatorTrace', ['numerical', 'symbol', 'ab'])

SAMPLING_POINTS = 512
MIN_COMMUTATOR_ALPHA = 1e-8


class ArcGeometry(object):
    """Support arc [phi, 2 pi - phi] of the constant-coefficient measure"""
    __slots__ = ('alpha', 'abs_alpha', 'rho', 'phi')

    def __init__(self, alpha):
        alpha = complex(alpha)
        if not abs(alpha) < 1:
            raise DomainError(f'|alpha| must be < 1, got {abs(alpha)}')
        self.alpha = alpha
        self.abs_alpha = abs(alpha)
        self.rho = math.sqrt(1 - self.abs_alpha ** 2)
        self.phi = 2 * math.asin(self.abs_alpha)

    @property
    def phase(self):
        # type: () -> complex
        """conj(alpha) / |alpha|, 1 for alpha = 0"""
        if self.abs_alpha == 0:
            return 1 + 0j
        return self.alpha.conjugate() / self.abs_alpha

    def __repr__(self):
        return f'ArcGeometry(alpha={self.alpha!r})'


def stretch(geom, theta):
    """omega = 2 arccos(rho cos(theta / 2)) mapping the circle onto the arc"""
    theta = np.asarray(theta, dtype=float)
    return 2 * np.arccos(np.clip(geom.rho * np.cos(theta / 2), -1.0, 1.0))


def _seeds(geom):
    # type: (ArcGeometry) -> Tuple[TrigPoly, TrigPoly]
    a, r = geom.abs_alpha, geom.rho
    s1 = TrigPoly({0: -a * a, -1: r * r})
    v1 = TrigPoly({0: -a * r, -1: -a * r})
    return s1, v1


def sk_vk_recurrence(geom, k_max):
    # type: (ArcGeometry, int) -> List[SkVk]
    """s_k, v_k for k = 0..k_max from the transfer matrix (s_1, -z v_1; v_1, s~_1)"""
    if k_max < 1:
        raise ValueError(f'k_max must be at least 1, got {k_max}')
    s1, v1 = _seeds(geom)
    s1_tilde = s1.tilde()
    z_v1 = v1.shift(1)
    out = [SkVk(0, TrigPoly.constant(1.0), TrigPoly.constant(0.0)), SkVk(1, s1, v1)]
    for k in range(1, k_max):
        s, v = out[-1].s, out[-1].v
        out.append(SkVk(k + 1, (s1 * s - z_v1 * v).trim(), (s1_tilde * v + v1 * s).trim()))
    return out


def sk_vk(geom, k, table=None):
    # type: (ArcGeometry, int, Optional[List[SkVk]]) -> SkVk
    """s_k, v_k for any integer k, using s_{-k} = s~_k and v_{-k} = -v_k"""
    m = abs(k)
    if table is None or len(table) <= m:
        table = sk_vk_recurrence(geom, max(m, 1))
    entry = table[m]
    if k >= 0:
        return entry
    return SkVk(k, entry.s.tilde(), -entry.v)


def _sin_ratio(k, omega):
    """sin(k omega) / sin(omega / 2) with its limits at omega in {0, 2 pi}"""
    den = np.sin(omega / 2)
    small = np.abs(den) < 1e-12
    limit = np.where(omega < math.pi, 2.0 * k, -2.0 * k)
    return np.where(small, limit, np.sin(k * omega) / np.where(small, 1.0, den))


def sk_closed(geom, k, theta):
    """cos(k omega) - i (sin(k omega) / sin(omega/2)) rho sin(theta/2)"""
    theta = np.asarray(theta, dtype=float)
    omega = stretch(geom, theta)
    return np.cos(k * omega) - 1j * _sin_ratio(k, omega) * geom.rho * np.sin(theta / 2)


def vk_closed(geom, k, theta):
    """-(sin(k omega) / sin(omega/2)) |alpha| exp(-i theta/2)"""
    theta = np.asarray(theta, dtype=float)
    omega = stretch(geom, theta)
    return -_sin_ratio(k, omega) * geom.abs_alpha * np.exp(-0.5j * theta)


def _chebyshev_power(n, second_kind=False):
    # type: (int, bool) -> List[int]
    """Integer power-basis coefficients of T_n (or U_n)"""
    prev, cur = [1], ([0, 2] if second_kind else [0, 1])
    if n == 0:
        return prev
    for _ in range(1, n):
        nxt = [0] + [2 * c for c in cur]
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return cur


def _poly_in(y, coeffs):
    # type: (TrigPoly, List[complex]) -> TrigPoly
    """Horner evaluation of sum_i coeffs[i] y^i in the symbol algebra"""
    out = TrigPoly.constant(0.0)
    for c in reversed(coeffs):
        out = sym_mul(out, y) + c
    return out


def _ab_chebyshev(geom, h):
    # type: (ArcGeometry, TrigPoly) -> ABSymbols
    a0, a, b = cos_sin_coeffs(h)
    r2 = geom.rho ** 2
    # y = x^2 = rho^2 cos^2(theta/2)
    y = TrigPoly({-1: r2 / 4, 0: r2 / 2, 1: r2 / 4})
    A = TrigPoly.constant(complex(a0))
    for j, aj in enumerate(a, 1):
        if aj == 0:
            continue
        even = _chebyshev_power(2 * j)[0::2]
        A = A + 2 * complex(aj) * _poly_in(y, even)
    # (sin(theta/2) + |alpha| cos(theta/2)) x
    g = geom.rho * (TrigPoly({1: 1 / 4j, -1: -1 / 4j}) + geom.abs_alpha * TrigPoly({-1: 0.25, 0: 0.5, 1: 0.25}))
    odd_sum = TrigPoly.constant(0.0)
    for j, bj in enumerate(b, 1):
        if bj == 0:
            continue
        odd = _chebyshev_power(2 * j - 1, second_kind=True)[1::2]
        odd_sum = odd_sum + complex(bj) * _poly_in(y, odd)
    B = 2 * sym_mul(g, odd_sum)
    degree = h.degree
    return ABSymbols(A.pad(degree).truncate(degree), B.pad(degree).truncate(degree))


def _ab_sampling(geom, h, M=SAMPLING_POINTS):
    # type: (ArcGeometry, TrigPoly, int) -> ABSymbols
    a0, a, b = cos_sin_coeffs(h)
    M = max(M, grid_size(h.degree))
    theta = 2 * math.pi * np.arange(M) / M
    omega = stretch(geom, theta)
    A = np.full(M, a0, dtype=complex)
    odd = np.zeros(M, dtype=complex)
    for j, (aj, bj) in enumerate(zip(a, b), 1):
        A += 2 * aj * np.cos(j * omega)
        odd += bj * _sin_ratio(j, omega)
    B = 2 * (np.sin(theta / 2) + geom.abs_alpha * np.cos(theta / 2)) * odd
    return ABSymbols(coeffs_from_samples(A, h.degree), coeffs_from_samples(B, h.degree))


def ab_symbols(geom, h, method='chebyshev', bilinear=False):
    # type: (ArcGeometry, TrigPoly, str, bool) -> ABSymbols
    """A^h and B^h as Laurent polynomials of degree deg(h).

    method is 'chebyshev' (exact polynomial substitution) or 'sampling'
    (evaluate through the stretching map and transform). Complex h is only
    accepted with bilinear=True, where A and B are extended linearly.
    """
    if not bilinear and not h.is_real_symbol():
        raise DomainError('A^h and B^h are defined for real-valued symbols')
    if method == 'chebyshev':
        return _ab_chebyshev(geom, h)
    if method == 'sampling':
        return _ab_sampling(geom, h)
    raise ValueError(f'Unknown method {method!r}')


def _index_form(f, g):
    # type: (TrigPoly, TrigPoly) -> complex
    """sum_{j>=1} j f_j g_{-j}"""
    degree = max(f.degree, g.degree)
    return complex(sum(j * f.coeff(j) * g.coeff(-j) for j in range(1, degree + 1)))


def q_alpha(geom, h, method='chebyshev'):
    # type: (ArcGeometry, TrigPoly, str) -> complex
    """Q_alpha(h) = sum_j j A_j A_{-j} + sum_j j B_j B_{-j}"""
    A, B = ab_symbols(geom, h, method=method, bilinear=True)
    return _index_form(A, A) + _index_form(B, B)


class QtSymbol(object):
    """Quadruple (s, t, p, q) standing for the folded operator QT(s, t, p, q)"""
    __slots__ = ('s', 't', 'p', 'q')

    def __init__(self, s, t, p, q):
        # type: (TrigPoly, TrigPoly, TrigPoly, TrigPoly) -> None
        self.s, self.t, self.p, self.q = s, t, p, q

    @classmethod
    def dt(cls, s, t):
        # type: (TrigPoly, TrigPoly) -> QtSymbol
        return cls(s, t, t, s)

    @classmethod
    def identity(cls):
        # type: () -> QtSymbol
        one, zero = TrigPoly.constant(1.0), TrigPoly.constant(0.0)
        return cls(one, zero, zero, one)

    def adjoint(self):
        # type: () -> QtSymbol
        return QtSymbol(self.s.star(), -self.p, -self.t, self.q.star())

    def __matmul__(self, other):
        return qt_mul(self, other)

    def allclose(self, other, atol=1e-12):
        # type: (QtSymbol, float) -> bool
        return all(getattr(self, f).allclose(getattr(other, f), atol) for f in QtSymbol.__slots__)

    def dense(self, half):
        # type: (int) -> np.ndarray
        """Matrix on the integer window -half+1..half, row/column of index j at j + half - 1"""
        size = 2 * half
        out = np.zeros((size, size), dtype=complex)
        for i in range(size):
            r = i - half + 1
            for l in range(size):
                c = l - half + 1
                if r <= 0 and c <= 0:
                    out[i, l] = np.conj(self.s.coeff(r - c))
                elif r >= 1 and c >= 1:
                    out[i, l] = self.q.coeff(r - c)
                elif r <= 0:
                    out[i, l] = self.t.coeff(1 - r - c)
                else:
                    out[i, l] = -np.conj(self.p.coeff(1 - c - r))
        return out

    def __repr__(self):
        return f'QtSymbol(s={self.s!r}, t={self.t!r}, p={self.p!r}, q={self.q!r})'


def qt_mul(a, b):
    # type: (QtSymbol, QtSymbol) -> QtSymbol
    """Product of two QT symbols, exact up to finitely many entries at the fold"""
    return QtSymbol(
        a.s * b.s - a.t.star() * b.p,
        a.s.star() * b.t + a.t * b.q,
        a.p * b.s + a.q.star() * b.p,
        -(a.p.star() * b.t) + a.q * b.q,
    )


def unwrap_positions(size):
    # type: (int) -> np.ndarray
    """Position on the integer window of each CMV index: 2m -> m+1, 2m+1 -> -m"""
    if size % 2:
        raise ValueError(f'Unwrapping needs an even size, got {size}')
    half = size // 2
    e = np.arange(size)
    z = np.where(e % 2 == 0, e // 2 + 1, -(e // 2))
    return z + half - 1


def unwrap(c):
    # type: (np.ndarray) -> np.ndarray
    """R C R^* with R the isometry folding the CMV basis onto an integer window"""
    c = np.asarray(c, dtype=complex)
    pos = unwrap_positions(c.shape[0])
    out = np.zeros_like(c)
    out[np.ix_(pos, pos)] = c
    return out


def unwrapped_symbol(geom):
    # type: (ArcGeometry) -> QtSymbol
    """Symbol of the unwrapped constant-alpha CMV matrix, DT(s_1, (|alpha|/conj(alpha)) v_1)"""
    s1, _ = _seeds(geom)
    t1 = TrigPoly({0: -geom.alpha * geom.rho, -1: -geom.alpha * geom.rho})
    return QtSymbol.dt(s1, t1)


def s_v_symbols(geom, h):
    # type: (ArcGeometry, TrigPoly) -> Tuple[TrigPoly, TrigPoly]
    """S = sum_j h_j s_j and V = sum_j h_j v_j"""
    K = h.degree
    table = sk_vk_recurrence(geom, max(K, 1))
    S = TrigPoly.constant(0.0)
    V = TrigPoly.constant(0.0)
    for j in range(-K, K + 1):
        hj = h.coeff(j)
        if hj == 0:
            continue
        entry = sk_vk(geom, j, table)
        S = S + hj * entry.s
        V = V + hj * entry.v
    return S, V


def trace_commutator(geom, h, T=128):
    # type: (ArcGeometry, TrigPoly, int) -> CommutatorTrace
    """Tr[U, L] by the L/U split of h(C), by the S/V symbols and by A^h, B^h"""
    if geom.abs_alpha < MIN_COMMUTATOR_ALPHA:
        raise DomainError(f'The L/U split needs |alpha| >= {MIN_COMMUTATOR_ALPHA:g}')
    K = h.degree
    T += T % 2
    if T < 8 * K + 16:
        raise TruncationError(f'T = {T} is below {8 * K + 16}')

    S, V = s_v_symbols(geom, h)

    hc = h_of_cmv(build_cmv(VerblunskySeq.constant(geom.alpha, T), T), h)
    diag = np.zeros(T, dtype=complex)
    diag[1::2] = geom.rho / geom.abs_alpha * V.coeff(0)
    lower = np.tril(hc, -1) + np.diag(diag)
    upper = hc - lower
    comm_diag = np.sum(upper * lower.T, axis=1) - np.sum(lower * upper.T, axis=1)
    numerical = complex(np.sum(comm_diag[:T - 4 * K]))

    symbol = 2 * _index_form(S, S) - sum(j * (V.coeff(j) ** 2 + V.coeff(-j) ** 2) for j in range(1, V.degree + 1))
    ab = 2 * q_alpha(geom, h)
    logger.debug(f'trace_commutator: numerical={numerical:.12g} symbol={complex(symbol):.12g} ab={ab:.12g}')
    return CommutatorTrace(numerical, complex(symbol), ab)
