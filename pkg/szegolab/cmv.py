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
CMV matrices and the quantities read off them: h(C), the Fredholm form of Psi_n,
the cumulants E_m, right limits and their two-sided truncations.

C = L M with L = Theta_0 + Theta_2 + ..., M = 1 + Theta_1 + Theta_3 + ..., where
Theta_j = [[conj(a_j), rho_j], [rho_j, -a_j]] acts on the sites (j, j+1).
"""
import logging
import math
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from .fourier import TrigPoly, sector_direction, sup_norm
from .linalg import expm, log_det_tracked
from .opuc import VerblunskySeq
from .utils import DomainError, RangeError, TruncationError, UnsupportedOrderError

logger = logging.getLogger(__name__)

MAX_CUMULANT_ORDER = 6


def _theta_block(alpha):
    # type: (complex) -> np.ndarray
    rho = math.sqrt(max(0.0, 1 - abs(alpha) ** 2))
    return np.array([[np.conj(alpha), rho], [rho, -alpha]], dtype=complex)


def _factor(alphas, first, even_blocks, size):
    """One of the two block-diagonal CMV factors on sites first..first+size-1

    Site p carries the coefficient alphas[p]; a block sits at (p, p+1) when the
    absolute index first+p has the requested parity. Sites without a block
    keep a 1 on the diagonal.
    """
    out = np.eye(size, dtype=complex)
    for p in range(size):
        if ((first + p) % 2 == 0) != even_blocks:
            continue
        if p + 1 < size:
            out[p:p + 2, p:p + 2] = _theta_block(alphas[p])
        else:
            out[p, p] = np.conj(alphas[p])
    return out


class CmvMatrix(object):
    """Top-left T x T truncation of the CMV matrix of a Verblunsky sequence"""
    __slots__ = ('_entries', '_alphas')

    def __init__(self, entries, alphas):
        self._entries = entries
        self._alphas = alphas

    @property
    def size(self):
        # type: () -> int
        return self._entries.shape[0]

    @property
    def entries(self):
        # type: () -> np.ndarray
        return self._entries.copy()

    @property
    def alphas(self):
        # type: () -> VerblunskySeq
        return self._alphas

    def __array__(self, dtype=None):
        return self._entries.astype(dtype) if dtype is not None else self._entries.copy()

    def __repr__(self):
        return f'CmvMatrix(size={self.size})'


def build_cmv(v, T):
    # type: (VerblunskySeq, int) -> CmvMatrix
    if T > len(v):
        raise RangeError(f'CMV truncation of size {T} needs {T} coefficients, only {len(v)} available')
    alphas = v.alphas[:T]
    lmat = _factor(alphas, 0, True, T)
    mmat = _factor(alphas, 0, False, T)
    return CmvMatrix(lmat @ mmat, v.prefix(T))


def h_of_matrix(a, h):
    # type: (np.ndarray, TrigPoly) -> np.ndarray
    """sum_{j>=0} h_j A^j + sum_{j>0} h_{-j} (A^*)^j"""
    a = np.asarray(a, dtype=complex)
    ident = np.eye(a.shape[0], dtype=complex)
    out = h.coeff(0) * ident
    adj = a.conj().T
    pos, neg = ident, ident
    for j in range(1, h.degree + 1):
        pos = pos @ a
        neg = neg @ adj
        out = out + h.coeff(j) * pos + h.coeff(-j) * neg
    return out


def h_of_cmv(c, h):
    # type: (CmvMatrix, TrigPoly) -> np.ndarray
    """h(C_T); its top-left (T - 2 deg h) corner agrees with the untruncated operator"""
    trusted = c.size - 2 * h.degree
    if trusted <= 0:
        raise TruncationError(f'Truncation {c.size} leaves no trusted corner for degree {h.degree}')
    return h_of_matrix(c.entries, h)


def moments_from_cmv(v, k_max):
    # type: (VerblunskySeq, int) -> np.ndarray
    """c_k = mass * conj((C^k)_{00}), k = 0..k_max"""
    size = 2 * k_max + 2
    c = build_cmv(v, size).entries
    x = np.zeros(size, dtype=complex)
    x[0] = 1
    out = np.empty(k_max + 1, dtype=complex)
    for k in range(k_max + 1):
        out[k] = v.mass * np.conj(x[0])
        x = c @ x
    return out


def pad_min(h):
    # type: (TrigPoly) -> int
    """Padding keeping the n x n corner of exp(h(C_T)) exact through all squarings"""
    return 2 * h.degree * (int(math.ceil(math.log2(1 + sup_norm(h)))) + 8) + 8


def log_psi_fredholm(v, h, n, pad=None):
    # type: (VerblunskySeq, TrigPoly, int, Optional[int]) -> complex
    """log det(P_n exp(h(C)) P_n) - Tr P_n h(C) P_n"""
    need = pad_min(h)
    if pad is None:
        pad = need
    if pad < need:
        raise TruncationError(f'pad {pad} is below the minimum {need} for this symbol')
    if h.effective_degree() == 0 and h.coeff(0) == 0:
        return 0j
    size = n + pad
    hc = h_of_cmv(build_cmv(v, size), h)
    corner = expm(hc)[:n, :n]
    logdet = log_det_tracked(corner, sector_direction(h))
    return complex(logdet - np.trace(hc[:n, :n]))


def psi_fredholm(v, h, n, pad=None):
    # type: (VerblunskySeq, TrigPoly, int, Optional[int]) -> complex
    return complex(np.exp(log_psi_fredholm(v, h, n, pad)))


def compositions(m):
    # type: (int) -> Iterator[Tuple[int, ...]]
    """All ordered tuples of positive integers summing to m"""
    if m == 0:
        yield ()
        return
    for first in range(1, m + 1):
        for rest in compositions(m - first):
            yield (first,) + rest


def _check_order(m):
    if not 1 <= m <= MAX_CUMULANT_ORDER:
        raise UnsupportedOrderError(f'Cumulant order must be in 1..{MAX_CUMULANT_ORDER}, got {m}')


def _composition_sum(hmat, cut, m):
    # type: (np.ndarray, int, int) -> complex
    """(1/(m+1)) sum over compositions of (-1)^{j-1} Tr[P H^{l_1} P ... P H^{l_j} [H, P]] / prod l_i!

    P projects onto the first `cut` coordinates.
    """
    powers = [None, hmat]
    for _ in range(2, m + 1):
        powers.append(powers[-1] @ hmat)
    hp = hmat.copy()
    hp[:, cut:] = 0
    ph = hmat.copy()
    ph[cut:, :] = 0
    comm = hp - ph

    total = 0j
    for parts in compositions(m):
        y = comm
        for l in reversed(parts):
            y = powers[l] @ y
            y[cut:, :] = 0
        weight = (-1) ** (len(parts) - 1) / np.prod([math.factorial(l) for l in parts])
        total += weight * np.trace(y)
    return complex(total / (m + 1))


def cumulant_pad(h, m):
    # type: (TrigPoly, int) -> int
    return 2 * (m + 2) * h.degree + 2


def cumulant_E(v, h, n, m, pad=None):
    # type: (VerblunskySeq, TrigPoly, int, int, Optional[int]) -> complex
    """Coefficient of t^{m+1} in log Psi_n(t h)"""
    _check_order(m)
    need = cumulant_pad(h, m)
    if pad is None:
        pad = need
    if pad < need:
        raise TruncationError(f'pad {pad} is below {need} for order {m}')
    hc = h_of_cmv(build_cmv(v, n + pad), h)
    return _composition_sum(hc, n, m)


class RightLimit(object):
    """beta_k, |k| <= W, extracted along a subsequence n_j"""
    __slots__ = ('betas', 'window', 'indices', 'residual', 'parity')

    def __init__(self, betas, window, indices=(), residual=None, parity=0):
        betas = np.array(betas, dtype=complex).ravel()
        if betas.size != 2 * window + 1:
            raise ValueError(f'Window {window} needs {2 * window + 1} values, got {betas.size}')
        if np.any(np.abs(betas) > 1 + 1e-12):
            raise DomainError('Right-limit coefficients must lie in the closed unit disk')
        self.betas = betas
        self.window = window
        self.indices = tuple(indices)
        self.residual = np.zeros_like(betas, dtype=float) if residual is None else np.asarray(residual)
        self.parity = parity % 2

    @classmethod
    def constant(cls, beta, window, parity=0):
        # type: (complex, int, int) -> RightLimit
        return cls(np.full(2 * window + 1, complex(beta)), window, parity=parity)

    def beta(self, k):
        # type: (int) -> complex
        return complex(self.betas[k + self.window])

    def __repr__(self):
        return f'RightLimit(window={self.window}, parity={self.parity}, max_residual={np.max(self.residual):.3g})'


def right_limit(v, subseq, window):
    # type: (VerblunskySeq, Sequence[int], int) -> RightLimit
    """beta_k = alpha_{n_J + k} at the largest n_J, with residuals over the later half of the subsequence"""
    subseq = sorted(int(n) for n in subseq)
    if not subseq:
        raise ValueError('Empty subsequence')
    for n in subseq:
        if n - window < 0 or n + window >= len(v):
            raise RangeError(f'Window {window} around {n} exceeds the {len(v)} available coefficients')
    alphas = v.alphas
    last = subseq[-1]
    ks = np.arange(-window, window + 1)
    betas = alphas[last + ks]
    tail = subseq[len(subseq) // 2:]
    residual = np.max(np.abs(np.stack([alphas[n + ks] for n in tail]) - betas), axis=0)
    logger.debug(f'right limit at n_J={last}: max residual {np.max(residual):.3g}')
    return RightLimit(betas, window, subseq, residual, parity=last)


def two_sided_cmv(beta, M):
    # type: (RightLimit, int) -> np.ndarray
    """Two-sided CMV matrix of beta restricted to the sites -M..M-1"""
    if beta.window < M + 1:
        raise RangeError(f'Truncation {M} needs a window of at least {M + 1}, got {beta.window}')
    first = -M - 1
    size = 2 * M + 2
    sites = np.array([beta.beta(first + p) for p in range(size)])
    lmat = _factor(sites, first + beta.parity, True, size)
    mmat = _factor(sites, first + beta.parity, False, size)
    return (lmat @ mmat)[1:-1, 1:-1]


def F_m_truncated(beta, h, m, M):
    # type: (RightLimit, TrigPoly, int, int) -> complex
    """Cumulant sum with P_- = projection onto the sites k < 0"""
    _check_order(m)
    if M < 2 * (m + 1) * h.degree:
        raise TruncationError(f'M = {M} is below the stabilization threshold {2 * (m + 1) * h.degree}')
    hc = h_of_matrix(two_sided_cmv(beta, M), h)
    return _composition_sum(hc, M, m)
