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
Orthogonal polynomials on the unit circle.

Convention: Phi_{n+1}(z) = z Phi_n(z) - conj(alpha_n) Phi*_n(z), so that
Phi_{n+1}(0) = -conj(alpha_n) and |Phi_{n+1}|^2 = (1 - |alpha_n|^2) |Phi_n|^2.
"""
import csv
import logging
import math
from typing import Callable, Optional, Sequence, Tuple, Union

import numpy as np

from .fourier import TrigPoly, sector_direction
from .linalg import log_det_tracked
from .measure import CircleMeasure, exp_perturb, quadrature
from .utils import DomainError, OrthogonalityLossError, PositivityError, RangeError, maybe_path

logger = logging.getLogger(__name__)

POSITIVITY_MARGIN = 1e-12
ORTHOGONALITY_TOL = 1e-8
REORTHOGONALIZATION_PASSES = 2


class VerblunskySeq(object):
    """alpha_0..alpha_{N-1} together with the total mass of the measure"""
    __slots__ = ('_alphas', '_mass')

    def __init__(self, alphas, mass=1.0):
        # type: (Sequence[complex], float) -> None
        alphas = np.array(alphas, dtype=complex).ravel()
        bad = np.nonzero(np.abs(alphas) >= 1)[0]
        if bad.size:
            raise DomainError(f'Verblunsky coefficient {int(bad[0])} = {alphas[bad[0]]} is not in the open unit disk')
        if not mass > 0:
            raise DomainError(f'Total mass must be positive, got {mass}')
        self._alphas = alphas
        self._mass = float(mass)

    @classmethod
    def constant(cls, alpha, N, mass=1.0):
        # type: (complex, int, float) -> VerblunskySeq
        return cls(np.full(N, complex(alpha)), mass)

    @classmethod
    def from_function(cls, fn, N, mass=1.0):
        # type: (Callable[[int], complex], int, float) -> VerblunskySeq
        return cls([fn(j) for j in range(N)], mass)

    @classmethod
    def from_csv(cls, path, mass=1.0):
        # type: (str, float) -> VerblunskySeq
        """Read rows (j, re, im); the header row is optional"""
        path = maybe_path(path)
        values = {}
        with path.open(newline='') as f:
            for row in csv.reader(f):
                if not row or row[0].strip().lower() == 'j':
                    continue
                values[int(row[0])] = complex(float(row[1]), float(row[2]))
        if sorted(values) != list(range(len(values))):
            raise DomainError(f'{path} does not list Verblunsky coefficients 0..{len(values) - 1} exactly once')
        return cls([values[j] for j in range(len(values))], mass)

    def to_csv(self, path):
        # type: (str) -> None
        path = maybe_path(path)
        with path.open('w', newline='') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(['j', 're', 'im'])
            for j, a in enumerate(self._alphas):
                writer.writerow([j, repr(float(a.real)), repr(float(a.imag))])

    @property
    def alphas(self):
        # type: () -> np.ndarray
        return self._alphas.copy()

    @property
    def rhos(self):
        # type: () -> np.ndarray
        return np.sqrt(1 - np.abs(self._alphas) ** 2)

    @property
    def mass(self):
        # type: () -> float
        return self._mass

    def prefix(self, n):
        # type: (int) -> VerblunskySeq
        if n > len(self):
            raise RangeError(f'Requested {n} coefficients, only {len(self)} available')
        return VerblunskySeq(self._alphas[:n], self._mass)

    def __len__(self):
        return self._alphas.size

    def __getitem__(self, j):
        return self._alphas[j]

    def __repr__(self):
        return f'VerblunskySeq(N={len(self)}, mass={self._mass:g})'


class OpucState(object):
    """Coefficients (lowest degree first) of Phi_n and Phi*_n, and |Phi_j|^2 for j <= n"""
    __slots__ = ('phi', 'phi_star', 'norms_sq')

    def __init__(self, phi, phi_star, norms_sq):
        self.phi = phi
        self.phi_star = phi_star
        self.norms_sq = norms_sq

    @property
    def degree(self):
        # type: () -> int
        return self.phi.size - 1

    def evaluate(self, z):
        return np.polynomial.polynomial.polyval(np.asarray(z, dtype=complex), self.phi)


def _reverse_conj(p):
    return np.conj(p[::-1])


def _check_alpha(alpha, index):
    if abs(alpha) >= 1 - POSITIVITY_MARGIN:
        raise PositivityError(index, alpha)


def monic_state(v, n):
    # type: (VerblunskySeq, int) -> OpucState
    """Forward recursion Phi_0 -> Phi_n from the coefficients"""
    if n > len(v):
        raise RangeError(f'Phi_{n} needs {n} coefficients, only {len(v)} available')
    phi = np.ones(1, dtype=complex)
    norms = [v.mass]
    for j in range(n):
        a = v[j]
        zphi = np.concatenate(([0], phi))
        star = np.concatenate((_reverse_conj(phi), [0]))
        phi = zphi - np.conj(a) * star
        norms.append(norms[-1] * (1 - abs(a) ** 2))
    return OpucState(phi, _reverse_conj(phi), np.array(norms))


def szego_from_moments(c):
    # type: (Sequence[complex]) -> VerblunskySeq
    """Levinson recursion on c_0..c_N giving alpha_0..alpha_{N-1}

    conj(alpha_n) |Phi_n|^2 = <z Phi_n, 1> = sum_j p_j conj(c_{j+1}).
    """
    c = np.asarray(c, dtype=complex)
    N = c.size - 1
    c0 = c[0].real
    if not c0 > 0:
        raise DomainError(f'c_0 must be positive, got {c[0]}')
    phi = np.ones(1, dtype=complex)
    norm = c0
    alphas = np.empty(N, dtype=complex)
    for n in range(N):
        abar = np.dot(phi, np.conj(c[1:n + 2])) / norm
        alpha = np.conj(abar)
        _check_alpha(alpha, n)
        alphas[n] = alpha
        zphi = np.concatenate(([0], phi))
        star = np.concatenate((_reverse_conj(phi), [0]))
        phi = zphi - abar * star
        norm *= 1 - abs(alpha) ** 2
    return VerblunskySeq(alphas, c0)


def _node_recursion(mu, N, keep_values=False):
    # type: (CircleMeasure, int, bool) -> Tuple[np.ndarray, float, np.ndarray, np.ndarray, Optional[np.ndarray]]
    """Orthonormal recursion on quadrature nodes.

    Returns (alphas, mass, theta, weights, values) where values[j] holds
    phi_j at the nodes for j < N when keep_values is set.

    phi_{n+1} is z phi_n with its projection onto phi_0..phi_n removed
    (REORTHOGONALIZATION_PASSES sweeps of Gram-Schmidt) and alpha_n is read off
    <z phi_n, phi*_n> with phi*_n = z^n conj(phi_n) on the circle. The norm of
    the projected remainder must equal rho_n; a mismatch above ORTHOGONALITY_TOL
    raises OrthogonalityLossError.
    """
    theta, w = quadrature(mu)
    z = np.exp(1j * theta)
    mass = float(np.sum(w))
    if not mass > 0:
        raise DomainError(f'Measure {mu.name} has zero mass')
    basis = np.empty((N + 1, z.size), dtype=complex)
    basis[0] = 1 / math.sqrt(mass)
    alphas = np.empty(N, dtype=complex)
    worst = 0.0
    for n in range(N):
        zphi = z * basis[n]
        phis = np.exp(1j * n * theta) * np.conj(basis[n])
        abar = np.sum(w * zphi * np.conj(phis))
        alpha = np.conj(abar)
        _check_alpha(alpha, n)
        alphas[n] = alpha
        rho = math.sqrt(1 - abs(alpha) ** 2)

        rest = zphi
        for _ in range(REORTHOGONALIZATION_PASSES):
            rest = rest - (np.conj(basis[:n + 1]) @ (w * rest)) @ basis[:n + 1]
        norm = math.sqrt(float(np.sum(w * np.abs(rest) ** 2)))
        defect = abs(norm - rho)
        worst = max(worst, defect)
        if not defect <= ORTHOGONALITY_TOL:
            raise OrthogonalityLossError(n, defect)
        basis[n + 1] = rest / norm
    logger.debug(f'node recursion for {mu.name}: N={N}, {z.size} nodes, worst defect {worst:.2e}')
    return alphas, mass, theta, w, (basis[:N] if keep_values else None)


def szego_from_measure(mu, N):
    # type: (CircleMeasure, int) -> VerblunskySeq
    """Verblunsky coefficients of mu by running the recursion on quadrature nodes"""
    alphas, mass, _, _, _ = _node_recursion(mu, N)
    return VerblunskySeq(alphas, mass)


def orthonormal_values(mu, n):
    # type: (CircleMeasure, int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]
    """(theta, weights, values) with values[j] = phi_j(e^{i theta}), j < n"""
    _, _, theta, w, values = _node_recursion(mu, n, keep_values=True)
    return theta, w, values


def log_toeplitz_det(v, n):
    # type: (VerblunskySeq, int) -> float
    """log D_n = sum_{j<n} log |Phi_j|^2"""
    if n > len(v):
        raise RangeError(f'log D_{n} needs {n} coefficients, only {len(v)} available')
    if n <= 0:
        return 0.0
    logs = np.log1p(-np.abs(v.alphas[:n - 1]) ** 2)
    multiplicity = np.arange(n - 1, 0, -1)
    return float(n * math.log(v.mass) + np.dot(multiplicity, logs))


def _is_zero(h):
    return h.effective_degree() == 0 and h.coeff(0) == 0


def log_det_ratio(mu, h, n):
    # type: (CircleMeasure, TrigPoly, int) -> complex
    """log D_n(e^h dmu) / D_n(dmu)

    Real h compares the log-determinants of the two measures. Complex h uses the
    Gram matrix G = A T_n(e^h dmu) A^* of e^h in the orthonormal basis of mu,
    where A is the inverse Cholesky factor of T_n(dmu) (A T_n(dmu) A^* = I).
    So det G = D_n(e^h dmu) / D_n(dmu), and the elimination on G is the LU of
    the perturbed moment matrix T_n(e^h dmu) taken in a basis that keeps it
    well conditioned.
    """
    if _is_zero(h):
        return 0j
    if h.is_real_symbol():
        perturbed = szego_from_measure(exp_perturb(mu, h), n)
        base = szego_from_measure(mu, n)
        return complex(log_toeplitz_det(perturbed, n) - log_toeplitz_det(base, n))

    theta, w, values = orthonormal_values(mu, n)
    gram = (np.conj(values) * (w * np.exp(h.at_angles(theta)))) @ values.T
    tau = sector_direction(h)
    if tau is None:
        logger.debug('symbol is not sectorial; log-determinant argument defined modulo 2 pi')
    return log_det_tracked(gram, tau)


def kernel_diag_quadrature(mu, h, n):
    # type: (CircleMeasure, TrigPoly, int) -> complex
    """integral of h(z) K_n(z, z) dmu by quadrature on the orthonormal polynomials"""
    theta, w, values = orthonormal_values(mu, n)
    kernel = np.sum(np.abs(values) ** 2, axis=0)
    return complex(np.sum(w * kernel * h.at_angles(theta)))


def kernel_diag_trace(source, h, n):
    # type: (Union[VerblunskySeq, CircleMeasure], TrigPoly, int) -> complex
    """Tr P_n h(C) P_n = integral of h K_n dmu, read off the CMV matrix"""
    from . import cmv

    if n < 1:
        raise ValueError(f'n must be positive, got {n}')
    size = n + 2 * h.degree + 2
    size += size % 2
    if isinstance(source, CircleMeasure):
        source = szego_from_measure(source, size)
    if size > len(source):
        raise RangeError(f'Trace over {n} rows needs {size} coefficients, only {len(source)} available')
    hc = cmv.h_of_cmv(cmv.build_cmv(source, size), h)
    return complex(np.trace(hc[:n, :n]))


def log_psi_moment(mu, h, n):
    # type: (CircleMeasure, TrigPoly, int) -> complex
    return log_det_ratio(mu, h, n) - kernel_diag_quadrature(mu, h, n)


def psi_moment(mu, h, n):
    # type: (CircleMeasure, TrigPoly, int) -> complex
    """Psi_n through the orthogonal-polynomial route"""
    return complex(np.exp(log_psi_moment(mu, h, n)))
