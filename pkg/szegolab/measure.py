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
Finite positive measures on the unit circle and their trigonometric moments.

A CircleMeasure is dmu = w(theta) dtheta/2pi + sum_a q_a delta_{theta_a}. The
absolutely continuous part lives either on the whole circle or on the closed arc
[phi, 2pi - phi]; arc densities are integrated through the substitution
theta = pi + (pi - phi) sin(u), which turns square-root endpoint behaviour into
a smooth periodic integrand.
"""
import csv
import logging
import math
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from .fourier import TrigPoly
from .utils import DomainError, ResolutionError, quad_points, maybe_path

logger = logging.getLogger(__name__)

TDensity = Callable[[np.ndarray], np.ndarray]
TAtom = Tuple[float, float]

_MOMENT_CHUNK = 64
_FH_MAX_EXPONENT = 4.0
_FH_MAX_JUMP = 1.0


def _unit_density(theta):
    return np.ones_like(theta, dtype=float)


class CircleMeasure(object):
    """Density against dtheta/2pi plus finitely many atoms"""
    __slots__ = ('_density', '_phi', '_atoms', '_quad_points', '_name')

    def __init__(self,
                 density=None,      # type: Optional[TDensity]
                 atoms=(),          # type: Iterable[TAtom]
                 phi=0.0,           # type: float
                 quad_points=None,  # type: Optional[int]
                 name='custom',     # type: str
                 ):
        if not 0.0 <= phi < math.pi:
            raise DomainError(f'Arc gap phi must lie in [0, pi), got {phi}')
        atoms = tuple((float(th) % (2 * math.pi), float(q)) for th, q in atoms)
        for th, q in atoms:
            if not q > 0:
                raise DomainError(f'Atom at {th} has non-positive weight {q}')
        self._density = density
        self._phi = float(phi)
        self._atoms = atoms
        self._quad_points = quad_points
        self._name = name

    @property
    def name(self):
        # type: () -> str
        return self._name

    @property
    def phi(self):
        # type: () -> float
        return self._phi

    @property
    def atoms(self):
        # type: () -> Tuple[TAtom, ...]
        return self._atoms

    @property
    def quad_points(self):
        # type: () -> int
        if self._quad_points is None:
            return quad_points()
        return self._quad_points

    @property
    def has_density(self):
        # type: () -> bool
        return self._density is not None

    def density(self, theta):
        """w(theta), zero off the support arc"""
        theta = np.mod(np.asarray(theta, dtype=float), 2 * math.pi)
        if self._density is None:
            return np.zeros_like(theta)
        if self._phi == 0.0:
            return self._density(theta)
        inside = (theta > self._phi) & (theta < 2 * math.pi - self._phi)
        out = np.zeros_like(theta)
        out[inside] = self._density(theta[inside])
        return out

    def _replace(self, **kwargs):
        fields = dict(density=self._density, atoms=self._atoms, phi=self._phi,
                      quad_points=self._quad_points, name=self._name)
        fields.update(kwargs)
        return CircleMeasure(**fields)

    def with_atom(self, theta, q):
        # type: (float, float) -> CircleMeasure
        return self._replace(atoms=self._atoms + ((theta, q),), name=f'{self._name}+atom:{theta:g},{q:g}')

    def with_quad_points(self, M):
        # type: (int) -> CircleMeasure
        return self._replace(quad_points=M)

    def __repr__(self):
        return f'CircleMeasure({self._name}, phi={self._phi:.6g}, atoms={list(self._atoms)!r})'


def quadrature(mu, M=None):
    # type: (CircleMeasure, Optional[int]) -> Tuple[np.ndarray, np.ndarray]
    """Angles and weights with sum_m weights[m] f(theta[m]) ~ integral of f dmu

    Atoms are appended as exact nodes.
    """
    if M is None:
        M = mu.quad_points
    thetas = []  # type: List[np.ndarray]
    weights = []  # type: List[np.ndarray]
    if mu.has_density:
        u = 2 * math.pi * (np.arange(M) + 0.5) / M
        if mu.phi == 0.0:
            thetas.append(u)
            weights.append(mu.density(u) / M)
        else:
            half = math.pi - mu.phi
            u = u - math.pi
            theta = math.pi + half * np.sin(u)
            thetas.append(theta)
            weights.append(half / (2 * M) * np.abs(np.cos(u)) * mu.density(theta))
    if mu.atoms:
        thetas.append(np.array([th for th, _ in mu.atoms]))
        weights.append(np.array([q for _, q in mu.atoms]))
    if not thetas:
        raise DomainError('Measure has neither density nor atoms')
    return np.concatenate(thetas), np.concatenate(weights)


def total_mass(mu):
    # type: (CircleMeasure) -> float
    _, w = quadrature(mu)
    return float(np.sum(w))


def moments(mu, k_max):
    # type: (CircleMeasure, int) -> np.ndarray
    """c_k = integral of z^{-k} dmu for k = 0..k_max"""
    if k_max < 0:
        raise ValueError(f'k_max must be non-negative, got {k_max}')
    M = mu.quad_points
    if mu.has_density and M < 8 * k_max:
        raise ResolutionError(f'{M} quadrature points are too few for moments up to {k_max}; need {8 * k_max}')
    theta, w = quadrature(mu, M)
    out = np.empty(k_max + 1, dtype=complex)
    for start in range(0, k_max + 1, _MOMENT_CHUNK):
        ks = np.arange(start, min(start + _MOMENT_CHUNK, k_max + 1))
        out[ks] = np.exp(-1j * np.outer(ks, theta)) @ w
    logger.debug(f'moments of {mu.name}: k_max={k_max}, {theta.size} nodes')
    return out


def moment_matrix(c, n):
    # type: (Sequence[complex], int) -> np.ndarray
    """Hermitian Toeplitz matrix [c_{j-k}]_{j,k<n}"""
    c = np.asarray(c, dtype=complex)
    return scipy.linalg.toeplitz(c[:n], np.conj(c[:n]))


def export_moments_csv(c, path):
    # type: (Sequence[complex], str) -> None
    path = maybe_path(path)
    with path.open('w', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(['k', 're', 'im'])
        for k, v in enumerate(c):
            writer.writerow([k, repr(float(np.real(v))), repr(float(np.imag(v)))])


def lebesgue(quad_points=None):
    # type: (Optional[int]) -> CircleMeasure
    return CircleMeasure(_unit_density, quad_points=quad_points, name='lebesgue')


class GeronimusParams(object):
    """Derived constants of the constant-coefficient measure"""
    __slots__ = ('alpha', 'rho', 'phi', 'beta', 'q')

    def __init__(self, alpha):
        alpha = complex(alpha)
        if not abs(alpha) < 1:
            raise DomainError(f'Verblunsky parameter must satisfy |alpha| < 1, got {alpha}')
        self.alpha = alpha
        self.rho = math.sqrt(1 - abs(alpha) ** 2)
        self.phi = 2 * math.asin(abs(alpha))
        # 1 + conj(alpha) = |1 + conj(alpha)| exp(i beta / 2)
        self.beta = 2 * math.atan2(-alpha.imag, 1 + alpha.real)
        shifted = abs(alpha + 0.5)
        if shifted <= 0.5:
            self.q = 0.0
        else:
            self.q = 2 / abs(1 + alpha) ** 2 * (shifted ** 2 - 0.25)

    def __repr__(self):
        content = ', '.join([f'{f}={getattr(self, f)!r}' for f in GeronimusParams.__slots__])
        return f'GeronimusParams({content})'


def geronimus(alpha, quad_points=None):
    # type: (complex, Optional[int]) -> CircleMeasure
    """Measure whose Verblunsky coefficients are all equal to alpha"""
    gp = GeronimusParams(alpha)
    name = f'geronimus:{gp.alpha.real:g},{gp.alpha.imag:g}'
    if gp.alpha == 0:
        return CircleMeasure(_unit_density, quad_points=quad_points, name=name)

    scale = 1 / abs(1 + gp.alpha)
    edge = math.cos(gp.phi / 2) ** 2
    beta = gp.beta

    def density(theta):
        num = np.sqrt(np.maximum(edge - np.cos(theta / 2) ** 2, 0.0))
        diff = theta - beta
        den = np.sin(diff / 2)
        near = np.abs(diff) < 1e-9
        den = np.where(near, 1.0, den)
        # one-sided limit at the removable point
        return np.where(near, 0.0, scale * num / den)

    atoms = ()
    if gp.q > 0:
        atoms = ((beta, gp.q),)
    return CircleMeasure(density, atoms=atoms, phi=gp.phi, quad_points=quad_points, name=name)


def exp_perturb(mu, h):
    # type: (CircleMeasure, TrigPoly) -> CircleMeasure
    """exp(h) dmu for real-valued h"""
    if not h.is_real_symbol():
        raise DomainError('exp_perturb needs a real-valued symbol; complex perturbations go through log_det_ratio')
    if h.effective_degree() == 0 and h.coeff(0) == 0:
        return mu
    base = mu.density

    def density(theta):
        return np.exp(h.at_angles(theta).real) * base(theta)

    atoms = tuple((th, q * math.exp(h.at_angles(th).real)) for th, q in mu.atoms)
    return CircleMeasure(density if mu.has_density else None, atoms=atoms, phi=mu.phi,
                         quad_points=mu._quad_points, name=f'perturbed:{mu.name}')


def fisher_hartwig(params, quad_points=None):
    # type: (Sequence[Tuple[float, float, float]], Optional[int]) -> CircleMeasure
    """Density prod_j |z - z_j|^{2 a_j} times exponential jump factors

    Each entry is (theta_j, a_j, b_j) with 0 <= theta_j < 2pi, 0 <= a_j <= 4 and
    |b_j| <= 1. The jump parameter enters as the purely imaginary exponent i*b_j,
    so the factor z^{i b} g z_j^{-i b} is exp(-b (theta - theta_j + pi)) before
    theta_j and exp(-b (theta - theta_j - pi)) from theta_j on, which keeps the
    weight positive.
    """
    params = [tuple(float(x) for x in p) for p in params]
    if not params:
        return lebesgue(quad_points)
    for theta_j, a_j, b_j in params:
        if not 0 <= theta_j < 2 * math.pi:
            raise DomainError(f'Singularity angle {theta_j} outside [0, 2pi)')
        if not 0 <= a_j <= _FH_MAX_EXPONENT:
            raise DomainError(f'Root exponent {a_j} outside [0, {_FH_MAX_EXPONENT}]')
        if not abs(b_j) <= _FH_MAX_JUMP:
            raise DomainError(f'Jump parameter {b_j} outside [-{_FH_MAX_JUMP}, {_FH_MAX_JUMP}]')

    def density(theta):
        out = np.ones_like(theta)
        for theta_j, a_j, b_j in params:
            if a_j != 0:
                out = out * (2 * np.abs(np.sin((theta - theta_j) / 2))) ** (2 * a_j)
            if b_j != 0:
                offset = np.where(theta < theta_j, math.pi, -math.pi)
                out = out * np.exp(-b_j * (theta - theta_j + offset))
        return out

    spec = ';'.join(f'{t:g},{a:g},{b:g}' for t, a, b in params)
    return CircleMeasure(density, quad_points=quad_points, name=f'fh:{spec}')
