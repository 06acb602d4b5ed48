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
"""Dense linear algebra used by the Fredholm route: matrix exponential and log-determinants."""
import logging
import math
from typing import Optional

import numpy as np
import scipy.linalg

from .utils import SingularSymbolError

logger = logging.getLogger(__name__)

PIVOT_FLOOR = 1e-13

# Pade 13 numerator coefficients
_B13 = (
    64764752532480000,
    32382376266240000,
    7771770303897600,
    1187353796428800,
    129060195264000,
    10559470521600,
    670442572800,
    33522128640,
    1323241920,
    40840800,
    960960,
    16380,
    182,
    1,
)
_THETA13 = 5.4


def expm(a):
    # type: (np.ndarray) -> np.ndarray
    """Matrix exponential by scaling and squaring of the [13/13] Pade approximant.

    The order is fixed at 13 for every norm, so the result depends only on the
    scaling exponent s = max(0, ceil(log2(|a|_1 / 5.4))).
    """
    a = np.array(a, dtype=complex)
    dim = a.shape[0]
    norm = np.linalg.norm(a, ord=1)
    s = 0
    if norm > _THETA13:
        s = max(0, int(math.ceil(math.log2(norm / _THETA13))))
        a = a / 2 ** s
    logger.debug(f'expm: dim={dim} norm={norm:.3g} squarings={s}')

    b = _B13
    ident = np.eye(dim, dtype=complex)
    a2 = a @ a
    a4 = a2 @ a2
    a6 = a2 @ a4
    u = a @ (a6 @ (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident)
    v = a6 @ (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident
    r = np.linalg.solve(v - u, v + u)
    for _ in range(s):
        r = r @ r
    return r


def _check_pivot(value, index):
    if abs(value) < PIVOT_FLOOR:
        raise SingularSymbolError(f'Pivot {index} has modulus {abs(value):.3e} < {PIVOT_FLOOR:g}')


def log_det_tracked(a, tau=None):
    # type: (np.ndarray, Optional[complex]) -> complex
    """log det(a) from the diagonal of an LU factorization.

    With tau given, tau*a is assumed to have its numerical range in the open right
    half-plane; elimination then runs without pivoting, every pivot of tau*a stays
    in that half-plane and the principal logs add up to a continuous argument.
    Without tau, partial pivoting is used and the imaginary part is only defined
    modulo 2 pi.
    """
    a = np.array(a, dtype=complex)
    n = a.shape[0]
    if n == 0:
        return 0j

    if tau is None:
        lu, piv = scipy.linalg.lu_factor(a, check_finite=False)
        diag = np.diag(lu)
        for j, p in enumerate(diag):
            _check_pivot(p, j)
        swaps = int(np.count_nonzero(piv != np.arange(n)))
        return complex(np.sum(np.log(diag)) + 1j * math.pi * (swaps % 2))

    work = tau * a
    total = 0j
    for j in range(n):
        p = work[j, j]
        _check_pivot(p, j)
        total += np.log(p)
        if j + 1 < n:
            work[j + 1:, j + 1:] -= np.outer(work[j + 1:, j], work[j, j + 1:]) / p
    return complex(total - n * np.log(tau))
