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
Right limits and the limiting cumulants F_m.

A right limit beta is read off the sequence along a subsequence n_j; F_m(beta) is computed on
the two-sided CMV truncation at M and 2M, and compared with E_m^{(n)} of the original sequence
at the last n. Rows are indexed by m (param column): psi is E_m^{(n)}, predicted is F_m at 2M and
route_disagreement is |F_m(M) - F_m(2M)|.
"""
import logging
from timeit import default_timer
from typing import Sequence

import numpy as np

from ..cmv import F_m_truncated, cumulant_E, cumulant_pad, right_limit
from ..driver.catalog import parse_h, parse_sequence
from ..driver.config import ExperimentConfig, presets
from ..driver.report import AsymptoticsReport
from ..utils import UsageError
from . import Checks, finish, maybe_forced_preset, sweep

logger = logging.getLogger(__name__)

EXACT_RESIDUAL = 1e-15


def default_subsequence(n):
    # type: (int) -> list
    """n/2, 3n/4, n, shifted to the parity of n"""
    out = []
    for k in (n // 2, 3 * n // 4, n):
        k -= (k - n) % 2
        if k not in out:
            out.append(k)
    return out


def run(cfg):
    # type: (ExperimentConfig) -> AsymptoticsReport
    started = default_timer()
    if cfg.seq is None:
        raise UsageError('right_limit needs --seq')
    h = parse_h(cfg.h)
    cfg.validate()
    n = cfg.n_max
    M = cfg.truncation if cfg.truncation is not None else 2 * (cfg.m_max + 2) * h.degree + 4
    W = cfg.window if cfg.window is not None else 2 * M + 1
    if W < 2 * M + 1:
        raise UsageError(f'window {W} cannot hold the doubled truncation {2 * M}')
    subseq = sorted(cfg.subseq) if cfg.subseq else default_subsequence(n)
    if subseq[-1] != n:
        raise UsageError(f'The subsequence must end at n = {n}, got {subseq}')
    pad = cumulant_pad(h, cfg.m_max) if cfg.pad is None else cfg.pad
    v = parse_sequence(cfg.seq, max(n + W + 1, n + pad))

    beta = right_limit(v, subseq, W)
    residual = float(np.max(beta.residual))
    logger.info(f'{beta} along {subseq}, truncation M={M}')

    def one(m):
        coarse = F_m_truncated(beta, h, m, M)
        fine = F_m_truncated(beta, h, m, 2 * M)
        finite = cumulant_E(v, h, n, m, pad)
        logger.info(f'm={m}: F_m={fine:.12g} E_m^({n})={finite:.12g}')
        return finite, fine, abs(coarse - fine)

    report = AsymptoticsReport('right_limit', {
        'seq': cfg.seq,
        'h': cfg.h,
        'subseq': subseq,
        'window': W,
        'truncation': M,
        'parity': beta.parity,
        'max_residual': residual,
        'pad': pad,
    })
    orders = list(range(1, cfg.m_max + 1))
    for m, (finite, fine, stable) in zip(orders, sweep(one, orders, cfg.workers)):
        report.add_row(n, finite, fine, stable, param=m)

    checks = Checks('right_limit')
    checks.at_most(max(row.route_disagreement for row in report.rows), cfg.tol('stable'),
                   f'F_m stable under M={M} -> {2 * M}')
    if residual <= EXACT_RESIDUAL:
        checks.at_most(max(report.errors), cfg.tol('limit'), f'E_m^({n}) vs F_m')
    else:
        logger.info(f'Right limit is approximate (residual {residual:.3e}); E_m vs F_m not asserted')
    return finish(report, cfg, checks, started)


def main(argv):
    # type: (Sequence[str]) -> AsymptoticsReport
    return run(maybe_forced_preset(presets.RightLimit))
