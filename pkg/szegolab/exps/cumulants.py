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
Cumulant expansion of log Psi_n(t h) in powers of t.

For every n and t the table holds log Psi_n(t h) (psi columns) next to the partial sum
sum_{m <= m_max} t^{m+1} E_m (predicted columns). The remainder is checked either in
absolute terms or through its scaling between t and t / 2.
"""
import logging
from timeit import default_timer
from typing import Sequence

from ..cmv import cumulant_E, cumulant_pad, log_psi_fredholm, pad_min
from ..driver.catalog import parse_h, parse_sequence
from ..driver.config import ExperimentConfig, presets
from ..driver.report import AsymptoticsReport
from ..utils import UsageError
from . import Checks, finish, maybe_forced_preset, sweep

logger = logging.getLogger(__name__)


def run(cfg):
    # type: (ExperimentConfig) -> AsymptoticsReport
    started = default_timer()
    if cfg.seq is None:
        raise UsageError('cumulants needs --seq')
    if not cfg.t_list:
        raise UsageError('cumulants needs a list of t values')
    h = parse_h(cfg.h)
    cfg.validate()
    orders = list(range(1, cfg.m_max + 1))
    need = max([cumulant_pad(h, cfg.m_max)] + [pad_min(t * h) for t in cfg.t_list])
    pad = need if cfg.pad is None else cfg.pad
    if pad < need:
        raise UsageError(f'pad {pad} is below the minimum {need} for these t and orders')
    v = parse_sequence(cfg.seq, cfg.n_max + pad)

    def cumulants_at(n):
        return [cumulant_E(v, h, n, m, pad) for m in orders]

    E = dict(zip(cfg.n_list, sweep(cumulants_at, cfg.n_list, cfg.workers)))
    for n, values in E.items():
        logger.info(f'n={n}: E = ' + ', '.join(f'{e:.6g}' for e in values))

    report = AsymptoticsReport('cumulants', {
        'seq': cfg.seq,
        'h': cfg.h,
        'm_max': cfg.m_max,
        'pad': pad,
        'cumulants': {n: values for n, values in E.items()},
    })
    remainders = {}
    for n in cfg.n_list:
        for t in cfg.t_list:
            log_psi = log_psi_fredholm(v, t * h, n, pad)
            partial = sum(t ** (m + 1) * e for m, e in zip(orders, E[n]))
            report.add_row(n, log_psi, partial, param=t)
            remainders[n, t] = abs(log_psi - partial)

    checks = Checks('cumulants')
    checks.at_most(max(remainders.values()), cfg.tol('remainder'), f'remainder beyond order {cfg.m_max}')
    lo, hi = cfg.tol('ratio_min'), cfg.tol('ratio_max')
    if lo is not None and hi is not None and len(cfg.t_list) >= 2:
        t0, t1 = cfg.t_list[:2]
        for n in cfg.n_list:
            ratio = remainders[n, t0] / remainders[n, t1] if remainders[n, t1] > 0 else float('inf')
            checks.expect(lo <= ratio <= hi, f'remainder ratio at n={n}',
                          f'r({t0:g}) / r({t1:g}) = {ratio:.4g} in [{lo:g}, {hi:g}]')
    return finish(report, cfg, checks, started)


def main(argv):
    # type: (Sequence[str]) -> AsymptoticsReport
    return run(maybe_forced_preset(presets.Cumulants))
