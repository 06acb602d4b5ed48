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
Strong Szego limit: Psi_n(h) against exp(sum_k k h_k h_-k) for a measure with a.e. positive density.

The moment route (orthogonal polynomials on quadrature nodes) and the Fredholm route
(CMV matrix of the recovered Verblunsky coefficients) are both evaluated at every n.
"""
import cmath
import logging
from timeit import default_timer
from typing import Sequence

from ..cmv import psi_fredholm
from ..driver.catalog import parse_h, parse_measure
from ..driver.config import ExperimentConfig, presets
from ..driver.report import AsymptoticsReport
from ..fourier import hankel_hs_norm, szego_sum
from ..opuc import psi_moment, szego_from_measure
from . import Checks, finish, maybe_forced_preset, sweep

logger = logging.getLogger(__name__)


def run(cfg):
    # type: (ExperimentConfig) -> AsymptoticsReport
    started = default_timer()
    h = parse_h(cfg.h)
    cfg.validate(h)
    mu = parse_measure(cfg.measure)
    pad = cfg.resolved_pad(h)
    v = szego_from_measure(mu, cfg.n_max + pad)

    limit = szego_sum(h)
    predicted = cmath.exp(limit)
    logger.info(f'{mu.name}: Szego sum {limit:.10g}, limit {predicted:.10g}')

    def one(n):
        psi = psi_moment(mu, h, n)
        fredholm = psi_fredholm(v, h, n, pad)
        logger.info(f'n={n}: Psi={psi:.10g}')
        return psi, abs(psi - fredholm)

    report = AsymptoticsReport('szego', {
        'measure': mu.name,
        'h': cfg.h,
        'szego_sum': limit,
        'hankel_hs_norm': hankel_hs_norm(h),
        'pad': pad,
    })
    for n, (psi, disagreement) in zip(cfg.n_list, sweep(one, cfg.n_list, cfg.workers)):
        report.add_row(n, psi, predicted, disagreement)

    checks = Checks('szego')
    checks.at_most(report.rows[-1].abs_error, cfg.tol('final'), f'final error at n={cfg.n_max}')
    checks.decreasing(report.errors, 'error decreasing over the tail')
    checks.at_most(max(row.route_disagreement for row in report.rows), cfg.tol('route'), 'route disagreement')
    return finish(report, cfg, checks, started)


def main(argv):
    # type: (Sequence[str]) -> AsymptoticsReport
    return run(maybe_forced_preset(presets.Szego))
