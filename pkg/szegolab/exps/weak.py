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
Weak asymptotics: |Psi_n^{1/n} - 1| for a sectorial exp(h), any measure.

The n-th root is taken from the continuous logarithm of the determinant ratio, so a
complex h is admitted as long as exp(h) takes values in an open half-plane.
"""
import cmath
import logging
from timeit import default_timer
from typing import Sequence

from ..cmv import log_psi_fredholm
from ..driver.catalog import parse_h, parse_measure
from ..driver.config import ExperimentConfig, presets
from ..driver.report import AsymptoticsReport
from ..fourier import sector_direction
from ..opuc import log_psi_moment, szego_from_measure
from ..utils import DomainError
from . import Checks, finish, maybe_forced_preset, sweep

logger = logging.getLogger(__name__)


def run(cfg):
    # type: (ExperimentConfig) -> AsymptoticsReport
    started = default_timer()
    h = parse_h(cfg.h)
    cfg.validate(h)
    tau = sector_direction(h)
    if tau is None:
        raise DomainError(f'exp(h) is not sectorial for h = {cfg.h}')
    mu = parse_measure(cfg.measure)
    pad = cfg.resolved_pad(h)
    v = szego_from_measure(mu, cfg.n_max + pad)

    def one(n):
        root = cmath.exp(log_psi_moment(mu, h, n) / n)
        fredholm = cmath.exp(log_psi_fredholm(v, h, n, pad) / n)
        logger.info(f'n={n}: |Psi^(1/n) - 1|={abs(root - 1):.3e}')
        return root, abs(root - fredholm)

    report = AsymptoticsReport('weak', {
        'measure': mu.name,
        'h': cfg.h,
        'sector_direction': tau,
        'pad': pad,
    })
    for n, (root, disagreement) in zip(cfg.n_list, sweep(one, cfg.n_list, cfg.workers)):
        report.add_row(n, root, 1.0, disagreement)

    checks = Checks('weak')
    checks.at_most(report.rows[-1].abs_error, cfg.tol('final'), f'final error at n={cfg.n_max}')
    checks.decreasing(report.errors, 'error decreasing over the tail')
    checks.at_most(max(row.route_disagreement for row in report.rows), cfg.tol('route'), 'route disagreement')
    return finish(report, cfg, checks, started)


def main(argv):
    # type: (Sequence[str]) -> AsymptoticsReport
    return run(maybe_forced_preset(presets.Weak))
