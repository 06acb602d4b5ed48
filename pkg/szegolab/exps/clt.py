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
Characteristic function of the linear statistic sum_j f(z_j) of the CMV ensemble.

Psi_n(i t f) is evaluated exactly through determinants and compared with exp(-t^2 Q_alpha(f)).
"""
import cmath
import itertools
import logging
from timeit import default_timer
from typing import Sequence

from ..arc import ArcGeometry, q_alpha
from ..cmv import psi_fredholm
from ..driver.catalog import parse_h, parse_measure
from ..driver.config import ExperimentConfig, presets
from ..driver.report import AsymptoticsReport
from ..measure import geronimus
from ..opuc import VerblunskySeq, psi_moment
from ..utils import DomainError, UsageError, parse_complex
from . import Checks, finish, maybe_forced_preset, sweep

logger = logging.getLogger(__name__)


def run(cfg):
    # type: (ExperimentConfig) -> AsymptoticsReport
    started = default_timer()
    if cfg.alpha is None:
        raise UsageError('clt needs --alpha')
    if not cfg.t_list:
        raise UsageError('clt needs a list of t values')
    geom = ArcGeometry(parse_complex(cfg.alpha))
    f = parse_h(cfg.h)
    if not f.is_real_symbol():
        raise DomainError('The linear statistic needs a real-valued f')
    pad = max(cfg.resolved_pad(1j * t * f) for t in cfg.t_list)
    cfg.validate(1j * max(cfg.t_list, key=abs) * f)
    mu = geronimus(geom.alpha) if cfg.measure is None else parse_measure(cfg.measure)
    v = VerblunskySeq.constant(geom.alpha, cfg.n_max + pad)

    q = q_alpha(geom, f)
    logger.info(f'{geom}: Q_alpha(f) = {q:.12g}')

    def one(case):
        t, n = case
        h = 1j * t * f
        psi = psi_fredholm(v, h, n, pad)
        moment = psi_moment(mu, h, n)
        logger.info(f't={t:g} n={n}: Psi={psi:.10g}')
        return psi, abs(psi - moment)

    report = AsymptoticsReport('clt', {
        'alpha': geom.alpha,
        'measure': mu.name,
        'f': cfg.h,
        'q_alpha': q,
        'pad': pad,
    })
    cases = list(itertools.product(cfg.t_list, cfg.n_list))
    for (t, n), (psi, disagreement) in zip(cases, sweep(one, cases, cfg.workers)):
        report.add_row(n, psi, cmath.exp(-t * t * q), disagreement, param=t)

    checks = Checks('clt')
    for t in cfg.t_list:
        rows = [row for row in report.rows if row.param == t]
        checks.at_most(rows[-1].abs_error, cfg.tol('final'), f'final error at t={t:g}, n={cfg.n_max}')
        checks.decreasing([row.abs_error for row in rows], f'error decreasing over the tail at t={t:g}')
    checks.at_most(max(row.route_disagreement for row in report.rows), cfg.tol('route'), 'route disagreement')
    return finish(report, cfg, checks, started)


def main(argv):
    # type: (Sequence[str]) -> AsymptoticsReport
    return run(maybe_forced_preset(presets.Clt))
