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
Arc limit: Psi_n(h) for constant Verblunsky coefficients against exp(Q_alpha(h)).

With --seq the Fredholm route runs on that sequence instead of the constant one; any
sequence with |alpha_n| -> |alpha| and alpha_{n+1} / alpha_n -> 1 has the same limit. The
moment route then needs an explicit --measure.

Besides the two Psi_n routes, the run cross-checks the Chebyshev and sampling evaluations
of Q_alpha and the commutator trace (1/2) Tr[U, L] of the split h(C) = L + U.
"""
import cmath
import logging
import math
from timeit import default_timer
from typing import Sequence

from ..arc import MIN_COMMUTATOR_ALPHA, ArcGeometry, q_alpha, trace_commutator
from ..cmv import psi_fredholm
from ..driver.catalog import parse_h, parse_measure, parse_sequence
from ..driver.config import ExperimentConfig, presets
from ..driver.report import AsymptoticsReport
from ..measure import geronimus
from ..opuc import VerblunskySeq, psi_moment
from ..utils import UsageError, parse_complex
from . import Checks, finish, maybe_forced_preset, sweep

logger = logging.getLogger(__name__)

COMMUTATOR_SIZE = 128


def run(cfg):
    # type: (ExperimentConfig) -> AsymptoticsReport
    started = default_timer()
    if cfg.alpha is None:
        raise UsageError('arc_limit needs --alpha')
    geom = ArcGeometry(parse_complex(cfg.alpha))
    h = parse_h(cfg.h)
    cfg.validate(h)
    pad = cfg.resolved_pad(h)
    N = cfg.n_max + pad
    if cfg.seq is None:
        v = VerblunskySeq.constant(geom.alpha, N)
        mu = geronimus(geom.alpha) if cfg.measure is None else parse_measure(cfg.measure)
    else:
        v = parse_sequence(cfg.seq, N)
        mu = None if cfg.measure is None else parse_measure(cfg.measure)
    tail_modulus = abs(v[N - 1])
    tail_ratio = abs(v[N - 1] / v[N - 2] - 1) if abs(v[N - 2]) > 0 else 0.0

    q = q_alpha(geom, h)
    q_sampled = q_alpha(geom, h, method='sampling')
    predicted = cmath.exp(q)
    logger.info(f'{geom}: Q_alpha {q:.12g} (sampling {q_sampled:.12g})')

    half_trace = None
    if geom.abs_alpha >= MIN_COMMUTATOR_ALPHA:
        size = max(COMMUTATOR_SIZE, 8 * h.degree + 16)
        half_trace = trace_commutator(geom, h, size).numerical / 2

    def one(n):
        psi = psi_fredholm(v, h, n, pad)
        logger.info(f'n={n}: Psi={psi:.10g}')
        if mu is None:
            return psi, math.nan
        return psi, abs(psi - psi_moment(mu, h, n))

    report = AsymptoticsReport('arc_limit', {
        'alpha': geom.alpha,
        'seq': cfg.seq or f'const:{geom.alpha.real:g},{geom.alpha.imag:g}',
        'measure': None if mu is None else mu.name,
        'h': cfg.h,
        'tail_modulus': tail_modulus,
        'tail_ratio': tail_ratio,
        'q_alpha': q,
        'q_alpha_sampling': q_sampled,
        'half_commutator_trace': half_trace,
        'pad': pad,
    })
    for n, (psi, disagreement) in zip(cfg.n_list, sweep(one, cfg.n_list, cfg.workers)):
        report.add_row(n, psi, predicted, disagreement)

    checks = Checks('arc_limit')
    checks.at_most(report.rows[-1].abs_error, cfg.tol('final'), f'final error at n={cfg.n_max}')
    checks.decreasing(report.errors, 'error decreasing over the tail')
    if mu is not None:
        checks.at_most(max(row.route_disagreement for row in report.rows), cfg.tol('route'), 'route disagreement')
    checks.at_most(abs(tail_modulus - geom.abs_alpha), cfg.tol('modulus'), f'|alpha_{N - 1}| vs |alpha|')
    checks.at_most(abs(q - q_sampled), cfg.tol('q_routes'), 'Q_alpha chebyshev vs sampling')
    if half_trace is not None:
        checks.at_most(abs(half_trace - q), cfg.tol('commutator'), 'half commutator trace vs Q_alpha')
    return finish(report, cfg, checks, started)


def main(argv):
    # type: (Sequence[str]) -> AsymptoticsReport
    return run(maybe_forced_preset(presets.ArcLimit))
