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
Comparison of two coefficient sequences with the same right limits.

Psi_n(h) of the two sequences must approach each other; the table reports the reference
sequence in the prediction columns and |Delta Psi_n| as the error.
"""
import logging
from timeit import default_timer
from typing import Sequence

from ..cmv import psi_fredholm
from ..driver.catalog import parse_h, parse_sequence
from ..driver.config import ExperimentConfig, presets
from ..driver.report import AsymptoticsReport
from ..utils import UsageError
from . import ERROR_FLOOR, Checks, finish, maybe_forced_preset, sweep

logger = logging.getLogger(__name__)


def run(cfg):
    # type: (ExperimentConfig) -> AsymptoticsReport
    started = default_timer()
    if cfg.seq is None or cfg.seq_ref is None:
        raise UsageError('compare needs --seq and --seq_ref')
    h = parse_h(cfg.h)
    cfg.validate(h)
    pad = cfg.resolved_pad(h)
    N = cfg.n_max + pad
    v = parse_sequence(cfg.seq, N)
    v_ref = parse_sequence(cfg.seq_ref, N)

    def one(n):
        psi = psi_fredholm(v, h, n, pad)
        psi_ref = psi_fredholm(v_ref, h, n, pad)
        logger.info(f'n={n}: |Delta Psi|={abs(psi - psi_ref):.3e}')
        return psi, psi_ref

    report = AsymptoticsReport('compare', {
        'seq': cfg.seq,
        'seq_ref': cfg.seq_ref,
        'h': cfg.h,
        'pad': pad,
    })
    for n, (psi, psi_ref) in zip(cfg.n_list, sweep(one, cfg.n_list, cfg.workers)):
        report.add_row(n, psi, psi_ref)

    checks = Checks('compare')
    errors = report.errors
    factor = cfg.tol('decay_factor')
    if factor is not None and errors[0] > ERROR_FLOOR:
        checks.at_most(errors[-1], factor * errors[0], f'difference at n={cfg.n_max} vs n={cfg.n_list[0]}')
    checks.decreasing(errors, 'difference decreasing over the tail')
    return finish(report, cfg, checks, started)


def main(argv):
    # type: (Sequence[str]) -> AsymptoticsReport
    return run(maybe_forced_preset(presets.Compare))
