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
Experiments reproducing the determinant-ratio limit theorems at desk scale.

Each module exposes run(cfg) returning an AsymptoticsReport and main(argv) for the command line.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from timeit import default_timer
from typing import Callable, Iterable, List, Optional, TypeVar

import numpy as np
from absl import flags

from ..driver.config import ExperimentConfig, flag_overrides, presets
from ..driver.report import AsymptoticsReport
from ..utils import CheckFailed, UsageError, format_secs, worker_count

T = TypeVar('T')
R = TypeVar('R')
logger = logging.getLogger(__name__)
FLAGS = flags.FLAGS

flags.DEFINE_string('force_preset', None, 'Force to use specific experiment config preset')

TAIL = 3
ERROR_FLOOR = 1e-10


def maybe_forced_preset(default):
    # type: (Callable[..., ExperimentConfig]) -> ExperimentConfig
    """Maybe return forced preset, with command line overrides applied"""
    preset_ctor = default
    if FLAGS.force_preset:
        try:
            preset_ctor = getattr(presets, FLAGS.force_preset)
        except AttributeError:
            raise UsageError(f'Unknown preset {FLAGS.force_preset!r}')
    logger.info(f'Using experiment config preset: {preset_ctor.__name__}')
    return preset_ctor().update(flag_overrides())


def sweep(fn, values, workers=None):
    # type: (Callable[[T], R], Iterable[T], Optional[int]) -> List[R]
    """Map fn over values on a thread pool, results in input order"""
    values = list(values)
    workers = min(worker_count(workers), max(len(values), 1))
    if workers == 1:
        return [fn(v) for v in values]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, values))


def tail_median_decreasing(errors, floor=ERROR_FLOOR):
    # type: (Iterable[float], float) -> bool
    """Median of the last TAIL errors below that of the first TAIL, or the tail is at the floor"""
    errors = list(errors)
    head, tail = errors[:TAIL], errors[-TAIL:]
    if max(tail) <= floor:
        return True
    return float(np.median(tail)) < float(np.median(head))


class Checks(object):
    """Assertions of one run; the first failure is raised after the report is written"""

    def __init__(self, experiment):
        self.experiment = experiment
        self.failures = []  # type: List[CheckFailed]
        self.passed = 0

    def expect(self, ok, check, detail):
        # type: (bool, str, str) -> bool
        if ok:
            self.passed += 1
            logger.info(f'{self.experiment}: {check} ok ({detail})')
        else:
            logger.error(f'{self.experiment}: {check} FAILED ({detail})')
            self.failures.append(CheckFailed(check, detail))
        return ok

    def at_most(self, value, bound, check):
        # type: (float, Optional[float], str) -> bool
        if bound is None:
            return True
        return self.expect(value <= bound, check, f'{value:.3e} <= {bound:.3e}')

    def decreasing(self, errors, check, floor=ERROR_FLOOR):
        errors = list(errors)
        if len(errors) < 2 * TAIL:
            logger.info(f'{self.experiment}: {check} skipped, needs {2 * TAIL} sizes')
            return True
        pretty = ', '.join(f'{e:.2e}' for e in errors)
        return self.expect(tail_median_decreasing(errors, floor), check, f'errors {pretty}')


def finish(report, cfg, checks, started=None):
    # type: (AsymptoticsReport, ExperimentConfig, Checks, Optional[float]) -> AsymptoticsReport
    """Record timing, write the report, then raise the first failed check"""
    if started is not None:
        elapsed = default_timer() - started
        report.metadata['wall_time'] = elapsed
        logger.info(f'{report.experiment} computed in {format_secs(elapsed)}')
    if cfg.out is not None:
        report.write(cfg.out, cfg.fmt)
    if cfg.checks and checks.failures:
        raise checks.failures[0]
    return report
