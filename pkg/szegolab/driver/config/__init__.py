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
from absl import flags
from copy import deepcopy

from ...cmv import pad_min
from ...utils import UsageError, maybe_path

FLAGS = flags.FLAGS
flags.DEFINE_string('measure', None, 'Measure spec, e.g. lebesgue, geronimus:0.5,0, fh:3.14159,1,0')
flags.DEFINE_string('h', None, 'Symbol spec: a coefficient JSON file or const:c;cos:a1,..;sin:b1,..;pos:..;neg:..')
flags.DEFINE_list('n', None, 'Increasing list of matrix sizes')
flags.DEFINE_integer('pad', None, 'Padding of the CMV truncation beyond n')
flags.DEFINE_string('out', None, 'Report output path')
flags.DEFINE_enum('format', None, ['csv', 'json'], 'Report format')
flags.DEFINE_integer('workers', None, 'Worker threads for the n sweep (default: physical cores)')
flags.DEFINE_string('seq', None, 'Verblunsky sequence spec, e.g. const:0.5,0 or decay:0.5,0,0.4')
flags.DEFINE_string('seq_ref', None, 'Reference Verblunsky sequence spec for the compare experiment')
flags.DEFINE_string('alpha', None, 'Constant Verblunsky coefficient as re,im')
flags.DEFINE_list('t', None, 'Values of t for the clt and cumulants experiments')
flags.DEFINE_integer('m_max', None, 'Highest cumulant order')
flags.DEFINE_list('subseq', None, 'Subsequence n_j for right-limit extraction')
flags.DEFINE_integer('window', None, 'Right-limit window W')
flags.DEFINE_integer('truncation', None, 'Two-sided truncation M for F_m')
flags.DEFINE_multi_string('tol', [], 'Override a tolerance, as name=value')
flags.DEFINE_boolean('checks', None, 'Evaluate the experiment assertions')


def _int_list(values, what):
    try:
        return [int(v) for v in values]
    except ValueError:
        raise UsageError(f'{what} must be a list of integers, got {values!r}')


def _float_list(values, what):
    try:
        return [float(v) for v in values]
    except ValueError:
        raise UsageError(f'{what} must be a list of numbers, got {values!r}')


class ExperimentConfig(object):
    """Configuration of one experiment run"""
    _pathlike_keys = (
        'out',
    )

    def __init__(self, **kwargs):
        """Initialize a config
        """
        super().__init__()
        self.experiment = None
        self.measure = None
        self.seq = None
        self.seq_ref = None
        self.alpha = None
        self.h = '0'
        self.n_list = [8, 16, 32, 64, 128]
        self.pad = None
        self.t_list = []
        self.m_max = 4
        self.subseq = None
        self.window = None
        self.truncation = None
        self.tolerances = {}
        self.out = None
        self.fmt = 'csv'
        self.workers = None
        self.checks = True
        self.update(kwargs)

    def __repr__(self):
        content = ', '.join([f'{k}={v!r}' for k, v in sorted(vars(self).items())])
        return f'ExperimentConfig({content})'

    def __setattr__(self, key, value):
        if key in self._pathlike_keys:
            value = maybe_path(value)
        object.__setattr__(self, key, value)

    def copy(self, **kwargs):
        # type: (...) -> ExperimentConfig
        """Return a new copy of the config"""
        return deepcopy(self).update(**kwargs)

    def update(self, d=None, **kwargs):
        # type: (...) -> ExperimentConfig
        """Update this config, skipping None values"""
        if d is not None:
            self.update(**d)

        for k, v in kwargs.items():
            if v is None:
                continue
            if k == 'tolerances':
                merged = dict(self.tolerances)
                merged.update(v)
                v = merged
            setattr(self, k, v)

        return self

    def tol(self, name, default=None):
        # type: (str, float) -> float
        return self.tolerances.get(name, default)

    @property
    def n_max(self):
        # type: () -> int
        return max(self.n_list)

    def validate(self, h=None):
        # type: (...) -> ExperimentConfig
        """Check invariants; h is the parsed symbol when the padding must be checked"""
        if not self.n_list:
            raise UsageError('n list is empty')
        if any(n < 1 for n in self.n_list):
            raise UsageError(f'n values must be positive, got {self.n_list}')
        if any(b <= a for a, b in zip(self.n_list, self.n_list[1:])):
            raise UsageError(f'n list must be strictly increasing, got {self.n_list}')
        if self.fmt not in ('csv', 'json'):
            raise UsageError(f'Unknown report format {self.fmt!r}')
        if h is not None and self.pad is not None and self.pad < pad_min(h):
            raise UsageError(f'pad {self.pad} is below the minimum {pad_min(h)} for this symbol')
        return self

    def resolved_pad(self, h):
        # type: (...) -> int
        return pad_min(h) if self.pad is None else self.pad


def flag_overrides():
    # type: () -> dict
    """Config values given on the command line"""
    tolerances = {}
    for item in FLAGS.tol:
        name, sep, value = item.partition('=')
        if not sep:
            raise UsageError(f'--tol expects name=value, got {item!r}')
        try:
            tolerances[name.strip()] = float(value)
        except ValueError:
            raise UsageError(f'--tol {name} needs a number, got {value!r}')
    return dict(
        measure=FLAGS.measure,
        h=FLAGS.h,
        n_list=None if FLAGS.n is None else _int_list(FLAGS.n, '--n'),
        pad=FLAGS.pad,
        out=FLAGS.out,
        fmt=FLAGS.format,
        workers=FLAGS.workers,
        seq=FLAGS.seq,
        seq_ref=FLAGS.seq_ref,
        alpha=FLAGS.alpha,
        t_list=None if FLAGS.t is None else _float_list(FLAGS.t, '--t'),
        m_max=FLAGS.m_max,
        subseq=None if FLAGS.subseq is None else _int_list(FLAGS.subseq, '--subseq'),
        window=FLAGS.window,
        truncation=FLAGS.truncation,
        tolerances=tolerances or None,
        checks=FLAGS.checks,
    )
