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
Parsers for the measure, Verblunsky-sequence and symbol specs accepted on the command line.

Measures:   lebesgue | geronimus:<re>,<im> | fh:<theta>,<a>,<b>;... | perturbed:<base>:<h-file>
            optionally followed by one or more +atom:<theta>,<q>
Sequences:  const:<re>,<im> | decay:<re>,<im>,<c> | sqrt:<re>,<im> | alternating:<a>
            | random:<seed>,<radius> | lopez:<re>,<im>,<gamma> | csv:<path>
Symbols:    <file>.json | const:c;cos:a1,a2;sin:b1;pos:c1,...;neg:c1,...
"""
import logging
import math
from pathlib import Path
from typing import Dict, Optional

import numpy as np

from ..fourier import TrigPoly, from_trig_series
from ..measure import CircleMeasure, exp_perturb, fisher_hartwig, geronimus, lebesgue
from ..opuc import VerblunskySeq
from ..utils import RangeError, SzegolabError, UsageError, parse_complex

logger = logging.getLogger(__name__)

ATOM_MARKER = '+atom:'


def _split_kind(spec):
    kind, sep, rest = spec.strip().partition(':')
    return kind.strip().lower(), rest


def _floats(text, count, what):
    parts = [p for p in text.split(',') if p.strip()]
    if len(parts) != count:
        raise UsageError(f'{what} expects {count} comma separated numbers, got {text!r}')
    try:
        return [float(p) for p in parts]
    except ValueError:
        raise UsageError(f'{what} expects numbers, got {text!r}')


def parse_measure(spec, quad_points=None):
    # type: (str, Optional[int]) -> CircleMeasure
    if spec is None:
        raise UsageError('A measure spec is required')
    spec = spec.strip()
    kind, rest = _split_kind(spec)
    try:
        if kind == 'perturbed':
            base, sep, h_file = rest.rpartition(':')
            if not sep:
                raise UsageError(f'perturbed measure needs perturbed:<base>:<h-file>, got {spec!r}')
            return exp_perturb(parse_measure(base, quad_points), parse_h(h_file))

        base, *atoms = spec.split(ATOM_MARKER)
        mu = _parse_base_measure(base, quad_points)
        for atom in atoms:
            theta, q = _floats(atom, 2, 'atom')
            mu = mu.with_atom(theta, q)
        return mu
    except UsageError:
        raise
    except (SzegolabError, ValueError) as ex:
        raise UsageError(f'Invalid measure {spec!r}: {ex}')


def _parse_base_measure(spec, quad_points):
    kind, rest = _split_kind(spec)
    if kind == 'lebesgue':
        return lebesgue(quad_points)
    if kind == 'geronimus':
        return geronimus(parse_complex(rest), quad_points)
    if kind == 'fh':
        params = [_floats(item, 3, 'fh singularity') for item in rest.split(';') if item.strip()]
        return fisher_hartwig(params, quad_points)
    raise UsageError(f'Unknown measure kind {kind!r}')


def _random_sequence(seed, radius, N):
    rng = np.random.RandomState(seed)
    r = radius * np.sqrt(rng.uniform(size=N))
    angle = rng.uniform(0, 2 * math.pi, size=N)
    return r * np.exp(1j * angle)


def lopez_sequence(alpha, gamma, N):
    # type: (complex, float, int) -> np.ndarray
    """alpha exp(i n^gamma): |alpha_n| = |alpha| and alpha_{n+1} / alpha_n -> 1 for gamma < 1"""
    n = np.arange(N, dtype=float)
    return alpha * np.exp(1j * n ** gamma)


def parse_sequence(spec, N):
    # type: (str, int) -> VerblunskySeq
    """The first N coefficients of a sequence spec"""
    if spec is None:
        raise UsageError('A sequence spec is required')
    kind, rest = _split_kind(spec)
    try:
        if kind == 'const':
            return VerblunskySeq.constant(parse_complex(rest), N)
        if kind == 'decay':
            re_part, im_part, c = _floats(rest, 3, 'decay')
            alpha = complex(re_part, im_part)
            return VerblunskySeq.from_function(lambda n: alpha + c / (n + 2), N)
        if kind == 'sqrt':
            alpha = parse_complex(rest)
            return VerblunskySeq.from_function(lambda n: alpha * (1 - 1 / math.sqrt(n + 4)), N)
        if kind == 'alternating':
            a, = _floats(rest, 1, 'alternating')
            return VerblunskySeq.from_function(lambda n: a * (-1) ** n, N)
        if kind == 'random':
            seed, radius = _floats(rest, 2, 'random')
            if not 0 <= radius < 1:
                raise UsageError(f'random sequence radius must lie in [0, 1), got {radius}')
            return VerblunskySeq(_random_sequence(int(seed), radius, N))
        if kind == 'lopez':
            re_part, im_part, gamma = _floats(rest, 3, 'lopez')
            if not 0 < gamma < 1:
                raise UsageError(f'lopez phase exponent must lie in (0, 1), got {gamma}')
            return VerblunskySeq(lopez_sequence(complex(re_part, im_part), gamma, N))
        if kind == 'csv':
            v = VerblunskySeq.from_csv(rest)
            if len(v) < N:
                raise RangeError(f'{rest} holds {len(v)} coefficients, {N} needed')
            return v.prefix(N)
    except UsageError:
        raise
    except (SzegolabError, ValueError, OSError) as ex:
        raise UsageError(f'Invalid sequence {spec!r}: {ex}')
    raise UsageError(f'Unknown sequence kind {kind!r}')


def _complex_list(text, what):
    try:
        return [complex(p.strip().replace(' ', '')) for p in text.split(',') if p.strip()]
    except ValueError:
        raise UsageError(f'{what} expects numbers, got {text!r}')


_SERIES_KEYS = ('const', 'cos', 'sin', 'pos', 'neg')


def parse_h(spec):
    # type: (str) -> TrigPoly
    if spec is None:
        raise UsageError('A symbol spec is required')
    spec = spec.strip()
    if spec.endswith('.json') or Path(spec).is_file():
        try:
            return TrigPoly.from_json(Path(spec).read_text())
        except (OSError, KeyError, ValueError) as ex:
            raise UsageError(f'Cannot read symbol from {spec}: {ex}')
    if spec in ('', '0'):
        return TrigPoly.constant(0.0)

    parts = {}  # type: Dict[str, list]
    for item in spec.split(';'):
        if not item.strip():
            continue
        key, sep, values = item.partition(':')
        key = key.strip().lower()
        if not sep or key not in _SERIES_KEYS:
            raise UsageError(f'Symbol terms look like {"|".join(_SERIES_KEYS)}:<values>, got {item!r}')
        parts[key] = _complex_list(values, key)
    const = parts.pop('const', [0])
    if len(const) != 1:
        raise UsageError(f'const takes a single value, got {const}')
    return from_trig_series(const[0], **parts).trim()
