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
import os
import logging
import sys
from pathlib import Path
from typing import Any, Union

import psutil

logger = logging.getLogger(__name__)

QUAD_POINTS_ENV = 'SZEGOLAB_QUAD_POINTS'
DEFAULT_QUAD_POINTS = 2 ** 14


class SzegolabError(Exception):
    """Base class for all exceptions"""
    pass


class UsageError(SzegolabError):
    """Exception raised when the arguments supplied by the user are invalid.
    Raise this when the arguments supplied are invalid from the point of
    view of the application, e.g. a malformed measure spec or an n list that
    is not increasing. It is distinct from flags.Error which covers the lower
    level of parsing and validating individual flags.
    """

    def __init__(self, message, exitcode=1):
        super().__init__(message)
        self.exitcode = exitcode


class DomainError(SzegolabError, ValueError):
    """A parameter lies outside the set where the operation is defined"""
    pass


class DegreeError(SzegolabError, ValueError):
    """Sampling grid too coarse for the requested Fourier degree"""
    pass


class ResolutionError(SzegolabError, ValueError):
    """Quadrature resolution too low for the requested moments"""
    pass


class RangeError(SzegolabError, IndexError):
    """Not enough coefficients available"""
    pass


class PositivityError(SzegolabError, ArithmeticError):
    """A Verblunsky coefficient left the open unit disk"""

    def __init__(self, index, value):
        super().__init__(f'Verblunsky coefficient {index} has modulus {abs(value):.3e} >= 1 - 1e-12; '
                         f'the moments are not those of a positive measure or are ill-conditioned')
        self.index = index
        self.value = value


class OrthogonalityLossError(SzegolabError, ArithmeticError):
    """The orthonormal recursion on quadrature nodes drifted away from the measure"""

    def __init__(self, index, defect):
        super().__init__(f'Orthonormal recursion lost orthogonality at step {index} (defect {defect:.3e}); '
                         f'raise {QUAD_POINTS_ENV} or reduce n')
        self.index = index
        self.defect = defect


class SingularSymbolError(SzegolabError, ArithmeticError):
    """A determinant pivot collapsed"""
    pass


class TruncationError(SzegolabError, ValueError):
    """The truncated matrix is too small for the trusted window"""
    pass


class UnsupportedOrderError(SzegolabError, ValueError):
    """Requested cumulant order is not supported"""
    pass


class CheckFailed(SzegolabError):
    """An experiment assertion failed"""

    def __init__(self, check, detail):
        super().__init__(f'{check}: {detail}')
        self.check = check
        self.detail = detail


def eprint(*args, **kwargs):
    # type: (*Any, **Any) -> None
    """Print to stderr"""
    print(*args, file=sys.stderr, **kwargs)


def try_with_default(func, default=None, ignore=Exception):
    """ A wrapper that ignores exception from a function.
    """
    def _dec(*args, **kwargs):
        # noinspection PyBroadException
        try:
            return func(*args, **kwargs)
        except ignore:
            return default
    return _dec


def quad_points():
    # type: () -> int
    """Default quadrature resolution, overridable through the environment"""
    raw = os.environ.get(QUAD_POINTS_ENV)
    if raw is None or raw == '':
        return DEFAULT_QUAD_POINTS
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f'{QUAD_POINTS_ENV} must be a positive integer, got {raw!r}')
    if value <= 0:
        raise UsageError(f'{QUAD_POINTS_ENV} must be a positive integer, got {raw!r}')
    return value


def worker_count(requested=None):
    # type: (int) -> int
    """Number of workers for an n-sweep"""
    if requested is not None and requested > 0:
        return requested
    return try_with_default(psutil.cpu_count, default=None)(logical=False) or 1


def format_secs(sec):
    # type: (Union[float, int]) -> str
    """Format seconds"""
    m, s = divmod(sec, 60)
    h, m = divmod(m, 60)
    d, h = divmod(h, 24)
    return f'{d:02.0f}:{h:02.0f}:{m:02.0f}:{s:09.6f}'


def maybe_path(str_path):
    # type: (Union[str, Path]) -> Path
    """Convert str to path, noop if is already path. None safe."""
    if str_path is None:
        return None
    return Path(str_path)


def parse_complex(text):
    # type: (str) -> complex
    """Parse 're,im', 're' or a python complex literal"""
    text = text.strip()
    if ',' in text:
        re_part, im_part = text.split(',', 1)
        return complex(float(re_part), float(im_part))
    return complex(text.replace(' ', ''))


__all__ = [
    'SzegolabError',
    'UsageError',
    'DomainError',
    'DegreeError',
    'ResolutionError',
    'RangeError',
    'PositivityError',
    'OrthogonalityLossError',
    'SingularSymbolError',
    'TruncationError',
    'UnsupportedOrderError',
    'CheckFailed',
    'QUAD_POINTS_ENV',
    'DEFAULT_QUAD_POINTS',
    'eprint',
    'try_with_default',
    'quad_points',
    'worker_count',
    'format_secs',
    'maybe_path',
    'parse_complex',
]
