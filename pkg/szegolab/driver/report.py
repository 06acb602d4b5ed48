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
Tabular reports of an asymptotics sweep, written as CSV or JSON.
"""
import csv
import json
import logging
import math

from ..utils import UsageError, maybe_path

logger = logging.getLogger(__name__)

COLUMNS = (
    'n', 'param', 'psi_re', 'psi_im', 'predicted_re', 'predicted_im', 'abs_error', 'route_disagreement',
)


class ReportRow(object):
    __slots__ = ('n', 'param', 'psi', 'predicted', 'route_disagreement')

    def __init__(self, n, psi, predicted, route_disagreement=math.nan, param=math.nan):
        self.n = int(n)
        self.param = float(param)
        self.psi = complex(psi)
        self.predicted = complex(predicted)
        self.route_disagreement = float(route_disagreement)

    @property
    def abs_error(self):
        # type: () -> float
        return abs(self.psi - self.predicted)

    def values(self):
        return (
            self.n, self.param, self.psi.real, self.psi.imag, self.predicted.real, self.predicted.imag,
            self.abs_error, self.route_disagreement,
        )

    def __repr__(self):
        return f'ReportRow(n={self.n}, psi={self.psi:.6g}, predicted={self.predicted:.6g})'


def _json_value(v):
    if isinstance(v, complex):
        return [_json_value(v.real), _json_value(v.imag)]
    if isinstance(v, float) and not math.isfinite(v):
        return None
    if isinstance(v, dict):
        return {str(k): _json_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_json_value(x) for x in v]
    if hasattr(v, 'item'):
        # numpy scalar
        return _json_value(v.item())
    return v


def _csv_cell(v):
    if isinstance(v, int):
        return str(v)
    return f'{v:.10g}'


class AsymptoticsReport(object):
    """Rows of (n, Psi_n, prediction) plus free-form metadata"""

    def __init__(self, experiment, metadata=None):
        self.experiment = experiment
        self.metadata = dict(metadata or {})
        self.rows = []

    def add_row(self, n, psi, predicted, route_disagreement=math.nan, param=math.nan):
        # type: (int, complex, complex, float, float) -> ReportRow
        row = ReportRow(n, psi, predicted, route_disagreement, param)
        self.rows.append(row)
        logger.debug(f'{self.experiment}: {row}')
        return row

    @property
    def errors(self):
        return [row.abs_error for row in self.rows]

    def to_json(self):
        # type: () -> dict
        return {
            'experiment': self.experiment,
            'metadata': _json_value(self.metadata),
            'columns': list(COLUMNS),
            'rows': [_json_value(list(row.values())) for row in self.rows],
        }

    def write_csv(self, path):
        with path.open('w', newline='') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(COLUMNS)
            for row in self.rows:
                writer.writerow([_csv_cell(v) for v in row.values()])

    def write_json(self, path):
        with path.open('w') as f:
            json.dump(self.to_json(), f, sort_keys=True, indent=2)
            f.write('\n')

    def write(self, path, fmt='csv'):
        path = maybe_path(path)
        if fmt == 'csv':
            self.write_csv(path)
        elif fmt == 'json':
            self.write_json(path)
        else:
            raise UsageError(f'Unknown report format {fmt!r}')
        logger.info(f'Wrote {len(self.rows)} rows to {path}')
        return path
