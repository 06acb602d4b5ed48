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
from . import ExperimentConfig

SZEGO_N = [8, 16, 24, 32, 64, 96, 128]


# noinspection PyPep8Naming
def Szego(**kwargs):
    # type: (...) -> ExperimentConfig
    return ExperimentConfig(
        experiment='szego',
        measure='lebesgue',
        h='cos:0.8',
        n_list=SZEGO_N,
        pad=64,
        tolerances={'final': 2e-3, 'route': 1e-6},
    ).update(**kwargs)


# noinspection PyPep8Naming
def SzegoAtom(**kwargs):
    # type: (...) -> ExperimentConfig
    return Szego(
        measure='lebesgue+atom:0,0.5',
        tolerances={'final': 1e-2},
    ).update(**kwargs)


# noinspection PyPep8Naming
def ArcLimit(**kwargs):
    # type: (...) -> ExperimentConfig
    return ExperimentConfig(
        experiment='arc_limit',
        alpha='0.5,0',
        h='cos:0.6',
        n_list=SZEGO_N,
        pad=64,
        tolerances={'final': 5e-3, 'route': 1e-6, 'q_routes': 1e-10, 'commutator': 1e-5},
    ).update(**kwargs)


# noinspection PyPep8Naming
def ArcLimitLopez(**kwargs):
    # type: (...) -> ExperimentConfig
    return ArcLimit(
        seq='lopez:0.5,0,0.5',
        tolerances={'final': 1e-2, 'modulus': 1e-12},
    ).update(**kwargs)


# noinspection PyPep8Naming
def Compare(**kwargs):
    # type: (...) -> ExperimentConfig
    return ExperimentConfig(
        experiment='compare',
        seq='const:0.5,0',
        seq_ref='decay:0.5,0,0.4',
        h='cos:0.6',
        n_list=[16, 24, 32, 64, 96, 128],
        pad=64,
        tolerances={'decay_factor': 0.25},
    ).update(**kwargs)


# noinspection PyPep8Naming
def Weak(**kwargs):
    # type: (...) -> ExperimentConfig
    return ExperimentConfig(
        experiment='weak',
        measure='geronimus:0.6,0',
        h='cos:1',
        n_list=SZEGO_N,
        pad=64,
        tolerances={'final': 5e-2, 'route': 1e-6},
    ).update(**kwargs)


# noinspection PyPep8Naming
def Cumulants(**kwargs):
    # type: (...) -> ExperimentConfig
    return ExperimentConfig(
        experiment='cumulants',
        seq='const:0,0',
        h='cos:0.6',
        n_list=[16],
        t_list=[0.1, 0.05],
        m_max=4,
        pad=64,
        tolerances={'remainder': 1e-9},
    ).update(**kwargs)


# noinspection PyPep8Naming
def CumulantsRandom(**kwargs):
    # type: (...) -> ExperimentConfig
    return ExperimentConfig(
        experiment='cumulants',
        seq='random:7,0.6',
        h='cos:2',
        n_list=[16],
        t_list=[0.1, 0.05],
        m_max=4,
        pad=64,
        tolerances={'ratio_min': 16.0, 'ratio_max': 256.0},
    ).update(**kwargs)


# noinspection PyPep8Naming
def RightLimit(**kwargs):
    # type: (...) -> ExperimentConfig
    return ExperimentConfig(
        experiment='right_limit',
        seq='const:0.5,0',
        h='cos:2',
        n_list=[64],
        m_max=3,
        tolerances={'stable': 1e-12, 'limit': 1e-6},
    ).update(**kwargs)


# noinspection PyPep8Naming
def RightLimitFree(**kwargs):
    # type: (...) -> ExperimentConfig
    return RightLimit(seq='const:0,0').update(**kwargs)


# noinspection PyPep8Naming
def Clt(**kwargs):
    # type: (...) -> ExperimentConfig
    return ExperimentConfig(
        experiment='clt',
        alpha='0.5,0',
        h='cos:2',
        n_list=SZEGO_N,
        t_list=[0.0, 0.5, 1.0],
        pad=64,
        tolerances={'final': 1e-2, 'route': 1e-6},
    ).update(**kwargs)
