# Copyright 2024 discfrac Contributors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""Typing utilities."""

from __future__ import annotations

from typing import Callable, Literal, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray


Family = Literal['delta', 'nabla']
Side = Literal['left', 'right']
Kind = Literal['sum', 'difference']
Formulation = Literal['riemann', 'binomial']
WeightMode = Literal['difference', 'sum']
Relation = Literal['eq', 'le']
Verdict = Literal['pass', 'fail']
FileFormat = Literal['csv', 'json']

FAMILIES: tuple[Family, ...] = ('delta', 'nabla')
SIDES: tuple[Side, ...] = ('left', 'right')
KINDS: tuple[Kind, ...] = ('sum', 'difference')
FORMULATIONS: tuple[Formulation, ...] = ('riemann', 'binomial')

FloatArray = NDArray[np.float64]
RealLike = Union[float, ArrayLike]
KernelFn = Callable[[FloatArray], FloatArray]


__all__ = [
    'ArrayLike',
    'FAMILIES',
    'FORMULATIONS',
    'Family',
    'FileFormat',
    'FloatArray',
    'Formulation',
    'KINDS',
    'Kind',
    'KernelFn',
    'RealLike',
    'Relation',
    'SIDES',
    'Side',
    'Verdict',
    'WeightMode',
]
