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
"""Fractional operators in Riemann and binomial form."""

from __future__ import annotations

from discfrac.common.grid import GridFunction
from discfrac.common.registry import Registry
from discfrac.operators.binomial import (
    FAST_THRESHOLD,
    ConvolutionPlan,
    gl_apply,
    gl_apply_fast,
    make_plan,
)
from discfrac.operators.riemann import (
    riemann_apply,
    riemann_diff,
    riemann_diff_alt,
    riemann_sum,
    sum_kernel,
)
from discfrac.operators.spec import OperatorSpec


FORMULATION_REGISTRY = Registry('formulation')


@FORMULATION_REGISTRY.register('riemann')
def _apply_riemann(spec: OperatorSpec, f: GridFunction, fast: bool) -> GridFunction:
    return riemann_apply(spec, f)


@FORMULATION_REGISTRY.register('binomial')
def _apply_binomial(spec: OperatorSpec, f: GridFunction, fast: bool) -> GridFunction:
    return gl_apply_fast(spec, f) if fast else gl_apply(spec, f)


def apply_operator(spec: OperatorSpec, f: GridFunction, fast: bool = False) -> GridFunction:
    """Apply ``spec`` to ``f`` in the formulation the spec names.

    Args:
        spec (OperatorSpec): The operator.
        f (GridFunction): Input starting (left) or ending (right) at ``spec.anchor``.
        fast (bool, optional): Use the convolution path for binomial operators. Defaults to False.

    Returns:
        The output on the operator's shifted grid.
    """
    return FORMULATION_REGISTRY.get(spec.formulation)(spec, f, fast)


__all__ = [
    'FAST_THRESHOLD',
    'ConvolutionPlan',
    'OperatorSpec',
    'apply_operator',
    'gl_apply',
    'gl_apply_fast',
    'make_plan',
    'riemann_diff',
    'riemann_diff_alt',
    'riemann_sum',
    'sum_kernel',
]
