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
"""Riemann-type fractional sums and differences.

All operators are evaluated by direct summation against a factorial-function kernel. Output
grids carry the fractional domain shift in their origin:

==========================  ==================================  =======================
operator                    output grid (input on ``[o, e]``)   stored length
==========================  ==================================  =======================
delta left sum              ``o + alpha``                       ``L``
delta right sum             ends at ``e - alpha``               ``L``
nabla left sum              ``o`` (value ``0`` at ``o``)        ``L``
nabla right sum             ends at ``e`` (value ``0`` there)   ``L``
delta left difference       ``o + n - alpha``                   ``L - n``
delta right difference      ends at ``e - n + alpha``           ``L - n``
nabla left difference       ``o + n``                           ``L - n``
nabla right difference      ends at ``e - n``                   ``L - n``
==========================  ==================================  =======================
"""

from __future__ import annotations

from typing import Any, Callable

import numpy as np

from discfrac.common.exceptions import DomainError, IntegerOrderError, InsufficientSamplesError
from discfrac.common.grid import GridFunction, iterate_diff
from discfrac.common.specfun import falling_factorial, gamma_ratio, rising_factorial
from discfrac.operators.spec import OperatorSpec
from discfrac.typing import Family, FloatArray, RealLike, Side


_BLOCK_ROWS = 256

# (slope, constant) of the first and last summation index j as functions of the output index i
_Bound = tuple[int, int]


def _weighted_sum(  # pylint: disable=too-many-arguments
    values: FloatArray,
    length: int,
    shift: float,
    lower: _Bound,
    upper: _Bound,
    kernel: Callable[[FloatArray], FloatArray],
    scale: float,
) -> FloatArray:
    """Evaluate ``scale * sum_j kernel(shift + i - j) * values[j]`` for every output index ``i``.

    The sum runs over ``lower(i) <= j <= upper(i)``, and ``shift + i - j`` is the distance
    ``t_i - s_j`` between output and input grid points. Rows are processed in blocks
    to bound memory on long grids.
    """
    out = np.zeros(length, dtype=np.float64)
    j = np.arange(values.size)[None, :]
    for start in range(0, length, _BLOCK_ROWS):
        i = np.arange(start, min(start + _BLOCK_ROWS, length))[:, None]
        mask = (j >= lower[0] * i + lower[1]) & (j <= upper[0] * i + upper[1])
        if not mask.any():
            continue
        lag = shift + (i - j).astype(np.float64)
        weights = np.zeros(mask.shape, dtype=np.float64)
        weights[mask] = kernel(lag[mask])
        out[start : start + i.shape[0]] = weights @ values
    return scale * out


def sum_kernel(family: Family, side: Side, alpha: float, lag: RealLike) -> Any:
    """Kernel ``H`` of the order-``alpha`` sum, as a function of ``lag = t - s``.

    ``H`` includes the ``1 / Gamma(alpha)`` prefactor, so a sum reads
    ``sum_s H(t - s) f(s)`` over its summation range:

    - delta left: ``(t - sigma(s))^(alpha - 1) / Gamma(alpha)``
    - delta right: ``(rho(s) - t)^(alpha - 1) / Gamma(alpha)``
    - nabla left: ``(t - rho(s))^{alpha - 1} / Gamma(alpha)`` (rising)
    - nabla right: ``(s - rho(t))^{alpha - 1} / Gamma(alpha)`` (rising)

    At integer ``alpha = n`` these are the Cauchy functions of the ``n``-fold sums.
    """
    lag = np.asarray(lag, dtype=np.float64)
    scale = gamma_ratio(1.0, alpha)
    if family == 'delta':
        arg = lag - 1.0 if side == 'left' else -lag - 1.0
        res = scale * np.asarray(falling_factorial(arg, alpha - 1.0))
    else:
        arg = lag + 1.0 if side == 'left' else 1.0 - lag
        res = scale * np.asarray(rising_factorial(arg, alpha - 1.0))
    return float(res) if res.ndim == 0 else res


def _fractional_sum(family: Family, side: Side, alpha: float, f: GridFunction) -> GridFunction:
    length = f.length
    values = f.values

    def kernel(lag: FloatArray) -> FloatArray:
        return np.asarray(sum_kernel(family, side, alpha, lag))

    if family == 'delta' and side == 'left':
        # s = a, ..., t - alpha
        out = _weighted_sum(values, length, alpha, (0, 0), (1, 0), kernel, 1.0)
        return GridFunction(f.origin + alpha, out)
    if family == 'delta':
        # s = t + alpha, ..., b
        out = _weighted_sum(values, length, -alpha, (1, 0), (0, length - 1), kernel, 1.0)
        return GridFunction(f.origin - alpha, out)
    if side == 'left':
        # s = a + 1, ..., t; empty at t = a
        out = _weighted_sum(values, length, 0.0, (0, 1), (1, 0), kernel, 1.0)
        return GridFunction(f.origin, out)
    # s = t, ..., b - 1; empty at t = b
    out = _weighted_sum(values, length, 0.0, (1, 0), (0, length - 2), kernel, 1.0)
    return GridFunction(f.origin, out)


def riemann_sum(spec: OperatorSpec, f: GridFunction) -> GridFunction:
    """Riemann fractional sum of order ``alpha``.

    Examples:
        >>> spec = OperatorSpec('nabla', 'left', 'sum', 0.5, anchor=0.0)
        >>> round(riemann_sum(spec, GridFunction(0.0, [1.0, 1.0, 1.0])).at(2.0), 12)
        1.5

    Args:
        spec (OperatorSpec): A ``riemann`` spec of kind ``sum``.
        f (GridFunction): Input starting (left) or ending (right) at the anchor.

    Returns:
        The sum on its shifted output grid.

    Raises:
        DomainError: If the spec is not a Riemann sum.
        GridMisalignmentError: If ``f`` does not meet the anchor.
    """
    spec.require_formulation('riemann')
    spec.require_kind('sum')
    spec.check_input(f)
    return _fractional_sum(spec.family, spec.side, spec.alpha, f)


def _zero_anchor(f: GridFunction, side: Side) -> GridFunction:
    values = f.values.copy()
    values[0 if side == 'left' else -1] = 0.0
    return f.with_values(values)


def riemann_diff(spec: OperatorSpec, f: GridFunction) -> GridFunction:
    """Riemann fractional difference of order ``alpha``.

    The inner sum of order ``n - alpha`` is followed by the outer integer difference: ``delta^n``
    (delta left), ``(-1)^n nabla^n`` (delta right), ``nabla^n`` (nabla left) or
    ``(-1)^n delta^n`` (nabla right). At integer order the inner sum is the identity; for nabla
    operators its value at the anchor is the empty sum ``0``.

    Raises:
        DomainError: If the spec is not a Riemann difference.
        InsufficientSamplesError: If ``f`` holds at most ``n`` values.
    """
    spec.require_formulation('riemann')
    spec.require_kind('difference')
    spec.check_input(f)
    n = spec.n
    if f.length <= n:
        raise InsufficientSamplesError(n + 1, f.length, f'{spec.label} of order {spec.alpha:g}')

    if spec.order.is_integer:
        inner = f if spec.family == 'delta' else _zero_anchor(f, spec.side)
    else:
        inner = _fractional_sum(spec.family, spec.side, spec.order.complement, f)

    if spec.family == 'delta':
        if spec.side == 'left':
            return iterate_diff(inner, 'delta', n)
        return iterate_diff(inner, 'nabla', n, signed=True)
    if spec.side == 'left':
        return iterate_diff(inner, 'nabla', n)
    return iterate_diff(inner, 'delta', n, signed=True)


def riemann_diff_alt(spec: OperatorSpec, f: GridFunction) -> GridFunction:
    """Single-sum form of the Riemann difference with a ``1 / Gamma(-alpha)`` kernel.

    Defined for non-integer ``alpha`` only; agrees with :func:`riemann_diff` on the same grid.

    - delta left: ``sum_{s=a}^{t+alpha} (t - sigma(s))^(-alpha-1) f(s)``
    - nabla left: ``sum_{s=a+1}^{t} (t - rho(s))^{-alpha-1} f(s)``
    - nabla right: ``sum_{s=t}^{b-1} (s - rho(t))^{-alpha-1} f(s)``
    - delta right: ``sum_{s=t-alpha}^{b} (s - sigma(t))^(-alpha-1) f(s)``

    Raises:
        IntegerOrderError: If ``alpha`` is an integer.
        InsufficientSamplesError: If ``f`` holds at most ``n`` values.
    """
    spec.require_formulation('riemann')
    spec.require_kind('difference')
    if spec.order.is_integer:
        raise IntegerOrderError(spec.alpha)
    spec.check_input(f)
    alpha, n, length = spec.alpha, spec.n, f.length
    if length <= n:
        raise InsufficientSamplesError(n + 1, length, f'{spec.label} of order {alpha:g}')
    out_length = length - n

    def kernel(lag: FloatArray) -> FloatArray:
        if spec.family == 'delta':
            arg = lag - 1.0 if spec.side == 'left' else -lag - 1.0
            return np.asarray(falling_factorial(arg, -alpha - 1.0))
        arg = lag + 1.0 if spec.side == 'left' else 1.0 - lag
        return np.asarray(rising_factorial(arg, -alpha - 1.0))

    # output origin offset, t_i - s_i, and summation bounds on j
    if spec.family == 'delta' and spec.side == 'left':
        offset, shift, lower, upper = n - alpha, n - alpha, (0, 0), (1, n)
    elif spec.family == 'delta':
        offset, shift, lower, upper = alpha, alpha, (1, 0), (0, length - 1)
    elif spec.side == 'left':
        offset, shift, lower, upper = float(n), float(n), (0, 1), (1, n)
    else:
        offset, shift, lower, upper = 0.0, 0.0, (1, 0), (0, length - 2)

    scale = gamma_ratio(1.0, -alpha)
    out = _weighted_sum(f.values, out_length, shift, lower, upper, kernel, scale)
    return GridFunction(f.origin + offset, out)


def riemann_apply(spec: OperatorSpec, f: GridFunction) -> GridFunction:
    """Dispatch on ``spec.kind``."""
    if spec.kind == 'sum':
        return riemann_sum(spec, f)
    if spec.kind == 'difference':
        return riemann_diff(spec, f)
    raise DomainError(f'invalid operator spec: unknown kind {spec.kind!r}')
