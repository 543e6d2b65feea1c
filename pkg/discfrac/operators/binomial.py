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
"""Binomial (Grunwald-Letnikov type) fractional sums and differences.

Every binomial operator is a truncated convolution of a GL weight sequence with the stored
values. Right operators are handled by reversing the value array, applying the left-side
convolution and reversing the result back, so one causal kernel serves all eight operators.
Nabla operators never read the value at their anchor.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import fft

from discfrac.common.exceptions import DomainError, InsufficientSamplesError
from discfrac.common.grid import GridFunction
from discfrac.common.specfun import GLWeights, gl_weights
from discfrac.operators.spec import OperatorSpec
from discfrac.typing import FloatArray


FAST_THRESHOLD: int = 256
"""Grids shorter than this are convolved directly even on the fast path."""

_ARGUMENT_MAPS: dict[tuple[str, str, str], str] = {
    ('delta', 'left', 'difference'): 'f(t + alpha - k)',
    ('delta', 'left', 'sum'): 'f(t - alpha - k)',
    ('nabla', 'left', 'difference'): 'f(t - k)',
    ('nabla', 'left', 'sum'): 'f(t - k)',
    ('delta', 'right', 'difference'): 'f(t - alpha + k)',
    ('delta', 'right', 'sum'): 'f(t + alpha + k)',
    ('nabla', 'right', 'difference'): 'f(t + k)',
    ('nabla', 'right', 'sum'): 'f(t + k)',
}


@dataclass(frozen=True)
class ConvolutionPlan:
    """Index normalization of one binomial operator on one input length.

    After normalization, with ``x`` the (reversed, for right operators) value array, the output
    with index ``i`` is ``sum_{k=0}^{upper_limit(i)} w[k] * x[offset + i - k]``, and the upper
    limit never reaches below ``x[0]`` (nor to ``x[0]`` itself when ``skip_anchor``).

    Attributes:
        weights (GLWeights): Difference or sum weights of order ``alpha``.
        argument_map (str): How the summation index enters ``f``.
        reverse (bool): Whether the value array is reversed (right operators).
        skip_anchor (bool): Whether the anchor value is excluded (nabla operators).
        offset (int): ``n`` for differences, ``0`` for sums.
        origin (float): First point of the output grid.
        length (int): Number of output points.
    """

    weights: GLWeights
    argument_map: str
    reverse: bool
    skip_anchor: bool
    offset: int
    origin: float
    length: int

    def upper_limit(self, i: int) -> int:
        """Largest summation index ``k`` used for output index ``i`` (in normalized order)."""
        return self.offset + i - int(self.skip_anchor)

    def normalize(self, values: FloatArray) -> FloatArray:
        """Return the value array in causal order (a copy)."""
        return values[::-1].copy() if self.reverse else values.copy()

    def denormalize(self, out: FloatArray) -> FloatArray:
        """Map normalized outputs back to increasing grid order."""
        return out[::-1].copy() if self.reverse else out


def make_plan(spec: OperatorSpec, f: GridFunction) -> ConvolutionPlan:
    """Build the :class:`ConvolutionPlan` of ``spec`` on the grid of ``f``.

    Output grids, for input ``[o, e]`` of length ``L``:

    - delta left: sum on ``o + alpha``, difference on ``o + n - alpha``;
    - nabla left: sum on ``o``, difference on ``o + n``;
    - delta right: sum ending at ``e - alpha``, difference ending at ``e - n + alpha``;
    - nabla right: sum ending at ``e``, difference ending at ``e - n``.

    Raises:
        DomainError: If the spec is not a binomial operator.
        InsufficientSamplesError: If a difference gets at most ``n`` values.
    """
    spec.require_formulation('binomial')
    spec.check_input(f)
    alpha, n, length = spec.alpha, spec.n, f.length
    if spec.kind == 'difference':
        if length <= n:
            raise InsufficientSamplesError(n + 1, length, f'{spec.label} of order {alpha:g}')
        offset, out_length = n, length - n
    else:
        offset, out_length = 0, length

    if spec.side == 'left':
        if spec.family == 'delta':
            origin = f.origin + (n - alpha if spec.kind == 'difference' else alpha)
        else:
            origin = f.origin + (n if spec.kind == 'difference' else 0)
    elif spec.family == 'delta':
        # the top point is e - n + alpha (difference) or e - alpha (sum)
        origin = f.origin + (alpha if spec.kind == 'difference' else -alpha)
    else:
        origin = f.origin

    try:
        argument_map = _ARGUMENT_MAPS[(spec.family, spec.side, spec.kind)]
    except KeyError as exc:  # pragma: no cover
        raise DomainError(f'invalid operator spec: {spec.label}') from exc

    return ConvolutionPlan(
        weights=gl_weights(alpha, spec.kind == 'difference', length - 1),
        argument_map=argument_map,
        reverse=spec.side == 'right',
        skip_anchor=spec.family == 'nabla',
        offset=offset,
        origin=float(origin),
        length=out_length,
    )


def gl_apply(spec: OperatorSpec, f: GridFunction) -> GridFunction:
    """Binomial operator by direct truncated summation, one dot product per output point.

    Examples:
        >>> spec = OperatorSpec('nabla', 'left', 'sum', 0.5, anchor=0.0, formulation='binomial')
        >>> gl_apply(spec, GridFunction(0.0, [1.0, 1.0, 1.0])).at(2.0)
        1.5

    Args:
        spec (OperatorSpec): A ``binomial`` spec.
        f (GridFunction): Input starting (left) or ending (right) at the anchor.

    Returns:
        The operator output on the same grid as the matching Riemann operator.
    """
    plan = make_plan(spec, f)
    x = plan.normalize(f.values)
    w_rev = plan.weights.w[::-1].copy()
    top = w_rev.size - 1
    out = np.zeros(plan.length, dtype=np.float64)
    for i in range(plan.length):
        upper = plan.upper_limit(i)
        if upper < 0:
            continue
        m = plan.offset + i
        out[i] = np.dot(w_rev[top - upper :], x[m - upper : m + 1])
    return GridFunction(plan.origin, plan.denormalize(out))


def _convolve(w: FloatArray, x: FloatArray, threshold: int) -> FloatArray:
    if x.size < threshold:
        return np.convolve(w, x)
    size = fft.next_fast_len(w.size + x.size - 1, real=True)
    return fft.irfft(fft.rfft(w, n=size) * fft.rfft(x, n=size), n=size)


def split_sum_order(alpha: float) -> tuple[float, int]:
    """Split a sum order into ``beta`` in ``(0, 1]`` and a count of plain cumulative sums.

    Sum weights of order ``alpha`` are the coefficients of ``(1 - z)^(-alpha)``, which grow like
    ``k^(alpha - 1)``. Writing ``(1 - z)^(-alpha) = (1 - z)^(-beta) (1 - z)^(-passes)`` leaves the
    FFT with the bounded weights of order ``beta``.

    Examples:
        >>> split_sum_order(2.5)
        (0.5, 2)
        >>> split_sum_order(1.0)
        (1.0, 0)
    """
    passes = max(int(np.ceil(alpha)) - 1, 0)
    return alpha - passes, passes


def gl_apply_fast(
    spec: OperatorSpec,
    f: GridFunction,
    threshold: int = FAST_THRESHOLD,
) -> GridFunction:
    """Binomial operator through one full convolution.

    The truncation of :func:`gl_apply` coincides with a causal convolution once the anchor value of
    nabla operators is zeroed, so no per-point correction is needed. Grids of at least
    ``threshold`` points are convolved through ``scipy.fft``. Sums of order above one convolve
    with the weights of :func:`split_sum_order` and finish with ``np.cumsum`` passes.

    Args:
        spec (OperatorSpec): A ``binomial`` spec.
        f (GridFunction): Input starting (left) or ending (right) at the anchor.
        threshold (int, optional): Smallest length convolved by FFT. Defaults to
            :data:`FAST_THRESHOLD`.

    Returns:
        The same values as :func:`gl_apply` up to rounding.
    """
    plan = make_plan(spec, f)
    x = plan.normalize(f.values)
    if plan.skip_anchor:
        x[0] = 0.0
    if spec.kind == 'sum':
        beta, passes = split_sum_order(spec.alpha)
        w = np.asarray(gl_weights(beta, False, x.size - 1).w)
    else:
        w, passes = np.asarray(plan.weights.w), 0
    full = _convolve(w, x, threshold)[: plan.offset + plan.length]
    for _ in range(passes):
        full = np.cumsum(full)
    out = full[plan.offset : plan.offset + plan.length]
    return GridFunction(plan.origin, plan.denormalize(np.ascontiguousarray(out)))
