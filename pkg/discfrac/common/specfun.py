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
"""Special-function primitives.

Gamma ratios with pole conventions, falling and rising factorial functions, generalized binomial
coefficients and Grunwald-Letnikov weight sequences. Every function accepts scalars or arrays and
returns a ``float`` for scalar input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from scipy import special

from discfrac.common.exceptions import DomainError, KernelSingularityError
from discfrac.typing import FloatArray, RealLike, WeightMode


INTEGER_TOL: float = 1e-9
"""Absolute distance below which a real is treated as an integer."""

_FACTORIALS: FloatArray = np.array([float(math.factorial(i)) for i in range(171)])


def is_integer(x: RealLike, tol: float = INTEGER_TOL) -> Any:
    """Return whether ``x`` lies within ``tol`` of an integer (elementwise for arrays)."""
    arr = np.asarray(x, dtype=np.float64)
    res = np.abs(arr - np.round(arr)) <= tol
    return bool(res) if res.ndim == 0 else res


def _integral(arr: FloatArray) -> FloatArray:
    return np.abs(arr - np.round(arr)) <= INTEGER_TOL


def _nonpositive_integer(arr: FloatArray) -> FloatArray:
    return (arr <= INTEGER_TOL) & _integral(arr)


def _as_output(out: FloatArray) -> Any:
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class Order:
    """Order of a fractional operator.

    ``n`` is the smallest integer with ``n - 1 < alpha <= n``. An ``alpha`` within
    :data:`INTEGER_TOL` of an integer is snapped to it, so ``Order(2 + 1e-12).alpha == 2.0``.

    Examples:
        >>> Order(0.5).n
        1
        >>> Order(2.0).n
        2
        >>> Order(2.3).complement
        0.7000000000000002

    Args:
        alpha (float): The order, strictly positive.

    Raises:
        DomainError: If ``alpha`` is not a positive finite real.
    """

    alpha: float
    n: int = field(init=False)

    def __post_init__(self) -> None:
        """Validate ``alpha`` and derive ``n``."""
        try:
            alpha = float(self.alpha)
        except (TypeError, ValueError) as exc:
            raise DomainError(f'order must be a real number, got {self.alpha!r}') from exc
        if not math.isfinite(alpha) or alpha <= 0.0:
            raise DomainError(f'order must be positive, got {alpha!r}')
        nearest = round(alpha)
        if abs(alpha - nearest) <= INTEGER_TOL:
            if nearest == 0:
                raise DomainError(f'order must be positive, got {alpha!r}')
            alpha = float(nearest)
            n = int(nearest)
        else:
            n = math.floor(alpha) + 1
        object.__setattr__(self, 'alpha', alpha)
        object.__setattr__(self, 'n', n)

    @property
    def is_integer(self) -> bool:
        """Whether the order is a natural number."""
        return self.alpha == float(self.n)

    @property
    def complement(self) -> float:
        """The order ``n - alpha`` of the inner sum of a Riemann difference."""
        return self.n - self.alpha


def gamma_ratio(x: RealLike, y: RealLike) -> Any:
    """Compute ``Gamma(x) / Gamma(y)`` with the pole conventions of discrete fractional calculus.

    The regular case is evaluated as ``exp(lgamma(x) - lgamma(y))`` with the signs of both gamma
    values tracked separately, so long kernels do not overflow in intermediate steps.

    - a pole in the denominator only gives ``0``;
    - poles at ``x = -m`` and ``y = -k`` give the limit ``(-1)**(m - k) * k! / m!``;
    - a pole in the numerator only raises :class:`KernelSingularityError`.

    Examples:
        >>> round(gamma_ratio(6, 3.5), 3)
        36.108
        >>> gamma_ratio(4, -1)
        0.0
        >>> gamma_ratio(-1, -4)
        -24.0

    Args:
        x (float or array-like): Numerator argument.
        y (float or array-like): Denominator argument.

    Returns:
        The ratio, a ``float`` for scalar input and an array otherwise.

    Raises:
        KernelSingularityError: If some ``x`` is a nonpositive integer while ``y`` is not.
        DomainError: If a ratio of two poles does not fit in a float.
    """
    xa, ya = np.broadcast_arrays(
        np.asarray(x, dtype=np.float64),
        np.asarray(y, dtype=np.float64),
    )
    x_pole = _nonpositive_integer(xa)
    y_pole = _nonpositive_integer(ya)

    singular = x_pole & ~y_pole
    if np.any(singular):
        idx = np.argwhere(singular)[0]
        raise KernelSingularityError(float(xa[tuple(idx)]), float(ya[tuple(idx)]))

    out = np.zeros(xa.shape, dtype=np.float64)
    regular = ~x_pole & ~y_pole
    # positive integers up to 171 use the exact factorial table
    small_ints = regular & (xa < 171.5) & (ya < 171.5)
    small_ints &= _integral(xa) & _integral(ya)
    if np.any(small_ints):
        xi = np.round(xa[small_ints]).astype(np.int64) - 1
        yi = np.round(ya[small_ints]).astype(np.int64) - 1
        out[small_ints] = _FACTORIALS[xi] / _FACTORIALS[yi]
    regular &= ~small_ints
    if np.any(regular):
        xr, yr = xa[regular], ya[regular]
        with np.errstate(over='ignore', under='ignore'):
            out[regular] = (
                special.gammasgn(xr)
                * special.gammasgn(yr)
                * np.exp(special.gammaln(xr) - special.gammaln(yr))
            )

    both = x_pole & y_pole
    for idx in np.argwhere(both):
        m = -int(round(float(xa[tuple(idx)])))
        k = -int(round(float(ya[tuple(idx)])))
        try:
            ratio = math.factorial(k) / math.factorial(m)
        except OverflowError as exc:
            raise DomainError(
                f'Gamma({-m}) / Gamma({-k}) at two poles exceeds the float range',
            ) from exc
        out[tuple(idx)] = (-1) ** (m - k) * ratio

    return _as_output(out)


def falling_factorial(t: RealLike, alpha: RealLike) -> Any:
    """Falling factorial function ``t^(alpha) = Gamma(t + 1) / Gamma(t + 1 - alpha)``.

    For a nonnegative integer ``alpha`` this is the product ``t (t - 1) ... (t - alpha + 1)``.

    Examples:
        >>> falling_factorial(3, 3)
        6.0
        >>> falling_factorial(3, 5)
        0.0
    """
    ta = np.asarray(t, dtype=np.float64)
    return gamma_ratio(ta + 1.0, ta + 1.0 - np.asarray(alpha, dtype=np.float64))


def rising_factorial(t: RealLike, alpha: RealLike) -> Any:
    """Rising factorial function ``t^{alpha} = Gamma(t + alpha) / Gamma(t)`` with ``0^{alpha} = 0``.

    Examples:
        >>> rising_factorial(0, 0.7)
        0.0
        >>> rising_factorial(2, 3)
        24.0
    """
    ta, aa = np.broadcast_arrays(
        np.asarray(t, dtype=np.float64),
        np.asarray(alpha, dtype=np.float64),
    )
    out = np.zeros(ta.shape, dtype=np.float64)
    nonzero = np.abs(ta) > INTEGER_TOL
    if np.any(nonzero):
        out[nonzero] = gamma_ratio(ta[nonzero] + aa[nonzero], ta[nonzero])
    return _as_output(out)


def falling_product(t: float, n: int) -> float:
    """Falling factorial ``t (t - 1) ... (t - n + 1)`` as an explicit product."""
    return float(math.prod(t - j for j in range(n)))


def rising_product(t: float, m: int) -> float:
    """Rising factorial ``t (t + 1) ... (t + m - 1)`` as an explicit product."""
    return float(math.prod(t + k for k in range(m)))


def generalized_binomial(alpha: float, k: int) -> float:
    """Generalized binomial coefficient ``C(alpha, k)`` from the direct product formula."""
    if k < 0:
        return 0.0
    return math.prod(alpha - j for j in range(k)) / math.factorial(k)


@dataclass(frozen=True, eq=False)
class GLWeights:
    """Grunwald-Letnikov weight sequence of order ``alpha``.

    With ``signed=True`` the weights are ``(-1)**k * C(alpha, k)``, the coefficients of
    ``(1 - z)**alpha`` used by fractional differences. With ``signed=False`` they are
    ``(-1)**k * C(-alpha, k) = C(alpha + k - 1, k)``, the coefficients of ``(1 - z)**(-alpha)`` used
    by fractional sums.

    Args:
        alpha (float): The order.
        signed (bool): Difference weights if True, sum weights otherwise.
        w (np.ndarray): Weights ``w[0..K]``; stored read-only.
    """

    alpha: float
    signed: bool
    w: FloatArray

    def __post_init__(self) -> None:
        """Freeze the weight buffer."""
        w = np.array(self.w, dtype=np.float64)
        assert w.ndim == 1 and w.size >= 1, 'weights must be a non-empty 1-d sequence'
        w.setflags(write=False)
        object.__setattr__(self, 'w', w)

    @property
    def mode(self) -> WeightMode:
        """Either ``'difference'`` or ``'sum'``."""
        return 'difference' if self.signed else 'sum'

    @property
    def K(self) -> int:  # noqa: N802
        """Largest index held."""
        return int(self.w.size - 1)

    def ratio(self, k: int) -> float:
        """Return ``w[k] / w[k - 1]`` as given by the two-term recurrence."""
        assert k >= 1, 'the recurrence starts at k = 1'
        if self.signed:
            return (k - 1 - self.alpha) / k
        return (k - 1 + self.alpha) / k

    def __len__(self) -> int:
        """Return ``K + 1``."""
        return int(self.w.size)

    def __getitem__(self, k: Any) -> Any:
        """Index into the weights."""
        return self.w[k]


def gl_weights(alpha: float, signed: bool, K: int) -> GLWeights:  # noqa: N803
    """Compute ``w[0..K]`` by the multiplicative recurrence.

    ``w[0] = 1`` and ``w[k] = w[k - 1] * (k - 1 - alpha) / k`` for difference weights, or
    ``w[k] = w[k - 1] * (k - 1 + alpha) / k`` for sum weights.

    Examples:
        >>> gl_weights(0.5, True, 3).w.tolist()
        [1.0, -0.5, -0.125, -0.0625]
        >>> gl_weights(0.5, False, 3).w.tolist()
        [1.0, 0.5, 0.375, 0.3125]

    Args:
        alpha (float): The order.
        signed (bool): Difference weights if True, sum weights otherwise.
        K (int): Largest index, ``K >= 0``.

    Returns:
        The weight sequence.

    Raises:
        DomainError: If ``K`` is negative.
    """
    if K < 0:
        raise DomainError(f'weight count must be nonnegative, got K={K}')
    k = np.arange(1, K + 1, dtype=np.float64)
    ratios = (k - 1.0 - alpha) / k if signed else (k - 1.0 + alpha) / k
    w = np.concatenate(([1.0], np.cumprod(ratios)))
    return GLWeights(alpha=float(alpha), signed=bool(signed), w=w)
