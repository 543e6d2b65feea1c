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
"""Registered identity checks.

Every check draws one input from its random stream, evaluates both sides of an identity and
returns a :class:`~discfrac.verify.engine.Trial`. Grid-valued sides are compared on the points
where both are defined; sides that must land on the same grid fail outright when they do not.
"""

from __future__ import annotations

import itertools
import math
from typing import Any, Callable

import numpy as np
from scipy import special

from discfrac.common.exceptions import DomainError, KernelSingularityError
from discfrac.common.grid import (
    AnchorPair,
    GridFunction,
    binomial_diff,
    delta,
    iterate_diff,
    nabla,
    q_reflect,
)
from discfrac.common.specfun import (
    INTEGER_TOL,
    Order,
    falling_factorial,
    falling_product,
    gamma_ratio,
    generalized_binomial,
    gl_weights,
    rising_factorial,
    rising_product,
)
from discfrac.operators import apply_operator
from discfrac.operators.binomial import gl_apply, gl_apply_fast
from discfrac.operators.riemann import riemann_diff, riemann_diff_alt, riemann_sum, sum_kernel
from discfrac.operators.spec import OperatorSpec
from discfrac.typing import (
    FAMILIES,
    FORMULATIONS,
    KINDS,
    SIDES,
    Family,
    FloatArray,
    Formulation,
    Kind,
    Side,
)
from discfrac.utils.config import Config
from discfrac.verify.engine import Trial, TrialFn, register_check
from discfrac.verify.generators import (
    sample_alpha,
    sample_anchor,
    sample_case,
    sample_grid,
    sample_length,
    sample_order,
    sample_reals,
)


def _plain(value: Any) -> Any:
    if isinstance(value, (GridFunction, OperatorSpec)):
        return value.to_dict()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    return value


def _case(**fields: Any) -> dict[str, Any]:
    return {key: _plain(value) for key, value in fields.items()}


def _anchor(f: GridFunction, side: Side) -> float:
    return f.origin if side == 'left' else f.end


def _mismatch(case: dict[str, Any], reason: str) -> Trial:
    return Trial(math.inf, 0.0, {**case, 'reason': reason})


def _shared(lhs: GridFunction, rhs: GridFunction, case: dict[str, Any]) -> Trial:
    """Compare on the grid points both sides share."""
    try:
        left, right = lhs.overlap(rhs)
    except DomainError as exc:
        return _mismatch(case, str(exc))
    return Trial(left.values, right.values, case)


def _same_grid(lhs: GridFunction, rhs: GridFunction, case: dict[str, Any]) -> Trial:
    """Compare two sides that must live on exactly the same grid."""
    if lhs.length != rhs.length or abs(lhs.origin - rhs.origin) > INTEGER_TOL:
        return _mismatch(case, f'{lhs!r} and {rhs!r} live on different grids')
    return Trial(lhs.values, rhs.values, case)


def _stack(parts: list[Trial], case: dict[str, Any]) -> Trial:
    """Join several comparisons into one trial."""
    lhs = np.concatenate([np.atleast_1d(np.asarray(part.lhs, dtype=np.float64)) for part in parts])
    rhs = np.concatenate([np.atleast_1d(np.asarray(part.rhs, dtype=np.float64)) for part in parts])
    pairs = [part.exact for part in parts if part.exact is not None]
    exact = None
    if pairs:
        exact = (
            np.concatenate([np.atleast_1d(pair[0]) for pair in pairs]),
            np.concatenate([np.atleast_1d(pair[1]) for pair in pairs]),
        )
    reasons = [part.case['reason'] for part in parts if 'reason' in part.case]
    if reasons:
        case = {**case, 'reason': '; '.join(reasons)}
    return Trial(lhs, rhs, case, exact=exact)


def _negated(f: GridFunction) -> GridFunction:
    return f.with_values(-f.values)


# Riemann and binomial operators agree

_EQUIVALENCES: dict[str, tuple[Family, Side]] = {
    'thm2.5-1': ('delta', 'left'),
    'thm2.5-2': ('delta', 'right'),
    'thm2.5-3': ('nabla', 'left'),
    'thm2.5-4': ('nabla', 'right'),
}


def _equivalence(family: Family, side: Side) -> TrialFn:
    def trial(rng: np.random.Generator, gen: Config) -> Trial:
        order, f = sample_case(rng, gen, side=side)
        case = _case(input=f, alpha=order.alpha, operator=f'{family}-{side}')
        parts = []
        for kind in KINDS:
            spec = OperatorSpec(family, side, kind, order, _anchor(f, side))
            binomial = spec.replace(formulation='binomial')
            parts.append(_same_grid(apply_operator(spec, f), apply_operator(binomial, f), case))
        return _stack(parts, case)

    return trial


for _check_id, (_family, _side) in _EQUIVALENCES.items():
    register_check(_check_id)(_equivalence(_family, _side))


# dual identities


def _padded_below(rng: np.random.Generator, gen: Config, y: GridFunction) -> GridFunction:
    """``y`` extended by an arbitrary value at ``a - 1``, a point the nabla side never reads."""
    extra = rng.uniform(*gen.value_range)
    return GridFunction(y.origin - 1.0, np.concatenate(([extra], y.values)))


@register_check('lem1.5-i')
def _left_dual_difference(rng: np.random.Generator, gen: Config) -> Trial:
    order, y = sample_case(rng, gen)
    a = y.origin
    lhs = riemann_diff(OperatorSpec('delta', 'left', 'difference', order, a), y)
    rhs = riemann_diff(
        OperatorSpec('nabla', 'left', 'difference', order, a - 1.0),
        _padded_below(rng, gen, y),
    )
    return _shared(lhs.shift(order.alpha), rhs, _case(input=y, alpha=order.alpha))


@register_check('lem1.5-ii')
def _left_dual_sum(rng: np.random.Generator, gen: Config) -> Trial:
    order, y = sample_case(rng, gen)
    a = y.origin
    lhs = riemann_sum(OperatorSpec('delta', 'left', 'sum', order, a), y)
    rhs = riemann_sum(
        OperatorSpec('nabla', 'left', 'sum', order, a - 1.0),
        _padded_below(rng, gen, y),
    )
    return _shared(lhs.shift(-order.alpha), rhs, _case(input=y, alpha=order.alpha))


def _right_dual_inputs(
    rng: np.random.Generator,
    gen: Config,
) -> tuple[Order, GridFunction, GridFunction]:
    """An order, ``y`` on ``_{b+1}N`` and its restriction to ``_bN``."""
    order, y = sample_case(rng, gen, extra=1, side='right')
    return order, y, GridFunction(y.origin, y.values[:-1])


@register_check('lem1.6-i')
def _right_dual_difference(rng: np.random.Generator, gen: Config) -> Trial:
    order, y, head = _right_dual_inputs(rng, gen)
    lhs = riemann_diff(OperatorSpec('delta', 'right', 'difference', order, head.end), head)
    rhs = riemann_diff(OperatorSpec('nabla', 'right', 'difference', order, y.end), y)
    return _shared(lhs.shift(-order.alpha), rhs, _case(input=y, alpha=order.alpha))


@register_check('lem1.6-ii')
def _right_dual_sum(rng: np.random.Generator, gen: Config) -> Trial:
    order, y, head = _right_dual_inputs(rng, gen)
    lhs = riemann_sum(OperatorSpec('delta', 'right', 'sum', order, head.end), head)
    rhs = riemann_sum(OperatorSpec('nabla', 'right', 'sum', order, y.end), y)
    return _shared(lhs.shift(order.alpha), rhs, _case(input=y, alpha=order.alpha))


# Q-operator identities


def _q_conjugate(
    family: Family,
    kind: Kind,
    order: Order,
    f: GridFunction,
    formulation: Formulation,
) -> Trial:
    """Left operator of ``Qf`` against ``Q`` of the right operator of ``f``."""
    anchors = AnchorPair.spanning(f)
    left = OperatorSpec(family, 'left', kind, order, anchors.a, formulation)
    right = left.replace(side='right', anchor=anchors.b)
    lhs = apply_operator(left, q_reflect(f, anchors))
    rhs = q_reflect(apply_operator(right, f), anchors)
    return _same_grid(lhs, rhs, _case(input=f, spec=left))


_Q_IDENTITIES: dict[str, tuple[Family, Kind]] = {
    'eq21': ('delta', 'sum'),
    'eq22': ('delta', 'difference'),
    'eq23': ('nabla', 'sum'),
    'eq24': ('nabla', 'difference'),
}


def _q_identity(family: Family, kind: Kind) -> TrialFn:
    def trial(rng: np.random.Generator, gen: Config) -> Trial:
        order, f = sample_case(rng, gen)
        return _q_conjugate(family, kind, order, f, 'riemann')

    return trial


for _check_id, (_family, _kind) in _Q_IDENTITIES.items():
    register_check(_check_id)(_q_identity(_family, _kind))


@register_check('qinv')
def _q_involution(rng: np.random.Generator, gen: Config) -> Trial:
    """``Q`` is an involution and preserves the max norm, for any integer-spaced anchors."""
    f = sample_grid(rng, gen)
    below, above = rng.integers(0, 4, size=2)
    anchors = AnchorPair(f.origin - float(below), f.end + float(above))
    reflected = q_reflect(f, anchors)
    twice = q_reflect(reflected, anchors)
    return Trial(
        [twice.origin, twice.length, np.max(np.abs(reflected.values))],
        [f.origin, f.length, np.max(np.abs(f.values))],
        _case(input=f, anchors=[anchors.a, anchors.b]),
        exact=(f.values, twice.values),
    )


@register_check('nabla-delta-q')
def _q_swaps_differences(rng: np.random.Generator, gen: Config) -> Trial:
    """``-Q nabla f = delta Q f`` and ``-Q delta f = nabla Q f``."""
    f = sample_grid(rng, gen, minimum=2)
    anchors = AnchorPair.spanning(f)
    case = _case(input=f)
    reflected = q_reflect(f, anchors)
    return _stack(
        [
            _same_grid(_negated(q_reflect(nabla(f), anchors)), delta(reflected), case),
            _same_grid(_negated(q_reflect(delta(f), anchors)), nabla(reflected), case),
        ],
        case,
    )


@register_check('gl-qconj')
def _binomial_q_conjugation(rng: np.random.Generator, gen: Config) -> Trial:
    order, f = sample_case(rng, gen)
    parts = [
        _q_conjugate(family, kind, order, f, 'binomial')
        for family, kind in itertools.product(FAMILIES, KINDS)
    ]
    return _stack(parts, _case(input=f, alpha=order.alpha))


# initial value problems solved by integer-order sums

Keep = Callable[[FloatArray, FloatArray], FloatArray]


def _kernel_sum(
    family: Family,
    side: Side,
    n: int,
    f: GridFunction,
    offsets: FloatArray,
    keep: Keep,
) -> FloatArray:
    """``sum_j H(t_i - s_j) f(s_j)`` over the pairs selected by ``keep(lag, j)``.

    ``t_i = f.origin + offsets[i]`` and ``s_j = f.origin + j``, so lags are exact integers.
    """
    j = np.arange(f.length)[None, :]
    lag = np.asarray(offsets, dtype=np.float64)[:, None] - j
    mask = keep(lag, j)
    weights = np.zeros(lag.shape, dtype=np.float64)
    if mask.any():
        weights[mask] = sum_kernel(family, side, float(n), lag[mask])
    return weights @ f.values


@register_check('ivp-15')
def _delta_left_ivp(rng: np.random.Generator, gen: Config) -> Trial:
    """``u`` solves ``delta^n u = f`` on ``N_a`` with ``u(a) = ... = u(a + n - 1) = 0``."""
    n = sample_order(rng, gen)
    f = sample_grid(rng, gen)
    u = riemann_sum(OperatorSpec('delta', 'left', 'sum', n, f.origin), f)
    initial = _kernel_sum('delta', 'left', n, f, np.arange(n), lambda lag, j: lag >= 1)
    extended = GridFunction(f.origin, np.concatenate((initial, u.values)))
    trial = _same_grid(iterate_diff(extended, 'delta', n), f, _case(input=f, order=n))
    trial.exact = (np.zeros(n), initial)
    return trial


@register_check('ivp-16')
def _delta_right_ivp(rng: np.random.Generator, gen: Config) -> Trial:
    """``u`` solves ``(-1)^n nabla^n u = f`` on ``_bN`` with ``n`` vanishing values at the top."""
    n = sample_order(rng, gen)
    f = sample_grid(rng, gen, side='right')
    u = riemann_sum(OperatorSpec('delta', 'right', 'sum', n, f.end), f)
    offsets = np.arange(f.length - n, f.length)
    initial = _kernel_sum('delta', 'right', n, f, offsets, lambda lag, j: lag <= -1)
    extended = GridFunction(u.origin, np.concatenate((u.values, initial)))
    residual = iterate_diff(extended, 'nabla', n, signed=True)
    trial = _same_grid(residual, f, _case(input=f, order=n))
    trial.exact = (np.zeros(n), initial)
    return trial


@register_check('ivp-s1')
def _nabla_left_ivp(rng: np.random.Generator, gen: Config) -> Trial:
    n = sample_order(rng, gen)
    f = sample_grid(rng, gen, minimum=2)
    u = riemann_sum(OperatorSpec('nabla', 'left', 'sum', n, f.origin), f)
    below = _kernel_sum(
        'nabla',
        'left',
        n,
        f,
        np.arange(-(n - 1), 0),
        lambda lag, j: (j >= 1) & (lag >= 0),
    )
    extended = GridFunction(f.origin - (n - 1), np.concatenate((below, u.values)))
    residual = iterate_diff(extended, 'nabla', n)
    trial = _same_grid(residual, f.restrict(f.origin + 1, f.end), _case(input=f, order=n))
    trial.exact = (np.zeros(n), extended.values[:n])
    return trial


@register_check('ivp-s2')
def _nabla_right_ivp(rng: np.random.Generator, gen: Config) -> Trial:
    n = sample_order(rng, gen)
    f = sample_grid(rng, gen, minimum=2, side='right')
    u = riemann_sum(OperatorSpec('nabla', 'right', 'sum', n, f.end), f)
    top = f.length - 1
    above = _kernel_sum(
        'nabla',
        'right',
        n,
        f,
        np.arange(top + 1, top + n),
        lambda lag, j: (j <= top - 1) & (lag <= 0),
    )
    extended = GridFunction(f.origin, np.concatenate((u.values, above)))
    residual = iterate_diff(extended, 'delta', n, signed=True)
    trial = _same_grid(residual, f.restrict(f.origin, f.end - 1), _case(input=f, order=n))
    trial.exact = (np.zeros(n), extended.values[-n:])
    return trial


# Cauchy functions


@register_check('cauchy-delta-left')
def _delta_left_cauchy(rng: np.random.Generator, gen: Config) -> Trial:
    """The delta left kernel of order ``n`` vanishes at lags ``1..n-1`` and equals 1 at ``n``."""
    n = sample_order(rng, gen)
    kernel = np.asarray(sum_kernel('delta', 'left', float(n), np.arange(1.0, n + 1)))
    return Trial(kernel[-1:], np.ones(1), _case(order=n), exact=(np.zeros(n - 1), kernel[:-1]))


@register_check('cauchy-delta-right')
def _delta_right_cauchy(rng: np.random.Generator, gen: Config) -> Trial:
    n = sample_order(rng, gen)
    kernel = np.asarray(sum_kernel('delta', 'right', float(n), -np.arange(1.0, n + 1)))
    return Trial(kernel[-1:], np.ones(1), _case(order=n), exact=(np.zeros(n - 1), kernel[:-1]))


@register_check('cauchy-nabla-left')
def _nabla_left_cauchy(rng: np.random.Generator, gen: Config) -> Trial:
    """``nabla^n`` annihilates the nabla left kernel, which vanishes below lag 0."""
    n = sample_order(rng, gen)
    length = sample_length(rng, gen, minimum=n + 1)
    s = sample_anchor(rng, gen)
    lags = np.arange(-(n - 1), length, dtype=np.float64)
    kernel = GridFunction(s - (n - 1), sum_kernel('nabla', 'left', float(n), lags))
    annihilated = iterate_diff(kernel, 'nabla', n)
    return Trial(
        np.concatenate((annihilated.values, kernel.values[n - 1 : n])),
        np.concatenate((np.zeros(annihilated.length), [1.0])),
        _case(order=n, anchor=s, length=length),
        exact=(np.zeros(n - 1), kernel.values[: n - 1]),
    )


@register_check('cauchy-nabla-right')
def _nabla_right_cauchy(rng: np.random.Generator, gen: Config) -> Trial:
    n = sample_order(rng, gen)
    length = sample_length(rng, gen, minimum=n + 1)
    s = sample_anchor(rng, gen)
    lags = np.arange(-(length - 1), n, dtype=np.float64)
    kernel = GridFunction(s - (length - 1), sum_kernel('nabla', 'right', float(n), lags))
    annihilated = iterate_diff(kernel, 'delta', n, signed=True)
    return Trial(
        np.concatenate((annihilated.values, kernel.values[length - 1 : length])),
        np.concatenate((np.zeros(annihilated.length), [1.0])),
        _case(order=n, anchor=s, length=length),
        exact=(np.zeros(n - 1), kernel.values[length:]),
    )


# factorial function properties


def _points(rng: np.random.Generator, gen: Config, key: str = 't') -> FloatArray:
    return sample_reals(rng, gen[key], gen.points)


@register_check('lem1.1-i')
def _falling_difference(rng: np.random.Generator, gen: Config) -> Trial:
    t, alpha = _points(rng, gen), _points(rng, gen, 'alpha')
    lhs = falling_factorial(t + 1.0, alpha) - falling_factorial(t, alpha)
    rhs = alpha * falling_factorial(t, alpha - 1.0)
    return Trial(lhs, rhs, _case(t=t, alpha=alpha))


@register_check('lem1.1-ii')
def _falling_step(rng: np.random.Generator, gen: Config) -> Trial:
    t, mu = _points(rng, gen), _points(rng, gen, 'alpha')
    lhs = (t - mu) * falling_factorial(t, mu)
    return Trial(lhs, falling_factorial(t, mu + 1.0), _case(t=t, mu=mu))


@register_check('lem1.1-iii')
def _falling_gamma(rng: np.random.Generator, gen: Config) -> Trial:
    mu = _points(rng, gen)
    return Trial(falling_factorial(mu, mu), special.gamma(mu + 1.0), _case(mu=mu))


@register_check('lem1.1-iv')
def _falling_monotone(rng: np.random.Generator, gen: Config) -> Trial | None:
    """``t^(alpha) <= r^(alpha)`` sampled on ``0 < t <= r < alpha < t + 1``."""
    t = _points(rng, gen)
    r = t + rng.uniform(0.0, 1.0, size=t.size)
    alpha = r + rng.uniform(0.0, 1.0, size=t.size) * (t + 1.0 - r)
    keep = (t > 0) & (t <= r) & (r < alpha) & (alpha < t + 1.0)
    if not keep.any():
        return None
    t, r, alpha = t[keep], r[keep], alpha[keep]
    return Trial(
        falling_factorial(t, alpha),
        falling_factorial(r, alpha),
        _case(t=t, r=r, alpha=alpha),
        relation='le',
    )


@register_check('lem1.1-v')
def _falling_power(rng: np.random.Generator, gen: Config) -> Trial | None:
    """``(t^(nu))^alpha <= t^(alpha nu)`` for ``0 < alpha < 1`` and ``t + 1 - nu > 0``."""
    t = _points(rng, gen)
    alpha = rng.uniform(0.0, 1.0, size=t.size)
    nu = rng.uniform(-2.0, t + 1.0)
    keep = (t > 0) & (alpha > 0) & (t + 1.0 - nu > 0)
    if not keep.any():
        return None
    t, alpha, nu = t[keep], alpha[keep], nu[keep]
    base = np.asarray(falling_factorial(t, nu))
    return Trial(
        base**alpha,
        falling_factorial(t, alpha * nu),
        _case(t=t, nu=nu, alpha=alpha),
        relation='le',
    )


@register_check('lem1.1-vi')
def _falling_split(rng: np.random.Generator, gen: Config) -> Trial | None:
    t = _points(rng, gen)
    alpha, beta = _points(rng, gen, 'alpha'), _points(rng, gen, 'alpha')
    # (t - beta)^(alpha) is only well conditioned away from the poles of Gamma(t - beta + 1)
    x = t - beta + 1.0
    keep = (x > 0) | (np.abs(x - np.round(x)) > 1e-6)
    if not keep.any():
        return None
    t, alpha, beta = t[keep], alpha[keep], beta[keep]
    try:
        rhs = falling_factorial(t - beta, alpha) * falling_factorial(t, beta)
    except KernelSingularityError:
        return None
    return Trial(falling_factorial(t, alpha + beta), rhs, _case(t=t, alpha=alpha, beta=beta))


def _integer_gaps(rng: np.random.Generator, gen: Config) -> tuple[FloatArray, FloatArray]:
    """Real ``t`` and ``s = t + d`` with integer ``d`` drawn from ``gen.lag``."""
    t = _points(rng, gen, 'anchor')
    lo, hi = gen.lag
    d = rng.integers(lo, hi + 1, size=t.size)
    return t, t + d


@register_check('ou1')
def _kernel_nabla_s(rng: np.random.Generator, gen: Config) -> Trial:
    """``nabla_s (s - t)^(alpha-1) = (alpha - 1)(rho(s) - t)^(alpha-2)``."""
    t, s = _integer_gaps(rng, gen)
    alpha = _points(rng, gen, 'alpha')
    lhs = falling_factorial(s - t, alpha - 1.0) - falling_factorial(s - 1.0 - t, alpha - 1.0)
    rhs = (alpha - 1.0) * falling_factorial(s - 1.0 - t, alpha - 2.0)
    return Trial(lhs, rhs, _case(t=t, s=s, alpha=alpha))


@register_check('ou2')
def _kernel_nabla_t(rng: np.random.Generator, gen: Config) -> Trial:
    """``nabla_t (rho(s) - t)^(alpha-1) = -(alpha - 1)(rho(s) - t)^(alpha-2)``."""
    t, s = _integer_gaps(rng, gen)
    alpha = _points(rng, gen, 'alpha')
    lhs = falling_factorial(s - 1.0 - t, alpha - 1.0) - falling_factorial(
        s - 1.0 - (t - 1.0),
        alpha - 1.0,
    )
    rhs = -(alpha - 1.0) * falling_factorial(s - 1.0 - t, alpha - 2.0)
    return Trial(lhs, rhs, _case(t=t, s=s, alpha=alpha))


@register_check('oper')
def _rising_nabla(rng: np.random.Generator, gen: Config) -> Trial:
    t, alpha = _points(rng, gen), _points(rng, gen, 'alpha')
    lhs = rising_factorial(t, alpha) - rising_factorial(t - 1.0, alpha)
    return Trial(lhs, alpha * rising_factorial(t, alpha - 1.0), _case(t=t, alpha=alpha))


@register_check('oper2')
def _rising_as_falling(rng: np.random.Generator, gen: Config) -> Trial:
    t, alpha = _points(rng, gen), _points(rng, gen, 'alpha')
    return Trial(
        rising_factorial(t, alpha),
        falling_factorial(t + alpha - 1.0, alpha),
        _case(t=t, alpha=alpha),
    )


@register_check('oper3')
def _rising_kernel_delta_t(rng: np.random.Generator, gen: Config) -> Trial:
    """``delta_t (s - rho(t))^{alpha} = -alpha (s - rho(t))^{alpha-1}``, rising factorials."""
    t, s = _integer_gaps(rng, gen)
    alpha = _points(rng, gen, 'alpha')
    lhs = rising_factorial(s - t, alpha) - rising_factorial(s - (t - 1.0), alpha)
    rhs = -alpha * rising_factorial(s - (t - 1.0), alpha - 1.0)
    return Trial(lhs, rhs, _case(t=t, s=s, alpha=alpha))


@register_check('eq12-kernel-forms')
def _right_kernel_forms(rng: np.random.Generator, gen: Config) -> Trial:
    """Both forms of each right kernel, and :func:`sum_kernel`, coincide."""
    t, s = _integer_gaps(rng, gen)
    s_delta = np.maximum(s, t + 1.0)
    alpha = sample_alpha(rng, gen, exclude_integers=False)
    scale = gamma_ratio(1.0, alpha)
    delta_rho = falling_factorial(s_delta - 1.0 - t, alpha - 1.0)
    nabla_sigma = rising_factorial(s + 1.0 - t, alpha - 1.0)
    lhs = np.concatenate(
        (
            falling_factorial(s_delta - (t + 1.0), alpha - 1.0),
            sum_kernel('delta', 'right', alpha, t - s_delta),
            rising_factorial(s - (t - 1.0), alpha - 1.0),
            sum_kernel('nabla', 'right', alpha, t - s),
        ),
    )
    rhs = np.concatenate((delta_rho, scale * delta_rho, nabla_sigma, scale * nabla_sigma))
    return Trial(lhs, rhs, _case(t=t, s=s, alpha=alpha))


@register_check('eq1')
def _falling_as_product(rng: np.random.Generator, gen: Config) -> Trial:
    """Gamma-ratio falling factorial against the explicit product, integers included."""
    t = _points(rng, gen)
    t = np.where(rng.random(t.size) < 0.5, np.round(t), t)
    n = rng.choice(np.asarray(gen.orders, dtype=np.int64), size=t.size)
    rhs = np.array([falling_product(float(ti), int(ni)) for ti, ni in zip(t, n)])
    return Trial(falling_factorial(t, n.astype(np.float64)), rhs, _case(t=t, n=n))


@register_check('eq2-poles')
def _pole_conventions(rng: np.random.Generator, gen: Config) -> Trial:
    """Both poles give the limit ratio, a lone denominator pole 0, a lone numerator pole raises."""
    orders = np.asarray(gen.orders, dtype=np.int64)
    m, k = rng.choice(orders, size=(2, gen.points))
    both = np.asarray(gamma_ratio(-m.astype(np.float64), -k.astype(np.float64)))
    limits = np.array(
        [
            falling_product(-mi - 1.0, ki - mi)
            if mi < ki
            else 1.0 / falling_product(-ki - 1.0, mi - ki)
            for mi, ki in zip(m.tolist(), k.tolist())
        ],
    )
    x = rng.uniform(0.5, 10.0, size=gen.points)
    denominator_only = np.asarray(gamma_ratio(x, -k.astype(np.float64)))
    raised = []
    for mi, xi in zip(m.tolist(), x.tolist()):
        try:
            gamma_ratio(-float(mi), xi)
        except KernelSingularityError:
            raised.append(1.0)
        else:
            raised.append(0.0)
    return Trial(
        np.concatenate((both, [gamma_ratio(-1.0, -4.0)])),
        np.concatenate((limits, [-24.0])),
        _case(m=m, k=k, x=x),
        exact=(
            np.concatenate((np.zeros(gen.points), np.ones(gen.points), [0.0])),
            np.concatenate((denominator_only, raised, [gamma_ratio(4.0, -1.0)])),
        ),
    )


@register_check('eq7')
def _rising_as_product(rng: np.random.Generator, gen: Config) -> Trial:
    t = _points(rng, gen)
    m = rng.choice(np.asarray(gen.orders, dtype=np.int64), size=t.size)
    rhs = np.array([rising_product(float(ti), int(mi)) for ti, mi in zip(t, m)])
    zero_base = np.asarray(rising_factorial(np.zeros(t.size), _points(rng, gen, 'alpha')))
    return Trial(
        rising_factorial(t, m.astype(np.float64)),
        rhs,
        _case(t=t, m=m),
        exact=(np.zeros(t.size), zero_base),
    )


# classical and binomial building blocks


@register_check('binom-diff')
def _binomial_expansion(rng: np.random.Generator, gen: Config) -> Trial:
    n = sample_order(rng, gen)
    f = sample_grid(rng, gen, minimum=n + 1)
    op: Family = FAMILIES[int(rng.integers(len(FAMILIES)))]
    return _same_grid(binomial_diff(f, op, n), iterate_diff(f, op, n), _case(input=f, op=op, n=n))


@register_check('glweights')
def _weight_recurrence(rng: np.random.Generator, gen: Config) -> Trial:
    """Recurrence weights against ``(-1)^k C(alpha, k)`` and ``(-1)^k C(-alpha, k)``."""
    alpha = sample_alpha(rng, gen, exclude_integers=False)
    lo, hi = gen.K
    K = int(rng.integers(lo, hi + 1))  # noqa: N806
    lhs, rhs = [], []
    for signed in (True, False):
        lhs.append(gl_weights(alpha, signed, K).w)
        base = alpha if signed else -alpha
        rhs.append(np.array([(-1) ** k * generalized_binomial(base, k) for k in range(K + 1)]))
    return Trial(np.concatenate(lhs), np.concatenate(rhs), _case(alpha=alpha, K=K))


@register_check('fastpath')
def _fast_path(rng: np.random.Generator, gen: Config) -> Trial:
    order = Order(sample_alpha(rng, gen, exclude_integers=False))
    f = sample_grid(rng, gen, minimum=order.n + 1)
    case = _case(input=f, alpha=order.alpha)
    parts = []
    for family, side, kind in itertools.product(FAMILIES, SIDES, KINDS):
        spec = OperatorSpec(family, side, kind, order, _anchor(f, side), 'binomial')
        parts.append(_same_grid(gl_apply(spec, f), gl_apply_fast(spec, f), case))
    return _stack(parts, case)


# Riemann differences in single-sum form

_ALTERNATIVE_FORMS: dict[str, tuple[Family, Side]] = {
    'alt-25': ('delta', 'left'),
    'alt-26': ('nabla', 'left'),
    'alt-27': ('nabla', 'right'),
    'alt-28': ('delta', 'right'),
}


def _alternative_form(family: Family, side: Side) -> TrialFn:
    def trial(rng: np.random.Generator, gen: Config) -> Trial:
        order, f = sample_case(rng, gen, side=side)
        spec = OperatorSpec(family, side, 'difference', order, _anchor(f, side))
        case = _case(input=f, spec=spec)
        return _same_grid(riemann_diff(spec, f), riemann_diff_alt(spec, f), case)

    return trial


for _check_id, (_family, _side) in _ALTERNATIVE_FORMS.items():
    register_check(_check_id)(_alternative_form(_family, _side))


# integer orders and output grids

_INTEGER_DIFFERENCES: dict[tuple[str, str], tuple[Family, bool]] = {
    ('delta', 'left'): ('delta', False),
    ('delta', 'right'): ('nabla', True),
    ('nabla', 'left'): ('nabla', False),
    ('nabla', 'right'): ('delta', True),
}


def integer_order_reference(
    family: Family,
    side: Side,
    kind: Kind,
    n: int,
    f: GridFunction,
) -> GridFunction:
    """Classical counterpart of an order-``n`` operator.

    Differences are (signed) iterated differences and sums are ``n``-fold cumulative sums. Nabla
    operators see ``f`` with its anchor value replaced by ``0``.

    Args:
        family (str): ``'delta'`` or ``'nabla'``.
        side (str): ``'left'`` or ``'right'``.
        kind (str): ``'sum'`` or ``'difference'``.
        n (int): The integer order.
        f (GridFunction): Input spanning both anchors.

    Returns:
        The expected output on the operator's output grid.
    """
    g = f
    if family == 'nabla':
        values = f.values.copy()
        values[0 if side == 'left' else -1] = 0.0
        g = f.with_values(values)
    if kind == 'difference':
        op, signed = _INTEGER_DIFFERENCES[(family, side)]
        return iterate_diff(g, op, n, signed=signed)
    values = g.values if side == 'left' else g.values[::-1]
    for _ in range(n):
        values = np.cumsum(values)
    if side == 'right':
        values = values[::-1]
    shift = 0 if family == 'nabla' else (n if side == 'left' else -n)
    return GridFunction(f.origin + shift, values)


@register_check('intorder')
def _integer_order(rng: np.random.Generator, gen: Config) -> Trial:
    n = sample_order(rng, gen)
    f = sample_grid(rng, gen, minimum=n + 1)
    case = _case(input=f, order=n)
    parts = []
    for family, side, kind in itertools.product(FAMILIES, SIDES, KINDS):
        reference = integer_order_reference(family, side, kind, n, f)
        for formulation in FORMULATIONS:
            spec = OperatorSpec(family, side, kind, n, _anchor(f, side), formulation)
            parts.append(_same_grid(apply_operator(spec, f), reference, case))
    return _stack(parts, case)


def expected_grid(spec: OperatorSpec, f: GridFunction) -> tuple[float, int]:
    """Anchored edge and length of the output grid of ``spec`` on ``f``.

    The edge is the first output point for left operators and the last one for right operators.
    """
    alpha, n = spec.alpha, spec.n
    if spec.kind == 'sum':
        shift, length = (alpha if spec.family == 'delta' else 0.0), f.length
    else:
        shift, length = (n - alpha if spec.family == 'delta' else float(n)), f.length - n
    if spec.side == 'left':
        return f.origin + shift, length
    return f.end - shift, length


@register_check('domains')
def _output_domains(rng: np.random.Generator, gen: Config) -> Trial:
    """Output grids of all sixteen operators, and the zero of nabla sums at their anchor."""
    if rng.random() < 0.25:
        order = Order(sample_order(rng, gen))
    else:
        order = Order(sample_alpha(rng, gen))
    f = sample_grid(rng, gen, minimum=order.n + 1)
    lhs: list[float] = []
    rhs: list[float] = []
    at_anchor: list[float] = []
    operators = itertools.product(FAMILIES, SIDES, KINDS, FORMULATIONS)
    for family, side, kind, formulation in operators:
        spec = OperatorSpec(family, side, kind, order, _anchor(f, side), formulation)
        out = apply_operator(spec, f)
        edge, length = expected_grid(spec, f)
        lhs += [out.origin if side == 'left' else out.end, float(out.length)]
        rhs += [edge, float(length)]
        if family == 'nabla' and kind == 'sum':
            at_anchor.append(float(out.values[0 if side == 'left' else -1]))
    return Trial(
        lhs,
        rhs,
        _case(input=f, alpha=order.alpha),
        exact=(np.zeros(len(at_anchor)), np.array(at_anchor)),
    )
