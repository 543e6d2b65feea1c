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
"""Test binomial fractional operators and their fast path."""

import numpy as np
import pytest

import helpers
from discfrac.common.exceptions import DomainError, InsufficientSamplesError
from discfrac.common.grid import GridFunction
from discfrac.operators import (
    OperatorSpec,
    apply_operator,
    gl_apply,
    gl_apply_fast,
    make_plan,
    riemann_diff,
    riemann_sum,
)
from discfrac.operators.binomial import split_sum_order
from discfrac.verify.engine import relative_error


FAMILIES = ['delta', 'nabla']
SIDES = ['left', 'right']
KINDS = ['sum', 'difference']


def _spec(family, side, kind, alpha, f, formulation='binomial'):
    anchor = f.origin if side == 'left' else f.end
    return OperatorSpec(family, side, kind, alpha, anchor, formulation)


def test_nabla_left_sum_example():
    ones = GridFunction(0.0, np.ones(3))
    out = gl_apply(_spec('nabla', 'left', 'sum', 0.5, ones), ones)
    assert out.origin == 0.0
    assert out.values.tolist() == [0.0, 1.0, 1.5]


def test_first_order_difference():
    f = GridFunction(0.0, [0.0, 1.0, 4.0, 9.0, 16.0])
    out = gl_apply(_spec('delta', 'left', 'difference', 1.0, f), f)
    assert out.origin == 0.0
    assert out.values.tolist() == [1.0, 3.0, 5.0, 7.0]
    out = gl_apply(_spec('delta', 'right', 'difference', 1.0, f), f)
    assert out.origin == 1.0
    assert out.values.tolist() == [-1.0, -3.0, -5.0, -7.0]
    # nabla operators skip the anchor value, here f(0) = 0
    out = gl_apply(_spec('nabla', 'left', 'difference', 1.0, f), f)
    assert out.origin == 1.0
    assert out.values.tolist() == [1.0, 3.0, 5.0, 7.0]
    out = gl_apply_fast(_spec('delta', 'left', 'difference', 1.0, f), f, threshold=1)
    helpers.assert_close(out.values, [1.0, 3.0, 5.0, 7.0])


def test_nabla_right_skips_anchor():
    f = GridFunction(0.0, [16.0, 9.0, 4.0, 1.0, 7.0])
    out = gl_apply(_spec('nabla', 'right', 'difference', 1.0, f), f)
    assert out.origin == 0.0
    assert out.end == 3.0
    # -(f(t + 1) - f(t)) with f(b) read as zero
    assert out.values.tolist() == [7.0, 5.0, 3.0, 1.0]


@helpers.parametrize(side=SIDES, kind=KINDS, alpha=[0.5, 1.3])
def test_nabla_never_reads_anchor(rng, side, kind, alpha):
    values = rng.uniform(-1.0, 1.0, size=10)
    changed = values.copy()
    changed[0 if side == 'left' else -1] += 5.0
    f, g = GridFunction(2.0, values), GridFunction(2.0, changed)
    spec = _spec('nabla', side, kind, alpha, f)
    assert gl_apply(spec, f).values.tolist() == gl_apply(spec, g).values.tolist()


def test_delta_left_reads_anchor():
    f = GridFunction(0.0, np.zeros(6))
    g = GridFunction(0.0, np.eye(6)[0])
    spec = _spec('delta', 'left', 'sum', 0.5, f)
    assert not np.array_equal(gl_apply(spec, f).values, gl_apply(spec, g).values)


@helpers.parametrize(family=FAMILIES, side=SIDES, kind=KINDS, alpha=[0.4, 1.0, 1.6, 2.5])
def test_agrees_with_riemann(rng, family, side, kind, alpha):
    f = GridFunction(-0.5, rng.uniform(-1.0, 1.0, size=20))
    riemann = _spec(family, side, kind, alpha, f, 'riemann')
    expected = riemann_sum(riemann, f) if kind == 'sum' else riemann_diff(riemann, f)
    out = gl_apply(_spec(family, side, kind, alpha, f), f)
    assert out.origin == pytest.approx(expected.origin, abs=1e-12)
    assert out.length == expected.length
    tolerance = 1e-12 if alpha == 1.0 else 1e-9
    assert relative_error(out.values, expected.values) <= tolerance


@helpers.parametrize(family=FAMILIES, side=SIDES, kind=KINDS, alpha=[0.3, 1.7, 2.5])
def test_fast_path_agrees(rng, family, side, kind, alpha):
    f = GridFunction(1.0, rng.uniform(-1.0, 1.0, size=4096))
    spec = _spec(family, side, kind, alpha, f)
    direct = gl_apply(spec, f)
    fast = gl_apply_fast(spec, f)
    assert fast.origin == direct.origin
    assert relative_error(fast.values, direct.values) <= 1e-9


@helpers.parametrize(family=FAMILIES, side=SIDES)
def test_fast_path_high_order_sums(rng, family, side):
    f = GridFunction(0.0, rng.uniform(-1.0, 1.0, size=16384))
    spec = _spec(family, side, 'sum', 2.9, f)
    assert relative_error(gl_apply_fast(spec, f).values, gl_apply(spec, f).values) <= 1e-9


@pytest.mark.parametrize(
    ('alpha', 'expected'),
    [(0.4, (0.4, 0)), (1.0, (1.0, 0)), (2.0, (1.0, 1)), (2.5, (0.5, 2)), (3.0, (1.0, 2))],
)
def test_split_sum_order(alpha, expected):
    assert split_sum_order(alpha) == expected


@helpers.parametrize(family=FAMILIES, side=SIDES, kind=KINDS)
def test_fast_path_short_grid(rng, family, side, kind):
    f = GridFunction(0.0, rng.uniform(-1.0, 1.0, size=16))
    spec = _spec(family, side, kind, 0.6, f)
    direct = gl_apply(spec, f)
    assert relative_error(gl_apply_fast(spec, f).values, direct.values) <= 1e-12
    fft = gl_apply_fast(spec, f, threshold=1)
    assert relative_error(fft.values, direct.values) <= 1e-12


@pytest.mark.parametrize('alpha', [0.3, 0.5, 1.7])
def test_sum_then_difference_is_identity(rng, alpha):
    f = GridFunction(0.0, rng.uniform(-1.0, 1.0, size=16))
    total = gl_apply(_spec('nabla', 'left', 'sum', alpha, f), f)
    back = gl_apply(_spec('nabla', 'left', 'difference', alpha, total), total)
    expected = f.restrict(back.origin, back.end)
    assert back.origin == expected.origin
    assert relative_error(back.values, expected.values) <= 1e-9


def test_make_plan():
    f = GridFunction(0.0, np.arange(5.0))
    plan = make_plan(_spec('nabla', 'right', 'difference', 1.5, f), f)
    assert plan.argument_map == 'f(t + k)'
    assert plan.reverse
    assert plan.skip_anchor
    assert plan.offset == 2
    assert plan.length == 3
    assert plan.origin == 0.0
    assert plan.weights.mode == 'difference'
    assert plan.upper_limit(0) == 1

    plan = make_plan(_spec('delta', 'left', 'sum', 0.5, f), f)
    assert plan.argument_map == 'f(t - alpha - k)'
    assert not plan.reverse
    assert plan.offset == 0
    assert plan.origin == 0.5
    assert plan.upper_limit(3) == 3
    assert plan.weights.K == 4


def test_domain_errors():
    f = GridFunction(0.0, [1.0, 2.0])
    with pytest.raises(InsufficientSamplesError, match='insufficient samples'):
        gl_apply(_spec('delta', 'left', 'difference', 2.5, f), f)
    with pytest.raises(DomainError):
        gl_apply(_spec('delta', 'left', 'difference', 0.5, f, 'riemann'), f)


@helpers.parametrize(formulation=['riemann', 'binomial'], fast=[False, True])
def test_apply_operator(formulation, fast):
    ones = GridFunction(0.0, np.ones(3))
    spec = _spec('nabla', 'left', 'sum', 0.5, ones, formulation)
    out = apply_operator(spec, ones, fast=fast)
    assert out.origin == 0.0
    assert out.at(2.0) == pytest.approx(1.5, abs=1e-12)
