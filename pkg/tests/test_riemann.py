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
"""Test Riemann fractional sums and differences."""

import numpy as np
import pytest

import helpers
from discfrac.common.exceptions import (
    DomainError,
    GridMisalignmentError,
    InsufficientSamplesError,
    IntegerOrderError,
)
from discfrac.common.grid import GridFunction
from discfrac.common.specfun import Order
from discfrac.operators import (
    OperatorSpec,
    riemann_diff,
    riemann_diff_alt,
    riemann_sum,
    sum_kernel,
)


SQUARES = GridFunction(0.0, [0.0, 1.0, 4.0, 9.0, 16.0])
RIGHT_SQUARES = GridFunction(0.0, [16.0, 9.0, 4.0, 1.0, 0.0])


def _spec(family, side, kind, alpha, f):
    anchor = f.origin if side == 'left' else f.end
    return OperatorSpec(family, side, kind, alpha, anchor)


def test_operator_spec():
    spec = OperatorSpec('nabla', 'left', 'sum', Order(0.5), anchor=0.0)
    assert spec.label == 'nabla-left-sum'
    assert spec.alpha == 0.5
    assert spec.n == 1
    assert spec.formulation == 'riemann'
    assert spec.replace(alpha=2.5).n == 3
    assert spec.replace(formulation='binomial').formulation == 'binomial'
    assert spec.to_dict() == {
        'family': 'nabla',
        'side': 'left',
        'kind': 'sum',
        'formulation': 'riemann',
        'alpha': 0.5,
        'anchor': 0.0,
    }
    assert OperatorSpec('delta', 'right', 'difference', 1.5, 2).order == Order(1.5)
    with pytest.raises(DomainError, match='order must be positive'):
        OperatorSpec('delta', 'left', 'sum', -0.5, 0.0)


@pytest.mark.parametrize(
    'args',
    [
        ('forward', 'left', 'sum', 0.5, 0.0),
        ('delta', 'up', 'sum', 0.5, 0.0),
        ('delta', 'left', 'integral', 0.5, 0.0),
        ('delta', 'left', 'sum', 0.5, float('inf')),
    ],
)
def test_operator_spec_invalid(args):
    with pytest.raises(DomainError, match='invalid operator spec'):
        OperatorSpec(*args)


def test_check_input():
    f = GridFunction(1.0, [1.0, 2.0, 3.0])
    OperatorSpec('delta', 'left', 'sum', 0.5, 1.0).check_input(f)
    OperatorSpec('delta', 'right', 'sum', 0.5, 3.0).check_input(f)
    with pytest.raises(GridMisalignmentError, match='grid misalignment'):
        OperatorSpec('delta', 'left', 'sum', 0.5, 0.0).check_input(f)
    with pytest.raises(GridMisalignmentError):
        OperatorSpec('nabla', 'right', 'sum', 0.5, 1.0).check_input(f)


def test_sum_examples():
    ones = GridFunction(0.0, np.ones(5))
    out = riemann_sum(_spec('delta', 'left', 'sum', 1.0, ones), ones)
    assert out.origin == 1.0
    helpers.assert_close(out.values, [1.0, 2.0, 3.0, 4.0, 5.0])

    out = riemann_sum(_spec('nabla', 'left', 'sum', 0.5, ones), ones)
    assert out.origin == 0.0
    assert out.at(0.0) == 0.0
    assert out.at(2.0) == pytest.approx(1.5, abs=1e-12)

    out = riemann_sum(_spec('delta', 'left', 'sum', 0.5, ones), ones)
    assert out.origin == 0.5
    assert out.at(0.5) == pytest.approx(1.0, abs=1e-12)
    assert out.at(1.5) == pytest.approx(1.5, abs=1e-12)


def test_right_sum_mirrors_left():
    ones = GridFunction(-4.0, np.ones(5))
    out = riemann_sum(_spec('nabla', 'right', 'sum', 0.5, ones), ones)
    assert out.end == 0.0
    assert out.at(0.0) == 0.0
    assert out.at(-2.0) == pytest.approx(1.5, abs=1e-12)
    out = riemann_sum(_spec('delta', 'right', 'sum', 0.5, ones), ones)
    assert out.end == -0.5
    assert out.at(-1.5) == pytest.approx(1.5, abs=1e-12)


@helpers.parametrize(
    family=['delta', 'nabla'],
    side=['left', 'right'],
    kind=['sum', 'difference'],
)
def test_output_grids(family, side, kind):
    f = GridFunction(0.0, np.linspace(-1.0, 1.0, 6))
    alpha = 0.4
    spec = _spec(family, side, kind, alpha, f)
    out = riemann_sum(spec, f) if kind == 'sum' else riemann_diff(spec, f)
    expected = {
        ('delta', 'left', 'sum'): (0.4, 6),
        ('delta', 'right', 'sum'): (-0.4, 6),
        ('nabla', 'left', 'sum'): (0.0, 6),
        ('nabla', 'right', 'sum'): (0.0, 6),
        ('delta', 'left', 'difference'): (0.6, 5),
        ('delta', 'right', 'difference'): (0.4, 5),
        ('nabla', 'left', 'difference'): (1.0, 5),
        ('nabla', 'right', 'difference'): (0.0, 5),
    }[(family, side, kind)]
    assert out.origin == pytest.approx(expected[0], abs=1e-12)
    assert out.length == expected[1]


@helpers.parametrize(family=['delta', 'nabla'], side=['left', 'right'])
def test_integer_order_difference_on_squares(family, side):
    f = SQUARES if side == 'left' else RIGHT_SQUARES
    out = riemann_diff(_spec(family, side, 'difference', 2.0, f), f)
    helpers.assert_close(out.values, [2.0, 2.0, 2.0])


def test_first_order_difference():
    out = riemann_diff(_spec('delta', 'left', 'difference', 1.0, SQUARES), SQUARES)
    assert out.origin == 0.0
    helpers.assert_close(out.values, [1.0, 3.0, 5.0, 7.0])


@helpers.parametrize(
    family=['delta', 'nabla'],
    side=['left', 'right'],
    alpha=[0.3, 1.45, 2.7],
)
def test_alternative_form_agrees(rng, family, side, alpha):
    f = GridFunction(-1.0, rng.uniform(-1.0, 1.0, size=12))
    spec = _spec(family, side, 'difference', alpha, f)
    out = riemann_diff(spec, f)
    alt = riemann_diff_alt(spec, f)
    assert alt.origin == pytest.approx(out.origin, abs=1e-12)
    helpers.assert_close(alt.values, out.values, rtol=1e-9, atol=1e-9)


def test_alternative_form_integer_order():
    with pytest.raises(IntegerOrderError, match='alternative form undefined at integer order'):
        riemann_diff_alt(_spec('delta', 'left', 'difference', 2.0, SQUARES), SQUARES)


def test_domain_errors():
    short = GridFunction(0.0, [1.0, 2.0])
    with pytest.raises(InsufficientSamplesError, match='insufficient samples'):
        riemann_diff(_spec('delta', 'left', 'difference', 2.5, short), short)
    with pytest.raises(InsufficientSamplesError):
        riemann_diff_alt(_spec('nabla', 'left', 'difference', 1.5, short), short)
    with pytest.raises(DomainError):
        riemann_sum(_spec('delta', 'left', 'difference', 0.5, short), short)
    with pytest.raises(DomainError):
        riemann_diff(_spec('delta', 'left', 'sum', 0.5, short), short)
    with pytest.raises(GridMisalignmentError):
        riemann_sum(OperatorSpec('delta', 'left', 'sum', 0.5, 1.0), short)
    binomial = OperatorSpec('delta', 'left', 'sum', 0.5, 0.0, 'binomial')
    with pytest.raises(DomainError):
        riemann_sum(binomial, short)


def test_sum_kernel_cauchy_function():
    helpers.assert_close(sum_kernel('delta', 'left', 3.0, [1.0, 2.0, 3.0]), [0.0, 0.0, 1.0])
    helpers.assert_close(sum_kernel('delta', 'right', 3.0, [-1.0, -2.0, -3.0]), [0.0, 0.0, 1.0])
    assert sum_kernel('nabla', 'left', 1.0, 0.0) == 1.0
    assert sum_kernel('nabla', 'left', 2.0, 3.0) == 4.0
    assert sum_kernel('nabla', 'right', 2.0, -3.0) == 4.0
    assert isinstance(sum_kernel('delta', 'left', 0.5, 1.5), float)


@pytest.mark.parametrize('n', [1, 2, 3])
def test_integer_sum_is_iterated_cumulative_sum(rng, n):
    f = GridFunction(0.0, rng.uniform(-1.0, 1.0, size=8))
    out = riemann_sum(_spec('delta', 'left', 'sum', float(n), f), f)
    assert out.origin == float(n)
    expected = f.values
    for _ in range(n):
        expected = np.cumsum(expected)
    helpers.assert_close(out.values, expected, rtol=1e-12, atol=1e-12)
