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
"""Seeded input generators for the identity checks.

Every generator draws from the :class:`numpy.random.Generator` it is handed and reads its ranges
from the ``generator`` block of the check config, so a check is a pure function of its stream.
"""

from __future__ import annotations

import numpy as np

from discfrac.common.grid import GridFunction
from discfrac.common.specfun import Order
from discfrac.typing import FloatArray, Side
from discfrac.utils.config import Config


_MAX_REDRAWS = 1000


def sample_alpha(
    rng: np.random.Generator,
    gen: Config,
    exclude_integers: bool = True,
) -> float:
    """Draw an order uniformly from ``gen.alpha`` away from ``0`` and, optionally, all integers."""
    lo, hi = gen.alpha
    margin = gen.get('integer_margin', 1e-3)
    for _ in range(_MAX_REDRAWS):
        alpha = float(rng.uniform(lo, hi))
        nearest = round(alpha)
        if alpha <= margin:
            continue
        if exclude_integers and abs(alpha - nearest) <= margin:
            continue
        return alpha
    raise ValueError(f'cannot draw an order from {gen.alpha} with margin {margin}')


def sample_order(rng: np.random.Generator, gen: Config) -> int:
    """Draw an integer order from ``gen.orders``."""
    return int(rng.choice(np.asarray(gen.orders, dtype=np.int64)))


def sample_length(rng: np.random.Generator, gen: Config, minimum: int = 1) -> int:
    """Draw a grid length from ``gen.length``, raised to at least ``minimum``."""
    lo, hi = gen.length
    lo = max(int(lo), minimum)
    hi = max(int(hi), lo)
    return int(rng.integers(lo, hi + 1))


def sample_anchor(rng: np.random.Generator, gen: Config) -> float:
    """Draw a real anchor from ``gen.anchor``."""
    lo, hi = gen.anchor
    return float(rng.uniform(lo, hi))


def sample_values(rng: np.random.Generator, gen: Config, length: int) -> FloatArray:
    """Draw ``length`` values uniformly from ``gen.value_range``."""
    lo, hi = gen.value_range
    return rng.uniform(lo, hi, size=length)


def sample_reals(rng: np.random.Generator, bounds: list[float], size: int) -> FloatArray:
    """Draw ``size`` reals uniformly from ``bounds``."""
    lo, hi = bounds
    return rng.uniform(lo, hi, size=size)


def sample_grid(
    rng: np.random.Generator,
    gen: Config,
    minimum: int = 1,
    side: Side = 'left',
) -> GridFunction:
    """Draw a random grid function anchored at a random real.

    The anchor is the first point for ``side='left'`` and the last point for ``side='right'``.
    """
    length = sample_length(rng, gen, minimum)
    anchor = sample_anchor(rng, gen)
    values = sample_values(rng, gen, length)
    origin = anchor if side == 'left' else anchor - length + 1
    return GridFunction(origin, values)


def sample_case(
    rng: np.random.Generator,
    gen: Config,
    exclude_integers: bool = True,
    extra: int = 0,
    side: Side = 'left',
) -> tuple[Order, GridFunction]:
    """Draw an order and a grid long enough for a difference of that order.

    Args:
        rng (np.random.Generator): The random stream.
        gen (Config): Generator ranges.
        exclude_integers (bool, optional): Keep the order away from integers. Defaults to True.
        extra (int, optional): Additional points required beyond ``n + 1``. Defaults to 0.
        side (str, optional): Which end carries the anchor. Defaults to ``'left'``.

    Returns:
        The order and the grid function.
    """
    order = Order(sample_alpha(rng, gen, exclude_integers))
    return order, sample_grid(rng, gen, minimum=order.n + 1 + extra, side=side)
