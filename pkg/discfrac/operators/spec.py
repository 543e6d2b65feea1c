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
"""Operator specification shared by the Riemann and binomial formulations."""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import Any

from discfrac.common.exceptions import DomainError, GridMisalignmentError
from discfrac.common.grid import GridFunction
from discfrac.common.specfun import INTEGER_TOL, Order
from discfrac.typing import FAMILIES, FORMULATIONS, KINDS, SIDES, Family, Formulation, Kind, Side


@dataclass(frozen=True)
class OperatorSpec:
    """Which fractional operator to apply.

    ``anchor`` is the left end ``a`` for left operators and the right end ``b`` for right
    operators. Inputs of left operators must start at ``a``; inputs of right operators must end
    at ``b``.

    Examples:
        >>> spec = OperatorSpec('nabla', 'left', 'sum', Order(0.5), anchor=0.0)
        >>> spec.label
        'nabla-left-sum'

    Args:
        family (str): ``'delta'`` or ``'nabla'``.
        side (str): ``'left'`` or ``'right'``.
        kind (str): ``'sum'`` or ``'difference'``.
        order (Order or float): Order of the operator; a bare number is wrapped in :class:`Order`.
        anchor (float): ``a`` for left operators, ``b`` for right operators.
        formulation (str, optional): ``'riemann'`` or ``'binomial'``. Defaults to ``'riemann'``.

    Raises:
        DomainError: If a field is outside its allowed values.
    """

    family: Family
    side: Side
    kind: Kind
    order: Order
    anchor: float
    formulation: Formulation = 'riemann'

    def __post_init__(self) -> None:
        """Validate the fields."""
        for name, allowed in (
            ('family', FAMILIES),
            ('side', SIDES),
            ('kind', KINDS),
            ('formulation', FORMULATIONS),
        ):
            value = getattr(self, name)
            if value not in allowed:
                raise DomainError(
                    f'invalid operator spec: {name} must be one of {allowed}, got {value!r}',
                )
        if not isinstance(self.order, Order):
            object.__setattr__(self, 'order', Order(self.order))
        anchor = float(self.anchor)
        if not math.isfinite(anchor):
            raise DomainError(f'invalid operator spec: anchor must be finite, got {anchor!r}')
        object.__setattr__(self, 'anchor', anchor)

    @property
    def alpha(self) -> float:
        """The order ``alpha``."""
        return self.order.alpha

    @property
    def n(self) -> int:
        """Smallest integer ``n`` with ``n - 1 < alpha <= n``."""
        return self.order.n

    @property
    def label(self) -> str:
        """Short name such as ``'delta-right-difference'``."""
        return f'{self.family}-{self.side}-{self.kind}'

    def replace(self, **changes: Any) -> OperatorSpec:
        """Return a copy with some fields replaced; ``alpha=`` is accepted as well."""
        if 'alpha' in changes:
            changes['order'] = Order(changes.pop('alpha'))
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> dict[str, Any]:
        """Serialize to a flat mapping."""
        return {
            'family': self.family,
            'side': self.side,
            'kind': self.kind,
            'formulation': self.formulation,
            'alpha': self.alpha,
            'anchor': self.anchor,
        }

    def check_input(self, f: GridFunction) -> None:
        """Ensure ``f`` starts (left) or ends (right) at the anchor.

        Raises:
            GridMisalignmentError: If the input grid does not meet the anchor.
        """
        edge = f.origin if self.side == 'left' else f.end
        if abs(edge - self.anchor) > INTEGER_TOL:
            where = 'start' if self.side == 'left' else 'end'
            raise GridMisalignmentError(
                f'{self.label} input must {where} at the anchor {self.anchor!r}, '
                f'but its grid is [{f.origin!r}, {f.end!r}]',
            )

    def require_formulation(self, formulation: Formulation) -> None:
        """Raise :class:`DomainError` unless the spec uses ``formulation``."""
        if self.formulation != formulation:
            raise DomainError(
                f'invalid operator spec: expected formulation {formulation!r}, '
                f'got {self.formulation!r}',
            )

    def require_kind(self, kind: Kind) -> None:
        """Raise :class:`DomainError` unless the spec is of ``kind``."""
        if self.kind != kind:
            raise DomainError(f'invalid operator spec: expected kind {kind!r}, got {self.kind!r}')
