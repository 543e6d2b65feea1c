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
"""Grid-indexed sequences and classical difference calculus.

A :class:`GridFunction` stores ``L`` values on the unit-spaced grid ``origin + {0, ..., L-1}``.
The origin is an arbitrary real, which lets fractional operators express domain shifts such as
``N_{a + alpha}`` exactly.
"""

from __future__ import annotations

import csv
import json
import math
import os
from dataclasses import dataclass
from typing import Any, Iterator

import numpy as np

from discfrac.common.exceptions import (
    DomainError,
    GridMisalignmentError,
    InsufficientSamplesError,
    ParseError,
)
from discfrac.common.specfun import INTEGER_TOL
from discfrac.typing import ArrayLike, Family, FloatArray


SIG_DIGITS: int = 12
SPACING_TOL: float = 1e-6


def format_real(x: float) -> str:
    """Format a real with twelve significant digits."""
    return f'{float(x):.{SIG_DIGITS}g}'


def _round_sig(x: float) -> float:
    return float(format_real(x))


@dataclass(frozen=True, eq=False)
class GridFunction:
    """A finite real sequence on a unit-spaced grid.

    Value ``values[j]`` lives at grid point ``origin + j``. A right-ended domain
    ``{b - L + 1, ..., b}`` is stored with ``origin = b - L + 1``.

    Examples:
        >>> f = GridFunction(0.5, [1.0, 2.0, 4.0])
        >>> f.end
        2.5
        >>> f.at(1.5)
        2.0

    Args:
        origin (float): First grid point.
        values (array-like): Values, at least one.

    Raises:
        InsufficientSamplesError: If ``values`` is empty.
    """

    origin: float
    values: FloatArray

    def __post_init__(self) -> None:
        """Copy the values into a read-only float array."""
        values = np.array(self.values, dtype=np.float64).reshape(-1)
        if values.size < 1:
            raise InsufficientSamplesError(1, 0, 'a grid function')
        origin = float(self.origin)
        if not math.isfinite(origin):
            raise DomainError(f'grid origin must be finite, got {origin!r}')
        values.setflags(write=False)
        object.__setattr__(self, 'origin', origin)
        object.__setattr__(self, 'values', values)

    @property
    def length(self) -> int:
        """Number of stored values."""
        return int(self.values.size)

    @property
    def end(self) -> float:
        """Last grid point."""
        return self.origin + self.length - 1

    @property
    def points(self) -> FloatArray:
        """The grid points ``origin + j``."""
        return self.origin + np.arange(self.length, dtype=np.float64)

    def __len__(self) -> int:
        """Return the number of stored values."""
        return self.length

    def __iter__(self) -> Iterator[tuple[float, float]]:
        """Iterate over ``(t, value)`` pairs."""
        return zip(self.points.tolist(), self.values.tolist())

    def __repr__(self) -> str:
        """Return a short representation."""
        return f'GridFunction(origin={self.origin!r}, length={self.length})'

    def index_of(self, t: float) -> int:
        """Return the index of grid point ``t``.

        Raises:
            GridMisalignmentError: If ``t`` is not one of the stored grid points.
        """
        offset = t - self.origin
        j = round(offset)
        if abs(offset - j) > INTEGER_TOL or not 0 <= j < self.length:
            raise GridMisalignmentError(f'{t!r} is not a point of [{self.origin!r}, {self.end!r}]')
        return int(j)

    def at(self, t: float) -> float:
        """Return the value at grid point ``t``."""
        return float(self.values[self.index_of(t)])

    def alignable(self, other: GridFunction) -> bool:
        """Whether both grids differ by an integer shift."""
        offset = other.origin - self.origin
        return abs(offset - round(offset)) <= INTEGER_TOL

    def with_values(self, values: ArrayLike) -> GridFunction:
        """Return a function on the same origin with new values."""
        return GridFunction(self.origin, values)

    def shift(self, offset: float) -> GridFunction:
        """Relabel the grid: the result takes value ``f(t - offset)`` at ``t``."""
        return GridFunction(self.origin + offset, self.values)

    def restrict(self, lo: float, hi: float) -> GridFunction:
        """Restrict to the grid points inside ``[lo, hi]``.

        Raises:
            InsufficientSamplesError: If no grid point lies inside the interval.
        """
        start = max(0, math.ceil(lo - self.origin - INTEGER_TOL))
        stop = min(self.length - 1, math.floor(hi - self.origin + INTEGER_TOL))
        if stop < start:
            raise InsufficientSamplesError(1, 0, f'restriction to [{lo!r}, {hi!r}]')
        return GridFunction(self.origin + start, self.values[start : stop + 1])

    def overlap(self, other: GridFunction) -> tuple[GridFunction, GridFunction]:
        """Restrict ``self`` and ``other`` to their shared grid points.

        Raises:
            GridMisalignmentError: If the two grids are not alignable.
            InsufficientSamplesError: If the grids share no point.
        """
        if not self.alignable(other):
            raise GridMisalignmentError(
                f'origins {self.origin!r} and {other.origin!r} do not differ by an integer',
            )
        lo = max(self.origin, other.origin)
        hi = min(self.end, other.end)
        return self.restrict(lo, hi), other.restrict(lo, hi)

    def to_dict(self) -> dict[str, Any]:
        """Serialize to ``{origin, values}`` with twelve significant digits."""
        return {
            'origin': _round_sig(self.origin),
            'values': [_round_sig(v) for v in self.values.tolist()],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any], origin: float | None = None) -> GridFunction:
        """Build from ``{origin, values}``; ``origin`` is used when the mapping has none."""
        if 'values' not in data:
            raise ParseError('mapping', 'missing "values"')
        start = data.get('origin', origin)
        if start is None:
            raise ParseError('mapping', 'missing "origin" and no default origin given')
        try:
            start = float(start)
            values = np.asarray(data['values'], dtype=np.float64)
        except (TypeError, ValueError) as exc:
            raise ParseError('mapping', str(exc)) from exc
        if values.ndim != 1 or values.size == 0:
            raise ParseError('mapping', '"values" must be a non-empty list of numbers')
        return cls(start, values)


@dataclass(frozen=True)
class AnchorPair:
    """Left and right anchors ``a <= b`` with ``b - a`` an integer.

    Raises:
        GridMisalignmentError: If ``b < a`` or ``b - a`` is not an integer.
    """

    a: float
    b: float

    def __post_init__(self) -> None:
        """Validate the anchors."""
        a, b = float(self.a), float(self.b)
        span = b - a
        if span < -INTEGER_TOL:
            raise GridMisalignmentError(f'right anchor {b!r} lies before left anchor {a!r}')
        if abs(span - round(span)) > INTEGER_TOL:
            raise GridMisalignmentError(f'anchors {a!r} and {b!r} do not differ by an integer')
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'b', a + round(span))

    @property
    def length(self) -> int:
        """Number of points of ``N_a`` intersected with ``_bN``."""
        return int(round(self.b - self.a)) + 1

    @classmethod
    def spanning(cls, f: GridFunction) -> AnchorPair:
        """Anchors at the first and last point of ``f``."""
        return cls(f.origin, f.end)


def _require(f: GridFunction, needed: int, what: str) -> None:
    if f.length < needed:
        raise InsufficientSamplesError(needed, f.length, what)


def delta(f: GridFunction) -> GridFunction:
    """Forward difference ``f(t + 1) - f(t)``, stored from ``f.origin``."""
    _require(f, 2, 'delta')
    return GridFunction(f.origin, np.diff(f.values))


def nabla(f: GridFunction) -> GridFunction:
    """Backward difference ``f(t) - f(t - 1)``, stored from ``f.origin + 1``."""
    _require(f, 2, 'nabla')
    return GridFunction(f.origin + 1.0, np.diff(f.values))


def _check_op(op: str, n: int) -> None:
    if op not in ('delta', 'nabla'):
        raise DomainError(f'difference operator must be "delta" or "nabla", got {op!r}')
    if n < 1:
        raise DomainError(f'difference order must be a positive integer, got {n!r}')


def iterate_diff(f: GridFunction, op: Family, n: int, signed: bool = False) -> GridFunction:
    """Apply ``delta`` or ``nabla`` ``n`` times.

    With ``signed=True`` the result is multiplied by ``(-1)**n``.

    Raises:
        InsufficientSamplesError: If ``f`` has at most ``n`` values.
    """
    _check_op(op, n)
    _require(f, n + 1, f'{op}^{n}')
    step = delta if op == 'delta' else nabla
    out = f
    for _ in range(n):
        out = step(out)
    if signed and n % 2 == 1:
        out = out.with_values(-out.values)
    return out


def binomial_diff(f: GridFunction, op: Family, n: int) -> GridFunction:
    """``n``-th difference as one weighted sum per point.

    ``delta^n f(t) = sum_k (-1)^k C(n, k) f(t + n - k)`` and
    ``nabla^n f(t) = sum_k (-1)^k C(n, k) f(t - k)``; both read the same ``n + 1`` consecutive
    values and differ only in where the result is stored.
    """
    _check_op(op, n)
    _require(f, n + 1, f'{op}^{n}')
    coeffs = np.array([(-1) ** k * math.comb(n, k) for k in range(n + 1)], dtype=np.float64)
    values = np.convolve(f.values, coeffs, mode='valid')
    origin = f.origin if op == 'delta' else f.origin + n
    return GridFunction(origin, values)


def q_reflect(f: GridFunction, anchors: AnchorPair) -> GridFunction:
    """Reflection ``(Qf)(s) = f(a + b - s)`` about the midpoint of the anchors."""
    return GridFunction(anchors.a + anchors.b - f.end, f.values[::-1])


def cumulative_sum(f: GridFunction, op: Family = 'delta') -> GridFunction:
    """Inverse of ``delta`` or ``nabla`` vanishing at its first point.

    The delta inverse ``F`` lives on ``f.origin + {0, ..., L}`` with ``F(origin) = 0`` and
    ``delta(F) = f``. The nabla inverse is the same sequence stored one step earlier, so that
    ``nabla(F) = f``.
    """
    _check_op(op, 1)
    values = np.concatenate(([0.0], np.cumsum(f.values)))
    origin = f.origin if op == 'delta' else f.origin - 1.0
    return GridFunction(origin, values)


def _default_origin(source: str, length: int, origin: float | None, end: float | None) -> float:
    if origin is not None:
        return float(origin)
    if end is not None:
        return float(end) - length + 1
    raise ParseError(source, 'no "t" column and neither origin nor end given')


def read_csv(
    path: str | os.PathLike[str],
    origin: float | None = None,
    end: float | None = None,
) -> GridFunction:
    """Read a ``t,value`` (or value-only) CSV file.

    Args:
        path (str): File to read.
        origin (float or None, optional): Origin used when the file has no ``t`` column.
        end (float or None, optional): Last grid point used when the file has no ``t`` column
            and no ``origin`` is given.

    Raises:
        ParseError: On malformed content or non-unit spacing.
    """
    source = os.fspath(path)
    try:
        with open(source, encoding='utf-8', newline='') as file:
            rows = [row for row in csv.reader(file) if row and any(cell.strip() for cell in row)]
    except (OSError, UnicodeDecodeError, csv.Error) as exc:
        raise ParseError(source, str(exc)) from exc
    if not rows:
        raise ParseError(source, 'empty file')

    header = [cell.strip().lower() for cell in rows[0]]
    if header == ['t', 'value']:
        has_t = True
        body = rows[1:]
    elif header == ['value']:
        has_t = False
        body = rows[1:]
    else:
        has_t = len(rows[0]) == 2
        body = rows
    if not body:
        raise ParseError(source, 'no data rows')

    try:
        if has_t:
            if any(len(row) != 2 for row in body):
                raise ParseError(source, 'every row must hold exactly "t,value"')
            ts = np.array([float(row[0]) for row in body])
            values = np.array([float(row[1]) for row in body])
        else:
            if any(len(row) != 1 for row in body):
                raise ParseError(source, 'every row must hold exactly one value')
            ts = None
            values = np.array([float(row[0]) for row in body])
    except ValueError as exc:
        raise ParseError(source, str(exc)) from exc

    if ts is not None:
        if ts.size > 1 and not np.allclose(np.diff(ts), 1.0, rtol=0.0, atol=SPACING_TOL):
            raise ParseError(source, 'grid points must be unit spaced and increasing')
        return GridFunction(float(ts[0]), values)
    return GridFunction(_default_origin(source, values.size, origin, end), values)


def read_json(
    path: str | os.PathLike[str],
    origin: float | None = None,
    end: float | None = None,
) -> GridFunction:
    """Read a ``{origin, values}`` JSON file; a bare list holds the values only."""
    source = os.fspath(path)
    try:
        with open(source, encoding='utf-8') as file:
            data = json.load(file)
    except (OSError, ValueError) as exc:
        raise ParseError(source, str(exc)) from exc
    if isinstance(data, list):
        data = {'values': data}
    if not isinstance(data, dict):
        raise ParseError(source, 'expected an object {origin, values}')
    if 'origin' not in data and isinstance(data.get('values'), list):
        origin = _default_origin(source, len(data['values']), origin, end)
    try:
        return GridFunction.from_dict(data, origin=origin)
    except ParseError as exc:
        raise ParseError(source, exc.detail) from exc


def write_csv(f: GridFunction, path: str | os.PathLike[str]) -> None:
    """Write ``f`` as a ``t,value`` CSV with twelve significant digits."""
    with open(os.fspath(path), 'w', encoding='utf-8', newline='') as file:
        writer = csv.writer(file, lineterminator='\n')
        writer.writerow(['t', 'value'])
        for t, value in f:
            writer.writerow([format_real(t), format_real(value)])


def write_json(f: GridFunction, path: str | os.PathLike[str]) -> None:
    """Write ``f`` as ``{origin, values}`` JSON with twelve significant digits."""
    with open(os.fspath(path), 'w', encoding='utf-8') as file:
        json.dump(f.to_dict(), file)
        file.write('\n')


def read_grid(
    path: str | os.PathLike[str],
    origin: float | None = None,
    end: float | None = None,
) -> GridFunction:
    """Read a CSV or JSON sequence file, chosen by the file extension.

    Grid points stored in the file take precedence over ``origin`` and ``end``.
    """
    if os.fspath(path).lower().endswith('.json'):
        return read_json(path, origin=origin, end=end)
    return read_csv(path, origin=origin, end=end)


def write_grid(f: GridFunction, path: str | os.PathLike[str], fmt: str = 'csv') -> None:
    """Write ``f`` in ``fmt`` (``'csv'`` or ``'json'``)."""
    if fmt == 'json':
        write_json(f, path)
    elif fmt == 'csv':
        write_csv(f, path)
    else:
        raise ValueError(f'unknown output format {fmt!r}')
