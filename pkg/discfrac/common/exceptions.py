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
"""Exceptions raised by discfrac.

Every error carries a stable message fragment so that callers (and the command line front end)
can tell the failure classes apart without parsing tracebacks.
"""

from __future__ import annotations


class DiscFracError(Exception):
    """Base class of all discfrac errors."""

    exit_code: int = 1


class DomainError(DiscFracError, ValueError):
    """An operator or order was requested outside its mathematical domain."""

    exit_code = 3


class KernelSingularityError(DomainError):
    """A gamma ratio hit a pole in the numerator only."""

    def __init__(self, x: float, y: float) -> None:
        """Initialize an instance of :class:`KernelSingularityError`."""
        super().__init__(f'kernel singularity: Gamma({x:g}) / Gamma({y:g}) has a numerator pole')
        self.x = x
        self.y = y


class InsufficientSamplesError(DomainError):
    """A grid is too short for the requested operation."""

    def __init__(self, needed: int, got: int, what: str = 'operation') -> None:
        """Initialize an instance of :class:`InsufficientSamplesError`."""
        super().__init__(f'insufficient samples: {what} needs at least {needed}, got {got}')
        self.needed = needed
        self.got = got


class GridMisalignmentError(DomainError):
    """Grids or anchors are not integer-aligned, or an input misses its anchor."""

    def __init__(self, detail: str) -> None:
        """Initialize an instance of :class:`GridMisalignmentError`."""
        super().__init__(f'grid misalignment: {detail}')


class IntegerOrderError(DomainError):
    """The single-sum alternative difference formula was requested at an integer order."""

    def __init__(self, alpha: float) -> None:
        """Initialize an instance of :class:`IntegerOrderError`."""
        super().__init__(f'alternative form undefined at integer order (alpha={alpha:g})')
        self.alpha = alpha


class ParseError(DiscFracError, ValueError):
    """An input sequence file could not be parsed."""

    exit_code = 2

    def __init__(self, source: str, detail: str) -> None:
        """Initialize an instance of :class:`ParseError`."""
        super().__init__(f'parse error in {source}: {detail}')
        self.source = source
        self.detail = detail


class UnknownCheckError(DiscFracError, KeyError):
    """A verification id is not registered."""

    exit_code = 2

    def __init__(self, check_id: str) -> None:
        """Initialize an instance of :class:`UnknownCheckError`."""
        super().__init__(f'unknown id: {check_id}')
        self.check_id = check_id

    def __str__(self) -> str:
        """Return the message without the quoting added by :class:`KeyError`."""
        return str(self.args[0])
