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
"""Implementation of the Logger."""

from __future__ import annotations

import atexit
import csv
import os
from typing import Any, Sequence, TextIO

from rich.console import Console
from rich.table import Table

from discfrac.common.grid import format_real


class Logger:
    """Console and tabular-file logger.

    Rows are built with :meth:`register_key` and :meth:`store` and emitted with
    :meth:`dump_tabular`, which prints a rich table and appends the row to a delimited file:

    .. code-block:: text

        size    direct_ns    fast_ns    max_rel_err
        1024    2514010      98031      3.1e-15

    Args:
        output_path (str or None, optional): Delimited output file. Defaults to None.
        delimiter (str, optional): Field delimiter of the output file. Defaults to ``'\\t'``.
        verbose (bool, optional): Whether to print tables to the console. Defaults to True.
        console (Console or None, optional): Console to print to. Defaults to a new one.
    """

    def __init__(
        self,
        output_path: str | None = None,
        delimiter: str = '\t',
        verbose: bool = True,
        console: Console | None = None,
    ) -> None:
        """Initialize an instance of :class:`Logger`."""
        self._console: Console = console or Console()
        self._verbose: bool = verbose
        self._output_file: TextIO | None = None
        self._first_row: bool = True
        self._current_row: dict[str, Any] = {}

        if output_path is not None:
            directory = os.path.dirname(os.path.abspath(output_path))
            os.makedirs(directory, exist_ok=True)
            self._output_file = open(  # noqa: SIM115 # pylint: disable=consider-using-with
                output_path,
                encoding='utf-8',
                mode='w',
                newline='',
            )
            atexit.register(self._output_file.close)
            self._writer = csv.writer(self._output_file, delimiter=delimiter, lineterminator='\n')

    @property
    def console(self) -> Console:
        """The console printed to."""
        return self._console

    def log(self, msg: str, color: str = 'green', bold: bool = False) -> None:
        """Print a message.

        Args:
            msg (str): The message to be logged.
            color (str, optional): The color of the message. Defaults to 'green'.
            bold (bool, optional): Whether the message is bold. Defaults to False.
        """
        style = ' '.join([color, 'bold' if bold else '']).strip()
        self._console.print(msg, style=style)

    def register_key(self, key: str) -> None:
        """Register a column.

        Args:
            key (str): The name of the column.
        """
        assert key not in self._current_row, f'Key {key} has been registered'
        self._current_row[key] = None

    def store(self, **kwargs: Any) -> None:
        """Store values of registered columns for the current row."""
        for key, value in kwargs.items():
            assert key in self._current_row, f'Key {key} has not been registered'
            self._current_row[key] = value

    def dump_tabular(self) -> None:
        """Print the current row and append it to the output file."""
        cells = [self._format(value) for value in self._current_row.values()]
        if self._verbose:
            table = Table('Metrics', 'Value')
            for key, cell in zip(self._current_row, cells):
                table.add_row(key, cell)
            self._console.print(table)
        if self._output_file is not None:
            if self._first_row:
                self._writer.writerow(self._current_row.keys())
            self._writer.writerow(cells)
            self._output_file.flush()
        self._first_row = False
        self._current_row = dict.fromkeys(self._current_row)

    def print_table(
        self,
        title: str,
        columns: Sequence[str],
        rows: Sequence[Sequence[Any]],
    ) -> None:
        """Print a titled rich table; string cells may carry rich markup."""
        table = Table(*columns, title=title)
        for row in rows:
            table.add_row(*(self._format(value) for value in row))
        self._console.print(table)

    @staticmethod
    def _format(value: Any) -> str:
        if isinstance(value, float):
            return format_real(value)
        return '' if value is None else str(value)

    def close(self) -> None:
        """Close the output file."""
        if self._output_file is not None:
            self._output_file.close()
