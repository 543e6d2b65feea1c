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
"""Implementation of the command interfaces."""


import os
import time
from typing import Any, Dict, List, Optional

import numpy as np
import typer
from rich.console import Console

from discfrac.common.exceptions import DiscFracError, UnknownCheckError
from discfrac.common.grid import GridFunction, format_real, read_grid, write_grid
from discfrac.common.logger import Logger
from discfrac.common.specfun import Order, gl_weights
from discfrac.operators import apply_operator
from discfrac.operators.binomial import gl_apply, gl_apply_fast
from discfrac.operators.spec import OperatorSpec
from discfrac.utils.config import RunConfig, check_run_config, get_default_kwargs_yaml
from discfrac.utils.tools import (
    assert_with_exit,
    config_path,
    custom_cfgs_to_dict,
    exit_with,
    load_yaml,
    recursive_check_config,
    update_dict,
)
from discfrac.verify.engine import relative_error, run_suite


app = typer.Typer()
console = Console()
err_console = Console(stderr=True)


def _parse_custom_cfgs(custom_cfgs: List[str], name: str) -> Dict[str, Any]:
    keys = custom_cfgs[0::2]
    values = custom_cfgs[1::2]
    assert_with_exit(len(keys) == len(values), 'keys and values should be in pairs', code=2)
    parsed_custom_cfgs: Dict[str, Any] = {}
    for k, v in zip(keys, values):
        update_dict(parsed_custom_cfgs, custom_cfgs_to_dict(k, v))
    # every key some section of configs/<name>.yaml knows is accepted
    kwargs = load_yaml(config_path(name))
    known_cfgs: Dict[str, Any] = kwargs.pop('defaults', {})
    for section_cfgs in kwargs.values():
        update_dict(known_cfgs, section_cfgs or {})
    try:
        recursive_check_config(parsed_custom_cfgs, known_cfgs)
    except KeyError as exc:
        exit_with(f'{exc.args[0]} in --custom-cfgs', 2)
    return parsed_custom_cfgs


def _check(cfgs: RunConfig) -> None:
    try:
        check_run_config(cfgs)
    except AssertionError as exc:
        exit_with(str(exc), 2)


@app.command()
def apply(  # pylint: disable=too-many-arguments,too-many-locals
    family: str = typer.Option('delta', help='operator family, delta or nabla'),
    side: str = typer.Option('left', help='operator side, left or right'),
    kind: str = typer.Option('sum', help='operator kind, sum or difference'),
    formulation: str = typer.Option('riemann', help='riemann or binomial'),
    alpha: float = typer.Option(..., help='order of the operator, alpha > 0'),
    a: Optional[float] = typer.Option(None, '--a', help='left anchor, first grid point'),
    b: Optional[float] = typer.Option(None, '--b', help='right anchor, last grid point'),
    input_path: str = typer.Option(..., '--input', help='input sequence, csv or json'),
    output_path: str = typer.Option(..., '--output', help='file to write the result to'),
    fmt: str = typer.Option('csv', '--format', help='output format, csv or json'),
    fast: bool = typer.Option(False, help='evaluate binomial operators by fast convolution'),
) -> None:
    r"""Apply one fractional operator to a sequence file.

    Input files without a ``t`` column are placed on the grid by ``--a`` (first point) or, for
    right operators, by ``--b`` (last point). A ``t`` column overrides both flags.

    Examples:
        .. code-block:: bash

            discfrac apply --family nabla --side left --kind sum --alpha 0.5 --a 0 \
                --input f.csv --output out.csv

    Args:
        family (str): Operator family.
        side (str): Operator side.
        kind (str): Operator kind.
        formulation (str): Riemann or binomial formulation.
        alpha (float): Order of the operator.
        a (float or None): Left anchor.
        b (float or None): Right anchor.
        input_path (str): Input sequence file.
        output_path (str): Output file.
        fmt (str): Output format. Defaults to ``csv``.
        fast (bool): Use the fast convolution path. Defaults to False.
    """
    cfgs = RunConfig(
        subcommand='apply',
        family=family,
        side=side,
        kind=kind,
        formulation=formulation,
        alpha=alpha,
        input_path=input_path,
        output_path=output_path,
        fmt=fmt,
    )
    _check(cfgs)
    try:
        if side == 'left':
            f = read_grid(input_path, origin=a, end=b)
        else:
            f = read_grid(input_path, origin=a if b is None else None, end=b)
        anchor = f.origin if side == 'left' else f.end
        flag = a if side == 'left' else b
        if flag is not None and abs(flag - anchor) > 1e-9:
            err_console.print(
                f'the t column places the anchor at {format_real(anchor)}, not {format_real(flag)}',
                style='yellow',
            )
        spec = OperatorSpec(family, side, kind, alpha, anchor, formulation)  # type: ignore
        out = apply_operator(spec, f, fast=fast)
        write_grid(out, output_path, fmt)
    except DiscFracError as exc:
        exit_with(str(exc), exc.exit_code)
    except OSError as exc:
        exit_with(str(exc), 2)
    console.print(f'origin {format_real(out.origin)} length {out.length}')


@app.command()
def weights(
    alpha: float = typer.Option(..., help='order of the weights, alpha > 0'),
    K: int = typer.Option(10, '--K', help='largest index, K >= 0'),  # noqa: N803
    mode: str = typer.Option('difference', help='difference or sum weights'),
    output_path: Optional[str] = typer.Option(None, '--output', help='csv file for k,w rows'),
) -> None:
    """Emit the Grunwald-Letnikov weights ``w[0..K]`` of order ``alpha``.

    Args:
        alpha (float): Order of the weights.
        K (int): Largest index. Defaults to 10.
        mode (str): ``difference`` for ``(-1)^k C(alpha, k)``, ``sum`` for
            ``(-1)^k C(-alpha, k)``. Defaults to ``difference``.
        output_path (str or None): CSV file; rows go to standard output without it.
    """
    assert_with_exit(mode in ('difference', 'sum'), 'mode must be difference or sum', code=2)
    try:
        w = gl_weights(Order(alpha).alpha, mode == 'difference', K)
    except DiscFracError as exc:
        exit_with(str(exc), exc.exit_code)
    rows = [f'{k},{format_real(value)}' for k, value in enumerate(w.w.tolist())]
    if output_path is None:
        for row in rows:
            typer.echo(row)
        return
    with open(output_path, 'w', encoding='utf-8') as file:
        file.write('k,w\n')
        file.writelines(row + '\n' for row in rows)
    console.print(f'{len(rows)} weights written to {output_path}')


@app.command()
def verify(
    run_all: bool = typer.Option(False, '--all', help='run every registered check'),
    ids: List[str] = typer.Option([], '--ids', help='check ids to run, repeatable'),
    seed: int = typer.Option(0, help='seed of the random streams'),
    output_path: Optional[str] = typer.Option(None, '--output', help='JSONL report file'),
    workers: int = typer.Option(1, help='number of worker processes'),
    custom_cfgs: List[str] = typer.Option([], help='key:sub value pairs laid over every check'),
) -> None:
    """Run identity checks and report one JSON line per check.

    Exits with status 1 if any check fails and 2 for an unknown id.

    Args:
        run_all (bool): Run every check; also the default when no id is given.
        ids (list of str): Check ids.
        seed (int): Seed of the run. Defaults to 0.
        output_path (str or None): JSONL file; lines go to standard output without it.
        workers (int): Worker processes. Defaults to 1.
        custom_cfgs (list of str): Config overrides, e.g. ``--custom-cfgs trials 20``.
    """
    selected = [] if run_all else list(ids)
    cfgs = RunConfig(subcommand='verify', ids=selected, seed=seed, output_path=output_path)
    _check(cfgs)
    overrides = _parse_custom_cfgs(custom_cfgs, 'checks')
    try:
        reports = run_suite(selected, seed=seed, workers=workers, overrides=overrides)
    except UnknownCheckError as exc:
        exit_with(str(exc), exc.exit_code)
    except AssertionError as exc:
        exit_with(str(exc), 2)

    lines = [report.to_json() for report in reports]
    if output_path is None:
        for line in lines:
            typer.echo(line)
    else:
        directory = os.path.dirname(os.path.abspath(output_path))
        os.makedirs(directory, exist_ok=True)
        with open(output_path, 'w', encoding='utf-8') as file:
            file.writelines(line + '\n' for line in lines)

    logger = Logger(console=err_console)
    logger.print_table(
        'verification',
        ['id', 'trials', 'max_rel_error', 'tolerance', 'verdict'],
        [
            [
                report.id,
                report.trials,
                report.max_rel_error,
                report.tolerance,
                '[green]pass[/green]' if report.passed else '[red]fail[/red]',
            ]
            for report in reports
        ],
    )
    failed = [report.id for report in reports if not report.passed]
    if failed:
        logger.log(f'{len(failed)} of {len(reports)} checks failed: {", ".join(failed)}', 'red')
        raise typer.Exit(code=1)
    logger.log(f'all {len(reports)} checks passed')


def _time_ns(func: Any, repeats: int) -> tuple:
    best, result = None, None
    for _ in range(repeats):
        start = time.perf_counter_ns()
        result = func()
        elapsed = time.perf_counter_ns() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result


@app.command()
def bench(
    sizes: List[int] = typer.Option([], '--sizes', help='grid lengths, repeatable'),
    alpha: Optional[float] = typer.Option(None, help='order of the benchmarked operator'),
    output_path: Optional[str] = typer.Option(None, '--output', help='TSV timing table'),
    custom_cfgs: List[str] = typer.Option([], help='key:sub value pairs laid over bench.yaml'),
) -> None:
    """Time direct against fast binomial evaluation and check that both agree.

    Writes the columns ``size, direct_ns, fast_ns, max_rel_err`` and exits with status 1 if any
    size disagrees beyond ``agreement_tolerance``.

    Args:
        sizes (list of int): Grid lengths; the configured sizes are used when empty.
        alpha (float or None): Order; the configured order is used when omitted.
        output_path (str or None): TSV file.
        custom_cfgs (list of str): Config overrides, e.g. ``--custom-cfgs repeats 3``.
    """
    cfgs = get_default_kwargs_yaml('bench')
    cfgs.recurisve_update(_parse_custom_cfgs(custom_cfgs, 'bench'))
    if sizes:
        cfgs.sizes = list(sizes)
    if alpha is not None:
        cfgs.alpha = alpha
    assert_with_exit(all(size >= 1 for size in cfgs.sizes), 'sizes must be positive', code=2)
    assert_with_exit(cfgs.repeats >= 1, 'repeats must be at least 1', code=2)

    logger = Logger(output_path=output_path, console=console)
    for key in ('size', 'direct_ns', 'fast_ns', 'max_rel_err'):
        logger.register_key(key)

    rng = np.random.default_rng(cfgs.seed)
    disagreeing = []
    for size in cfgs.sizes:
        f = GridFunction(0.0, rng.uniform(-1.0, 1.0, size=size))
        op = cfgs.operator
        try:
            spec = OperatorSpec(
                op.family,
                op.side,
                op.kind,
                cfgs.alpha,
                f.origin if op.side == 'left' else f.end,
                'binomial',
            )
            direct_ns, direct = _time_ns(lambda: gl_apply(spec, f), cfgs.repeats)  # noqa: B023
            fast_ns, fast = _time_ns(lambda: gl_apply_fast(spec, f), cfgs.repeats)  # noqa: B023
        except DiscFracError as exc:
            exit_with(str(exc), exc.exit_code)
        error = relative_error(direct.values, fast.values)
        logger.store(size=size, direct_ns=direct_ns, fast_ns=fast_ns, max_rel_err=error)
        logger.dump_tabular()
        if error > cfgs.agreement_tolerance:
            disagreeing.append(size)
    logger.close()

    if disagreeing:
        logger.log(f'direct and fast paths disagree at sizes {disagreeing}', 'red', bold=True)
        raise typer.Exit(code=1)


if __name__ == '__main__':
    app()
