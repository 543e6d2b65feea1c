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

import json
import os

import pytest
from typer.testing import CliRunner

import helpers
from discfrac.common.grid import read_grid
from discfrac.utils.command_app import app


runner = CliRunner()


def _trials(count):
    return ['--custom-cfgs', 'trials', '--custom-cfgs', str(count)]


@pytest.fixture
def ones_csv(tmp_path):
    return helpers.write_lines(tmp_path / 'ones.csv', ['value', '1', '1', '1'])


@pytest.fixture
def squares_csv(tmp_path):
    return helpers.write_lines(tmp_path / 'squares.csv', ['t,value', '0,0', '1,1', '2,4', '3,9'])


def test_apply(tmp_path, ones_csv):
    output = str(tmp_path / 'out.csv')
    result = runner.invoke(
        app,
        [
            'apply',
            '--family',
            'nabla',
            '--side',
            'left',
            '--kind',
            'sum',
            '--alpha',
            '0.5',
            '--a',
            '0',
            '--input',
            ones_csv,
            '--output',
            output,
        ],
    )
    assert result.exit_code == 0, result.output
    assert 'origin 0 length 3' in result.output
    out = read_grid(output)
    assert out.at(2.0) == pytest.approx(1.5, abs=1e-11)


def test_apply_integer_difference(tmp_path, squares_csv):
    output = str(tmp_path / 'out.json')
    result = runner.invoke(
        app,
        [
            'apply',
            '--family',
            'delta',
            '--kind',
            'difference',
            '--alpha',
            '1',
            '--input',
            squares_csv,
            '--output',
            output,
            '--format',
            'json',
        ],
    )
    assert result.exit_code == 0, result.output
    with open(output, encoding='utf-8') as file:
        data = json.load(file)
    assert data == {'origin': 0.0, 'values': [1.0, 3.0, 5.0]}
    # the second difference is the constant 2
    result = runner.invoke(
        app,
        [
            'apply',
            '--kind',
            'difference',
            '--alpha',
            '2',
            '--input',
            squares_csv,
            '--output',
            output,
            '--format',
            'json',
        ],
    )
    assert result.exit_code == 0, result.output
    assert read_grid(output).values.tolist() == [2.0, 2.0]


@helpers.parametrize(family=['delta', 'nabla'], side=['left', 'right'], kind=['sum', 'difference'])
def test_apply_formulations_agree(tmp_path, family, side, kind):
    values = ['value'] + [str(0.1 * i * i - 0.3 * i) for i in range(12)]
    source = helpers.write_lines(tmp_path / 'f.csv', values)
    anchor = ['--a', '2'] if side == 'left' else ['--b', '13']
    outputs = {}
    for formulation in ('riemann', 'binomial'):
        output = str(tmp_path / f'{formulation}.csv')
        args = ['apply', '--family', family, '--side', side, '--kind', kind, '--alpha', '0.7']
        args += anchor + ['--formulation', formulation, '--input', source, '--output', output]
        result = runner.invoke(app, args)
        assert result.exit_code == 0, result.output
        outputs[formulation] = read_grid(output)
    riemann, binomial = outputs['riemann'], outputs['binomial']
    assert riemann.origin == binomial.origin
    helpers.assert_close(binomial.values, riemann.values, rtol=1e-9, atol=1e-9)


def test_apply_fast(tmp_path, ones_csv):
    output = str(tmp_path / 'out.csv')
    args = ['apply', '--family', 'nabla', '--alpha', '0.5', '--a', '0', '--kind', 'sum']
    args += ['--formulation', 'binomial', '--fast', '--input', ones_csv, '--output', output]
    result = runner.invoke(app, args)
    assert result.exit_code == 0, result.output
    assert read_grid(output).at(2.0) == pytest.approx(1.5, abs=1e-11)


def test_apply_t_column_overrides_flag(tmp_path, squares_csv):
    output = str(tmp_path / 'out.csv')
    args = ['apply', '--alpha', '0.5', '--a', '7', '--input', squares_csv, '--output', output]
    result = runner.invoke(app, args)
    assert result.exit_code == 0, result.output
    assert read_grid(output).origin == 0.5


def test_apply_errors(tmp_path, ones_csv):
    output = str(tmp_path / 'out.csv')
    base = ['apply', '--input', ones_csv, '--output', output]
    # no anchor for a value-only file
    result = runner.invoke(app, base + ['--alpha', '0.5'])
    assert result.exit_code == 2
    result = runner.invoke(app, base + ['--alpha', '-0.5', '--a', '0'])
    assert result.exit_code == 3
    result = runner.invoke(app, base + ['--alpha', '3.5', '--a', '0', '--kind', 'difference'])
    assert result.exit_code == 3
    result = runner.invoke(app, base + ['--alpha', '0.5', '--a', '0', '--family', 'forward'])
    assert result.exit_code == 2
    result = runner.invoke(app, base + ['--alpha', '0.5', '--a', '0', '--format', 'xml'])
    assert result.exit_code == 2
    missing = str(tmp_path / 'missing.csv')
    result = runner.invoke(
        app,
        ['apply', '--alpha', '0.5', '--a', '0', '--input', missing, '--output', output],
    )
    assert result.exit_code == 2
    assert not os.path.exists(output)
    undecodable = tmp_path / 'latin.csv'
    undecodable.write_bytes(b't,value\n0,1\n1,\xff\xfe\n')
    result = runner.invoke(
        app,
        ['apply', '--alpha', '0.5', '--a', '0', '--input', str(undecodable)]
        + ['--output', output],
    )
    assert result.exit_code == 2
    assert not os.path.exists(output)


@pytest.mark.parametrize(
    ('alpha', 'mode', 'expected'),
    [
        ('0.5', 'difference', [1.0, -0.5, -0.125, -0.0625]),
        ('1', 'difference', [1.0, -1.0, 0.0, 0.0]),
        ('0.5', 'sum', [1.0, 0.5, 0.375, 0.3125]),
    ],
)
def test_weights(alpha, mode, expected):
    result = runner.invoke(app, ['weights', '--alpha', alpha, '--K', '3', '--mode', mode])
    assert result.exit_code == 0, result.output
    rows = [line.split(',') for line in result.output.split()]
    assert [int(row[0]) for row in rows] == [0, 1, 2, 3]
    assert [float(row[1]) for row in rows] == expected


def test_weights_file(tmp_path):
    output = str(tmp_path / 'w.csv')
    result = runner.invoke(app, ['weights', '--alpha', '0.5', '--K', '2', '--output', output])
    assert result.exit_code == 0, result.output
    with open(output, encoding='utf-8') as file:
        assert file.read().splitlines() == ['k,w', '0,1', '1,-0.5', '2,-0.125']


def test_weights_errors():
    assert runner.invoke(app, ['weights', '--alpha', '0']).exit_code == 3
    assert runner.invoke(app, ['weights', '--alpha', '0.5', '--K', '-1']).exit_code == 3
    assert runner.invoke(app, ['weights', '--alpha', '0.5', '--mode', 'both']).exit_code == 2


def test_verify_single(tmp_path):
    output = str(tmp_path / 'report.jsonl')
    result = runner.invoke(
        app,
        ['verify', '--ids', 'thm2.5-1', '--output', output, *_trials(5)],
    )
    assert result.exit_code == 0, result.output
    with open(output, encoding='utf-8') as file:
        lines = file.read().splitlines()
    assert len(lines) == 1
    report = json.loads(lines[0])
    assert report['id'] == 'thm2.5-1'
    assert report['verdict'] == 'pass'
    assert report['trials'] == 5


def test_verify_stdout():
    result = runner.invoke(
        app,
        ['verify', '--ids', 'eq1', '--ids', 'glweights', *_trials(3)],
    )
    assert result.exit_code == 0, result.output
    reports = [json.loads(line) for line in result.stdout.splitlines() if line.startswith('{')]
    assert [report['id'] for report in reports] == ['eq1', 'glweights']


def test_verify_all(tmp_path):
    output = str(tmp_path / 'all.jsonl')
    result = runner.invoke(
        app,
        ['verify', '--all', '--seed', '42', '--output', output, *_trials(4)],
    )
    assert result.exit_code == 0, result.output
    with open(output, encoding='utf-8') as file:
        assert all(json.loads(line)['verdict'] == 'pass' for line in file)


def test_verify_failure_exit(tmp_path):
    # a tolerance below rounding makes the check fail
    result = runner.invoke(
        app,
        [
            'verify',
            '--ids',
            'thm2.5-1',
            '--custom-cfgs',
            'trials',
            '--custom-cfgs',
            '5',
            '--custom-cfgs',
            'tolerance',
            '--custom-cfgs',
            '1e-300',
        ],
    )
    assert result.exit_code == 1


def test_verify_errors():
    result = runner.invoke(app, ['verify', '--ids', 'nosuch'])
    assert result.exit_code == 2
    assert 'unknown id' in result.output
    result = runner.invoke(app, ['verify', '--ids', 'eq1', '--custom-cfgs', 'trials'])
    assert result.exit_code == 2
    result = runner.invoke(app, ['verify', '--ids', 'eq1', *_trials(0)])
    assert result.exit_code == 2
    typo = ['--custom-cfgs', 'generator:size', '--custom-cfgs', '[8,16]']
    result = runner.invoke(app, ['verify', '--ids', 'eq1', *typo])
    assert result.exit_code == 2
    assert 'Invalid key: size' in result.output
    lag = ['--custom-cfgs', 'generator:lag', '--custom-cfgs', '[1,4]']
    result = runner.invoke(app, ['verify', '--ids', 'ou1', *lag, *_trials(3)])
    assert result.exit_code == 0, result.output


def test_bench(tmp_path):
    output = str(tmp_path / 'bench.tsv')
    result = runner.invoke(
        app,
        ['bench', '--sizes', '16', '--sizes', '300', '--alpha', '0.3', '--output', output],
    )
    assert result.exit_code == 0, result.output
    with open(output, encoding='utf-8') as file:
        rows = [line.split('\t') for line in file.read().splitlines()]
    assert rows[0] == ['size', 'direct_ns', 'fast_ns', 'max_rel_err']
    assert [row[0] for row in rows[1:]] == ['16', '300']
    assert all(float(row[3]) <= 1e-12 for row in rows[1:])


def test_bench_config_sizes():
    result = runner.invoke(app, ['bench', '--custom-cfgs', 'sizes', '--custom-cfgs', '[8,32]'])
    assert result.exit_code == 0, result.output
    result = runner.invoke(app, ['bench', '--sizes', '0'])
    assert result.exit_code == 2
    result = runner.invoke(app, ['bench', '--custom-cfgs', 'repeat', '--custom-cfgs', '3'])
    assert result.exit_code == 2
