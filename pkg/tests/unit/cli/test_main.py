# -*- coding: utf-8 -*-
#
# Copyright 2026 The regge-volume Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import math

import pytest
from click.testing import CliRunner

from regge_volume import cli
from regge_volume.cli import request as request_mod


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


def _invoke(runner, *args, **kwargs):
    return runner.invoke(cli.main, list(args), **kwargs)


def test_spectrum(runner):
    result = _invoke(runner, 'spectrum', '--j', '0.5,0.5,0.5,0.5')
    document = json.loads(result.stdout)

    assert 0 == result.exit_code
    assert [-math.sqrt(3) / 16, math.sqrt(3) / 16] == pytest.approx(
        document['payload']['eigenvalues'], abs=1e-14)
    assert [1, 1, 1, 1] == document['request']['j_twice']
    assert 2 == document['metadata']['dim']


def test_off_lattice_input(runner):
    result = _invoke(runner, 'spectrum', '--j', '1,1,1,1.25')
    document = json.loads(result.stdout)

    assert 2 == result.exit_code
    assert 'not_on_half_integer_lattice' == (
        document['payload']['error']['reason'])
    assert document['metadata'] is None


def test_info_preset(runner):
    result = _invoke(runner, 'info', '--preset', 'fig3-left')
    metadata = json.loads(result.stdout)['metadata']

    assert 0 == result.exit_code
    assert 18 == metadata['dim']
    assert [15, 13, 10, 9] == metadata['regge_conjugate']
    assert {'s': 23.5, 'u': -4.5, 'r': -1.5, 'v': -0.5} == metadata['frame']


def test_j_and_preset_conflict(runner):
    result = _invoke(
        runner, 'info', '--j', '1,1,1,1', '--preset', 'fig3-left')

    assert 2 == result.exit_code
    assert 'config_error' == (
        json.loads(result.stdout)['payload']['error']['reason'])


@pytest.mark.parametrize('preset', sorted(request_mod.PRESETS))
def test_reruns_are_identical(runner, preset):
    """Re-running a preset reproduces the output byte for byte."""
    first = _invoke(runner, 'spectrum', '--preset', preset)
    second = _invoke(runner, 'spectrum', '--preset', preset)

    assert 0 == first.exit_code
    assert first.stdout == second.stdout


@pytest.mark.parametrize('args,exp_header,exp_lines', [
    [('poly', '--j', '1,1,1,1'), 'l,N,w,p_0,p_1,p_2', 4],
    [('spectrum', '--j', '1,1,1,1', '--eigenvectors'),
     'k,phi_0,phi_1,phi_2', 4],
    [('dynamics', '--preset', 'fig3-left', '--steps', '10'),
     't,l,phi,H', 12],
    [('info', '--j', '1,1,1,1'), 'l,alpha_squared,alpha', 3],
])
def test_csv_output(runner, args, exp_header, exp_lines):
    result = _invoke(runner, *args, '--format', 'csv')
    lines = result.stdout.splitlines()

    assert 0 == result.exit_code
    assert exp_header == lines[0]
    assert exp_lines == len(lines)


def test_output_file(runner, tmp_path):
    path = tmp_path / 'spectrum.json'

    result = _invoke(runner, 'spectrum', '--j', '1,1,1,1', '-o', str(path))

    assert 0 == result.exit_code
    assert '' == result.stdout
    assert 3 == json.loads(path.read_text())['metadata']['dim']


def test_config_file(runner, tmp_path):
    """Flags win over command sections, which win over the general one."""
    path = tmp_path / 'regge-volume.toml'
    path.write_text('[regge_volume]\nformat = "csv"\n\n'
                    '[regge_volume.spectrum]\neigenvectors = true\n')

    from_config = _invoke(runner, '--config', str(path), 'spectrum',
                          '--j', '1,1,1,1')
    from_flags = _invoke(runner, '--config', str(path), 'spectrum',
                         '--j', '1,1,1,1', '--no-eigenvectors')

    assert 'k,phi_0,phi_1,phi_2' == from_config.stdout.splitlines()[0]
    assert 'k' == from_flags.stdout.splitlines()[0]


def test_config_preset_replaced_by_flag(runner, tmp_path):
    path = tmp_path / 'regge-volume.toml'
    path.write_text('[regge_volume]\npreset = "fig3-left"\n')

    result = _invoke(runner, '--config', str(path), 'info', '--j', '1,1,1,1')

    assert 0 == result.exit_code
    assert 3 == json.loads(result.stdout)['metadata']['dim']


def test_missing_config_file(runner, tmp_path):
    result = _invoke(runner, '--config', str(tmp_path / 'missing.toml'),
                     'info', '--j', '1,1,1,1')

    assert 2 == result.exit_code
    assert 'config_error' == (
        json.loads(result.stdout)['payload']['error']['reason'])


def test_batch_matches_single_runs(runner, tmp_path):
    """Each batch line equals the single run; exit code is the maximum."""
    lines = [
        '{"command": "spectrum", "j": "1,1,1,1"}',
        '',
        '{"command": "info", "preset": "fig3-left"}',
        '{"command": "spectrum", "j": "1,1,1,4"}',
    ]
    path = tmp_path / 'requests.jsonl'
    path.write_text('\n'.join(lines) + '\n')

    result = _invoke(runner, 'batch', str(path), '--workers', '2')
    documents = result.stdout.splitlines()

    assert 2 == result.exit_code
    assert 3 == len(documents)
    assert _invoke(runner, 'spectrum', '--j', '1,1,1,1').stdout == (
        documents[0] + '\n')
    assert _invoke(runner, 'info', '--preset', 'fig3-left').stdout == (
        documents[1] + '\n')
    assert 'closure_violated' == (
        json.loads(documents[2])['payload']['error']['reason'])


def test_batch_from_stdin(runner):
    result = _invoke(
        runner, 'batch', '-',
        input='{"command": "info", "j": "0.5,0.5,0.5,0.5"}\n')

    assert 0 == result.exit_code
    assert 2 == json.loads(result.stdout)['metadata']['dim']


def test_batch_bad_workers(runner):
    result = _invoke(runner, 'batch', '-', '--workers', '0', input='')

    assert 2 == result.exit_code
    assert 'config_error' == (
        json.loads(result.stdout)['payload']['error']['reason'])
