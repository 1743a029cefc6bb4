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

import logging

import pytest

from regge_volume import exceptions
from regge_volume.cli import request
from regge_volume.core import lattice


TOML_TEXT = """
[regge_volume]
format = "csv"
samples = 64

[regge_volume.caustics]
samples = 128
sticks = 2
"""


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / 'regge-volume.toml'
    path.write_text(TOML_TEXT)
    return path


@pytest.mark.parametrize('text,expected', [
    ['8.5,10.5,13.5,14.5', (17, 21, 27, 29)],
    [' 1, 1 ,1,1 ', (2, 2, 2, 2)],
    ['0.5,0.5,0.5,0.5', (1, 1, 1, 1)],
])
def test_parse_j(text, expected):
    assert expected == request.parse_j(text).twice


@pytest.mark.parametrize('text', [
    '1,1,1', '1,1,1,1,1', '1,1,1,1.25', '1,,1,1', 'a,b,c,d',
])
def test_parse_j_rejects(text, caplog):
    with pytest.raises(exceptions.LatticeError):
        request.parse_j(text)

    assert 1 == len(caplog.records)
    assert logging.ERROR == caplog.records[0].levelno


def test_load_sections(config_file):
    sections = request.load_sections(config_file)

    assert {'format': 'csv', 'samples': 64} == sections['general']
    assert {'samples': 128, 'sticks': 2} == sections['caustics']


@pytest.mark.parametrize('command,expected', [
    ['caustics', {'format': 'csv', 'samples': 128, 'sticks': 2}],
    ['spectrum', {'format': 'csv', 'samples': 64}],
    [None, {'format': 'csv', 'samples': 64}],
])
def test_load_config(config_file, command, expected):
    """Command sections override the general section."""
    assert expected == request.load_config(config_file, command)


def test_load_config_missing(tmp_path, caplog):
    with pytest.raises(exceptions.ConfigError):
        request.load_config(tmp_path / 'nope.toml')

    assert 1 == len(caplog.records)


def test_load_config_invalid(tmp_path):
    path = tmp_path / 'broken.toml'
    path.write_text('[regge_volume\nformat = ')

    with pytest.raises(exceptions.ConfigError):
        request.load_config(path)


def test_build_request_defaults():
    config = {'command': 'spectrum', 'j': '8.5,10.5,13.5,14.5'}

    actual = request.RunRequestBuilder(config).build_request()

    assert lattice.QuadrupleJ('8.5', '10.5', '13.5', '14.5') == actual.j
    assert 'json' == actual.format
    assert 512 == actual.samples
    assert 'consistent' == actual.convention
    assert actual.dt is None
    assert actual.preset is None
    assert not actual.eigenvectors


@pytest.mark.parametrize('preset,expected', [
    ['fig3-left', (17, 21, 27, 29)],
    ['fig3-right', (34, 42, 54, 58)],
    ['fig4-left', (200, 220, 260, 280)],
    ['fig4-right', (240, 240, 240, 240)],
])
def test_build_request_presets(preset, expected):
    config = {'command': 'info', 'preset': preset}

    actual = request.RunRequestBuilder(config).build_request()

    assert expected == actual.j.twice
    assert preset == actual.preset


def test_build_request_j_as_list():
    config = {'command': 'poly', 'j': [1, 1, 1, 1], 'convention':
              'as_printed', 'format': 'csv'}

    actual = request.RunRequestBuilder(config).build_request()

    assert (2, 2, 2, 2) == actual.j.twice
    assert 'as_printed' == actual.convention
    assert 'csv' == actual.format


@pytest.mark.parametrize('config', [
    {'command': 'spectrum'},
    {'command': 'spectrum', 'j': '1,1,1,1', 'preset': 'fig3-left'},
    {'command': 'spectrum', 'preset': 'fig5'},
    {'command': 'volume', 'j': '1,1,1,1'},
    {'j': '1,1,1,1'},
    {'command': 'spectrum', 'j': '1,1,1,1', 'format': 'xml'},
    {'command': 'poly', 'j': '1,1,1,1', 'convention': 'sideways'},
    {'command': 'spectrum', 'j': '1,1,1,1', 'eigenvectors': 'yes'},
    {'command': 'spectrum', 'j': '1,1,1,1', 'colour': 'blue'},
    {'command': 'caustics', 'j': '1,1,1,1', 'samples': 1},
    {'command': 'caustics', 'j': '1,1,1,1', 'scan': 8},
    {'command': 'caustics', 'j': '1,1,1,1', 'sticks': -1},
    {'command': 'dynamics', 'j': '1,1,1,1', 'steps': 2.5},
    {'command': 'dynamics', 'j': '1,1,1,1', 'steps': True},
    {'command': 'dynamics', 'j': '1,1,1,1', 'dt': 0},
    {'command': 'dynamics', 'j': '1,1,1,1', 'dt': -0.1},
    {'command': 'dynamics', 'j': '1,1,1,1', 'phi0': 'up'},
    {'command': 'spectrum', 'j': '1,1,1,1', 'k_index': -1},
    {'command': 'spectrum', 'j': 7},
])
def test_build_request_config_errors(config, caplog):
    """Every violation is logged and raised as ConfigError."""
    with pytest.raises(exceptions.ConfigError) as e:
        request.RunRequestBuilder(config).build_request()

    assert 2 == e.value.exit_code
    assert 'config_error' == e.value.reason
    assert 1 == len(
        [r for r in caplog.records if r.levelno == logging.ERROR])


def test_build_request_lattice_error():
    config = {'command': 'spectrum', 'j': '1,1,1,1.25'}

    with pytest.raises(exceptions.LatticeError) as e:
        request.RunRequestBuilder(config).build_request()

    assert 'not_on_half_integer_lattice' == e.value.reason


def test_none_values_fall_back_to_defaults():
    config = {'command': 'spectrum', 'j': '1,1,1,1', 'samples': None}

    actual = request.RunRequestBuilder(config).build_request()

    assert 512 == actual.samples


def test_echo():
    config = {'command': 'spectrum', 'preset': 'fig3-left',
              'output': 'out.json'}
    run_request = request.RunRequestBuilder(config).build_request()

    echo = run_request.echo()

    assert 'output' not in echo
    assert 'j' not in echo
    assert [17, 21, 27, 29] == echo['j_twice']
    assert 'fig3-left' == echo['preset']
    assert 'spectrum' == echo['command']
