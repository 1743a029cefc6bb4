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
"""
Run requests for the command line and for ``batch`` lines.

A request starts as a plain ``dict``: built-in defaults, then the
``[regge_volume]`` section of an optional TOML file (with per-command
sub-sections overriding it), then explicit flags. The
:class:`RunRequestBuilder` validates the merged ``dict`` and produces
an immutable :class:`RunRequest`.

To use:

.. code-block:: python

    from regge_volume.cli import request

    config = request.load_config('regge-volume.toml', 'spectrum')
    config.update({'command': 'spectrum', 'j': '8.5,10.5,13.5,14.5'})
    run_request = request.RunRequestBuilder(config).build_request()
"""

import logging
import numbers

import attr
import toml

from regge_volume import exceptions
from regge_volume.analysis import polynomials
from regge_volume.core import lattice


__all__ = (
    'COMMANDS', 'FORMATS', 'PRESETS', 'DEFAULTS', 'RunRequest',
    'RunRequestBuilder', 'parse_j', 'load_sections', 'load_config',
)

COMMANDS = ('info', 'spectrum', 'caustics', 'poly', 'dynamics')
FORMATS = ('json', 'csv')
CONFIG_SECTION = 'regge_volume'

PRESETS = {
    'fig3-left': ('8.5', '10.5', '13.5', '14.5'),
    'fig3-right': ('17', '21', '27', '29'),
    'fig4-left': ('100', '110', '130', '140'),
    'fig4-right': ('120', '120', '120', '120'),
}

DEFAULTS = {
    'format': 'json',
    'samples': 512,
    'scan': 2048,
    'convention': polynomials.CONSISTENT,
    'dt': None,
    'steps': 10000,
    'l0': None,
    'phi0': 0.3,
    'eigenvectors': False,
    'k_index': None,
    'sticks': 0,
    'workers': 4,
}

# (minimum, allow None)
_INT_KEYS = {
    'samples': (2, False),
    'scan': (16, False),
    'steps': (1, False),
    'k_index': (0, True),
    'sticks': (0, False),
    'workers': (1, False),
}
_FLOAT_KEYS = {'dt': True, 'l0': True, 'phi0': False}
_KNOWN_KEYS = set(DEFAULTS) | {'command', 'j', 'preset', 'output'}


def parse_j(text):
    """Parse ``"j1,j2,j3,j4"`` into a :class:`QuadrupleJ`.

    Raises:
        LatticeError: if there are not four entries or an entry is not
            an exact multiple of 1/2.
    """
    parts = [part.strip() for part in str(text).split(',')]
    if len(parts) != 4 or not all(parts):
        msg = f'Expected four comma-separated values, got "{text}".'
        logging.error(msg)
        raise exceptions.LatticeError(msg)
    try:
        return lattice.QuadrupleJ(*(lattice.HalfInt.parse(p) for p in parts))
    except exceptions.LatticeError as e:
        logging.error(str(e))
        raise


def load_sections(path):
    """Read the ``[regge_volume]`` section of a TOML file.

    Returns:
        dict: ``{'general': {...}, '<command>': {...}, ...}``, where
        ``general`` holds the plain keys and each command sub-section
        is kept under its own name.
    Raises:
        ConfigError: if the file can't be read or parsed.
    """
    try:
        data = toml.load(path)
    except (OSError, toml.TomlDecodeError) as e:
        msg = f'Could not load configuration from "{path}": {e}'
        logging.error(msg)
        raise exceptions.ConfigError(msg)

    section = data.get(CONFIG_SECTION, {})
    sections = {
        'general': {
            k: v for k, v in section.items() if not isinstance(v, dict)},
    }
    sections.update(
        {k: v for k, v in section.items() if isinstance(v, dict)})
    logging.debug(f'Loaded configuration from {path}: {sections}')
    return sections


def load_config(path, command=None):
    """Flat configuration for ``command`` from a TOML file.

    Keys of the ``[regge_volume.<command>]`` sub-section override the
    general ones.
    """
    sections = load_sections(path)
    config = dict(sections['general'])
    if command:
        config.update(sections.get(command, {}))
    return config


@attr.s(frozen=True)
class RunRequest:
    """A validated request for one command."""
    command = attr.ib(type=str)
    j = attr.ib(type=lattice.QuadrupleJ)
    preset = attr.ib(default=None)
    format = attr.ib(default='json')
    output = attr.ib(default=None)
    samples = attr.ib(default=512)
    scan = attr.ib(default=2048)
    convention = attr.ib(default=polynomials.CONSISTENT)
    dt = attr.ib(default=None)
    steps = attr.ib(default=10000)
    l0 = attr.ib(default=None)
    phi0 = attr.ib(default=0.3)
    eigenvectors = attr.ib(default=False)
    k_index = attr.ib(default=None)
    sticks = attr.ib(default=0)

    def echo(self):
        """Inputs as echoed in result documents; ``j`` as doubled ints."""
        data = attr.asdict(self, recurse=False)
        data.pop('output')
        data['j_twice'] = list(self.j.twice)
        data.pop('j')
        return data


class RunRequestBuilder:
    """Build and validate a :class:`RunRequest` from a config ``dict``.

    Args:
        config (dict): merged configuration; must name a ``command`` and
            exactly one of ``j`` or ``preset``.
    """
    def __init__(self, config):
        self.config = dict(DEFAULTS)
        self.config.update(
            {k: v for k, v in config.items() if v is not None})

    def _fail(self, msg):
        logging.error(msg)
        raise exceptions.ConfigError(msg)

    def _validate_keys(self):
        unknown = sorted(set(self.config) - _KNOWN_KEYS)
        if unknown:
            self._fail(f'Unknown configuration keys: {unknown}.')
        if self.config.get('command') not in COMMANDS:
            self._fail(f'Command must be one of {COMMANDS}, got '
                       f'"{self.config.get("command")}".')
        if self.config['format'] not in FORMATS:
            self._fail(f'Format must be one of {FORMATS}, got '
                       f'"{self.config["format"]}".')
        if self.config['convention'] not in polynomials.CONVENTIONS:
            self._fail(f'Convention must be one of '
                       f'{sorted(polynomials.CONVENTIONS)}, got '
                       f'"{self.config["convention"]}".')
        if not isinstance(self.config['eigenvectors'], bool):
            self._fail('"eigenvectors" must be a boolean.')

    def _validate_numbers(self):
        for key, (minimum, nullable) in _INT_KEYS.items():
            value = self.config.get(key)
            if value is None and nullable:
                continue
            if (isinstance(value, bool) or
                    not isinstance(value, numbers.Integral) or
                    value < minimum):
                self._fail(f'"{key}" must be an integer >= {minimum}, got '
                           f'{value!r}.')
        for key, nullable in _FLOAT_KEYS.items():
            value = self.config.get(key)
            if value is None and nullable:
                continue
            if isinstance(value, bool) or not isinstance(value, numbers.Real):
                self._fail(f'"{key}" must be a number, got {value!r}.')
        dt = self.config.get('dt')
        if dt is not None and not dt > 0:
            self._fail(f'"dt" must be positive, got {dt}.')

    def _resolve_j(self):
        j, preset = self.config.get('j'), self.config.get('preset')
        if (j is None) == (preset is None):
            self._fail('Exactly one of "j" or "preset" is required.')
        if preset is not None:
            if preset not in PRESETS:
                self._fail(f'Unknown preset "{preset}"; expected one of '
                           f'{sorted(PRESETS)}.')
            return lattice.QuadrupleJ(*PRESETS[preset])
        if isinstance(j, str):
            return parse_j(j)
        try:
            return lattice.QuadrupleJ.from_values(j)
        except TypeError:
            self._fail(f'"j" must be a string or a list of four numbers, '
                       f'got {j!r}.')
        except exceptions.LatticeError as e:
            logging.error(str(e))
            raise

    def _validate_config(self):
        self._validate_keys()
        self._validate_numbers()

    def build_request(self):
        """Validate the configuration and build the request.

        Raises:
            ConfigError: for missing, unknown or ill-typed keys.
            LatticeError: if ``j`` is not on the half-integer lattice.
        """
        self._validate_config()
        j = self._resolve_j()
        fields = {
            key: self.config[key] for key in attr.fields_dict(RunRequest)
            if key in self.config
        }
        fields['j'] = j
        return RunRequest(**fields)
