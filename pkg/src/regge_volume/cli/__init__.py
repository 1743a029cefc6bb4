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
The ``regge-volume`` command line.

.. code-block:: console

    $ regge-volume info --j 8.5,10.5,13.5,14.5
    $ regge-volume spectrum --preset fig3-left --eigenvectors --format csv
    $ regge-volume caustics --preset fig4-right --samples 1024 --sticks 3
    $ regge-volume poly --j 1,1,1,1 --convention as_printed
    $ regge-volume dynamics --j 8.5,10.5,13.5,14.5 --phi0 0.3 --steps 20000
    $ regge-volume batch requests.jsonl --workers 8

Exit codes: 0 on success, 2 for input, lattice and validation errors,
3 for numerical failures. ``batch`` exits with the largest code of its
lines.
"""

import asyncio
import logging
import sys

import click

from regge_volume import exceptions
from regge_volume.analysis import polynomials
from regge_volume.cli import commands
from regge_volume.cli import output as output_mod
from regge_volume.cli import request as request_mod


__all__ = ('main',)

_OPTIONS = (
    click.option('--j', 'j', help='Four comma-separated angular momenta, '
                                  'multiples of 0.5.'),
    click.option('--preset', type=click.Choice(sorted(request_mod.PRESETS)),
                 help='Bundled parameter set instead of --j.'),
    click.option('--format', 'format_', type=click.Choice(
        request_mod.FORMATS), help='Output format (default: json).'),
    click.option('-o', '--output', type=click.Path(dir_okay=False),
                 help='Write the result here instead of stdout.'),
)

_COMMAND_OPTIONS = {
    'spectrum': (
        click.option('--eigenvectors/--no-eigenvectors', default=None,
                     help='Emit all eigenvectors.'),
        click.option('--k-index', type=int,
                     help='Emit only the eigenvector with this index.'),
    ),
    'caustics': (
        click.option('--samples', type=int,
                     help='Number of caustic samples (default: 512).'),
        click.option('--scan', type=int,
                     help='Root-scan resolution (default: 2048).'),
        click.option('--sticks', type=int,
                     help='Overlay the eigenvectors of the N largest '
                          'positive eigenvalues.'),
    ),
    'poly': (
        click.option('--convention', type=click.Choice(
            sorted(polynomials.CONVENTIONS)),
            help='Recursion convention (default: consistent).'),
    ),
    'dynamics': (
        click.option('--l0', type=float,
                     help='Initial l (default: caustic maximiser - 1/2).'),
        click.option('--phi0', type=float,
                     help='Initial torsion angle (default: 0.3).'),
        click.option('--dt', type=float,
                     help='Time step (default: 1e-3 / max alpha).'),
        click.option('--steps', type=int,
                     help='Number of RK4 steps (default: 10000).'),
        click.option('--scan', type=int,
                     help='Scan resolution for the default l0.'),
    ),
}


def _configure_logging(verbose):
    level = logging.DEBUG if verbose else logging.WARNING
    logging.basicConfig(
        level=level, stream=sys.stderr,
        format='%(asctime)s %(levelname)s %(message)s')


def _write(text, path):
    if path is None or path == '-':
        click.echo(text, nl=False)
        return
    with open(path, 'w', encoding='utf-8', newline='') as f:
        f.write(text)


def _run_single(ctx, name, flags):
    config = {}
    if ctx.obj.get('config_path'):
        try:
            config.update(request_mod.load_config(
                ctx.obj['config_path'], name))
        except exceptions.ConfigError as e:
            _write(commands.failed({'command': name}, e).render(), None)
            ctx.exit(e.exit_code)
    flags['format'] = flags.pop('format_', None)
    config.update({k: v for k, v in flags.items() if v is not None})
    config['command'] = name
    # a flag replaces the other way of naming j from the config file
    if flags.get('preset') is None and flags.get('j') is not None:
        config.pop('preset', None)
    elif flags.get('j') is None and flags.get('preset') is not None:
        config.pop('j', None)

    try:
        run_request = request_mod.RunRequestBuilder(config).build_request()
    except exceptions.InputError as e:
        echo = {k: v for k, v in config.items() if k != 'output'}
        _write(commands.failed(echo, e).render(), None)
        ctx.exit(e.exit_code)

    result = commands.run(run_request)
    _write(result.render(), run_request.output)
    ctx.exit(result.exit_code)


def _make_command(name, help_text):
    def callback(**flags):
        _run_single(click.get_current_context(), name, flags)

    callback.__doc__ = help_text
    decorated = callback
    for option in reversed(_OPTIONS + _COMMAND_OPTIONS.get(name, ())):
        decorated = option(decorated)
    return click.command(name, help=help_text)(decorated)


@click.group()
@click.option('--config', 'config_path', type=click.Path(dir_okay=False),
              help='TOML file with a [regge_volume] section.')
@click.option('-v', '--verbose', is_flag=True, help='Log at DEBUG level.')
@click.pass_context
def main(ctx, config_path, verbose):
    """Spectra, polynomials and semiclassics of the quantum volume
    operator for four coupled angular momenta."""
    _configure_logging(verbose)
    ctx.ensure_object(dict)
    ctx.obj['config_path'] = config_path


for _name, _help in (
        ('info', 'Grid, dimension, Regge conjugate and frame.'),
        ('spectrum', 'Eigenvalues, eigenvectors and symmetry reports.'),
        ('caustics', 'Caustic curves with the spectrum overlaid.'),
        ('poly', 'Orthogonal polynomial table and harness verdicts.'),
        ('dynamics', 'Classical torsional trajectory.')):
    main.add_command(_make_command(_name, _help))


@main.command()
@click.argument('path', type=click.File('r'))
@click.option('--workers', type=int,
              help='Concurrent computations (default: 4).')
@click.option('-o', '--output', type=click.Path(dir_okay=False),
              help='Write the documents here instead of stdout.')
@click.pass_context
def batch(ctx, path, workers, output):
    """Run newline-delimited JSON requests from PATH ('-' for stdin)."""
    sections = {'general': {}}
    if ctx.obj.get('config_path'):
        try:
            sections = request_mod.load_sections(ctx.obj['config_path'])
        except exceptions.ConfigError as e:
            _write(commands.failed({'command': 'batch'}, e).render(), None)
            ctx.exit(e.exit_code)
    if workers is None:
        workers = sections['general'].get(
            'workers', request_mod.DEFAULTS['workers'])
    if isinstance(workers, bool) or not isinstance(workers, int) or (
            workers < 1):
        error = exceptions.ConfigError(
            f'"workers" must be an integer >= 1, got {workers!r}.')
        logging.error(str(error))
        _write(commands.failed({'command': 'batch'}, error).render(), None)
        ctx.exit(error.exit_code)

    items = [
        commands.parse_batch_line(line, sections)
        for line in path if line.strip()
    ]
    logging.info(f'Running {len(items)} batch requests on {workers} '
                 'workers.')
    loop = asyncio.new_event_loop()
    try:
        results = loop.run_until_complete(commands.run_batch(items, workers))
    finally:
        loop.close()

    # one JSON document per line regardless of the requested format
    _write(''.join(
        output_mod.dumps(result.document) + '\n' for result in results),
        output)
    ctx.exit(max((result.exit_code for result in results), default=0))
