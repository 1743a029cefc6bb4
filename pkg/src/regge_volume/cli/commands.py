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
Commands of the ``regge-volume`` command line.

Each command implements :class:`regge_volume.interfaces.ICommand`: it
computes a JSON payload from a validated :class:`RunRequest` and knows
how to flatten that payload into CSV rows. :func:`run` wraps a command
with the shared metadata and turns library errors into error documents
and exit codes.
"""

import asyncio
import json
import logging

import attr
import numpy as np
import zope.interface
from asyncio_extras import threads

from regge_volume import exceptions
from regge_volume import interfaces
from regge_volume.analysis import polynomials
from regge_volume.analysis import semiclassics
from regge_volume.analysis import spectrum
from regge_volume.cli import output
from regge_volume.cli import request as request_mod
from regge_volume.core import heron
from regge_volume.core import lattice
from regge_volume.core import symmetry


__all__ = (
    'InfoCommand', 'SpectrumCommand', 'CausticsCommand', 'PolyCommand',
    'DynamicsCommand', 'Result', 'get_command', 'metadata', 'run',
    'failed', 'parse_batch_line', 'run_batch',
)

BRACKET_TOLERANCE = 1e-9
# relative slack on H at the turning points
ALLOWED_TOLERANCE = 1e-8


def _frame_dict(frame):
    return {name: getattr(frame, name) for name in 'surv'}


def metadata(j):
    """Grid, Regge conjugate, frame and flags shared by all documents."""
    grid = lattice.validate(j)
    frame = symmetry.regge_frame(j)
    flags = frame.flags()
    flags['self_conjugate'] = frame.self_conjugate
    return {
        'l_min': grid.l_min,
        'l_max': grid.l_max,
        'dim': grid.dim,
        'regge_conjugate': symmetry.regge_conjugate(j),
        'frame': _frame_dict(frame),
        'magnitudes': frame.magnitudes(),
        'flags': flags,
    }


@zope.interface.implementer(interfaces.ICommand)
class InfoCommand:
    """Grid, both dimension formulas, canonical order and couplings."""
    name = 'info'

    def payload(self, request):
        j = request.j
        grid = lattice.validate(j)
        ells = [grid.ell(i) for i in range(1, grid.dim)]
        return {
            'dimension': {
                'range': grid.dim,
                'regge': lattice.dimension_from_regge(j),
            },
            'alpha_domain': list(heron.alpha_domain(j)),
            'canonical': symmetry.canonical_order(j),
            'couplings': {
                'l': ells,
                'alpha_squared': [
                    float(heron.alpha_squared(j, ell)) for ell in ells],
                'alpha': [heron.alpha(j, ell) for ell in ells],
            },
            'symmetry_algebra': attr.asdict(
                symmetry.quaternion_identity_check()),
        }

    def rows(self, payload):
        couplings = payload['couplings']
        return ('l', 'alpha_squared', 'alpha'), zip(
            couplings['l'], couplings['alpha_squared'], couplings['alpha'])


def _selected_eigenvectors(request, system):
    if request.k_index is None:
        return range(system.dim) if request.eigenvectors else ()
    if request.k_index >= system.dim:
        msg = (f'k_index {request.k_index} is out of range for dimension '
               f'{system.dim}.')
        logging.error(msg)
        raise exceptions.ConfigError(msg)
    return (request.k_index,)


@zope.interface.implementer(interfaces.ICommand)
class SpectrumCommand:
    """Sorted eigenvalues, symmetry reports and optional eigenvectors."""
    name = 'spectrum'

    def payload(self, request):
        j = request.j
        system = spectrum.solve(j)
        residual, gram_defect = spectrum.residuals(system.hamiltonian, system)
        conjugate = spectrum.solve(symmetry.regge_conjugate(j)).eigenvalues
        scale = max(float(np.abs(system.eigenvalues).max()), 1e-300)
        payload = {
            'eigenvalues': system.eigenvalues,
            'symmetry': attr.asdict(
                spectrum.verify_spectral_symmetries(system)),
            'representation': attr.asdict(
                spectrum.antisymmetric_representation(j, system)),
            'residual': residual,
            'gram_defect': gram_defect,
            'regge_defect': float(
                np.abs(system.eigenvalues - conjugate).max() / scale),
        }
        selected = _selected_eigenvectors(request, system)
        if selected:
            payload['eigenvectors'] = [
                {'index': n, 'k': system.eigenvalues[n],
                 'phi': system.eigenvectors[:, n]}
                for n in selected
            ]
        return payload

    def rows(self, payload):
        vectors = payload.get('eigenvectors')
        if not vectors:
            return ('k',), ([k] for k in payload['eigenvalues'])
        dim = len(vectors[0]['phi'])
        header = ('k',) + tuple(f'phi_{i}' for i in range(dim))
        return header, ([v['k']] + list(v['phi']) for v in vectors)


@zope.interface.implementer(interfaces.ICommand)
class CausticsCommand:
    """Sampled caustics with the spectrum and turning points overlaid."""
    name = 'caustics'

    def payload(self, request):
        j = request.j
        curve = semiclassics.potential_curves(j, request.samples)
        x_star, u_max = semiclassics.caustic_maximum(j, request.scan)
        system = spectrum.solve(j)
        k_max = float(np.abs(system.eigenvalues).max())
        positive = [
            n for n in reversed(range(system.dim))
            if system.eigenvalues[n] > spectrum.SIGN_THRESHOLD * max(k_max, 1)
        ]
        grid = lattice.validate(j)
        return {
            'x_star': x_star,
            'u_max': u_max,
            'bracketed': k_max <= u_max + BRACKET_TOLERANCE,
            'curve': {
                'x': curve.x,
                'u_plus': curve.u_plus,
                'u_minus': curve.u_minus,
            },
            'eigenvalues': system.eigenvalues,
            'turning_points': [
                {'k': system.eigenvalues[n],
                 'roots': semiclassics.turning_points(
                     j, system.eigenvalues[n], request.scan)}
                for n in positive
            ],
            'sticks': [
                {'k': system.eigenvalues[n], 'l': grid.values(),
                 'phi': system.eigenvectors[:, n]}
                for n in positive[:request.sticks]
            ],
        }

    def rows(self, payload):
        curve = payload['curve']
        return ('x', 'u_plus', 'u_minus'), zip(
            curve['x'], curve['u_plus'], curve['u_minus'])


@zope.interface.implementer(interfaces.ICommand)
class PolyCommand:
    """Polynomial table, norms, weights and both harness verdicts."""
    name = 'poly'

    def _closed_form(self, j, convention):
        try:
            closed = polynomials.closed_form_details(j, convention)
        except exceptions.ZeroDivisor as e:
            return {'error': {'reason': e.reason, 'step': e.step}}
        return {
            'values': closed.values,
            'signs': closed.signs,
            'ledger': closed.ledger,
        }

    def payload(self, request):
        j = request.j
        system = spectrum.solve(j)
        table = polynomials.build_table(j, system, request.convention)
        return {
            'convention': request.convention,
            'l': table.grid.values(),
            'eigenvalues': system.eigenvalues,
            'values': table.values,
            'norms': table.norms,
            'weights': table.weights,
            'norm_source': table.norm_source,
            'gram_off_diagonal': polynomials.orthogonality_report(
                table).max_off_diagonal,
            'closed_form': self._closed_form(j, request.convention),
            'harness': {
                name: polynomials.convention_harness(j, name, system).as_dict()
                for name in sorted(polynomials.CONVENTIONS)
            },
        }

    def rows(self, payload):
        n_k = len(payload['eigenvalues'])
        header = ('l', 'N', 'w') + tuple(f'p_{n}' for n in range(n_k))
        return header, (
            [ell, norm, weight] + list(values)
            for ell, norm, weight, values in zip(
                payload['l'], payload['norms'], payload['weights'],
                payload['values'])
        )


@zope.interface.implementer(interfaces.ICommand)
class DynamicsCommand:
    """RK4 trajectory of the classical torsional Hamiltonian."""
    name = 'dynamics'

    def payload(self, request):
        j = request.j
        if request.l0 is None:
            start = semiclassics.default_start(j, request.phi0, request.scan)
        else:
            start = semiclassics.PhasePoint(l=request.l0, phi=request.phi0)
        trajectory = semiclassics.integrate_trajectory(
            j, start, dt=request.dt, n_steps=request.steps)
        h0 = trajectory.H[0]
        allowed = all(
            semiclassics.classically_allowed(
                j, h0 * (1 - ALLOWED_TOLERANCE), ell + 0.5)
            for ell in trajectory.l)
        return {
            'start': {'l': start.l, 'phi': start.phi},
            'dt': trajectory.dt,
            'steps': len(trajectory.times) - 1,
            'H0': h0,
            'energy_drift': trajectory.energy_drift,
            'left_domain': trajectory.left_domain,
            'classically_allowed': allowed,
            'trajectory': {
                't': trajectory.times,
                'l': trajectory.l,
                'phi': trajectory.phi,
                'H': trajectory.H,
            },
        }

    def rows(self, payload):
        data = payload['trajectory']
        return ('t', 'l', 'phi', 'H'), zip(
            data['t'], data['l'], data['phi'], data['H'])


_COMMANDS = {
    klass.name: klass
    for klass in (InfoCommand, SpectrumCommand, CausticsCommand,
                  PolyCommand, DynamicsCommand)
}


def get_command(name):
    try:
        return _COMMANDS[name]()
    except KeyError:
        msg = f'Unknown command "{name}".'
        logging.error(msg)
        raise exceptions.ConfigError(msg)


@attr.s(frozen=True)
class Result:
    """A rendered-on-demand result document and its exit code."""
    document = attr.ib()
    exit_code = attr.ib(type=int, default=0)
    command = attr.ib(default=None)
    format = attr.ib(default='json')

    def render(self):
        if self.exit_code == 0 and self.format == 'csv':
            header, rows = self.command.rows(self.document['payload'])
            return output.render_csv(header, rows)
        return output.dumps(self.document) + '\n'


def failed(echo, error):
    """:class:`Result` for an error raised before or during a run."""
    return Result(document=output.error_document(echo, error),
                  exit_code=error.exit_code)


def run(request):
    """Run one request.

    Args:
        request (RunRequest): validated request.
    Returns:
        Result: the document and exit code (0, 2 for input and
        validation errors, 3 for numerical failures).
    """
    command = get_command(request.command)
    echo = request.echo()
    try:
        meta = metadata(request.j)
        payload = command.payload(request)
    except exceptions.ReggeVolumeError as e:
        logging.error(f'{request.command} failed for ({request.j}): {e}')
        return failed(echo, e)
    logging.info(f'{request.command} finished for ({request.j}).')
    return Result(document=output.result_document(echo, meta, payload),
                  command=command, format=request.format)


def parse_batch_line(line, base_config):
    """Build the request of one ``batch`` line.

    Args:
        line (str): a JSON object such as
            ``{"command": "spectrum", "j": "0.5,0.5,0.5,0.5"}``.
        base_config (dict): configuration the line's keys override.
    Returns:
        RunRequest or Result: the request, or a failed :class:`Result`
        when the line can't be turned into one.
    """
    try:
        data = json.loads(line)
    except ValueError as e:
        error = exceptions.ConfigError(f'Batch line is not JSON: {e}')
        logging.error(str(error))
        return failed({'line': line.strip()}, error)
    if not isinstance(data, dict):
        error = exceptions.ConfigError('Batch line must be a JSON object.')
        logging.error(str(error))
        return failed({'line': line.strip()}, error)

    config = dict(base_config.get('general', {}))
    config.update(base_config.get(str(data.get('command')), {}))
    config.update(data)
    config.pop('workers', None)
    try:
        return request_mod.RunRequestBuilder(config).build_request()
    except exceptions.InputError as e:
        return failed(data, e)


async def run_batch(items, workers):
    """Run requests concurrently, at most ``workers`` at a time.

    Blocking computations run in the thread pool; results come back in
    input order. Items that are already a :class:`Result` pass through.
    """
    semaphore = asyncio.Semaphore(workers)

    @threads.threadpool
    def compute(request):
        return run(request)

    async def one(item):
        if isinstance(item, Result):
            return item
        async with semaphore:
            logging.debug(f'Running batch item {item.command} ({item.j}).')
            return await compute(item)

    return await asyncio.gather(*(one(item) for item in items))
