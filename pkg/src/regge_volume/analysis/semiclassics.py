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
Semiclassical picture of the volume operator: the caustics ``U± = ±2α``
bounding the classically allowed band, their turning points, the
classical torsional Hamiltonian ``H = 2 α(l + 1/2) cos φ`` with its
Runge-Kutta trajectories, and tetrahedron volumes.

The caustics use ``α`` at ``x`` while the Hamiltonian uses it at
``l + 1/2``; both forms are kept as they stand; they only differ
noticeably near the domain boundaries.

To use:

.. code-block:: python

    from regge_volume import analysis, core

    j = core.QuadrupleJ.from_values(8.5, 10.5, 13.5, 14.5)
    curve = analysis.potential_curves(j, 512)
    x_star, u_max = analysis.caustic_maximum(j)
    roots = analysis.turning_points(j, 0.5 * u_max)
"""

import logging
import math

import attr
import numpy as np
import scipy.optimize

from regge_volume import exceptions
from regge_volume.core import heron
from regge_volume.core import lattice


__all__ = (
    'PhasePoint', 'CausticCurve', 'Trajectory', 'caustic_interval',
    'potential_curves', 'caustic_maximum', 'classical_hamiltonian',
    'integrate_trajectory', 'default_start', 'default_time_step',
    'turning_points',
    'dihedral_volume', 'tetrahedron_volume', 'cayley_menger_volume',
    'classically_allowed',
)

DEFAULT_SCAN = 2048
ROOT_TOLERANCE = 1e-12
TANGENCY_TOLERANCE = 1e-9


def _reduce_angle(phi):
    reduced = math.remainder(float(phi), 2 * math.pi)
    return math.pi if reduced == -math.pi else reduced


@attr.s(frozen=True)
class PhasePoint:
    """Point ``(l, φ)`` of the torsional phase space.

    ``φ`` is reduced to ``(-π, π]``; the dihedral angle along the
    hinge is ``θ = π/2 + φ``.
    """
    l = attr.ib(converter=float)  # noqa: E741
    phi = attr.ib(converter=_reduce_angle)

    @property
    def theta(self):
        return math.pi / 2 + self.phi


@attr.s(frozen=True, eq=False)
class CausticCurve:
    """Samples of ``U±(x) = ±2α(x)``."""
    j = attr.ib()
    x = attr.ib()
    u_plus = attr.ib()

    @property
    def u_minus(self):
        return 0.0 - self.u_plus

    @property
    def samples(self):
        return np.column_stack([self.x, self.u_plus, self.u_minus])

    @property
    def maximum(self):
        return float(self.u_plus.max())


@attr.s(frozen=True, eq=False)
class Trajectory:
    """Recorded RK4 solution of Hamilton's equations.

    ``left_domain`` is set when integration stopped early because
    ``l + 1/2`` would have left the domain of ``α``.
    """
    times = attr.ib()
    l = attr.ib()  # noqa: E741
    phi = attr.ib()
    H = attr.ib()
    dt = attr.ib(type=float)
    left_domain = attr.ib(type=bool, default=False)

    @property
    def energy_drift(self):
        """``max_t |H(t) - H(0)| / |H(0)|``; nan when ``H(0) = 0``."""
        h0 = self.H[0]
        if h0 == 0:
            return math.nan
        return float(np.abs(self.H - h0).max() / abs(h0))

    @property
    def rows(self):
        return np.column_stack([self.times, self.l, self.phi, self.H])


def caustic_interval(j):
    """Interval of ``x`` on which the caustics are sampled.

    This is ``[l_min, l_max + 1]``, except that for ``l_min = 0`` the
    singular band ``x <= 1/2`` is skipped and sampling starts at the
    first coupling ``x = 1``.
    """
    lo, hi = heron.alpha_domain(j)
    if lo == 0:
        lo = min(1.0, hi)
    return lo, hi


def potential_curves(j, n_samples):
    """Sample ``U±(x) = ±2α(j, x)`` uniformly on the caustic interval.

    Args:
        j (QuadrupleJ): angular momenta.
        n_samples (int): number of samples, at least 2.
    Returns:
        CausticCurve
    """
    if n_samples < 2:
        raise ValueError(f'At least 2 samples are required, got {n_samples}.')
    kernel = heron.alpha_kernel(j)
    lo, hi = caustic_interval(j)
    xs = np.linspace(lo, hi, n_samples)
    u_plus = 2 * np.array([kernel.value(x) for x in xs])
    logging.debug(f'Sampled caustics of ({j}) at {n_samples} points.')
    return CausticCurve(j=j, x=xs, u_plus=u_plus)


def caustic_maximum(j, scan=DEFAULT_SCAN):
    """Locate the maximum of ``U⁺``.

    A dense scan brackets the peak, a bounded scalar maximisation
    refines it, and the lattice points of the grid are checked too.

    Returns:
        tuple(float, float): the maximiser ``x*`` and ``max U⁺``.
    """
    kernel = heron.alpha_kernel(j)
    curve = potential_curves(j, scan)
    best = int(curve.u_plus.argmax())
    x_best, u_best = float(curve.x[best]), float(curve.u_plus[best])

    left = curve.x[max(best - 1, 0)]
    right = curve.x[min(best + 1, scan - 1)]
    if right > left:
        result = scipy.optimize.minimize_scalar(
            lambda x: -kernel.value(x), bounds=(left, right),
            method='bounded', options={'xatol': ROOT_TOLERANCE})
        if -result.fun > u_best / 2:
            x_best, u_best = float(result.x), -2 * float(result.fun)

    lo, hi = caustic_interval(j)
    for i in range(kernel.grid.dim):
        ell = float(kernel.grid.ell(i))
        if lo <= ell <= hi:
            value = 2 * kernel.value(ell)
            if value > u_best:
                x_best, u_best = ell, value
    return x_best, u_best


def classical_hamiltonian(j, p):
    """``H = 2 α(j, l + 1/2) cos φ``.

    Raises:
        DomainError: if ``l + 1/2`` is outside the domain of ``α``.
    """
    return 2 * heron.alpha(j, p.l + 0.5) * math.cos(p.phi)


def default_time_step(j):
    """``1e-3 / max α``, the step with the documented conservation."""
    _, u_max = caustic_maximum(j)
    if u_max <= 0:
        msg = f'alpha vanishes identically for ({j}); nothing moves.'
        logging.error(msg)
        raise exceptions.DomainError(msg)
    return 1e-3 / (u_max / 2)


def default_start(j, phi0=0.0, scan=DEFAULT_SCAN):
    """Starting point at the caustic maximum ``x*``.

    When ``x*`` sits on an end of the caustic interval (the edge next to
    the pole for ``l_min = 0``) the midpoint of the interval is used
    instead.

    Returns:
        PhasePoint: ``l = x - 1/2`` and ``φ = phi0``.
    """
    lo, hi = caustic_interval(j)
    x, _ = caustic_maximum(j, scan)
    margin = (hi - lo) / scan
    if not lo + margin < x < hi - margin:
        logging.debug(f'Caustic maximum x={x} of ({j}) is on the edge of '
                      f'[{lo}, {hi}]; starting mid-interval.')
        x = (lo + hi) / 2
    return PhasePoint(l=x - 0.5, phi=phi0)


def _inside(domain, x):
    lo, hi = domain
    return lo < x < hi


def _vector_field(kernel, ell, phi):
    x = ell + 0.5
    a = kernel.value(x)
    da = kernel.derivative(x)
    return -2 * a * math.sin(phi), -2 * da * math.cos(phi)


def _rk4_step(kernel, ell, phi, dt):
    k1 = _vector_field(kernel, ell, phi)
    k2 = _vector_field(kernel, ell + dt / 2 * k1[0], phi + dt / 2 * k1[1])
    k3 = _vector_field(kernel, ell + dt / 2 * k2[0], phi + dt / 2 * k2[1])
    k4 = _vector_field(kernel, ell + dt * k3[0], phi + dt * k3[1])
    l_new = ell + dt / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0])
    phi_new = phi + dt / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])
    return l_new, phi_new


def integrate_trajectory(j, start, dt=None, n_steps=10000, strict=False):
    """Integrate Hamilton's equations with fixed-step classical RK4.

    ``dl/dt = -2 α(l+1/2) sin φ`` and ``dφ/dt = -2 α'(l+1/2) cos φ``,
    using the analytic derivative of ``α``. The state stays in the open
    caustic interval, so for ``l_min = 0`` the band next to the pole of
    ``α`` at ``x = 1/2`` counts as outside.

    Args:
        j (QuadrupleJ): angular momenta.
        start (PhasePoint): initial state; ``l + 1/2`` strictly inside
            :func:`caustic_interval`.
        dt (float): (optional) step; defaults to
            :func:`default_time_step`.
        n_steps (int): number of steps.
        strict (bool): raise instead of flagging when a step would
            leave the domain.
    Returns:
        Trajectory: ``n_steps + 1`` records unless halted early.
    Raises:
        DomainError: if ``start`` is not inside the domain or ``dt`` is
            not positive.
        StepOutOfDomain: with ``strict``, carrying the last valid state.
    """
    kernel = heron.alpha_kernel(j)
    domain = caustic_interval(j)
    if not _inside(domain, start.l + 0.5):
        msg = (f'Start l={start.l} puts l+1/2 outside the open caustic '
               f'interval {domain} of ({j}).')
        logging.error(msg)
        raise exceptions.DomainError(msg)
    if dt is None:
        dt = default_time_step(j)
    if not dt > 0:
        msg = f'Time step must be positive, got {dt}.'
        logging.error(msg)
        raise exceptions.DomainError(msg)

    ls, phis, hs = [start.l], [start.phi], []
    ell, phi = start.l, start.phi
    hs.append(2 * kernel.value(ell + 0.5) * math.cos(phi))
    left_domain = False
    for step in range(n_steps):
        try:
            l_new, phi_new = _rk4_step(kernel, ell, phi, dt)
        except exceptions.DomainError:
            l_new = math.nan
        if not _inside(domain, l_new + 0.5):
            last = PhasePoint(l=ell, phi=phi)
            msg = (f'Step {step} of the trajectory for ({j}) leaves the '
                   f'domain of alpha; last valid state {last}.')
            if strict:
                logging.error(msg)
                raise exceptions.StepOutOfDomain(msg, state=last)
            logging.warning(msg)
            left_domain = True
            break
        ell, phi = l_new, phi_new
        ls.append(ell)
        phis.append(_reduce_angle(phi))
        hs.append(2 * kernel.value(ell + 0.5) * math.cos(phi))

    times = dt * np.arange(len(ls))
    return Trajectory(times=times, l=np.array(ls), phi=np.array(phis),
                      H=np.array(hs), dt=dt, left_domain=left_domain)


def turning_points(j, k, scan=DEFAULT_SCAN):
    """Roots of ``2 α(j, x) = |k|`` in the domain.

    Sign changes on a ``scan``-point grid are refined by Brent's method
    to ``1e-12``. ``k = 0`` gives the domain endpoints; ``|k| = max U⁺``
    gives the maximiser twice. For ``l_min = 0`` the pole of ``α`` at
    ``x = 1/2`` acts as a wall and is returned as the left root.

    Raises:
        NoRoots: if ``|k|`` exceeds ``max U⁺``.
    """
    target = abs(float(k))
    if target == 0:
        return list(heron.alpha_domain(j))
    x_star, u_max = caustic_maximum(j, scan)
    tolerance = TANGENCY_TOLERANCE * max(1.0, u_max)
    if target > u_max + tolerance:
        msg = (f'|k|={target} exceeds the caustic maximum {u_max} of '
               f'({j}); no turning points.')
        logging.error(msg)
        raise exceptions.NoRoots(msg)
    if target >= u_max - tolerance:
        return [x_star, x_star]

    kernel = heron.alpha_kernel(j)

    def gap(x):
        return 2 * kernel.value(x) - target

    lo, hi = caustic_interval(j)
    xs = np.linspace(lo, hi, scan)
    values = np.array([gap(x) for x in xs])
    roots = []
    if heron.alpha_domain(j)[0] == 0 and values[0] > 0:
        roots.append(0.5)
    for i in range(scan - 1):
        if values[i] == 0:
            roots.append(float(xs[i]))
        elif values[i] * values[i + 1] < 0:
            roots.append(float(scipy.optimize.brentq(
                gap, xs[i], xs[i + 1], xtol=ROOT_TOLERANCE)))
    if values[-1] == 0:
        roots.append(float(xs[-1]))
    logging.debug(f'Turning points of ({j}) at |k|={target}: {roots}')
    return roots


def dihedral_volume(hinge, sides, theta):
    """Volume of two triangles hinged along ``hinge`` at dihedral ``θ``.

    Args:
        hinge (float): shared edge length.
        sides (tuple(float)): ``(a1, b1, a2, b2)``, the other two sides
            of each triangle.
        theta (float): dihedral angle in radians.
    Returns:
        float: ``2 A1 A2 sin θ / (3 hinge)``, signed like ``sin θ``.
    Raises:
        DomainError: for ``hinge = 0`` or a degenerate triangle.
    """
    a1, b1, a2, b2 = sides
    if hinge == 0:
        raise exceptions.DomainError('Hinge length must be non-zero.')
    areas = (heron.heron_area(hinge, a1, b1), heron.heron_area(hinge, a2, b2))
    if min(areas) == 0:
        msg = f'Degenerate triangle on hinge {hinge} with sides {sides}.'
        raise exceptions.DomainError(msg)
    return 2 * areas[0] * areas[1] * math.sin(theta) / (3 * hinge)


def tetrahedron_volume(j, p):
    """Volume of the tetrahedron with hinge ``p.l`` and dihedral
    ``π/2 + φ``; triangle sides are ``j_i + 1/2``.

    No ``1/2`` shift is applied to the hinge.
    """
    J1, J2, J3, J4 = (float(x) + 0.5 for x in j)
    return dihedral_volume(p.l, (J1, J2, J3, J4), p.theta)


def _apex(hinge, a, b):
    along = (hinge * hinge + a * a - b * b) / (2 * hinge)
    height = math.sqrt(max(a * a - along * along, 0.0))
    return along, height


def cayley_menger_volume(hinge, sides, theta):
    """Unsigned volume from the Cayley-Menger determinant.

    The hinge runs along the first axis; the first apex lies in the
    first coordinate plane and the second is rotated by ``θ`` about the
    hinge. Pairwise squared distances fill the bordered 5x5 matrix and
    ``V = sqrt(det / 288)``.
    """
    a1, b1, a2, b2 = sides
    x1, h1 = _apex(hinge, a1, b1)
    x2, h2 = _apex(hinge, a2, b2)
    points = np.array([
        [0.0, 0.0, 0.0],
        [hinge, 0.0, 0.0],
        [x1, h1, 0.0],
        [x2, h2 * math.cos(theta), h2 * math.sin(theta)],
    ])
    diff = points[:, None, :] - points[None, :, :]
    matrix = np.ones((5, 5))
    matrix[0, 0] = 0.0
    matrix[1:, 1:] = (diff ** 2).sum(axis=-1)
    det = np.linalg.det(matrix)
    return math.sqrt(max(det / 288, 0.0))


def classically_allowed(j, H, x):
    """Whether ``x`` lies in the band ``2 α(x) >= |H|``."""
    lo, hi = heron.alpha_domain(j)
    if not lo <= x <= hi or (0 < x <= 0.5 and x != lo):
        return False
    return 2 * heron.alpha(j, x) >= abs(H)
