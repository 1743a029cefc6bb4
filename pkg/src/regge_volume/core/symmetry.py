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
Regge symmetry and the tetrahedral-hybrid coordinates ``(s, u, v, r)``.

The Regge map ``R`` reflects each momentum through the common
semiperimeter, ``j'_i = s - j_i``. The transform ``W`` sends the four
momenta to ``(s, u, v, r)``; in those coordinates Regge conjugation is
the quaternionic conjugation ``Q = diag(1, -1, -1, -1)``, i.e.
``W R W = Q``.

The matrices are stored scaled by two so every product is an exact
integer computation.
"""

import logging

import attr
import numpy as np

from regge_volume.core import heron
from regge_volume.core import lattice


__all__ = (
    'W_MATRIX', 'R_MATRIX', 'Q_MATRIX', 'ReggeFrame', 'QuaternionReport',
    'regge_conjugate', 'regge_frame', 'canonical_order',
    'quaternion_identity_check', 'factorization_sides',
)


# 2W; rows give (s, u, v, r)
W_MATRIX = np.array([
    [1, 1, 1, 1],
    [1, 1, -1, -1],
    [1, -1, -1, 1],
    [1, -1, 1, -1],
], dtype=np.int64)

# 2R
R_MATRIX = np.array([
    [-1, 1, 1, 1],
    [1, -1, 1, 1],
    [1, 1, -1, 1],
    [1, 1, 1, -1],
], dtype=np.int64)

Q_MATRIX = np.diag(np.array([1, -1, -1, -1], dtype=np.int64))


@attr.s(frozen=True)
class ReggeFrame:
    """Semiperimeter and signed half-differences of a quadruple.

    Signs follow the rows of ``W`` literally:
    ``u = (j1+j2-j3-j4)/2``, ``v = (j1-j2-j3+j4)/2``,
    ``r = (j1-j2+j3-j4)/2``.
    """
    s = attr.ib(type=lattice.HalfInt)
    u = attr.ib(type=lattice.HalfInt)
    r = attr.ib(type=lattice.HalfInt)
    v = attr.ib(type=lattice.HalfInt)

    @property
    def tangential(self):
        """``r = 0``, i.e. ``j1 + j3 = j2 + j4``."""
        return self.r.twice == 0

    @property
    def ex_tangential_u(self):
        """``u = 0``, i.e. ``j1 + j2 = j3 + j4``."""
        return self.u.twice == 0

    @property
    def ex_tangential_v(self):
        """``v = 0``, i.e. ``j1 + j4 = j2 + j3``."""
        return self.v.twice == 0

    @property
    def self_conjugate(self):
        """The quadruple coincides with its Regge conjugate up to labels."""
        return self.tangential or self.ex_tangential_u or self.ex_tangential_v

    def magnitudes(self):
        return {name: abs(getattr(self, name)) for name in 'surv'}

    def flags(self):
        return {
            'tangential': self.tangential,
            'ex_tangential_u': self.ex_tangential_u,
            'ex_tangential_v': self.ex_tangential_v,
        }


@attr.s(frozen=True)
class QuaternionReport:
    """Outcome of :func:`quaternion_identity_check`."""
    wrw_equals_q = attr.ib(type=bool)
    w_involution = attr.ib(type=bool)
    r_involution = attr.ib(type=bool)
    samples_checked = attr.ib(type=int)
    samples_passed = attr.ib(type=bool)

    @property
    def ok(self):
        return all((self.wrw_equals_q, self.w_involution, self.r_involution,
                    self.samples_passed))


def regge_conjugate(j):
    """Regge-conjugate quadruple ``j'_i = s - j_i``.

    Args:
        j (QuadrupleJ): valid angular momenta.
    Returns:
        QuadrupleJ: the conjugate; applying twice gives ``j`` back.
    """
    lattice.validate(j)
    twice_s = sum(j.twice) // 2
    return lattice.QuadrupleJ.from_twice(*(twice_s - t for t in j.twice))


def regge_frame(j):
    """Apply ``W`` to ``j`` and return the :class:`ReggeFrame`."""
    lattice.validate(j)
    twice_s, twice_u, twice_v, twice_r = (
        int(value) // 2 for value in W_MATRIX @ np.array(j.twice))
    frame = ReggeFrame(
        s=lattice.HalfInt(twice_s), u=lattice.HalfInt(twice_u),
        r=lattice.HalfInt(twice_r), v=lattice.HalfInt(twice_v))
    logging.debug(f'Regge frame of ({j}): {frame}')
    return frame


def canonical_order(j):
    """Relabel ``j`` so that ``j1`` is the least of the eight entries.

    Among ``j`` and its Regge conjugate the one holding the minimum is
    kept (``j`` on ties) and sorted ascending, which gives
    ``j1 <= j2 <= j4`` with ``j4-j2+j1 <= j3 <= j4+j2-j1``. The spectrum
    is unchanged; Hamiltonian entries and eigenvector components are
    not, so this is never applied implicitly.
    """
    conjugate = regge_conjugate(j)
    chosen = j if min(j.twice) <= min(conjugate.twice) else conjugate
    return lattice.QuadrupleJ.from_twice(*sorted(chosen.twice))


def factorization_sides(j, ell):
    """Both sides of the exact Heron factorization at ``ell``.

    ``256 F²(ℓ,J1,J2) F²(ℓ,J3,J4) = 16F²(s+1,u,ℓ) · 16F²(r,v,ℓ)``
    with ``J_i = j_i + 1/2``.

    Returns:
        tuple(Fraction, Fraction): left and right hand sides.
    """
    frame = regge_frame(j)
    ell = lattice.HalfInt.coerce(ell)
    J1, J2, J3, J4 = (jj + lattice.HalfInt(1) for jj in j)
    lhs = 256 * heron.heron_squared(ell, J1, J2) * heron.heron_squared(
        ell, J3, J4)
    rhs = (16 * heron.heron_squared(frame.s + 1, frame.u, ell) *
           16 * heron.heron_squared(frame.r, frame.v, ell))
    return lhs, rhs


def quaternion_identity_check(n_samples=64, seed=0):
    """Verify ``W R W = Q``, ``W² = I`` and ``R² = I`` exactly.

    The matrix identities are checked on the scaled integer matrices
    (``(2W)(2R)(2W) = 8Q``, ``(2W)² = (2R)² = 4I``), then on the basis
    quadruples and ``n_samples`` pseudo-random integer quadruples.

    Returns:
        QuaternionReport
    """
    identity = np.eye(4, dtype=np.int64)
    wrw = W_MATRIX @ R_MATRIX @ W_MATRIX
    wrw_ok = bool(np.array_equal(wrw, 8 * Q_MATRIX))
    w_ok = bool(np.array_equal(W_MATRIX @ W_MATRIX, 4 * identity))
    r_ok = bool(np.array_equal(R_MATRIX @ R_MATRIX, 4 * identity))

    rng = np.random.default_rng(seed)
    vectors = list(identity) + list(
        rng.integers(-1000, 1000, size=(n_samples, 4)))
    passed = all(
        np.array_equal(W_MATRIX @ (R_MATRIX @ (W_MATRIX @ x)),
                       8 * (Q_MATRIX @ x))
        for x in vectors)
    report = QuaternionReport(
        wrw_equals_q=wrw_ok, w_involution=w_ok, r_involution=r_ok,
        samples_checked=len(vectors), samples_passed=passed)
    if not report.ok:
        logging.error(f'Symmetry algebra check failed: {report}')
    return report
