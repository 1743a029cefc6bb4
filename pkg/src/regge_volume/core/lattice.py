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
Exact half-integer lattice on which every quantum number lives, the
quadruple of angular momenta, and the bookkeeping of the ``ℓ`` grid.

All values are carried as doubled integers, so sums, differences and
comparisons never round:

.. code-block:: python

    from regge_volume import core

    j = core.QuadrupleJ.from_values('8.5', '10.5', '13.5', '14.5')
    grid = core.validate(j)
    print(grid.l_min, grid.l_max, grid.dim)
    # prints: 2 19 18
"""

import fractions
import logging
import math
import numbers
import operator

import attr
import numpy as np

from regge_volume import exceptions


__all__ = (
    'HalfInt', 'QuadrupleJ', 'LGrid', 'validate', 'dimension_from_regge',
)


def _to_twice(value):
    if isinstance(value, HalfInt):
        return value.twice
    if isinstance(value, bool):
        msg = f'Refusing to read boolean {value!r} as an angular momentum.'
        raise exceptions.LatticeError(msg)
    if isinstance(value, numbers.Integral):
        return 2 * int(value)
    try:
        if isinstance(value, float) and not math.isfinite(value):
            raise ValueError(value)
        exact = fractions.Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError):
        msg = f'"{value}" is not a number.'
        raise exceptions.LatticeError(msg)
    doubled = 2 * exact
    if doubled.denominator != 1:
        msg = f'"{value}" is not an exact multiple of 1/2.'
        raise exceptions.LatticeError(msg)
    return int(doubled)


@attr.s(frozen=True, order=True, repr=False)
class HalfInt:
    """Exact half-integer stored as the doubled integer ``2j``.

    Args:
        twice (int): the value of ``2j``.
    """
    twice = attr.ib(converter=operator.index)

    @classmethod
    def coerce(cls, value):
        """Build a :class:`HalfInt` from an int, Fraction, float or string.

        Raises:
            LatticeError: if ``value`` is not an exact multiple of 1/2.
        """
        if isinstance(value, cls):
            return value
        return cls(_to_twice(value))

    @classmethod
    def parse(cls, text):
        """Parse a decimal string such as ``"8.5"`` or ``"10"``."""
        return cls(_to_twice(str(text)))

    @property
    def fraction(self):
        return fractions.Fraction(self.twice, 2)

    @property
    def is_integer(self):
        return self.twice % 2 == 0

    def __add__(self, other):
        return HalfInt(self.twice + HalfInt.coerce(other).twice)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInt(self.twice - HalfInt.coerce(other).twice)

    def __rsub__(self, other):
        return HalfInt(HalfInt.coerce(other).twice - self.twice)

    def __neg__(self):
        return HalfInt(-self.twice)

    def __abs__(self):
        return HalfInt(abs(self.twice))

    def __float__(self):
        return self.twice / 2

    def __repr__(self):
        return f'HalfInt({self})'

    def __str__(self):
        if self.is_integer:
            return str(self.twice // 2)
        return f'{self.twice / 2:.1f}'


@attr.s(frozen=True)
class QuadrupleJ:
    """The four angular momenta ``(j1, j2, j3, j4)``.

    Construction only checks that each entry sits on the half-integer
    lattice; physical validity is checked by :func:`validate`.
    """
    j1 = attr.ib(converter=HalfInt.coerce)
    j2 = attr.ib(converter=HalfInt.coerce)
    j3 = attr.ib(converter=HalfInt.coerce)
    j4 = attr.ib(converter=HalfInt.coerce)

    @classmethod
    def from_values(cls, *values):
        if len(values) == 1 and not isinstance(values[0], (str, HalfInt)):
            values = tuple(values[0])
        if len(values) != 4:
            msg = f'Exactly four angular momenta are required, got {values}.'
            raise exceptions.LatticeError(msg)
        return cls(*values)

    @classmethod
    def from_twice(cls, *twice):
        return cls(*(HalfInt(t) for t in twice))

    def __iter__(self):
        return iter((self.j1, self.j2, self.j3, self.j4))

    @property
    def twice(self):
        return tuple(j.twice for j in self)

    @property
    def semiperimeter(self):
        """``s = (j1 + j2 + j3 + j4) / 2``; only exact for valid sums."""
        return HalfInt(sum(self.twice) // 2)

    def __str__(self):
        return ','.join(str(j) for j in self)


@attr.s(frozen=True)
class LGrid:
    """The grid of the diagonal ``ℓ`` on which the Hamiltonian acts.

    Index ``i`` in ``0 .. dim - 1`` maps to ``ℓ = l_min + i``.
    """
    l_min = attr.ib(type=HalfInt)
    l_max = attr.ib(type=HalfInt)
    dim = attr.ib(type=int)

    def ell(self, index):
        if not 0 <= index < self.dim:
            raise IndexError(f'Grid index {index} outside 0..{self.dim - 1}.')
        return HalfInt(self.l_min.twice + 2 * index)

    def index(self, ell):
        offset = HalfInt.coerce(ell).twice - self.l_min.twice
        if offset % 2 or not 0 <= offset // 2 < self.dim:
            raise IndexError(f'{ell} is not a point of this grid.')
        return offset // 2

    def values(self):
        return float(self.l_min) + np.arange(self.dim, dtype=float)

    def __len__(self):
        return self.dim


def _conjugate_twice(twice):
    twice_s = sum(twice) // 2
    return tuple(twice_s - t for t in twice)


def dimension_from_regge(j):
    """Hilbert space dimension as twice the least of the eight entries.

    Uses the four momenta and their Regge conjugates, independently of
    the ``ℓ``-range formula used by :func:`validate`.

    Args:
        j (QuadrupleJ): angular momenta with an even doubled sum.
    Returns:
        int: ``2 * min(j_i, j'_i) + 1``.
    """
    twice = j.twice
    return min(twice + _conjugate_twice(twice)) + 1


def validate(j):
    """Check the physical invariants of ``j`` and return its ``ℓ`` grid.

    Args:
        j (QuadrupleJ): angular momenta to check.
    Returns:
        LGrid: ``l_min = max(|j1-j2|, |j3-j4|)``,
        ``l_max = min(j1+j2, j3+j4)`` and ``dim = l_max - l_min + 1``.
    Raises:
        NegativeJ: if any ``j_i < 0``.
        NonHalfIntegral: if ``2(j1+j2+j3+j4)`` is odd.
        ClosureViolated: if any Regge conjugate ``s - j_i`` is negative.
    """
    t1, t2, t3, t4 = twice = j.twice
    if min(twice) < 0:
        msg = f'Angular momenta must be non-negative, got ({j}).'
        logging.error(msg)
        raise exceptions.NegativeJ(msg)
    if sum(twice) % 2:
        msg = (f'Twice the sum of ({j}) is odd; the two diagonals would not '
               'share one lattice.')
        logging.error(msg)
        raise exceptions.NonHalfIntegral(msg)
    conjugate = _conjugate_twice(twice)
    if min(conjugate) < 0:
        msg = (f'The quadrilateral ({j}) does not close: a Regge-conjugate '
               f'entry is negative ({min(conjugate) / 2}).')
        logging.error(msg)
        raise exceptions.ClosureViolated(msg)

    l_min = max(abs(t1 - t2), abs(t3 - t4))
    l_max = min(t1 + t2, t3 + t4)
    dim = (l_max - l_min) // 2 + 1
    if dim != dimension_from_regge(j):
        msg = (f'Range formula and Regge formula disagree for ({j}): '
               f'{dim} != {dimension_from_regge(j)}.')
        logging.error(msg)
        raise exceptions.ClosureViolated(msg)

    logging.debug(f'Grid for ({j}): l in [{l_min / 2}, {l_max / 2}], '
                  f'dim={dim}.')
    return LGrid(l_min=HalfInt(l_min), l_max=HalfInt(l_max), dim=dim)
