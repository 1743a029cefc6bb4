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
Archimedes' (Heron's) form of triangle areas and the matrix elements
``α`` of the volume operator built from them.

Heron forms on the half-integer lattice are exact: with doubled sides
``(A, B, C) = (2a, 2b, 2c)`` the integer
``E = (A+B+C)(-A+B+C)(A-B+C)(A+B-C)`` gives ``F² = E / 256``. Only the
final square roots are taken in floating point.

.. code-block:: python

    from regge_volume import core

    core.heron_squared(3, 4, 5)
    # Fraction(36, 1)
    j = core.QuadrupleJ.from_values(1, 1, 1, 1)
    core.alpha(j, 1)
    # 0.2886751345948129
"""

import fractions
import functools
import logging
import math

from regge_volume import exceptions
from regge_volume.core import lattice


__all__ = (
    'heron_numerator', 'heron_squared', 'heron_squared_float', 'heron_area',
    'alpha', 'alpha_squared', 'alpha_derivative', 'alpha_domain',
    'alpha_kernel', 'AlphaKernel',
)


def heron_numerator(twice_a, twice_b, twice_c):
    """Integer quartic ``E`` over doubled sides; ``F² = E / 256``."""
    a, b, c = twice_a, twice_b, twice_c
    return (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)


def heron_squared(a, b, c):
    """Signed squared area ``F²(a, b, c)`` as an exact rational.

    The sides may be geometrically invalid, in which case the result is
    negative. The quartic is even in each argument.

    Args:
        a, b, c: sides on the half-integer lattice (``HalfInt``, int,
            Fraction, or decimal string).
    Returns:
        fractions.Fraction: ``(a+b+c)(-a+b+c)(a-b+c)(a+b-c) / 16``.
    """
    twice = [lattice.HalfInt.coerce(side).twice for side in (a, b, c)]
    return fractions.Fraction(heron_numerator(*twice), 256)


def heron_squared_float(a, b, c):
    """Floating ``F²(a, b, c)`` for sides off the lattice."""
    return (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c) / 16


def heron_area(a, b, c):
    """Area ``F`` of the triangle with sides ``a, b, c``.

    Raises:
        DomainError: if the sides violate the triangle inequalities.
    """
    try:
        squared = heron_squared(a, b, c)
    except exceptions.LatticeError:
        squared = heron_squared_float(float(a), float(b), float(c))
    if squared < 0:
        msg = f'No triangle has sides ({a}, {b}, {c}).'
        raise exceptions.DomainError(msg)
    return math.sqrt(squared)


def _on_lattice(x):
    if isinstance(x, lattice.HalfInt):
        return x.twice
    doubled = 2 * float(x)
    if doubled.is_integer():
        return int(doubled)
    return None


class AlphaKernel:
    """Matrix elements ``α`` of one quadruple as a continuous function.

    ``α(x) = F(x, J1, J2) F(x, J3, J4) / sqrt((2x+1)(2x-1))`` with
    ``J_i = j_i + 1/2``, defined on the closed interval
    ``[l_min, l_max + 1]`` where both Heron forms are non-negative.

    Args:
        j (QuadrupleJ): angular momenta; validated on construction.
    """
    def __init__(self, j):
        self.j = j
        self.grid = lattice.validate(j)
        self._twice_sides = tuple(t + 1 for t in j.twice)
        self.sides = tuple(t / 2 for t in self._twice_sides)
        self.lo = float(self.grid.l_min)
        self.hi = float(self.grid.l_max) + 1

    def _check(self, x):
        if not self.lo <= x <= self.hi:
            msg = (f'x={x} lies outside the domain [{self.lo}, {self.hi}] '
                   f'of alpha for ({self.j}).')
            raise exceptions.DomainError(msg)
        if x <= 0.5 and x not in (self.lo, self.hi):
            msg = f'alpha is singular for x={x} <= 1/2.'
            raise exceptions.DomainError(msg)

    def squared_exact(self, ell):
        """Exact signed ``α²`` at a lattice point ``ell``."""
        twice_x = lattice.HalfInt.coerce(ell).twice
        if twice_x * twice_x == 1:
            msg = f'alpha squared has a pole at x={ell}.'
            raise exceptions.DomainError(msg)
        t1, t2, t3, t4 = self._twice_sides
        numerator = (heron_numerator(twice_x, t1, t2) *
                     heron_numerator(twice_x, t3, t4))
        return fractions.Fraction(numerator, 65536 * (twice_x ** 2 - 1))

    def _product(self, x):
        J1, J2, J3, J4 = self.sides
        return heron_squared_float(x, J1, J2) * heron_squared_float(x, J3, J4)

    def squared(self, x):
        twice_x = _on_lattice(x)
        if twice_x is not None and twice_x * twice_x != 1:
            return float(self.squared_exact(lattice.HalfInt(twice_x)))
        x = float(x)
        return self._product(x) / (4 * x * x - 1)

    def value(self, x):
        """``α(x)``; zero at both ends of the domain."""
        x_float = float(x)
        self._check(x_float)
        if x_float in (self.lo, self.hi):
            return 0.0
        squared = self.squared(x)
        # rounding may push the product of two tiny factors below zero
        return math.sqrt(max(squared, 0.0))

    def derivative(self, x):
        """Analytic ``dα/dx`` in the open interior of the domain."""
        x = float(x)
        self._check(x)
        if x in (self.lo, self.hi):
            msg = f'dalpha/dx is unbounded at the domain boundary x={x}.'
            raise exceptions.DomainError(msg)
        J1, J2, J3, J4 = self.sides
        e1 = 16 * heron_squared_float(x, J1, J2)
        e2 = 16 * heron_squared_float(x, J3, J4)
        # dE/dx = 4x(b² + c² - x²) for E(x, b, c)
        de1 = 4 * x * (J1 * J1 + J2 * J2 - x * x)
        de2 = 4 * x * (J3 * J3 + J4 * J4 - x * x)
        denom = 4 * x * x - 1
        product = e1 * e2
        d_squared = ((de1 * e2 + e1 * de2) * denom - 8 * x * product) / (
            256 * denom * denom)
        value = math.sqrt(product / (256 * denom))
        return d_squared / (2 * value)


@functools.lru_cache(maxsize=256)
def alpha_kernel(j):
    """Cached :class:`AlphaKernel` for ``j``."""
    logging.debug(f'Building alpha kernel for ({j}).')
    return AlphaKernel(j)


def alpha(j, x):
    """Matrix element ``α(j, x)`` for a continuous diagonal length ``x``.

    Exact Heron values are used when ``x`` is on the half-integer
    lattice, floating evaluation otherwise.

    Args:
        j (QuadrupleJ): angular momenta.
        x (float or HalfInt): diagonal length in ``[l_min, l_max + 1]``.
    Returns:
        float: ``α`` in volume units; 0 at both domain endpoints.
    Raises:
        DomainError: if ``x`` is outside the domain or ``x <= 1/2``
            (other than at an endpoint).
    """
    return alpha_kernel(j).value(x)


def alpha_squared(j, ell):
    """Exact signed ``α²`` at the lattice point ``ell``."""
    return alpha_kernel(j).squared_exact(ell)


def alpha_derivative(j, x):
    """Analytic ``dα/dx`` at ``x`` in the open domain."""
    return alpha_kernel(j).derivative(x)


def alpha_domain(j):
    """``(l_min, l_max + 1)`` as floats."""
    kernel = alpha_kernel(j)
    return kernel.lo, kernel.hi
