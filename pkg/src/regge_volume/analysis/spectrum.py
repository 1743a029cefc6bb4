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
Tridiagonal volume Hamiltonian on the ``ℓ`` grid, its full symmetric
eigenproblem, and the representation-level symmetry checks.

The real discrete Schrödinger-like equation is
``α(ℓ+1) Φ(ℓ+1) + α(ℓ) Φ(ℓ-1) = k Φ(ℓ)``: a zero-diagonal
symmetric tridiagonal matrix with couplings ``α`` between neighbouring grid
points. Its spectrum pairs as ``k, -k``; the pairing is measured by
:func:`verify_spectral_symmetries` rather than assumed.

To use:

.. code-block:: python

    from regge_volume import analysis, core

    j = core.QuadrupleJ.from_values(1, 1, 1, 1)
    system = analysis.eigensolve(analysis.build_hamiltonian(j))
    print(system.eigenvalues)
    # prints: [-0.4330127  0.  0.4330127]
"""

import fractions
import logging
import re

import attr
import numpy as np
import scipy.linalg

from regge_volume import exceptions
from regge_volume.core import heron
from regge_volume.core import lattice


__all__ = (
    'TridiagonalHamiltonian', 'EigenSystem', 'SymmetryReport',
    'RepresentationReport', 'build_hamiltonian', 'eigensolve', 'solve',
    'verify_spectral_symmetries', 'antisymmetric_representation',
    'characteristic_polynomial', 'brute_force_eigenvalues', 'residuals',
)

SIGN_THRESHOLD = 1e-12
MAX_EXACT_DIM = 12
# powers of -i
_PHASES = (1, -1j, -1, 1j)


@attr.s(frozen=True, eq=False)
class TridiagonalHamiltonian:
    """Zero-diagonal symmetric tridiagonal volume Hamiltonian.

    Args:
        j (QuadrupleJ): angular momenta it was built from.
        grid (LGrid): the ``ℓ`` grid.
        offdiag (numpy.ndarray): ``dim - 1`` couplings; ``offdiag[i]``
            is ``α(l_min + i + 1)`` and couples grid points ``i`` and
            ``i + 1``.
    """
    j = attr.ib()
    grid = attr.ib()
    offdiag = attr.ib()

    @property
    def dim(self):
        return self.grid.dim

    @property
    def diagonal(self):
        return np.zeros(self.dim)

    @property
    def scale(self):
        """Largest coupling, or 1 for the 1x1 zero matrix."""
        return float(self.offdiag.max()) if self.offdiag.size else 1.0

    def matrix(self):
        return np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)


@attr.s(frozen=True, eq=False)
class EigenSystem:
    """Sorted eigenvalues and orthonormal eigenvectors.

    Column ``n`` of ``eigenvectors`` belongs to ``eigenvalues[n]``; the
    first component with magnitude above ``1e-12`` of the column norm is
    positive.
    """
    hamiltonian = attr.ib()
    eigenvalues = attr.ib()
    eigenvectors = attr.ib()

    @property
    def dim(self):
        return self.eigenvalues.size

    def pairs(self):
        """Yield index pairs ``(n, dim - 1 - n)`` of ``k`` and ``-k``."""
        for n in range((self.dim + 1) // 2):
            yield n, self.dim - 1 - n


@attr.s(frozen=True)
class SymmetryReport:
    """Measured spectral symmetries of an :class:`EigenSystem`."""
    pairing_defect = attr.ib(type=float)
    parity_defect = attr.ib(type=float)
    odd_dimension = attr.ib(type=bool)
    zero_mode = attr.ib(default=None)
    has_zero_mode = attr.ib(type=bool, default=False)


@attr.s(frozen=True)
class RepresentationReport:
    """Equivalence of the real and imaginary antisymmetric forms."""
    residual = attr.ib(type=float)
    mirror_residual = attr.ib(type=float)
    unitary_defect = attr.ib(type=float)
    hermitian = attr.ib(type=bool)


def build_hamiltonian(j):
    """Build the :class:`TridiagonalHamiltonian` of ``j``.

    Args:
        j (QuadrupleJ): angular momenta.
    Returns:
        TridiagonalHamiltonian: couplings ``α`` at
        ``ℓ = l_min + 1 .. l_max`` from exact Heron values.
    Raises:
        ValidationError: if ``j`` is not a valid quadruple.
    """
    grid = lattice.validate(j)
    offdiag = np.array(
        [heron.alpha(j, grid.ell(i)) for i in range(1, grid.dim)],
        dtype=float)
    if offdiag.size and not (offdiag > 0).all():
        msg = (f'Hamiltonian for ({j}) is reducible: couplings '
               f'{offdiag.tolist()} are not all positive.')
        logging.error(msg)
        raise exceptions.DomainError(msg)
    logging.debug(f'Built {grid.dim}x{grid.dim} Hamiltonian for ({j}).')
    return TridiagonalHamiltonian(j=j, grid=grid, offdiag=offdiag)


def _fix_signs(vectors):
    for column in vectors.T:
        significant = np.flatnonzero(
            np.abs(column) > SIGN_THRESHOLD * np.linalg.norm(column))
        if significant.size and column[significant[0]] < 0:
            column *= -1
    return vectors


def _failed_index(error):
    match = re.search(r'info\D*(\d+)', str(error))
    return int(match.group(1)) if match else None


def eigensolve(h):
    """Solve the full eigenproblem of ``h``.

    Implicit-shift QL/QR (LAPACK ``stev``) on the symmetric tridiagonal
    matrix; eigenvalues ascending, eigenvectors orthonormal with the
    first significant component positive.

    Args:
        h (TridiagonalHamiltonian): irreducible Hamiltonian.
    Returns:
        EigenSystem
    Raises:
        ConvergenceFailure: if LAPACK exceeds its iteration cap.
    """
    if h.dim == 1:
        return EigenSystem(hamiltonian=h, eigenvalues=np.zeros(1),
                           eigenvectors=np.ones((1, 1)))
    try:
        values, vectors = scipy.linalg.eigh_tridiagonal(
            h.diagonal, h.offdiag, lapack_driver='stev')
    except np.linalg.LinAlgError as e:
        index = _failed_index(e)
        msg = f'Eigensolver did not converge for ({h.j}): {e}'
        logging.error(msg)
        raise exceptions.ConvergenceFailure(msg, index=index)

    order = np.argsort(values, kind='stable')
    values = values[order]
    vectors = _fix_signs(np.array(vectors[:, order], copy=True))
    return EigenSystem(hamiltonian=h, eigenvalues=values,
                       eigenvectors=vectors)


def solve(j):
    """Shortcut for ``eigensolve(build_hamiltonian(j))``."""
    return eigensolve(build_hamiltonian(j))


def residuals(h, e):
    """Largest eigen-residual ``|Hv - kv|`` and Gram-matrix defect."""
    matrix = h.matrix()
    vectors = e.eigenvectors
    residual = np.abs(matrix @ vectors - vectors * e.eigenvalues).max()
    gram = vectors.T @ vectors
    gram_defect = np.abs(gram - np.eye(e.dim)).max()
    return float(residual), float(gram_defect)


def verify_spectral_symmetries(e):
    """Measure the ``k <-> -k`` pairing and eigenvector parity of ``e``.

    The parity relation ``Φ(k)_i = σ (-1)^i Φ(-k)_i`` uses the 0-based
    grid index ``i``; the global sign ``σ`` is free.

    Args:
        e (EigenSystem): solved system.
    Returns:
        SymmetryReport
    """
    values = e.eigenvalues
    vectors = e.eigenvectors
    alternating = (-1.0) ** np.arange(e.dim)

    pairing = float(np.abs(values + values[::-1]).max())
    parity = 0.0
    for low, high in e.pairs():
        flipped = alternating * vectors[:, high]
        defect = min(np.abs(vectors[:, low] - flipped).max(),
                     np.abs(vectors[:, low] + flipped).max())
        parity = max(parity, float(defect))

    odd = bool(e.dim % 2)
    zero_mode = None
    has_zero = False
    if odd:
        zero_mode = float(abs(values[e.dim // 2]))
        has_zero = zero_mode <= SIGN_THRESHOLD * e.hamiltonian.scale
    report = SymmetryReport(
        pairing_defect=pairing, parity_defect=parity, odd_dimension=odd,
        zero_mode=zero_mode, has_zero_mode=has_zero)
    logging.debug(f'Spectral symmetries of ({e.hamiltonian.j}): {report}')
    return report


def antisymmetric_representation(j, e):
    """Check the imaginary antisymmetric form of the volume operator.

    Builds ``K`` with ``K[i, i+1] = iα`` and ``K[i+1, i] = -iα``, maps
    each real eigenvector through ``Ψ_i = (-i)^i Φ_i`` and measures
    ``|KΨ - kΨ|``. The transposed orientation carries the same vectors
    to ``-k``; that residual is reported as ``mirror_residual``.

    Args:
        j (QuadrupleJ): angular momenta of ``e``.
        e (EigenSystem): solved system.
    Returns:
        RepresentationReport
    """
    h = e.hamiltonian
    if h.j != j:
        h = build_hamiltonian(j)
    offdiag = h.offdiag.astype(complex)
    kernel = np.diag(1j * offdiag, 1) + np.diag(-1j * offdiag, -1)
    phases = np.array([_PHASES[i % 4] for i in range(e.dim)])
    unitary = np.diag(phases)

    psi = unitary @ e.eigenvectors
    residual = np.abs(kernel @ psi - psi * e.eigenvalues).max()
    mirror = np.abs(kernel.T @ psi + psi * e.eigenvalues).max()
    conjugated = unitary @ h.matrix() @ unitary.conj().T
    return RepresentationReport(
        residual=float(residual),
        mirror_residual=float(mirror),
        unitary_defect=float(np.abs(conjugated - kernel).max()),
        hermitian=bool(np.array_equal(kernel, kernel.conj().T)))


def characteristic_polynomial(h):
    """Exact characteristic polynomial of ``h`` from rational ``α²``.

    Continuant recursion ``P_n = k P_{n-1} - α_n² P_{n-2}``.

    Returns:
        list(fractions.Fraction): coefficients in descending powers.
    Raises:
        ValueError: if ``h.dim`` exceeds 12.
    """
    if h.dim > MAX_EXACT_DIM:
        raise ValueError(f'Exact expansion is limited to dim <= '
                         f'{MAX_EXACT_DIM}, got {h.dim}.')
    previous = [fractions.Fraction(1)]
    current = [fractions.Fraction(1), fractions.Fraction(0)]
    if h.dim == 1:
        return current
    for n in range(1, h.dim):
        coupling = heron.alpha_squared(h.j, h.grid.ell(n))
        shifted = current + [fractions.Fraction(0)]
        padded = [fractions.Fraction(0)] * 2 + previous
        previous, current = current, [
            a - coupling * b for a, b in zip(shifted, padded)]
    return current


def brute_force_eigenvalues(h):
    """Sorted roots of :func:`characteristic_polynomial`."""
    coefficients = [float(c) for c in characteristic_polynomial(h)]
    return np.sort(np.roots(coefficients).real)
