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
Discrete orthogonal polynomials of the volume operator.

Eliminating the square roots from the real Schrödinger-like recursion
gives an unsymmetrical three-term recursion with polynomial coefficients
in the Regge-adapted variables ``(s, u, r, v)``. Two conventions are
shipped:

``as_printed``
    ``(2ℓ+1) F²(s,u,ℓ-1) p(ℓ-1) + (2ℓ-1) F²(r,v,ℓ+1) p(ℓ+1)
    = k (4ℓ²-1) p(ℓ)`` with the two-term normalization
    ``N(ℓ-1) = F(s,u,ℓ-1) / F(r,v,ℓ) N(ℓ)``.

``consistent``
    ``F²(s+1,u,ℓ) p(ℓ-1) + F²(r,v,ℓ+1) p(ℓ+1) = k (2ℓ+1) p(ℓ)``,
    the form forced by the exact factorization of the Heron product, with
    ``N(ℓ) / N(ℓ-1) = α(ℓ) (2ℓ-1) / F²(r,v,ℓ)``.

Both start from ``p(l_min - 1) = 0`` and ``p(l_min) = 1``. Values are
kept as mantissa and natural-log scale, renormalized every 32 steps, so
long grids never overflow. At an eigenvalue the values are taken from
both ends of the grid and spliced (:func:`run_two_sided`).
:func:`convention_harness` measures whether ``p = N Φ`` holds with a
``k``-independent ``N``.
"""

import fractions
import functools
import logging
import math

import attr
import numpy as np
import zope.interface
from numpy.polynomial import Polynomial

from regge_volume import exceptions
from regge_volume import interfaces
from regge_volume.analysis import spectrum
from regge_volume.core import heron
from regge_volume.core import lattice
from regge_volume.core import symmetry


__all__ = (
    'AS_PRINTED', 'CONSISTENT', 'CONVENTIONS', 'AsPrintedConvention',
    'ConsistentConvention', 'get_convention', 'PolynomialRun',
    'PolynomialTable', 'ClosedFormNorms', 'OrthogonalityReport',
    'HarnessVerdict', 'run_recursion', 'run_two_sided', 'polynomial_values',
    'polynomial_coefficients', 'normalization_closed_form',
    'closed_form_details', 'build_table', 'orthogonality_report',
    'k_independence_spread', 'convention_harness',
)

AS_PRINTED = 'as_printed'
CONSISTENT = 'consistent'
EMPIRICAL = 'empirical'
CLOSED_FORM = 'closed_form'
RENORMALIZE_EVERY = 32
SPREAD_TOLERANCE = 1e-8
SECULAR_TOLERANCE = 1e-8
GRAM_TOLERANCE = 1e-9


def _sign(value):
    return (value > 0) - (value < 0)


@zope.interface.implementer(interfaces.IRecursionConvention)
class AsPrintedConvention:
    """Recursion and normalization exactly as printed, with ``s`` the
    semiperimeter of the ``j`` quadrilateral.

    Args:
        j (QuadrupleJ): valid angular momenta.
    """
    name = AS_PRINTED

    def __init__(self, j):
        self.j = j
        self.frame = symmetry.regge_frame(j)

    def coefficients(self, ell):
        f = self.frame
        ell = lattice.HalfInt.coerce(ell)
        one = lattice.HalfInt(2)
        c_prev = (ell.twice + 1) * heron.heron_squared(f.s, f.u, ell - one)
        c_next = (ell.twice - 1) * heron.heron_squared(f.r, f.v, ell + one)
        c_diag = fractions.Fraction(ell.twice ** 2 - 1)
        return c_prev, c_next, c_diag

    def normalization_ratio(self, ell):
        f = self.frame
        ell = lattice.HalfInt.coerce(ell)
        upper = heron.heron_squared(f.r, f.v, ell)
        lower = heron.heron_squared(f.s, f.u, ell - lattice.HalfInt(2))
        if upper == 0 or lower == 0:
            msg = (f'Closed-form normalization of ({self.j}) degenerates at '
                   f'l={ell}: F²(r,v,l)={upper}, F²(s,u,l-1)={lower}.')
            raise exceptions.ZeroDivisor(msg)
        magnitude = math.sqrt(abs(upper) / abs(lower))
        sign = 1 if upper > 0 and lower > 0 else None
        entry = {'l': str(ell), 'f2_rv': _sign(upper), 'f2_su': _sign(lower)}
        return magnitude, sign, entry


@zope.interface.implementer(interfaces.IRecursionConvention)
class ConsistentConvention:
    """Recursion implied by the exact factorization identity.

    Args:
        j (QuadrupleJ): valid angular momenta.
    """
    name = CONSISTENT

    def __init__(self, j):
        self.j = j
        self.frame = symmetry.regge_frame(j)

    def coefficients(self, ell):
        f = self.frame
        ell = lattice.HalfInt.coerce(ell)
        c_prev = heron.heron_squared(f.s + 1, f.u, ell)
        c_next = heron.heron_squared(f.r, f.v, ell + 1)
        c_diag = fractions.Fraction(ell.twice + 1)
        return c_prev, c_next, c_diag

    def normalization_ratio(self, ell):
        f = self.frame
        ell = lattice.HalfInt.coerce(ell)
        divisor = heron.heron_squared(f.r, f.v, ell)
        if divisor == 0:
            msg = (f'Closed-form normalization of ({self.j}) divides by '
                   f'F²(r,v,l)=0 at l={ell}.')
            raise exceptions.ZeroDivisor(msg)
        ratio = heron.alpha(self.j, ell) * (ell.twice - 1) / float(divisor)
        entry = {'l': str(ell), 'f2_rv': _sign(divisor)}
        return abs(ratio), _sign(ratio), entry


CONVENTIONS = {
    AS_PRINTED: AsPrintedConvention,
    CONSISTENT: ConsistentConvention,
}


def get_convention(name, j):
    """Instantiate the recursion convention called ``name`` for ``j``."""
    try:
        klass = CONVENTIONS[name]
    except KeyError:
        msg = (f'Unknown recursion convention "{name}"; expected one of '
               f'{sorted(CONVENTIONS)}.')
        logging.error(msg)
        raise exceptions.ConfigError(msg)
    return klass(j)


@attr.s(frozen=True, eq=False)
class PolynomialRun:
    """Values ``p(k)`` on the grid plus the virtual value past its end.

    ``p_i = mantissa_i * exp(log_scale_i)``. A two-sided run joins the
    forward values up to ``splice`` with backward values from
    ``p(dim) = 0``; its virtual value is then the mismatch of the two
    halves at ``splice + 1``, which vanishes exactly when ``p(dim)``
    does.
    """
    k = attr.ib(type=float)
    mantissa = attr.ib()
    log_scale = attr.ib()
    virtual_mantissa = attr.ib(type=float)
    virtual_log_scale = attr.ib(type=float)
    splice = attr.ib(default=None)

    @property
    def values(self):
        with np.errstate(over='ignore'):
            return self.mantissa * np.exp(self.log_scale)

    @property
    def virtual(self):
        return self.virtual_mantissa * math.exp(self.virtual_log_scale)

    @property
    def log_abs(self):
        with np.errstate(divide='ignore'):
            return np.log(np.abs(self.mantissa)) + self.log_scale

    @property
    def signs(self):
        return np.sign(self.mantissa)

    @property
    def secular_defect(self):
        """``|p(dim)| / max_i |p_i|``; vanishes at eigenvalues.

        For a spliced run this is the mismatch at ``splice + 1``.
        """
        if not math.isfinite(self.virtual_mantissa):
            return math.nan
        if self.virtual_mantissa == 0:
            return 0.0
        log_virtual = (math.log(abs(self.virtual_mantissa)) +
                       self.virtual_log_scale)
        return math.exp(log_virtual - self.log_abs.max())


@functools.lru_cache(maxsize=64)
def _step_coefficients(convention, j):
    conv = get_convention(convention, j)
    grid = lattice.validate(j)
    return tuple(
        tuple(float(c) for c in conv.coefficients(grid.ell(i)))
        for i in range(grid.dim)
    )


def run_recursion(j, k, convention=CONSISTENT):
    """Run the forward recursion at eigenvalue ``k``.

    Args:
        j (QuadrupleJ): valid angular momenta.
        k (float): the spectral parameter (typically an eigenvalue).
        convention (str): ``'consistent'`` or ``'as_printed'``.
    Returns:
        PolynomialRun
    Raises:
        CoefficientVanishes: if the ``p(ℓ+1)`` coefficient is zero at an
            interior step.
    """
    grid = lattice.validate(j)
    conv = get_convention(convention, j)
    coefficients = _step_coefficients(conv.name, j)

    mantissa = np.empty(grid.dim)
    log_scale = np.zeros(grid.dim)
    mantissa[0] = 1.0
    prev, cur, log_total = 0.0, 1.0, 0.0
    virtual = math.nan
    for i, (c_prev, c_next, c_diag) in enumerate(coefficients):
        last = i == grid.dim - 1
        if c_next == 0:
            if last:
                logging.warning(f'Virtual value past the grid of ({j}) is '
                                'undefined: its coefficient vanishes.')
                break
            msg = (f'{conv.name} recursion for ({j}) decouples at grid '
                   f'index {i} (l={grid.ell(i)}).')
            logging.error(msg)
            raise exceptions.CoefficientVanishes(msg, step=i)
        nxt = (k * c_diag * cur - c_prev * prev) / c_next
        if last:
            virtual = nxt
            break
        mantissa[i + 1] = nxt
        log_scale[i + 1] = log_total
        prev, cur = cur, nxt
        if (i + 1) % RENORMALIZE_EVERY == 0:
            scale = max(abs(prev), abs(cur))
            if scale > 0:
                prev, cur = prev / scale, cur / scale
                log_total += math.log(scale)

    return PolynomialRun(
        k=float(k), mantissa=mantissa, log_scale=log_scale,
        virtual_mantissa=virtual, virtual_log_scale=log_total)


def _run_backward(coefficients, k, splice):
    dim = len(coefficients)
    mantissa = np.empty(dim - splice)
    log_scale = np.zeros(dim - splice)
    mantissa[-1] = 1.0
    nxt, cur, log_total = 0.0, 1.0, 0.0
    for step, i in enumerate(range(dim - 1, splice, -1)):
        c_prev, c_next, c_diag = coefficients[i]
        prev = (k * c_diag * cur - c_next * nxt) / c_prev
        mantissa[i - 1 - splice] = prev
        log_scale[i - 1 - splice] = log_total
        nxt, cur = cur, prev
        if (step + 1) % RENORMALIZE_EVERY == 0:
            scale = max(abs(nxt), abs(cur))
            if scale > 0:
                nxt, cur = nxt / scale, cur / scale
                log_total += math.log(scale)
    return mantissa, log_scale


def run_two_sided(j, k, splice, convention=CONSISTENT):
    """Evaluate the polynomials at an eigenvalue from both ends.

    The forward recursion loses the decaying solution past the right
    turning point, so values beyond ``splice`` come from the backward
    recursion started at ``p(dim) = 0``, ``p(dim-1) = 1`` and scaled to
    meet the forward value at ``splice``. Pick ``splice`` inside the
    classically allowed band, e.g. where the eigenvector peaks.

    Args:
        j (QuadrupleJ): valid angular momenta.
        k (float): an eigenvalue.
        splice (int): grid index where the halves meet.
        convention (str): recursion convention.
    Returns:
        PolynomialRun: forward-only when ``splice`` is the last index or
        the backward recursion cannot be run.
    Raises:
        CoefficientVanishes: as :func:`run_recursion`.
    """
    forward = run_recursion(j, k, convention)
    dim = forward.mantissa.size
    splice = int(splice)
    if splice >= dim - 1:
        return attr.evolve(forward, splice=dim - 1)

    coefficients = _step_coefficients(convention, j)
    f_m = forward.mantissa[splice]
    if f_m == 0 or any(c[0] == 0 for c in coefficients[splice + 1:]):
        logging.debug(f'No backward run for ({j}) at k={k}; keeping the '
                      'forward values.')
        return attr.evolve(forward, splice=dim - 1)
    b_mantissa, b_log_scale = _run_backward(coefficients, k, splice)
    if b_mantissa[0] == 0:
        return attr.evolve(forward, splice=dim - 1)

    base = forward.log_scale[splice]
    factor = f_m / b_mantissa[0]
    mantissa = forward.mantissa.copy()
    log_scale = forward.log_scale.copy()
    mantissa[splice + 1:] = b_mantissa[1:] * factor
    log_scale[splice + 1:] = b_log_scale[1:] - b_log_scale[0] + base
    forward_next = forward.mantissa[splice + 1] * math.exp(
        forward.log_scale[splice + 1] - base)
    backward_next = b_mantissa[1] * factor * math.exp(
        b_log_scale[1] - b_log_scale[0])
    return PolynomialRun(
        k=float(k), mantissa=mantissa, log_scale=log_scale,
        virtual_mantissa=forward_next - backward_next,
        virtual_log_scale=base, splice=splice)


def polynomial_values(j, k, convention=CONSISTENT):
    """Values ``p(k)`` on the grid of ``j``; ``p`` at ``l_min`` is 1."""
    return run_recursion(j, k, convention).values


def polynomial_coefficients(j, convention=CONSISTENT):
    """Run the recursion with ``k`` symbolic.

    Returns:
        list(numpy.polynomial.Polynomial): ``dim + 1`` polynomials in
        ``k``; entry ``i`` has degree ``i`` and the parity of ``i``, and
        the last one is the secular polynomial.
    """
    conv = get_convention(convention, j)
    k = Polynomial([0.0, 1.0])
    polys = [Polynomial([1.0])]
    prev = Polynomial([0.0])
    for i, (c_prev, c_next, c_diag) in enumerate(
            _step_coefficients(conv.name, j)):
        if c_next == 0:
            msg = (f'{conv.name} recursion for ({j}) decouples at grid '
                   f'index {i}.')
            logging.error(msg)
            raise exceptions.CoefficientVanishes(msg, step=i)
        nxt = (k * c_diag * polys[-1] - prev * c_prev) / c_next
        prev = polys[-1]
        polys.append(nxt)
    return polys


@attr.s(frozen=True, eq=False)
class ClosedFormNorms:
    """Closed-form normalization factors with ``N(l_min) = 1``.

    ``signs`` holds ``+1``/``-1`` where the closed form fixes the sign
    and ``0`` where it only fixes the magnitude; ``ledger`` records the
    sign of every Heron form entering each step.
    """
    convention = attr.ib(type=str)
    log_abs = attr.ib()
    signs = attr.ib()
    ledger = attr.ib()

    @property
    def values(self):
        with np.errstate(over='ignore'):
            magnitudes = np.exp(self.log_abs)
        return np.where(self.signs == 0, 1, self.signs) * magnitudes


def closed_form_details(j, convention=CONSISTENT):
    """Solve the two-term normalization relation from ``N(l_min) = 1``.

    Raises:
        ZeroDivisor: if a Heron factor of the relation vanishes on the
            grid.
    """
    grid = lattice.validate(j)
    conv = get_convention(convention, j)
    log_abs = np.zeros(grid.dim)
    signs = np.ones(grid.dim, dtype=int)
    ledger = []
    known = True
    for i in range(1, grid.dim):
        try:
            magnitude, sign, entry = conv.normalization_ratio(grid.ell(i))
        except exceptions.ZeroDivisor as e:
            logging.error(str(e))
            raise exceptions.ZeroDivisor(str(e), step=i) from e
        ledger.append(entry)
        log_abs[i] = log_abs[i - 1] + math.log(magnitude)
        known = known and sign is not None
        signs[i] = signs[i - 1] * sign if known else 0
    return ClosedFormNorms(convention=conv.name, log_abs=log_abs,
                           signs=signs, ledger=ledger)


def normalization_closed_form(j, convention=CONSISTENT):
    """Closed-form ``N`` on the grid (magnitudes where the sign is open)."""
    return closed_form_details(j, convention).values


@attr.s(frozen=True, eq=False)
class PolynomialTable:
    """Polynomial values at every eigenvalue, with their norms.

    ``empirical_log_norms``/``empirical_signs`` hold
    ``N_i = p_i Φ_0 / Φ_i`` taken from the eigenvector with the largest
    ``|Φ_i|``. ``log_norms``/``norm_signs`` are the norms in use: the
    closed form when ``norm_source`` is ``'closed_form'``, the empirical
    ones otherwise. Weights are ``1 / N²``.
    """
    grid = attr.ib()
    convention = attr.ib(type=str)
    eigensystem = attr.ib()
    runs = attr.ib()
    log_norms = attr.ib()
    norm_signs = attr.ib()
    empirical_log_norms = attr.ib()
    empirical_signs = attr.ib()
    norm_source = attr.ib(type=str, default=EMPIRICAL)

    @property
    def eigenvalues(self):
        return self.eigensystem.eigenvalues

    @property
    def values(self):
        """``dim x n_k`` matrix of ``p^(k)_i``."""
        return np.column_stack([run.values for run in self.runs])

    @property
    def norms(self):
        with np.errstate(over='ignore'):
            return self.norm_signs * np.exp(self.log_norms)

    @property
    def weights(self):
        with np.errstate(over='ignore'):
            return np.exp(-2 * self.log_norms)

    def scaled_columns(self):
        """``q = p / N`` per column, each scaled to a largest entry of 1."""
        log_p = np.column_stack([run.log_abs for run in self.runs])
        sign_p = np.column_stack([run.signs for run in self.runs])
        log_q = log_p - self.log_norms[:, None]
        finite = np.where(np.isfinite(log_q), log_q, -np.inf)
        log_q = log_q - finite.max(axis=0)
        with np.errstate(under='ignore'):
            return sign_p * self.norm_signs[:, None] * np.exp(log_q)


def _empirical_norms(runs, phi):
    log_p = np.column_stack([run.log_abs for run in runs])
    sign_p = np.column_stack([run.signs for run in runs])
    with np.errstate(divide='ignore'):
        log_n = log_p - np.log(np.abs(phi)) + np.log(np.abs(phi[0]))
    sign_n = sign_p * np.sign(phi) * np.sign(phi[0])
    best = np.abs(phi).argmax(axis=1)
    rows = np.arange(phi.shape[0])
    return log_n[rows, best], sign_n[rows, best]


def _closed_form_or_none(j, convention):
    if convention != CONSISTENT:
        return None
    try:
        closed = closed_form_details(j, convention)
    except exceptions.ZeroDivisor:
        return None
    if (closed.signs == 0).any():
        return None
    return closed


def build_table(j, e=None, convention=CONSISTENT):
    """Evaluate the polynomials at every eigenvalue of ``e``.

    Each column is a two-sided run spliced where its eigenvector peaks.
    For the consistent convention the signed closed-form norms are used
    whenever they exist on the whole grid; otherwise the empirical ones.

    Args:
        j (QuadrupleJ): angular momenta.
        e (EigenSystem): (optional) solved system; solved here if not
            given.
        convention (str): recursion convention.
    Returns:
        PolynomialTable
    """
    if e is None:
        e = spectrum.solve(j)
    grid = lattice.validate(j)
    phi = e.eigenvectors
    runs = [
        run_two_sided(j, k, int(np.abs(phi[:, n]).argmax()), convention)
        for n, k in enumerate(e.eigenvalues)
    ]
    log_n, sign_n = _empirical_norms(runs, phi)
    closed = _closed_form_or_none(j, convention)
    if closed is None:
        logging.debug(f'Using empirical {convention} norms for ({j}).')
        log_norms, norm_signs, source = log_n, sign_n, EMPIRICAL
    else:
        log_norms, norm_signs, source = (
            closed.log_abs, closed.signs, CLOSED_FORM)
    return PolynomialTable(
        grid=grid, convention=convention, eigensystem=e, runs=runs,
        log_norms=log_norms, norm_signs=norm_signs,
        empirical_log_norms=log_n, empirical_signs=sign_n,
        norm_source=source)


@attr.s(frozen=True, eq=False)
class OrthogonalityReport:
    """Normalized weighted Gram matrix of the polynomial family."""
    gram = attr.ib()
    max_off_diagonal = attr.ib(type=float)


def orthogonality_report(t):
    """Weighted Gram matrix ``Σ_i w_i p^(k)_i p^(k')_i``, normalized.

    Computed from ``p/N`` in log form, with a per-``k`` scale removed
    (the normalized Gram matrix does not depend on it).
    """
    q = t.scaled_columns()
    gram = q.T @ q
    diagonal = np.sqrt(np.diag(gram))
    normalized = gram / np.outer(diagonal, diagonal)
    off = normalized - np.diag(np.diag(normalized))
    return OrthogonalityReport(
        gram=normalized,
        max_off_diagonal=float(np.abs(off).max()) if off.size else 0.0)


def k_independence_spread(t):
    """Worst fit of ``p / N`` to ``Φ`` over all ``k``.

    Each column ``q = p / N`` is matched to its eigenvector by the least
    squares factor ``c``; the defect is ``max_i |c q_i - Φ_i| / max|Φ|``.
    Eigenvector components carry absolute, not relative, accuracy, so
    the defect is measured against the column's largest entry.
    """
    q = t.scaled_columns()
    phi = t.eigensystem.eigenvectors
    spread = 0.0
    for n in range(phi.shape[1]):
        column = np.where(np.isfinite(q[:, n]), q[:, n], 0.0)
        norm = float(column @ column)
        if norm == 0:
            return math.inf
        fit = float(column @ phi[:, n]) / norm
        defect = np.abs(fit * column - phi[:, n]).max()
        spread = max(spread, float(defect / np.abs(phi[:, n]).max()))
    return spread


@attr.s(frozen=True)
class HarnessVerdict:
    """Numerical consistency of one recursion convention against ``Φ``."""
    convention = attr.ib(type=str)
    k_spread = attr.ib(type=float)
    secular_defect = attr.ib(type=float)
    gram_off_diagonal = attr.ib(type=float)
    closed_form_defect = attr.ib(type=float)
    closed_form_signs_agree = attr.ib(default=None)
    failure = attr.ib(default=None)

    @property
    def passed(self):
        if self.failure is not None:
            return False
        return (self.k_spread <= SPREAD_TOLERANCE and
                self.secular_defect <= SECULAR_TOLERANCE and
                self.gram_off_diagonal <= GRAM_TOLERANCE)

    def as_dict(self):
        data = attr.asdict(self)
        data['passed'] = self.passed
        data['tolerances'] = {
            'k_spread': SPREAD_TOLERANCE,
            'secular_defect': SECULAR_TOLERANCE,
            'gram_off_diagonal': GRAM_TOLERANCE,
        }
        return data


def _closed_form_comparison(j, t):
    try:
        closed = closed_form_details(j, t.convention)
    except exceptions.ZeroDivisor:
        return math.inf, None
    finite = np.isfinite(t.empirical_log_norms)
    diff = (t.empirical_log_norms - closed.log_abs)[finite]
    defect = 0.0
    if diff.size:
        defect = float(np.abs(np.expm1(diff - diff[0])).max())
    if (closed.signs == 0).any():
        return defect, None
    return defect, bool(np.array_equal(closed.signs, t.empirical_signs))


def convention_harness(j, convention=CONSISTENT, e=None):
    """Check ``p = N Φ`` with ``k``-independent ``N`` for a convention.

    Args:
        j (QuadrupleJ): angular momenta.
        convention (str): recursion convention to test.
        e (EigenSystem): (optional) solved system.
    Returns:
        HarnessVerdict: spreads, defects and the pass flag. A recursion
        that decouples yields a failed verdict rather than an error.
    """
    if e is None:
        e = spectrum.solve(j)
    try:
        table = build_table(j, e, convention)
    except exceptions.CoefficientVanishes as error:
        verdict = HarnessVerdict(
            convention=convention, k_spread=math.inf,
            secular_defect=math.inf, gram_off_diagonal=math.inf,
            closed_form_defect=math.inf, failure=error.reason)
        logging.warning(f'Harness for {convention} on ({j}): {verdict}')
        return verdict

    secular = max(run.secular_defect for run in table.runs)
    defect, signs_agree = _closed_form_comparison(j, table)
    verdict = HarnessVerdict(
        convention=convention,
        k_spread=k_independence_spread(table),
        secular_defect=secular if math.isfinite(secular) else math.inf,
        gram_off_diagonal=orthogonality_report(table).max_off_diagonal,
        closed_form_defect=defect,
        closed_form_signs_agree=signs_agree)
    if verdict.passed:
        logging.info(f'Harness for {convention} on ({j}) passed.')
    else:
        logging.warning(f'Harness for {convention} on ({j}) failed: '
                        f'{verdict}')
    return verdict
