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
import math

import numpy as np
import pytest

from regge_volume import exceptions
from regge_volume.analysis import polynomials
from regge_volume.analysis import spectrum
from regge_volume.core import lattice
from regge_volume.core import symmetry


SMALL_QUADRUPLES = [
    (0.5, 0.5, 0.5, 0.5),
    (1, 1, 1, 1),
    (1, 2, 2, 3),
    (2, 2, 2, 2),
]

PRESET_QUADRUPLES = [
    ('8.5', '10.5', '13.5', '14.5'),
    ('17', '21', '27', '29'),
    ('100', '110', '130', '140'),
    ('120', '120', '120', '120'),
]


def _quadruple(values):
    return lattice.QuadrupleJ.from_values(*values)


@pytest.mark.parametrize('k,expected', [
    [math.sqrt(3) / 4, [1.0, -4 * math.sqrt(3), 5.0]],
    [0.0, [1.0, 0.0, -4.0]],
    [-math.sqrt(3) / 4, [1.0, 4 * math.sqrt(3), 5.0]],
])
def test_polynomial_values_consistent(spin_one, k, expected):
    actual = polynomials.polynomial_values(spin_one, k)

    np.testing.assert_allclose(expected, actual, rtol=1e-13, atol=1e-13)


def test_polynomial_values_as_printed(spin_one):
    actual = polynomials.polynomial_values(
        spin_one, 0.0, polynomials.AS_PRINTED)

    np.testing.assert_allclose([1.0, 0.0, -3.0], actual, atol=1e-13)


def test_polynomial_coefficients(spin_one):
    """Symbolic coefficients: degree i, parity of i, secular roots."""
    polys = polynomials.polynomial_coefficients(spin_one)

    assert 4 == len(polys)
    np.testing.assert_allclose([-4.0, 0.0, 48.0], polys[2].coef)
    for i, poly in enumerate(polys):
        assert i == poly.degree()
        assert not poly.coef[(i + 1) % 2::2].any()
    np.testing.assert_allclose(
        spectrum.solve(spin_one).eigenvalues,
        np.sort(polys[-1].roots().real), atol=1e-12)


def test_coefficients_match_values(random_quadruples, rng):
    for j in random_quadruples(20, max_twice=10):
        polys = polynomials.polynomial_coefficients(j)
        k = rng.uniform(-1.0, 1.0)
        values = polynomials.polynomial_values(j, k)

        np.testing.assert_allclose(
            [poly(k) for poly in polys[:-1]], values, rtol=1e-9,
            atol=1e-9 * np.abs(values).max())


def test_run_starts_at_one(random_quadruples):
    for j in random_quadruples(50):
        run = polynomials.run_recursion(j, 0.3)
        assert 1.0 == run.values[0]
        assert lattice.validate(j).dim == run.values.size


def test_regge_invariant_values(random_quadruples, rng):
    """Coefficients depend on j only through Regge-invariant forms."""
    for j in random_quadruples(50):
        k = rng.uniform(-2.0, 2.0)
        conjugate = symmetry.regge_conjugate(j)
        for convention in (polynomials.CONSISTENT, polynomials.AS_PRINTED):
            try:
                expected = polynomials.polynomial_values(j, k, convention)
            except exceptions.CoefficientVanishes:
                continue
            np.testing.assert_array_equal(
                expected,
                polynomials.polynomial_values(conjugate, k, convention))


def test_renormalization_does_not_change_values(fig3_left, mocker):
    expected = polynomials.polynomial_values(fig3_left, 1.0)

    mocker.patch.object(polynomials, 'RENORMALIZE_EVERY', 1)
    actual = polynomials.polynomial_values(fig3_left, 1.0)

    np.testing.assert_allclose(
        expected, actual, rtol=1e-12, atol=1e-12 * np.abs(expected).max())


def test_secular_defect(spin_one):
    """The virtual value past the grid vanishes only at eigenvalues."""
    for k in spectrum.solve(spin_one).eigenvalues:
        run = polynomials.run_recursion(spin_one, k)
        assert run.secular_defect <= 1e-12

    off = polynomials.run_recursion(spin_one, 0.1)
    assert off.secular_defect > 1e-2


def test_coefficient_vanishes(caplog):
    """The printed recursion decouples at l = 1/2."""
    j = _quadruple((0.5, 1, 1, 0.5))

    with pytest.raises(exceptions.CoefficientVanishes) as e:
        polynomials.run_recursion(j, 0.1, polynomials.AS_PRINTED)

    assert 0 == e.value.step
    assert 'coefficient_vanishes' == e.value.reason
    assert 1 == len(
        [r for r in caplog.records if r.levelno == logging.ERROR])
    # the consistent form is regular there
    assert 2 == polynomials.polynomial_values(j, 0.1).size


def test_virtual_value_undefined(caplog):
    j = _quadruple((0.5, 0, 0, 0.5))

    run = polynomials.run_recursion(j, 0.0, polynomials.AS_PRINTED)

    assert math.isnan(run.virtual)
    assert math.isnan(run.secular_defect)
    assert 1 == len(
        [r for r in caplog.records if r.levelno == logging.WARNING])


def test_get_convention_unknown(spin_one, caplog):
    with pytest.raises(exceptions.ConfigError):
        polynomials.get_convention('upside_down', spin_one)

    assert 1 == len(caplog.records)


@pytest.mark.parametrize('convention,expected', [
    [polynomials.CONSISTENT, [1.0, -8 / math.sqrt(3), 2 * math.sqrt(5)]],
    [polynomials.AS_PRINTED, [1.0, 0.25, 1 / 3]],
])
def test_normalization_closed_form(spin_one, convention, expected):
    """Closed forms from N(l_min) = 1; open signs give magnitudes."""
    actual = polynomials.normalization_closed_form(spin_one, convention)

    np.testing.assert_allclose(expected, actual, rtol=1e-13)


def test_closed_form_sign_ledger(spin_one):
    details = polynomials.closed_form_details(
        spin_one, polynomials.AS_PRINTED)

    assert [1, 0, 0] == details.signs.tolist()
    assert [
        {'l': '1', 'f2_rv': -1, 'f2_su': -1},
        {'l': '2', 'f2_rv': -1, 'f2_su': -1},
    ] == details.ledger


def test_closed_form_single_point():
    j = _quadruple((0, 2, 2, 0))

    assert [1.0] == polynomials.normalization_closed_form(j).tolist()


def test_zero_divisor_at_l_min(spin_one):
    """F²(r, v, l) vanishes at the bottom of the grid."""
    convention = polynomials.ConsistentConvention(spin_one)

    with pytest.raises(exceptions.ZeroDivisor):
        convention.normalization_ratio(0)


def test_closed_form_zero_divisor_step(spin_one, mocker, caplog):
    mocker.patch.object(
        polynomials.ConsistentConvention, 'normalization_ratio',
        side_effect=exceptions.ZeroDivisor('F² vanishes'))

    with pytest.raises(exceptions.ZeroDivisor) as e:
        polynomials.closed_form_details(spin_one)

    assert 1 == e.value.step
    assert 'zero_divisor' == e.value.reason


def test_build_table(spin_one):
    table = polynomials.build_table(spin_one)

    assert (3, 3) == table.values.shape
    np.testing.assert_allclose(
        [1.0, -8 / math.sqrt(3), 2 * math.sqrt(5)], table.norms, rtol=1e-12)
    np.testing.assert_allclose(1 / table.norms ** 2, table.weights,
                               rtol=1e-12)
    np.testing.assert_allclose(
        polynomials.normalization_closed_form(spin_one), table.norms,
        rtol=1e-12)


@pytest.mark.parametrize('values', SMALL_QUADRUPLES)
def test_harness_consistent_passes(values):
    verdict = polynomials.convention_harness(_quadruple(values))

    assert verdict.passed
    assert verdict.k_spread <= 1e-8
    assert verdict.secular_defect <= 1e-8
    assert verdict.gram_off_diagonal <= 1e-9
    assert verdict.closed_form_defect <= 1e-9
    assert verdict.closed_form_signs_agree


def test_harness_as_printed_reported(spin_one):
    """The printed form is measured, and fails on (1, 1, 1, 1)."""
    verdict = polynomials.convention_harness(
        spin_one, polynomials.AS_PRINTED)
    data = verdict.as_dict()

    assert not verdict.passed
    assert verdict.k_spread > 1e-2
    assert polynomials.AS_PRINTED == data['convention']
    assert data['passed'] is False
    assert 1e-8 == data['tolerances']['k_spread']


def test_harness_decoupled_verdict():
    verdict = polynomials.convention_harness(
        _quadruple((0.5, 1, 1, 0.5)), polynomials.AS_PRINTED)

    assert not verdict.passed
    assert 'coefficient_vanishes' == verdict.failure
    assert math.isinf(verdict.k_spread)


@pytest.mark.parametrize('values,tolerance', [
    [(0.5, 0.5, 0.5, 0.5), 1e-12],
    [(8.5, 10.5, 13.5, 14.5), 1e-9],
])
def test_orthogonality(values, tolerance):
    """Polynomials are orthogonal under the weights 1 / N²."""
    table = polynomials.build_table(_quadruple(values))
    report = polynomials.orthogonality_report(table)

    assert report.max_off_diagonal <= tolerance
    np.testing.assert_allclose(
        np.ones(table.grid.dim), np.diag(report.gram), rtol=1e-12)


def test_reference_quadruple_harness(fig3_left):
    verdict = polynomials.convention_harness(fig3_left)

    assert verdict.secular_defect <= 1e-8
    assert verdict.gram_off_diagonal <= 1e-9


@pytest.mark.parametrize('values', PRESET_QUADRUPLES)
def test_harness_consistent_presets(values):
    """Long grids with forbidden regions on both sides still pass."""
    verdict = polynomials.convention_harness(lattice.QuadrupleJ(*values))

    assert verdict.passed
    assert verdict.k_spread <= 1e-8
    assert verdict.secular_defect <= 1e-8
    assert verdict.gram_off_diagonal <= 1e-9
    assert verdict.closed_form_defect <= 1e-8
    assert verdict.closed_form_signs_agree


def test_two_sided_off_eigenvalue(spin_one):
    """Halves spliced at l = 1 disagree at l = 2 away from eigenvalues."""
    run = polynomials.run_two_sided(spin_one, 0.1, 1)

    assert 1 == run.splice
    np.testing.assert_allclose([1.0, -1.6, 5.0], run.values, rtol=1e-13)
    assert -8.52 == pytest.approx(run.virtual, rel=1e-13)
    assert 8.52 / 5 == pytest.approx(run.secular_defect, rel=1e-13)


def test_two_sided_at_eigenvalue(spin_one):
    k = math.sqrt(3) / 4

    run = polynomials.run_two_sided(spin_one, k, 1)

    np.testing.assert_allclose(
        [1.0, -4 * math.sqrt(3), 5.0], run.values, rtol=1e-13)
    assert run.secular_defect <= 1e-13


def test_two_sided_last_index_is_forward(spin_one):
    expected = polynomials.run_recursion(spin_one, 0.1)

    actual = polynomials.run_two_sided(spin_one, 0.1, 2)

    assert 2 == actual.splice
    np.testing.assert_array_equal(expected.values, actual.values)
    assert expected.virtual == actual.virtual


def test_two_sided_matches_forward(random_quadruples):
    """On short grids both evaluations agree at every eigenvalue."""
    for j in random_quadruples(30, max_twice=10):
        system = spectrum.solve(j)
        splice = system.dim // 2
        for k in system.eigenvalues:
            expected = polynomials.polynomial_values(j, k)
            actual = polynomials.run_two_sided(j, k, splice).values

            np.testing.assert_allclose(
                expected, actual, rtol=1e-9,
                atol=1e-9 * np.abs(expected).max())


def test_build_table_closed_form_norms(fig3_left):
    table = polynomials.build_table(fig3_left)

    assert polynomials.CLOSED_FORM == table.norm_source
    np.testing.assert_allclose(
        polynomials.normalization_closed_form(fig3_left), table.norms,
        rtol=1e-12)
    np.testing.assert_allclose(
        table.log_norms, table.empirical_log_norms, rtol=1e-9, atol=1e-9)
    np.testing.assert_array_equal(table.norm_signs, table.empirical_signs)


def test_build_table_empirical_norms(spin_one):
    """Open closed-form signs leave the empirical norms in use."""
    table = polynomials.build_table(spin_one, convention=polynomials.AS_PRINTED)

    assert polynomials.EMPIRICAL == table.norm_source
    np.testing.assert_array_equal(table.empirical_log_norms, table.log_norms)
