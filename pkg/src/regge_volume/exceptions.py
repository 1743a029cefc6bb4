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

__all__ = (
    'ReggeVolumeError', 'InputError', 'LatticeError', 'ValidationError',
    'NonHalfIntegral', 'NegativeJ', 'ClosureViolated', 'ConfigError',
    'NumericalError', 'DomainError', 'ConvergenceFailure',
    'CoefficientVanishes', 'ZeroDivisor', 'StepOutOfDomain', 'NoRoots',
)


class ReggeVolumeError(Exception):
    """Base exception for all regge-volume errors.

    Attributes:
        reason (str): machine-readable reason used in error documents.
        exit_code (int): process exit code used by the command line.
    """
    reason = 'error'
    exit_code = 1


class InputError(ReggeVolumeError):
    """Invalid user input or configuration."""
    reason = 'input_error'
    exit_code = 2


class LatticeError(InputError):
    """A value is not an exact multiple of one half."""
    reason = 'not_on_half_integer_lattice'


class ConfigError(InputError):
    """Improper or incomplete configuration."""
    reason = 'config_error'


class ValidationError(InputError):
    """A quadruple of angular momenta violates a physical invariant."""
    reason = 'validation_error'


class NonHalfIntegral(ValidationError):
    """Twice the sum of the four momenta is odd."""
    reason = 'non_half_integral_sum'


class NegativeJ(ValidationError):
    """An angular momentum is negative."""
    reason = 'negative_j'


class ClosureViolated(ValidationError):
    """A Regge-conjugate entry is negative; the quadrilateral can't close."""
    reason = 'closure_violated'


class NumericalError(ReggeVolumeError):
    """A numerical procedure could not produce a trustworthy result."""
    reason = 'numerical_error'
    exit_code = 3


class DomainError(NumericalError):
    """Argument outside the domain of a continuous function."""
    reason = 'domain_error'


class ConvergenceFailure(NumericalError):
    """An eigensolver exceeded its iteration cap.

    Args:
        msg (str): error message.
        index (int): (optional) index of the eigenpair that failed.
    """
    reason = 'convergence_failure'

    def __init__(self, msg, index=None):
        super().__init__(msg)
        self.index = index


class CoefficientVanishes(NumericalError):
    """The leading coefficient of a recursion step is zero.

    Args:
        msg (str): error message.
        step (int): grid index of the failing step.
    """
    reason = 'coefficient_vanishes'

    def __init__(self, msg, step=None):
        super().__init__(msg)
        self.step = step


class ZeroDivisor(NumericalError):
    """A closed-form normalization hits a vanishing divisor.

    Args:
        msg (str): error message.
        step (int): grid index of the failing step.
    """
    reason = 'zero_divisor'

    def __init__(self, msg, step=None):
        super().__init__(msg)
        self.step = step


class StepOutOfDomain(NumericalError):
    """A trajectory left the domain of the classical Hamiltonian.

    Args:
        msg (str): error message.
        state (PhasePoint): last valid state.
    """
    reason = 'step_out_of_domain'

    def __init__(self, msg, state=None):
        super().__init__(msg)
        self.state = state


class NoRoots(NumericalError):
    """No turning points exist for the requested level."""
    reason = 'no_roots'
