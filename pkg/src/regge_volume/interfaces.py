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
Interfaces shared between the analysis modules and the command line.
"""

import zope.interface


__all__ = ('IRecursionConvention', 'ICommand')


class IRecursionConvention(zope.interface.Interface):
    """Coefficients of an unsymmetrical three-term polynomial recursion.

    A convention defines, at each grid value ``ℓ``,
    ``c_prev(ℓ) p(ℓ-1) + c_next(ℓ) p(ℓ+1) = k c_diag(ℓ) p(ℓ)``
    and the two-term relation between neighbouring normalization factors.
    """
    name = zope.interface.Attribute('Short name, e.g. "consistent".')

    def coefficients(ell):
        """Return exact ``(c_prev, c_next, c_diag)`` at ``ell``."""

    def normalization_ratio(ell):
        """Return ``(|N(ℓ)/N(ℓ-1)|, sign, ledger_entry)`` at ``ell``.

        ``sign`` is ``+1``/``-1`` when the ratio is real and signed, or
        ``None`` when the closed form only fixes its magnitude.
        """


class ICommand(zope.interface.Interface):
    """A command of the ``regge-volume`` command line."""
    name = zope.interface.Attribute('Command name, e.g. "spectrum".')

    def payload(request):
        """Compute the JSON payload for a validated :class:`RunRequest`."""

    def rows(payload):
        """Return ``(header, rows)`` for the CSV rendering of ``payload``."""
