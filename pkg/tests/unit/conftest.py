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
Module for reusable pytest fixtures.
"""

import logging

import numpy as np
import pytest

from regge_volume.core import lattice


FIG3_LEFT = ('8.5', '10.5', '13.5', '14.5')


def draw_quadruples(rng, count, max_twice=80):
    """Draw ``count`` valid quadruples with ``2j <= max_twice``."""
    quadruples = []
    while len(quadruples) < count:
        twice = rng.integers(0, max_twice + 1, size=4)
        total = int(twice.sum())
        if total % 2 or 2 * int(twice.max()) > total:
            continue
        quadruples.append(
            lattice.QuadrupleJ.from_twice(*(int(t) for t in twice)))
    return quadruples


@pytest.fixture
def caplog(caplog):
    """Set global test logging levels."""
    caplog.set_level(logging.DEBUG)
    logging.getLogger('asyncio').setLevel(logging.WARNING)
    return caplog


@pytest.fixture
def rng():
    return np.random.default_rng(20260101)


@pytest.fixture
def fig3_left():
    return lattice.QuadrupleJ(*FIG3_LEFT)


@pytest.fixture
def spin_half():
    return lattice.QuadrupleJ.from_values(0.5, 0.5, 0.5, 0.5)


@pytest.fixture
def spin_one():
    return lattice.QuadrupleJ.from_values(1, 1, 1, 1)


@pytest.fixture
def random_quadruples(rng):
    def _draw(count, max_twice=80):
        return draw_quadruples(rng, count, max_twice)
    return _draw
