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

# Mainly for easier documentation reading
from regge_volume.core import heron
from regge_volume.core import lattice
from regge_volume.core import symmetry
from regge_volume.core.heron import *  # noqa: F403
from regge_volume.core.lattice import *  # noqa: F403
from regge_volume.core.symmetry import *  # noqa: F403


__all__ = (
    lattice.__all__ +
    heron.__all__ +
    symmetry.__all__
)
