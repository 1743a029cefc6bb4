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
from regge_volume.analysis import polynomials
from regge_volume.analysis import semiclassics
from regge_volume.analysis import spectrum
from regge_volume.analysis.polynomials import *  # noqa: F403
from regge_volume.analysis.semiclassics import *  # noqa: F403
from regge_volume.analysis.spectrum import *  # noqa: F403


__all__ = (
    spectrum.__all__ +
    polynomials.__all__ +
    semiclassics.__all__
)
