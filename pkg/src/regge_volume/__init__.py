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

__author__ = 'The regge-volume Authors'
__version__ = '0.1.0.dev1'
__license__ = 'Apache 2.0'
__email__ = ''
__description__ = 'Spectra and semiclassics of the quantum volume operator'
__uri__ = ''


# Mainly for easier documentation reading
from regge_volume import analysis
from regge_volume import core
from regge_volume import exceptions
from regge_volume.analysis import *  # noqa: F403
from regge_volume.core import *  # noqa: F403
from regge_volume.exceptions import *  # noqa: F403


__all__ = (
    core.__all__ +
    analysis.__all__ +
    exceptions.__all__
)
