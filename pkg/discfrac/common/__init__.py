# Copyright 2024 discfrac Contributors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""Common utilities for discfrac."""

from discfrac.common.exceptions import (
    DiscFracError,
    DomainError,
    GridMisalignmentError,
    InsufficientSamplesError,
    IntegerOrderError,
    KernelSingularityError,
    ParseError,
    UnknownCheckError,
)
from discfrac.common.grid import AnchorPair, GridFunction
from discfrac.common.logger import Logger
from discfrac.common.registry import Registry
from discfrac.common.specfun import GLWeights, Order
