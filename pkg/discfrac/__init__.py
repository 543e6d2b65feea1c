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
"""discfrac: discrete fractional sums and differences in Riemann and binomial form."""

from discfrac import operators, verify
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
from discfrac.common.grid import (
    AnchorPair,
    GridFunction,
    binomial_diff,
    cumulative_sum,
    delta,
    iterate_diff,
    nabla,
    q_reflect,
    read_grid,
    write_grid,
)
from discfrac.common.specfun import (
    GLWeights,
    Order,
    falling_factorial,
    gamma_ratio,
    gl_weights,
    rising_factorial,
)
from discfrac.operators import (
    OperatorSpec,
    apply_operator,
    gl_apply,
    gl_apply_fast,
    riemann_diff,
    riemann_diff_alt,
    riemann_sum,
    sum_kernel,
)
from discfrac.verify import VerificationReport, run_check, run_suite
from discfrac.version import __version__
