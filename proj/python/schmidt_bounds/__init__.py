# Copyright 2026 The schmidt-bounds Authors.
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
"""Schmidt-number lower bounds, entanglement detectors and PPT families."""

from ._core import (
    BipartiteState,
    PureVector,
    SchmidtError,
    ToleranceConfig,
    __version__,
    analyze,
    antisym_vector,
    auto_epsilon,
    check_state,
    cli,
    family_state,
    flip_operator,
    kron,
    marginal,
    numerical_rank,
    partial_transpose,
    random_density,
    random_pure,
    random_separable,
    run_sweep,
    schmidt_decompose,
    schmidt_rank,
    sn_upper_certificate,
    sym_separable_decomposition,
    symmetrize,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
