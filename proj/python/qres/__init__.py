# Copyright 2026 The qutrit-resources Authors
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

"""Two capacitively coupled transmon qutrits in Markovian baths."""

from ._core import (
    BathParams,
    CircuitParams,
    Error,
    RunConfig,
    System,
    __version__,
    evolve,
    fidelity,
    generating_power,
    initial_state,
    l1_coherence,
    log_negativity,
    negativity,
    parse_config_text,
    sample_separable,
    simulate,
    spectral_density,
    steady_state,
    trace_distance,
    transition_rate,
)

__all__ = [
    "BathParams",
    "CircuitParams",
    "Error",
    "RunConfig",
    "System",
    "__version__",
    "evolve",
    "fidelity",
    "generating_power",
    "initial_state",
    "l1_coherence",
    "log_negativity",
    "negativity",
    "parse_config_text",
    "sample_separable",
    "simulate",
    "spectral_density",
    "steady_state",
    "trace_distance",
    "transition_rate",
]
