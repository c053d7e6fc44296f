# Copyright 2026 The cycmod Authors
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

"""Path and cycle families with prescribed length patterns."""

from ._cycmod import (
    CycmodError,
    Graph,
    __version__,
    canonical_code,
    classify,
    complete_bipartite,
    complete_graph,
    cycle_certificate,
    cycle_graph,
    cycle_spectrum,
    find_cycles,
    find_paths,
    generate_graph,
    parse_graph,
    path_certificate,
    petersen_graph,
    read_graph,
    residues_mod_k,
    sweep,
    verify_certificate,
    wheel_graph,
)

__all__ = [
    "CycmodError",
    "Graph",
    "canonical_code",
    "classify",
    "complete_bipartite",
    "complete_graph",
    "cycle_certificate",
    "cycle_graph",
    "cycle_spectrum",
    "find_cycles",
    "find_paths",
    "generate_graph",
    "parse_graph",
    "path_certificate",
    "petersen_graph",
    "read_graph",
    "residues_mod_k",
    "sweep",
    "verify_certificate",
    "wheel_graph",
]
