// Copyright 2026 The cycmod Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Random instances with prescribed properties and exhaustive enumeration
// of small graphs up to isomorphism.

#ifndef CYCMOD_GENERATE_HPP_
#define CYCMOD_GENERATE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cycmod/graph.hpp"

namespace cycmod {

struct GenSpec {
  int n = 0;
  int min_degree = 0;
  int connectivity = 2;  // 2 or 3
  bool bipartite = false;
  std::uint64_t seed = 0;
  int max_attempts = 2000;
};

// Empty when the spec is infeasible or no sample passed within the attempt
// cap. Deterministic per spec.
std::optional<Graph> GenerateGraph(const GenSpec& spec);

// Reason the spec can never be met, or empty.
std::string InfeasibilityReason(const GenSpec& spec);

bool SatisfiesSpec(const Graph& g, const GenSpec& spec);

// Adjacency bits of the lexicographically smallest relabelling, packed into
// an integer; n <= 11.
std::uint64_t CanonicalCode(const Graph& g);

Graph CanonicalForm(const Graph& g);

// One representative per isomorphism class on n vertices (n <= 8), each in
// canonical form, optionally filtered.
std::vector<Graph> EnumerateGraphs(
    int n, const std::function<bool(const Graph&)>& keep = nullptr);

}  // namespace cycmod

#endif  // CYCMOD_GENERATE_HPP_
