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

// Recursive extraction of k (x, y)-paths whose lengths satisfy the length
// condition (kLength, internal degrees at least 2k) or the length or
// semi-length condition (kFlex, internal degrees at least 2k-1).
//
// The extractor walks the case analysis of the existence argument: cut
// vertex split, removal of the edge xy, contraction of N(x) + x, and the
// core-based cases. Every branch output is validated before it is
// returned. When no branch succeeds the exhaustive oracle is used and the
// trace is flagged with constructive_gap.

#ifndef CYCMOD_PATHS_HPP_
#define CYCMOD_PATHS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "cycmod/families.hpp"
#include "cycmod/graph.hpp"
#include "cycmod/oracle.hpp"

namespace cycmod {

enum class PathMode { kLength, kFlex };

std::string_view PathModeName(PathMode mode);

// Smallest internal degree each mode needs for k paths.
int RequiredDegree(int k, PathMode mode);

struct TraceEntry {
  std::string tag;
  std::string fingerprint;
  std::string decision;
  int depth = 0;
};

struct ExtractionTrace {
  std::vector<TraceEntry> entries;
  int max_depth = 0;
  // |V| + |E| of the root instance.
  int measure = 0;
  int calls = 0;
  // Sub-instances that met their hypothesis but had no constructive answer.
  int inner_gaps = 0;
  bool constructive_gap = false;
};

struct PathExtraction {
  PathFamily family;
  ExtractionTrace trace;
};

// Minimum degree over V(g) - {x, y}; a large value when that set is empty.
int RootedMinDegree(const Graph& g, Vertex x, Vertex y);

// Raises InvalidArgument for bad roots or k < 1, HypothesisNotMet when
// (g, x, y) is not rooted 2-connected or the degree bound fails.
PathExtraction FindPaths(const Graph& g, Vertex x, Vertex y, int k,
                         PathMode mode,
                         OracleBudget budget = OracleBudget::Default());

inline PathExtraction FindPathsLength(
    const Graph& g, Vertex x, Vertex y, int k,
    OracleBudget budget = OracleBudget::Default()) {
  return FindPaths(g, x, y, k, PathMode::kLength, budget);
}

inline PathExtraction FindPathsFlex(
    const Graph& g, Vertex x, Vertex y, int k,
    OracleBudget budget = OracleBudget::Default()) {
  return FindPaths(g, x, y, k, PathMode::kFlex, budget);
}

}  // namespace cycmod

#endif  // CYCMOD_PATHS_HPP_
