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

// Exhaustive searches used as ground truth and as the last-resort fallback
// of the constructive extractors. All of them are exponential; a node budget
// bounds the work and overrunning it raises BudgetExceeded.

#ifndef CYCMOD_ORACLE_HPP_
#define CYCMOD_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <optional>

#include "cycmod/families.hpp"
#include "cycmod/graph.hpp"

namespace cycmod {

// DFS node cap. The default is 10^7, or the value of the
// CYCMOD_ORACLE_BUDGET environment variable when set.
struct OracleBudget {
  std::uint64_t max_nodes = 10'000'000;

  static OracleBudget Default();
};

enum class OracleMode { kLength, kLengthOrSemi };

// One (x, y)-path for every realizable length.
std::map<int, PathWitness> PathLengths(const Graph& g, Vertex x, Vertex y,
                                       OracleBudget budget = OracleBudget::Default());

std::optional<PathWitness> PathOfLength(const Graph& g, Vertex x, Vertex y,
                                        int length,
                                        OracleBudget budget = OracleBudget::Default());

// A family of k (x, y)-paths of the requested kind, or nullopt when none
// exists. The smallest first length wins; length-condition families are
// preferred over semi-length ones.
std::optional<PathFamily> OraclePaths(const Graph& g, Vertex x, Vertex y, int k,
                                      OracleMode mode,
                                      OracleBudget budget = OracleBudget::Default());

std::optional<CycleWitness> CycleOfLength(const Graph& g, int length,
                                          OracleBudget budget = OracleBudget::Default());

// One cycle for every realizable length.
std::map<int, CycleWitness> CycleSpectrum(const Graph& g,
                                          OracleBudget budget = OracleBudget::Default());

// k cycles with consecutive lengths or with the length condition, whichever
// starts lower (consecutive on ties).
std::optional<CycleFamily> OracleCycles(const Graph& g, int k,
                                        OracleBudget budget = OracleBudget::Default());

// k cycles satisfying the length condition, searched length by length so
// that long even cycles in bipartite graphs stay cheap.
std::optional<CycleFamily> OracleLengthConditionCycles(
    const Graph& g, int k, OracleBudget budget = OracleBudget::Default());

}  // namespace cycmod

#endif  // CYCMOD_ORACLE_HPP_
