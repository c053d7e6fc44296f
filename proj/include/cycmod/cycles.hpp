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

// k cycles in 2-connected graphs of minimum degree at least k+1 whose
// lengths are consecutive or satisfy the length condition.
//
// Branch I handles graphs with a 2-separation by gluing path families of
// the two sides. Branch II works from a non-separating induced odd cycle.
// Branch III (bipartite, 3-connected) only runs the exhaustive oracle.

#ifndef CYCMOD_CYCLES_HPP_
#define CYCMOD_CYCLES_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "cycmod/families.hpp"
#include "cycmod/graph.hpp"
#include "cycmod/oracle.hpp"
#include "cycmod/paths.hpp"

namespace cycmod {

struct ParityFlag {
  int phi = 0;
  int l = 1;
};

// k = 2l - 1 + phi with phi = 0 exactly when k is odd.
ParityFlag ParityOf(int k);

enum class OddCycleProperty { kTriangle, kTwoNeighborRule };

std::string_view OddCyclePropertyName(OddCycleProperty p);

struct OddCycleWitness {
  CycleWitness cycle;
  int m = 1;  // |cycle| = 2m + 1
  OddCycleProperty property = OddCycleProperty::kTriangle;
};

// Empty when the witness is an induced odd cycle of g with a nonempty
// connected remainder and the declared property holds; otherwise the first
// failed check.
std::string ValidateOddCycle(const Graph& g, const OddCycleWitness& w);

// Induced odd cycles by increasing length, then lexicographically, the
// first that is non-separating and meets one of the two properties.
std::optional<OddCycleWitness> FindNonSepInducedOddCycle(const Graph& g);

// Every qualifying cycle, in the same order.
std::vector<OddCycleWitness> NonSepInducedOddCycles(const Graph& g);

enum class Branch { kSeparation, kOddCycle, kBipartite };

// "I", "II" or "III".
std::string_view BranchName(Branch b);

struct CycleExtraction {
  CycleFamily family;
  Branch branch = Branch::kOddCycle;
  ExtractionTrace trace;
  // Set for branch III, whose family always comes from the oracle.
  bool oracle_only = false;
};

// g 2-connected, not 3-connected, minimum degree at least k+1; the family
// satisfies the length condition.
CycleExtraction CyclesSeparated(const Graph& g, int k,
                                OracleBudget budget = OracleBudget::Default());

// g 2-connected with minimum degree at least k+1 and w valid for g.
CycleExtraction CyclesWithOddCycle(const Graph& g, int k,
                                   const OddCycleWitness& w,
                                   OracleBudget budget = OracleBudget::Default());

CycleExtraction CyclesBipartiteOracle(
    const Graph& g, int k, OracleBudget budget = OracleBudget::Default());

// Dispatches I, then III, then II.
CycleExtraction FindKCycles(const Graph& g, int k,
                            OracleBudget budget = OracleBudget::Default());

struct ResidueExtraction {
  std::map<int, CycleWitness> by_residue;
  CycleExtraction source;
};

// k odd. Raises HypothesisNotMet for even k.
ResidueExtraction AllResiduesModK(const Graph& g, int k,
                                  OracleBudget budget = OracleBudget::Default());

std::set<int> CycleLengthSpectrum(const Graph& g,
                                  OracleBudget budget = OracleBudget::Default());

}  // namespace cycmod

#endif  // CYCMOD_CYCLES_HPP_
