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

// Batch runs of the extractors over enumerated or sampled small graphs,
// tabulated per (kind, n, k, branch).

#ifndef CYCMOD_SWEEP_HPP_
#define CYCMOD_SWEEP_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "cycmod/oracle.hpp"

namespace cycmod {

struct SweepOptions {
  int n_min = 3;
  int n_max = 6;
  int k_max = 3;
  bool exhaustive = true;
  int samples = 0;  // sampled graphs in total when not exhaustive
  std::uint64_t seed = 1;
  bool paths = true;
  bool cycles = true;
  OracleBudget budget = OracleBudget::Default();
};

struct SweepRow {
  std::string kind;    // "cycles", "paths-length" or "paths-flex"
  int n = 0;
  int k = 0;
  std::string branch;  // I, II, III for cycles; "-" for paths
  int pass = 0;
  int fail = 0;
  int gaps = 0;
};

struct SweepReport {
  std::vector<SweepRow> rows;  // sorted by (kind, n, k, branch)
  int instances = 0;
  int failures = 0;
  int gaps = 0;
  bool budget_exceeded = false;
  std::vector<std::string> notes;  // first few failures

  double GapRate() const {
    return instances == 0 ? 0.0 : static_cast<double>(gaps) / instances;
  }
};

SweepReport RunSweep(const SweepOptions& options);

std::string FormatSweepReport(const SweepReport& report);

}  // namespace cycmod

#endif  // CYCMOD_SWEEP_HPP_
