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

#include "cycmod/sweep.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "cycmod/cycles.hpp"
#include "cycmod/decomposition.hpp"
#include "cycmod/error.hpp"
#include "cycmod/generate.hpp"
#include "cycmod/paths.hpp"

namespace cycmod {

namespace {

using RowKey = std::tuple<std::string, int, int, std::string>;

class Tally {
 public:
  explicit Tally(SweepReport& report) : report_(report) {}

  void Record(const RowKey& key, bool ok, bool gap, const std::string& note) {
    SweepRow& row = rows_[key];
    ++report_.instances;
    if (ok) {
      ++row.pass;
    } else {
      ++row.fail;
      ++report_.failures;
      if (report_.notes.size() < 20) report_.notes.push_back(note);
    }
    if (gap) {
      ++row.gaps;
      ++report_.gaps;
    }
  }

  void Finish() {
    for (auto& [key, row] : rows_) {
      std::tie(row.kind, row.n, row.k, row.branch) = key;
      report_.rows.push_back(row);
    }
  }

 private:
  SweepReport& report_;
  std::map<RowKey, SweepRow> rows_;
};

void RunCycles(const Graph& g, const SweepOptions& opt, Tally& tally) {
  for (int k = 1; k <= opt.k_max && k + 1 <= g.min_degree(); ++k) {
    const RowKey fallback{"cycles", g.order(), k, "?"};
    try {
      CycleExtraction r = FindKCycles(g, k, opt.budget);
      bool ok = r.family.size() == k && IsCycleFamilyIn(g, r.family) &&
                (r.family.cls.kind == FamilyKind::kLengthCondition ||
                 r.family.cls.kind == FamilyKind::kConsecutive);
      if (ok) {
        std::set<int> spectrum = CycleLengthSpectrum(g, opt.budget);
        for (int len : r.family.lengths()) ok = ok && spectrum.count(len) > 0;
      }
      tally.Record({"cycles", g.order(), k, std::string(BranchName(r.branch))},
                   ok, r.trace.constructive_gap,
                   "cycles k=" + std::to_string(k) + " " + FormatGraph(g));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kBudgetExceeded) throw;
      tally.Record(fallback, false, false,
                   "cycles k=" + std::to_string(k) + ": " + e.what());
    }
  }
}

void RunPaths(const Graph& g, Vertex x, Vertex y, const SweepOptions& opt,
              Tally& tally) {
  for (PathMode mode : {PathMode::kLength, PathMode::kFlex}) {
    const std::string kind =
        std::string("paths-") + std::string(PathModeName(mode));
    for (int k = 1; k <= opt.k_max; ++k) {
      if (RootedMinDegree(g, x, y) < RequiredDegree(k, mode)) break;
      const RowKey key{kind, g.order(), k, "-"};
      try {
        PathExtraction r = FindPaths(g, x, y, k, mode, opt.budget);
        const FamilyKind kk = r.family.cls.kind;
        bool ok = r.family.size() == k && IsPathFamilyIn(g, r.family, x, y) &&
                  (kk == FamilyKind::kLengthCondition ||
                   (mode == PathMode::kFlex && kk == FamilyKind::kSemiLength));
        tally.Record(key, ok, r.trace.constructive_gap,
                     kind + " k=" + std::to_string(k) + " x=" +
                         std::to_string(x) + " y=" + std::to_string(y));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::kBudgetExceeded) throw;
        tally.Record(key, false, false, kind + ": " + e.what());
      }
    }
  }
}

void RunAllRoots(const Graph& g, const SweepOptions& opt, Tally& tally) {
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = 0; y < g.order(); ++y) {
      if (x != y && IsRooted2Connected(g, x, y)) RunPaths(g, x, y, opt, tally);
    }
  }
}

}  // namespace

SweepReport RunSweep(const SweepOptions& opt) {
  if (opt.n_min < 3 || opt.n_max < opt.n_min || opt.k_max < 1) {
    Fail(ErrorKind::kInvalidArgument, "bad sweep ranges");
  }
  SweepReport report;
  Tally tally(report);
  try {
    if (opt.exhaustive) {
      if (opt.n_max > 8) {
        Fail(ErrorKind::kInvalidArgument, "exhaustive sweeps stop at n = 8");
      }
      for (int n = opt.n_min; n <= opt.n_max; ++n) {
        for (const Graph& g : EnumerateGraphs(
                 n, [](const Graph& h) { return IsConnected(h); })) {
          if (opt.cycles && IsTwoConnected(g)) RunCycles(g, opt, tally);
          if (opt.paths) RunAllRoots(g, opt, tally);
        }
      }
    } else {
      std::mt19937_64 rng(opt.seed);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      int done = 0;
      while (done < opt.samples) {
        const int n =
            opt.n_min + static_cast<int>(rng() % (opt.n_max - opt.n_min + 1));
        const double p = 0.3 + 0.7 * unit(rng);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u) {
          for (int v = u + 1; v < n; ++v) {
            if (unit(rng) < p) edges.push_back({u, v});
          }
        }
        Graph g = Graph::FromEdges(n, edges);
        if (!IsConnected(g)) continue;
        ++done;
        if (opt.cycles && IsTwoConnected(g)) RunCycles(g, opt, tally);
        if (opt.paths) {
          const Vertex x = static_cast<Vertex>(rng() % n);
          const Vertex y = static_cast<Vertex>((x + 1 + rng() % (n - 1)) % n);
          if (IsRooted2Connected(g, x, y)) RunPaths(g, x, y, opt, tally);
        }
      }
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kBudgetExceeded) throw;
    report.budget_exceeded = true;
    report.notes.push_back(std::string("budget exceeded: ") + e.what());
  }
  tally.Finish();
  return report;
}

std::string FormatSweepReport(const SweepReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(14) << "kind" << std::setw(4) << "n"
      << std::setw(4) << "k" << std::setw(8) << "branch" << std::setw(8)
      << "pass" << std::setw(8) << "fail"
      << "gaps\n";
  for (const SweepRow& r : report.rows) {
    out << std::left << std::setw(14) << r.kind << std::setw(4) << r.n
        << std::setw(4) << r.k << std::setw(8) << r.branch << std::setw(8)
        << r.pass << std::setw(8) << r.fail << r.gaps << "\n";
  }
  out << "instances " << report.instances << ", failures " << report.failures
      << ", constructive gaps " << report.gaps << " (rate " << std::fixed
      << std::setprecision(4) << report.GapRate() << ")";
  if (report.budget_exceeded) out << ", budget exceeded (partial report)";
  out << "\n";
  for (const std::string& note : report.notes) out << "  " << note << "\n";
  return out.str();
}

}  // namespace cycmod
