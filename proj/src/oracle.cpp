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

#include "cycmod/oracle.hpp"

#include <cstdlib>
#include <deque>
#include <limits>
#include <string>

#include "cycmod/error.hpp"

namespace cycmod {

OracleBudget OracleBudget::Default() {
  OracleBudget b;
  if (const char* env = std::getenv("CYCMOD_ORACLE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) b.max_nodes = v;
  }
  return b;
}

namespace {

constexpr int kFar = std::numeric_limits<int>::max() / 4;

std::vector<int> Distances(const Graph& g, Vertex from,
                           const std::vector<char>& allowed) {
  std::vector<int> dist(g.order(), kFar);
  std::deque<Vertex> queue = {from};
  dist[from] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (allowed[w] && dist[w] == kFar) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

class Counter {
 public:
  explicit Counter(OracleBudget budget) : cap_(budget.max_nodes) {}

  void Tick() {
    if (++used_ > cap_) {
      Fail(ErrorKind::kBudgetExceeded,
           "oracle search passed " + std::to_string(cap_) + " nodes");
    }
  }

 private:
  std::uint64_t cap_;
  std::uint64_t used_ = 0;
};

// Simple path from `start` to `goal` with exactly `length` edges through
// allowed vertices, pruned by distance to the goal and by parity.
class ExactPathSearch {
 public:
  ExactPathSearch(const Graph& g, const std::vector<char>& allowed,
                  Vertex goal, bool bipartite, Counter& counter)
      : g_(g),
        allowed_(allowed),
        goal_(goal),
        bipartite_(bipartite),
        counter_(counter),
        dist_(Distances(g, goal, allowed)),
        on_path_(g.order(), 0) {}

  std::optional<PathWitness> Find(Vertex start, int length) {
    path_.clear();
    if (!allowed_[start] || dist_[start] > length) return std::nullopt;
    path_.push_back(start);
    on_path_[start] = 1;
    bool ok = Dfs(start, length);
    on_path_[start] = 0;
    if (!ok) return std::nullopt;
    return path_;
  }

 private:
  bool Dfs(Vertex v, int remaining) {
    counter_.Tick();
    if (remaining == 0) return v == goal_;
    if (v == goal_) return false;
    for (Vertex w : g_.neighbors(v)) {
      if (!allowed_[w] || on_path_[w]) continue;
      const int left = remaining - 1;
      if (dist_[w] > left) continue;
      if (bipartite_ && (left - dist_[w]) % 2 != 0) continue;
      on_path_[w] = 1;
      path_.push_back(w);
      if (Dfs(w, left)) {
        on_path_[w] = 0;
        return true;
      }
      path_.pop_back();
      on_path_[w] = 0;
    }
    return false;
  }

  const Graph& g_;
  const std::vector<char>& allowed_;
  Vertex goal_;
  bool bipartite_;
  Counter& counter_;
  std::vector<int> dist_;
  std::vector<char> on_path_;
  PathWitness path_;
};

void CheckRoots(const Graph& g, Vertex x, Vertex y) {
  if (!g.has_vertex(x) || !g.has_vertex(y) || x == y) {
    Fail(ErrorKind::kInvalidArgument, "bad roots for path search");
  }
}

std::optional<PathWitness> PathOfLengthWith(const Graph& g, Vertex x, Vertex y,
                                            int length, Counter& counter) {
  std::vector<char> allowed(g.order(), 1);
  ExactPathSearch search(g, allowed, y, IsBipartite(g), counter);
  return search.Find(x, length);
}

std::optional<CycleWitness> CycleOfLengthWith(const Graph& g, int length,
                                              bool bipartite,
                                              Counter& counter) {
  if (length < 3 || length > g.order()) return std::nullopt;
  if (bipartite && length % 2 != 0) return std::nullopt;
  // The cycle's smallest vertex s is fixed first; the rest stays above s.
  for (Vertex s = 0; s + length <= g.order(); ++s) {
    std::vector<char> allowed(g.order(), 0);
    for (Vertex v = s; v < g.order(); ++v) allowed[v] = 1;
    for (Vertex w : g.neighbors(s)) {
      if (w < s) continue;
      // A path s ... w of length-1 edges with w adjacent to s.
      ExactPathSearch search(g, allowed, w, bipartite, counter);
      if (auto p = search.Find(s, length - 1)) return *p;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<PathWitness> PathOfLength(const Graph& g, Vertex x, Vertex y,
                                        int length, OracleBudget budget) {
  CheckRoots(g, x, y);
  Counter counter(budget);
  return PathOfLengthWith(g, x, y, length, counter);
}

std::map<int, PathWitness> PathLengths(const Graph& g, Vertex x, Vertex y,
                                       OracleBudget budget) {
  CheckRoots(g, x, y);
  Counter counter(budget);
  std::map<int, PathWitness> out;
  for (int len = 1; len < g.order(); ++len) {
    if (auto p = PathOfLengthWith(g, x, y, len, counter)) out[len] = *p;
  }
  return out;
}

std::optional<PathFamily> OraclePaths(const Graph& g, Vertex x, Vertex y, int k,
                                      OracleMode mode, OracleBudget budget) {
  if (k < 1) Fail(ErrorKind::kInvalidArgument, "k must be positive");
  std::map<int, PathWitness> lengths = PathLengths(g, x, y, budget);
  auto has = [&](int len) { return lengths.count(len) > 0; };
  auto build = [&](const std::vector<int>& pattern) {
    std::vector<PathWitness> members;
    for (int len : pattern) members.push_back(lengths.at(len));
    return MakePathFamily(std::move(members));
  };
  const int top = g.order() - 1;
  for (int d = 2; d + 2 * (k - 1) <= top; ++d) {
    std::vector<int> pattern;
    for (int i = 0; i < k; ++i) pattern.push_back(d + 2 * i);
    bool all = true;
    for (int len : pattern) all = all && has(len);
    if (all) return build(pattern);
  }
  if (mode == OracleMode::kLength || k < 2) return std::nullopt;
  for (int d = 2; d + 2 * (k - 1) - 1 <= top; ++d) {
    for (int j = 1; j <= k - 1; ++j) {
      std::vector<int> pattern = {d};
      for (int i = 1; i < k; ++i) pattern.push_back(pattern.back() + (i == j ? 1 : 2));
      bool all = true;
      for (int len : pattern) all = all && has(len);
      if (all) return build(pattern);
    }
  }
  return std::nullopt;
}

std::optional<CycleWitness> CycleOfLength(const Graph& g, int length,
                                          OracleBudget budget) {
  Counter counter(budget);
  return CycleOfLengthWith(g, length, IsBipartite(g), counter);
}

std::map<int, CycleWitness> CycleSpectrum(const Graph& g, OracleBudget budget) {
  Counter counter(budget);
  const bool bipartite = IsBipartite(g);
  std::map<int, CycleWitness> out;
  for (int len = 3; len <= g.order(); ++len) {
    if (auto c = CycleOfLengthWith(g, len, bipartite, counter)) out[len] = *c;
  }
  return out;
}

std::optional<CycleFamily> OracleCycles(const Graph& g, int k,
                                        OracleBudget budget) {
  if (k < 1) Fail(ErrorKind::kInvalidArgument, "k must be positive");
  std::map<int, CycleWitness> spectrum = CycleSpectrum(g, budget);
  auto run = [&](int start, int step) -> std::optional<CycleFamily> {
    std::vector<CycleWitness> members;
    for (int i = 0; i < k; ++i) {
      auto it = spectrum.find(start + step * i);
      if (it == spectrum.end()) return std::nullopt;
      members.push_back(it->second);
    }
    return MakeCycleFamily(std::move(members));
  };
  for (int c = 3; c <= g.order(); ++c) {
    if (auto f = run(c, 1)) return f;
    if (auto f = run(c, 2)) return f;
  }
  return std::nullopt;
}

std::optional<CycleFamily> OracleLengthConditionCycles(const Graph& g, int k,
                                                       OracleBudget budget) {
  if (k < 1) Fail(ErrorKind::kInvalidArgument, "k must be positive");
  Counter counter(budget);
  const bool bipartite = IsBipartite(g);
  std::map<int, std::optional<CycleWitness>> memo;
  auto lookup = [&](int len) -> const std::optional<CycleWitness>& {
    auto it = memo.find(len);
    if (it == memo.end()) {
      it = memo.emplace(len, CycleOfLengthWith(g, len, bipartite, counter)).first;
    }
    return it->second;
  };
  for (int c = 3; c + 2 * (k - 1) <= g.order(); ++c) {
    std::vector<CycleWitness> members;
    for (int i = 0; i < k; ++i) {
      const auto& w = lookup(c + 2 * i);
      if (!w) break;
      members.push_back(*w);
    }
    if (static_cast<int>(members.size()) == k) {
      return MakeCycleFamily(std::move(members));
    }
  }
  return std::nullopt;
}

}  // namespace cycmod
