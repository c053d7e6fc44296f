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

#include "cycmod/generate.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "cycmod/decomposition.hpp"
#include "cycmod/error.hpp"

namespace cycmod {

std::string InfeasibilityReason(const GenSpec& spec) {
  if (spec.n < 3) return "n must be at least 3";
  if (spec.connectivity != 2 && spec.connectivity != 3) {
    return "connectivity must be 2 or 3";
  }
  if (spec.n < spec.connectivity + 1) return "too few vertices";
  if (spec.min_degree >= spec.n) return "min degree must be below n";
  if (spec.bipartite) {
    if (spec.min_degree > spec.n / 2) {
      return "bipartite graphs on n vertices have min degree at most n/2";
    }
    if (spec.n < 2 * spec.connectivity) return "too few vertices";
  }
  return {};
}

bool SatisfiesSpec(const Graph& g, const GenSpec& spec) {
  if (g.order() != spec.n) return false;
  if (g.min_degree() < spec.min_degree) return false;
  if (spec.bipartite && !IsBipartite(g)) return false;
  if (g.order() < spec.connectivity + 1) return false;
  return VertexConnectivityAtLeast(g, spec.connectivity);
}

std::optional<Graph> GenerateGraph(const GenSpec& spec) {
  if (!InfeasibilityReason(spec).empty()) return std::nullopt;
  std::mt19937_64 rng(spec.seed);
  const int n = spec.n;
  const int need = std::max(spec.min_degree, spec.connectivity);
  auto draw = [&](int bound) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
  };
  for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
    std::vector<int> side(n, 0);
    if (spec.bipartite) {
      std::vector<int> order(n);
      for (int i = 0; i < n; ++i) order[i] = i;
      for (int i = n - 1; i > 0; --i) std::swap(order[i], order[draw(i + 1)]);
      for (int i = 0; i < n / 2; ++i) side[order[i]] = 1;
    }
    auto allowed = [&](int u, int v) {
      return u != v && (!spec.bipartite || side[u] != side[v]);
    };
    // Density grows slowly with failed attempts.
    const double base = static_cast<double>(need) / std::max(1, n - 1);
    const double p = std::min(1.0, base * (0.6 + 0.02 * (attempt % 40)));
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (allowed(u, v) && coin(rng) < p) adj[u][v] = adj[v][u] = 1;
      }
    }
    for (int u = 0; u < n; ++u) {
      auto degree = [&](int w) {
        return static_cast<int>(std::count(adj[w].begin(), adj[w].end(), 1));
      };
      while (degree(u) < need) {
        std::vector<int> options;
        for (int v = 0; v < n; ++v) {
          if (allowed(u, v) && !adj[u][v]) options.push_back(v);
        }
        if (options.empty()) break;
        // Prefer partners that are short of degree themselves.
        std::vector<int> starved;
        for (int v : options) {
          if (degree(v) < need) starved.push_back(v);
        }
        const std::vector<int>& pool = starved.empty() ? options : starved;
        const int v = pool[draw(static_cast<int>(pool.size()))];
        adj[u][v] = adj[v][u] = 1;
      }
    }
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (adj[u][v]) edges.push_back({u, v});
      }
    }
    Graph g = Graph::FromEdges(n, edges);
    if (SatisfiesSpec(g, spec)) return g;
  }
  return std::nullopt;
}

namespace {

std::uint64_t CodeUnder(const Graph& g, const std::vector<int>& label) {
  // label[old] = new position; bits follow pairs (i < j) in order.
  const int n = g.order();
  std::vector<int> at(n);
  for (int v = 0; v < n; ++v) at[label[v]] = v;
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      code = (code << 1) | (g.adjacent(at[i], at[j]) ? 1u : 0u);
    }
  }
  return code;
}

Graph Decode(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  int bit = n * (n - 1) / 2 - 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, --bit) {
      if ((code >> bit) & 1u) edges.push_back({i, j});
    }
  }
  return Graph::FromEdges(n, edges);
}

// Vertex invariant: degree, then the sorted neighbour degrees.
std::vector<std::vector<int>> Invariants(const Graph& g) {
  std::vector<std::vector<int>> inv(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    inv[v].push_back(g.degree(v));
    std::vector<int> nd;
    for (Vertex w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    inv[v].insert(inv[v].end(), nd.begin(), nd.end());
  }
  return inv;
}

}  // namespace

std::uint64_t CanonicalCode(const Graph& g) {
  const int n = g.order();
  if (n > 11) Fail(ErrorKind::kInvalidArgument, "canonical code needs n <= 11");
  const auto inv = Invariants(g);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return inv[a] > inv[b]; });
  // Cells of equal invariant; vertices may only move inside their cell.
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && inv[order[j]] == inv[order[i]]) ++j;
    cells.push_back({i, j});
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> label(n);
  std::function<void(size_t)> walk = [&](size_t c) {
    if (c == cells.size()) {
      for (int i = 0; i < n; ++i) label[order[i]] = i;
      best = std::min(best, CodeUnder(g, label));
      return;
    }
    auto [lo, hi] = cells[c];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      walk(c + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  walk(0);
  return best;
}

Graph CanonicalForm(const Graph& g) {
  return Decode(g.order(), CanonicalCode(g));
}

std::vector<Graph> EnumerateGraphs(
    int n, const std::function<bool(const Graph&)>& keep) {
  if (n < 1 || n > 8) Fail(ErrorKind::kInvalidArgument, "enumeration needs 1 <= n <= 8");
  std::set<std::uint64_t> level = {CanonicalCode(Graph(n))};
  std::vector<Graph> out;
  while (!level.empty()) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      Graph g = Decode(n, code);
      if (!keep || keep(g)) out.push_back(g);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (!g.adjacent(u, v)) next.insert(CanonicalCode(g.WithEdge(u, v)));
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace cycmod
