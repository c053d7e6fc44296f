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

#include "cycmod/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "cycmod/error.hpp"

namespace cycmod {

std::vector<Vertex> BlockCutTree::CutsOf(int block) const {
  std::vector<Vertex> out;
  for (const auto& [b, c] : incidence) {
    if (b == block) out.push_back(c);
  }
  return out;
}

bool BlockCutTree::IsEndBlock(int block) const {
  return std::find(end_blocks.begin(), end_blocks.end(), block) !=
         end_blocks.end();
}

namespace {

class BlockFinder {
 public:
  explicit BlockFinder(const Graph& g)
      : g_(g), disc_(g.order(), -1), low_(g.order(), 0) {}

  std::vector<VertexSet> Run() {
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (disc_[v] >= 0) continue;
      if (g_.degree(v) == 0) {
        disc_[v] = clock_++;
        blocks_.push_back(VertexSet{v});
        continue;
      }
      Visit(v, -1);
    }
    return std::move(blocks_);
  }

 private:
  void Visit(Vertex u, Vertex parent) {
    disc_[u] = low_[u] = clock_++;
    for (Vertex w : g_.neighbors(u)) {
      if (w == parent) continue;
      if (disc_[w] < 0) {
        stack_.push_back({u, w});
        Visit(w, u);
        low_[u] = std::min(low_[u], low_[w]);
        if (low_[w] >= disc_[u]) PopBlock({u, w});
      } else if (disc_[w] < disc_[u]) {
        stack_.push_back({u, w});
        low_[u] = std::min(low_[u], disc_[w]);
      }
    }
  }

  void PopBlock(Edge until) {
    std::vector<Vertex> members;
    while (true) {
      Edge e = stack_.back();
      stack_.pop_back();
      members.push_back(e.u);
      members.push_back(e.v);
      if (e == until) break;
    }
    blocks_.push_back(VertexSet(std::move(members)));
  }

  const Graph& g_;
  std::vector<int> disc_;
  std::vector<int> low_;
  int clock_ = 0;
  std::vector<Edge> stack_;
  std::vector<VertexSet> blocks_;
};

void CheckVertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) {
    Fail(ErrorKind::kInvalidArgument,
         "vertex " + std::to_string(v) + " not in graph");
  }
}

}  // namespace

BlockCutTree BlockCutTreeOf(const Graph& g) {
  if (g.order() == 0 || !IsConnected(g)) {
    Fail(ErrorKind::kDisconnected, "block-cut tree needs a connected graph");
  }
  BlockCutTree tree;
  tree.blocks = BlockFinder(g).Run();
  std::sort(tree.blocks.begin(), tree.blocks.end(),
            [](const VertexSet& a, const VertexSet& b) {
              return a.front() < b.front() ||
                     (a.front() == b.front() && a < b);
            });
  std::vector<int> count(g.order(), 0);
  for (const VertexSet& b : tree.blocks) {
    for (Vertex v : b) ++count[v];
  }
  std::vector<Vertex> cuts;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (count[v] >= 2) cuts.push_back(v);
  }
  tree.cut_vertices = VertexSet(cuts);
  for (int i = 0; i < static_cast<int>(tree.blocks.size()); ++i) {
    int incident = 0;
    for (Vertex v : tree.blocks[i]) {
      if (count[v] >= 2) {
        tree.incidence.push_back({i, v});
        ++incident;
      }
    }
    if (incident <= 1) tree.end_blocks.push_back(i);
  }
  return tree;
}

std::vector<VertexSet> ComponentsWithin(const Graph& g,
                                        const std::vector<char>& allowed) {
  std::vector<char> seen(g.order(), 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (!allowed[root] || seen[root]) continue;
    std::vector<Vertex> members;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (allowed[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    out.push_back(VertexSet(std::move(members)));
  }
  return out;
}

std::vector<VertexSet> ConnectedComponents(const Graph& g) {
  return ComponentsWithin(g, std::vector<char>(g.order(), 1));
}

bool IsConnected(const Graph& g) {
  return g.order() > 0 && ConnectedComponents(g).size() == 1;
}

bool IsTwoConnected(const Graph& g) {
  if (g.order() < 3 || !IsConnected(g)) return false;
  return BlockCutTreeOf(g).blocks.size() == 1;
}

bool IsRooted2Connected(const Graph& g, Vertex x, Vertex y) {
  CheckVertex(g, x);
  CheckVertex(g, y);
  if (x == y) Fail(ErrorKind::kInvalidArgument, "roots must differ");
  return IsTwoConnected(g.adjacent(x, y) ? g : g.WithEdge(x, y));
}

bool SatisfiesEndBlockRule(const Graph& g, Vertex x, Vertex y) {
  CheckVertex(g, x);
  CheckVertex(g, y);
  if (x == y) Fail(ErrorKind::kInvalidArgument, "roots must differ");
  if (g.order() < 3 || !IsConnected(g)) return false;
  BlockCutTree tree = BlockCutTreeOf(g);
  if (tree.end_blocks.size() > 2) return false;
  for (int b : tree.end_blocks) {
    const VertexSet& block = tree.blocks[b];
    bool x_ok = block.contains(x) && !tree.cut_vertices.contains(x);
    bool y_ok = block.contains(y) && !tree.cut_vertices.contains(y);
    if (!x_ok && !y_ok) return false;
  }
  return true;
}

bool VertexConnectivityAtLeast(const Graph& g, int t) {
  if (t != 2 && t != 3) {
    Fail(ErrorKind::kInvalidArgument, "connectivity level must be 2 or 3");
  }
  if (g.order() < t + 1) {
    Fail(ErrorKind::kInvalidArgument,
         "graph too small for connectivity " + std::to_string(t));
  }
  if (!IsTwoConnected(g)) return false;
  if (t == 2) return true;
  return !Find2Separation(g).has_value();
}

std::optional<Separation2> Find2Separation(const Graph& g) {
  const int n = g.order();
  if (n < 4) return std::nullopt;
  std::vector<char> allowed(n, 1);
  for (Vertex x = 0; x < n; ++x) {
    allowed[x] = 0;
    for (Vertex y = x + 1; y < n; ++y) {
      allowed[y] = 0;
      std::vector<VertexSet> parts = ComponentsWithin(g, allowed);
      allowed[y] = 1;
      if (parts.size() < 2) continue;
      Separation2 sep;
      sep.x = x;
      sep.y = y;
      sep.a = parts[0].With(x).With(y);
      std::vector<Vertex> rest = {x, y};
      for (size_t i = 1; i < parts.size(); ++i) {
        rest.insert(rest.end(), parts[i].begin(), parts[i].end());
      }
      sep.b = VertexSet(std::move(rest));
      return sep;
    }
    allowed[x] = 1;
  }
  return std::nullopt;
}

FeasibleEndBlocks FeasibleEndBlocksOf(const Graph& c, Vertex y) {
  CheckVertex(c, y);
  BlockCutTree tree = BlockCutTreeOf(c);
  FeasibleEndBlocks out;
  if (tree.cut_vertices.empty()) {
    out.two_connected = true;
    return out;
  }
  for (int b : tree.end_blocks) {
    std::vector<Vertex> cuts = tree.CutsOf(b);
    Vertex cut = cuts.front();
    if (tree.blocks[b].contains(y) && y != cut) continue;
    out.blocks.push_back({tree.blocks[b], cut});
  }
  return out;
}

std::optional<std::vector<Vertex>> ShortestPath(
    const Graph& g, const std::vector<Vertex>& from,
    const std::vector<Vertex>& to, const std::vector<char>& allowed) {
  std::vector<Vertex> prev(g.order(), -2);
  std::vector<char> target(g.order(), 0);
  for (Vertex t : to) {
    if (allowed[t]) target[t] = 1;
  }
  std::deque<Vertex> queue;
  std::vector<Vertex> sources = from;
  std::sort(sources.begin(), sources.end());
  for (Vertex s : sources) {
    if (!allowed[s] || prev[s] != -2) continue;
    prev[s] = -1;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (target[u]) {
      std::vector<Vertex> path;
      for (Vertex v = u; v != -1; v = prev[v]) path.push_back(v);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (Vertex w : g.neighbors(u)) {
      if (allowed[w] && prev[w] == -2) {
        prev[w] = u;
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>>
TwoDisjointPaths(const Graph& g, Vertex a1, Vertex a2, Vertex b1, Vertex b2,
                 const std::vector<char>& allowed) {
  const int n = g.order();
  if (a1 == a2 || b1 == b2) return std::nullopt;
  for (Vertex v : {a1, a2, b1, b2}) {
    if (!allowed[v]) return std::nullopt;
  }
  // Vertex-split network: in(v) = 2v, out(v) = 2v+1, source 2n, sink 2n+1.
  const int nodes = 2 * n + 2;
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(nodes);
  auto add = [&](int u, int v, int cap) {
    out[u].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({v, cap});
    out[v].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({u, 0});
  };
  for (Vertex v = 0; v < n; ++v) {
    if (!allowed[v]) continue;
    add(2 * v, 2 * v + 1, 1);
    for (Vertex w : g.neighbors(v)) {
      if (allowed[w]) add(2 * v + 1, 2 * w, 1);
    }
  }
  add(source, 2 * a1, 1);
  add(source, 2 * a2, 1);
  add(2 * b1 + 1, sink, 1);
  add(2 * b2 + 1, sink, 1);
  int flow = 0;
  while (flow < 2) {
    std::vector<int> via(nodes, -1);
    std::deque<int> queue = {source};
    via[source] = -2;
    while (!queue.empty() && via[sink] == -1) {
      int u = queue.front();
      queue.pop_front();
      for (int id : out[u]) {
        if (arcs[id].cap > 0 && via[arcs[id].to] == -1) {
          via[arcs[id].to] = id;
          queue.push_back(arcs[id].to);
        }
      }
    }
    if (via[sink] == -1) return std::nullopt;
    for (int v = sink; v != source; v = arcs[via[v] ^ 1].to) {
      arcs[via[v]].cap -= 1;
      arcs[via[v] ^ 1].cap += 1;
    }
    ++flow;
  }
  auto trace = [&](Vertex start) {
    std::vector<Vertex> path = {start};
    int node = 2 * start + 1;
    while (true) {
      int next = -1;
      for (int id : out[node]) {
        // Forward arcs carry flow when their capacity dropped to zero.
        if (id % 2 == 0 && arcs[id].cap == 0) {
          next = arcs[id].to;
          arcs[id].cap = -1;
          break;
        }
      }
      if (next == sink || next < 0) break;
      Vertex v = next / 2;
      path.push_back(v);
      node = 2 * v + 1;
    }
    return path;
  };
  return std::make_pair(trace(a1), trace(a2));
}

}  // namespace cycmod
