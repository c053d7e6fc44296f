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

#include "cycmod/graph.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "cycmod/error.hpp"

namespace cycmod {

VertexSet::VertexSet(std::initializer_list<Vertex> ids)
    : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

VertexSet VertexSet::Union(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                 other.ids_.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet VertexSet::Minus(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                      other.ids_.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet VertexSet::Intersect(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet VertexSet::With(Vertex v) const {
  std::vector<Vertex> out = ids_;
  out.push_back(v);
  return VertexSet(std::move(out));
}

VertexSet VertexSet::Without(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u : ids_) {
    if (u != v) out.push_back(u);
  }
  return VertexSet(std::move(out));
}

Graph::Graph(int order) {
  if (order < 0) Fail(ErrorKind::kInvalidArgument, "negative order");
  n_ = order;
  adj_.assign(n_, {});
  matrix_.assign(static_cast<size_t>(n_) * n_, 0);
}

void Graph::Link(Vertex u, Vertex v) {
  if (!has_vertex(u) || !has_vertex(v)) {
    Fail(ErrorKind::kInvalidArgument,
         "edge " + std::to_string(u) + "-" + std::to_string(v) +
             " out of range for order " + std::to_string(n_));
  }
  if (u == v) {
    Fail(ErrorKind::kInvalidArgument, "loop at " + std::to_string(u));
  }
  if (adjacent(u, v)) return;
  matrix_[static_cast<size_t>(u) * n_ + v] = 1;
  matrix_[static_cast<size_t>(v) * n_ + u] = 1;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++m_;
}

Graph Graph::FromEdges(int order, const std::vector<Edge>& edges) {
  Graph g(order);
  for (const Edge& e : edges) g.Link(e.u, e.v);
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

int Graph::min_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) {
    if (v == 0 || degree(v) < best) best = degree(v);
  }
  return best;
}

Graph Graph::WithEdge(Vertex u, Vertex v) const {
  std::vector<Edge> e = edges();
  e.push_back({u, v});
  return FromEdges(n_, e);
}

Graph Graph::WithoutEdge(Vertex u, Vertex v) const {
  std::vector<Edge> e;
  const Edge gone = Edge{u, v}.Normalized();
  for (const Edge& f : edges()) {
    if (f != gone) e.push_back(f);
  }
  return FromEdges(n_, e);
}

Vertex Subgraph::Local(Vertex parent) const {
  for (size_t i = 0; i < to_parent.size(); ++i) {
    if (to_parent[i] == parent) return static_cast<Vertex>(i);
  }
  return -1;
}

Vertex Contraction::Local(Vertex parent) const {
  for (size_t i = 0; i < to_parent.size(); ++i) {
    if (to_parent[i] == parent) return static_cast<Vertex>(i);
  }
  return -1;
}

namespace {

void CheckMembers(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (!g.has_vertex(v)) {
      Fail(ErrorKind::kInvalidArgument,
           "vertex " + std::to_string(v) + " not in graph");
    }
  }
}

}  // namespace

EdgeCut EdgesBetween(const Graph& g, const VertexSet& s, const VertexSet& t) {
  CheckMembers(g, s);
  CheckMembers(g, t);
  if (!s.Intersect(t).empty()) {
    Fail(ErrorKind::kInvalidArgument, "edges_between: sets overlap");
  }
  EdgeCut cut;
  for (Vertex u : s) {
    for (Vertex v : g.neighbors(u)) {
      if (t.contains(v)) cut.edges.push_back(Edge{u, v}.Normalized());
    }
  }
  std::sort(cut.edges.begin(), cut.edges.end());
  cut.count = static_cast<int>(cut.edges.size());
  return cut;
}

Subgraph Induced(const Graph& g, const VertexSet& s) {
  CheckMembers(g, s);
  std::vector<Vertex> local(g.order(), -1);
  for (int i = 0; i < s.size(); ++i) local[s.ids()[i]] = i;
  std::vector<Edge> edges;
  for (Vertex u : s) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && local[v] >= 0) edges.push_back({local[u], local[v]});
    }
  }
  return {Graph::FromEdges(s.size(), edges), s.ids()};
}

Subgraph BipartiteSubgraph(const Graph& g, const VertexSet& s,
                           const VertexSet& t) {
  CheckMembers(g, s);
  CheckMembers(g, t);
  if (!s.Intersect(t).empty()) {
    Fail(ErrorKind::kInvalidArgument, "sides of bipartite subgraph overlap");
  }
  std::vector<Vertex> order = s.ids();
  order.insert(order.end(), t.begin(), t.end());
  std::vector<Edge> edges;
  for (int i = 0; i < s.size(); ++i) {
    for (int j = 0; j < t.size(); ++j) {
      if (g.adjacent(s.ids()[i], t.ids()[j])) {
        edges.push_back({i, s.size() + j});
      }
    }
  }
  return {Graph::FromEdges(static_cast<int>(order.size()), edges), order};
}

Contraction ContractSet(const Graph& g, const VertexSet& s) {
  CheckMembers(g, s);
  if (s.empty()) Fail(ErrorKind::kInvalidArgument, "contracting empty set");
  Contraction c;
  std::vector<Vertex> local(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!s.contains(v)) {
      local[v] = static_cast<Vertex>(c.to_parent.size());
      c.to_parent.push_back(v);
    }
  }
  c.merged = static_cast<Vertex>(c.to_parent.size());
  c.to_parent.push_back(-1);
  for (Vertex v : s) local[v] = c.merged;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] != local[e.v]) edges.push_back({local[e.u], local[e.v]});
  }
  c.graph = Graph::FromEdges(static_cast<int>(c.to_parent.size()), edges);
  return c;
}

std::optional<std::vector<int>> TwoColouring(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u)) {
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          stack.push_back(v);
        } else if (colour[v] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

bool IsBipartite(const Graph& g) { return TwoColouring(g).has_value(); }

Graph ParseGraph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int declared_n = -1;
  int declared_m = -1;
  int max_id = -1;
  std::vector<Edge> edges;
  auto parse_fail = [&](const std::string& why) {
    Fail(ErrorKind::kParse, "line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#' || first == "c") continue;
    if (first == "p") {
      if (declared_n >= 0 || !edges.empty()) parse_fail("misplaced header");
      if (!(ls >> declared_n >> declared_m) || declared_n < 0 ||
          declared_m < 0) {
        parse_fail("bad header");
      }
    } else {
      long long u = 0;
      long long v = 0;
      std::istringstream pair(line);
      if (!(pair >> u >> v)) parse_fail("expected two vertex ids");
      std::string rest;
      if (pair >> rest) parse_fail("trailing token '" + rest + "'");
      if (u < 0 || v < 0 || u > 1000000 || v > 1000000) {
        parse_fail("vertex id out of range");
      }
      if (u == v) parse_fail("loop at " + std::to_string(u));
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
      max_id = std::max<int>(max_id, static_cast<int>(std::max(u, v)));
    }
  }
  int n = declared_n >= 0 ? declared_n : max_id + 1;
  if (max_id >= n) {
    Fail(ErrorKind::kParse, "vertex " + std::to_string(max_id) +
                                " exceeds declared order " + std::to_string(n));
  }
  return Graph::FromEdges(n, edges);
}

Graph ParseGraph(const std::string& text) {
  std::istringstream in(text);
  return ParseGraph(in);
}

Graph ReadGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kParse, "cannot open " + path);
  return ParseGraph(in);
}

std::string FormatGraph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.order() << " " << g.size() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

Graph CompleteGraph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  }
  return Graph::FromEdges(n, e);
}

Graph CycleGraph(int n) {
  if (n < 3) Fail(ErrorKind::kInvalidArgument, "cycle needs 3 vertices");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) e.push_back({u, (u + 1) % n});
  return Graph::FromEdges(n, e);
}

Graph CompleteBipartite(int a, int b) {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) e.push_back({u, a + v});
  }
  return Graph::FromEdges(a + b, e);
}

Graph PetersenGraph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph::FromEdges(10, e);
}

Graph WheelGraph(int spokes) {
  if (spokes < 3) Fail(ErrorKind::kInvalidArgument, "wheel needs 3 spokes");
  std::vector<Edge> e;
  for (int i = 0; i < spokes; ++i) {
    e.push_back({i, (i + 1) % spokes});
    e.push_back({i, spokes});
  }
  return Graph::FromEdges(spokes + 1, e);
}

bool IsWalkInGraph(const Graph& g, const std::vector<Vertex>& walk) {
  if (walk.empty()) return false;
  for (Vertex v : walk) {
    if (!g.has_vertex(v)) return false;
  }
  for (size_t i = 0; i + 1 < walk.size(); ++i) {
    if (!g.adjacent(walk[i], walk[i + 1])) return false;
  }
  return true;
}

}  // namespace cycmod
