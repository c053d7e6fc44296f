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

// Simple undirected graphs on vertices 0..n-1.
//
// A Graph is immutable once built. Every operation that changes the vertex
// or edge set returns a fresh graph, together with a map from the new ids
// back to the ids of the graph it was derived from.

#ifndef CYCMOD_GRAPH_HPP_
#define CYCMOD_GRAPH_HPP_

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cycmod {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  // Orders the endpoints so that u < v.
  Edge Normalized() const { return u < v ? Edge{u, v} : Edge{v, u}; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted set of distinct vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  bool contains(Vertex v) const;
  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  Vertex front() const { return ids_.front(); }
  const std::vector<Vertex>& ids() const { return ids_; }
  std::vector<Vertex>::const_iterator begin() const { return ids_.begin(); }
  std::vector<Vertex>::const_iterator end() const { return ids_.end(); }

  VertexSet Union(const VertexSet& other) const;
  VertexSet Minus(const VertexSet& other) const;
  VertexSet Intersect(const VertexSet& other) const;
  VertexSet With(Vertex v) const;
  VertexSet Without(Vertex v) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  // Duplicate and reversed pairs are merged. Loops and out-of-range ids
  // raise InvalidArgument.
  static Graph FromEdges(int order, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int size() const { return m_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const {
    return matrix_[static_cast<size_t>(u) * n_ + v] != 0;
  }
  bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  int min_degree() const;

  Graph WithEdge(Vertex u, Vertex v) const;
  Graph WithoutEdge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void Link(Vertex u, Vertex v);

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> matrix_;
};

// A derived graph plus the id each of its vertices had in the parent.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  // Local id of a parent vertex, or -1.
  Vertex Local(Vertex parent) const;
};

struct Contraction {
  Graph graph;
  // Parent id of each vertex; the contracted vertex maps to -1.
  std::vector<Vertex> to_parent;
  Vertex merged = -1;

  Vertex Local(Vertex parent) const;
};

struct EdgeCut {
  int count = 0;
  std::vector<Edge> edges;
};

// Edges with one end in s and the other in t; s and t must be disjoint.
EdgeCut EdgesBetween(const Graph& g, const VertexSet& s, const VertexSet& t);

// Induced subgraph on s; local ids follow the order of s.
Subgraph Induced(const Graph& g, const VertexSet& s);

// Edges between disjoint sets s and t only; vertices are s then t.
Subgraph BipartiteSubgraph(const Graph& g, const VertexSet& s,
                           const VertexSet& t);

// Merges s into one vertex placed last; parallel edges collapse.
Contraction ContractSet(const Graph& g, const VertexSet& s);

// 0/1 colouring of a proper 2-colouring, or nullopt when g has an odd cycle.
std::optional<std::vector<int>> TwoColouring(const Graph& g);
bool IsBipartite(const Graph& g);

// Text format: optional "p <n> <m>" header, then one "u v" pair per line,
// 0-based. Blank lines and lines starting with '#' or 'c' are skipped.
Graph ParseGraph(std::istream& in);
Graph ParseGraph(const std::string& text);
Graph ReadGraphFile(const std::string& path);
std::string FormatGraph(const Graph& g);

// Named families used throughout tests and examples.
Graph CompleteGraph(int n);
Graph CycleGraph(int n);
Graph CompleteBipartite(int a, int b);
Graph PetersenGraph();
Graph WheelGraph(int spokes);

// Non-empty vertex ids in path order are adjacent consecutively.
bool IsWalkInGraph(const Graph& g, const std::vector<Vertex>& walk);

}  // namespace cycmod

#endif  // CYCMOD_GRAPH_HPP_
