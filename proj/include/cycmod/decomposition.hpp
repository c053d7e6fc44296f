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

#ifndef CYCMOD_DECOMPOSITION_HPP_
#define CYCMOD_DECOMPOSITION_HPP_

#include <optional>
#include <vector>

#include "cycmod/graph.hpp"

namespace cycmod {

struct BlockCutTree {
  // Sorted by smallest member.
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
  // (block index, cut vertex) pairs.
  std::vector<std::pair<int, Vertex>> incidence;
  // Blocks incident to at most one cut vertex.
  std::vector<int> end_blocks;

  std::vector<Vertex> CutsOf(int block) const;
  bool IsEndBlock(int block) const;
};

// Raises Disconnected unless g is connected and non-empty.
BlockCutTree BlockCutTreeOf(const Graph& g);

bool IsConnected(const Graph& g);
std::vector<VertexSet> ConnectedComponents(const Graph& g);

// Components of g restricted to vertices with allowed[v] set, each sorted,
// listed by smallest member.
std::vector<VertexSet> ComponentsWithin(const Graph& g,
                                        const std::vector<char>& allowed);

// Order at least 3, connected, no cut vertex.
bool IsTwoConnected(const Graph& g);

// True iff g + xy is 2-connected. Raises InvalidArgument for x == y or ids
// outside the graph.
bool IsRooted2Connected(const Graph& g, Vertex x, Vertex y);

// The end-block form of the same property: g is connected with order at
// least 3, has at most two end blocks, and each end block contains x or y
// as a vertex that is not a cut vertex of g.
bool SatisfiesEndBlockRule(const Graph& g, Vertex x, Vertex y);

// t must be 2 or 3 and g must have at least t+1 vertices.
bool VertexConnectivityAtLeast(const Graph& g, int t);

struct Separation2 {
  VertexSet a;
  VertexSet b;
  Vertex x = -1;
  Vertex y = -1;
};

// Smallest pair {x, y} (x < y) whose deletion disconnects g. a holds the
// component of g - {x, y} with the smallest vertex, plus x and y.
std::optional<Separation2> Find2Separation(const Graph& g);

struct EndBlock {
  VertexSet block;
  Vertex cut = -1;
};

struct FeasibleEndBlocks {
  std::vector<EndBlock> blocks;
  // Set when c has no cut vertex; blocks is then empty.
  bool two_connected = false;
};

// End blocks B of c with cut vertex b such that y is not in B - b, ordered
// by smallest member.
FeasibleEndBlocks FeasibleEndBlocksOf(const Graph& c, Vertex y);

// Shortest path from any vertex of `from` to any vertex of `to` through
// vertices with allowed[v] set. Endpoints must be allowed as well. Among
// shortest paths the search prefers smaller ids.
std::optional<std::vector<Vertex>> ShortestPath(
    const Graph& g, const std::vector<Vertex>& from,
    const std::vector<Vertex>& to, const std::vector<char>& allowed);

// Two vertex-disjoint paths linking {a1, a2} to {b1, b2}, or nullopt. The
// returned pair starts at a1 and a2 respectively.
std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>>
TwoDisjointPaths(const Graph& g, Vertex a1, Vertex a2, Vertex b1, Vertex b2,
                 const std::vector<char>& allowed);

}  // namespace cycmod

#endif  // CYCMOD_DECOMPOSITION_HPP_
