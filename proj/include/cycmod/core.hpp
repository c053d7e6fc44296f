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

// Complete bipartite cores H = G[S, T] around the root x, and the ways of
// turning a core plus a few outside paths into k (x, y)-paths.

#ifndef CYCMOD_CORE_HPP_
#define CYCMOD_CORE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "cycmod/families.hpp"
#include "cycmod/graph.hpp"

namespace cycmod {

struct Core {
  VertexSet s;  // contains x
  VertexSet t;
  int l = 0;    // |S| - 1
  Vertex x = -1;
  Vertex y = -1;
  // Component of G - V(H) holding y.
  VertexSet component_c;

  VertexSet vertices() const { return s.Union(t); }
};

// True when G - y has a 4-cycle through x.
bool HasFourCycleThrough(const Graph& g, Vertex x, Vertex y);

// Among cores with x in S and y outside H: largest S, T the full common
// neighbourhood of S minus y, then largest C, then fewest vertices of S
// adjacent to C, then the lexicographically smallest S. nullopt exactly
// when G - y has no 4-cycle through x. Raises NotRooted2Connected.
std::optional<Core> FindCore(const Graph& g, Vertex x, Vertex y);

struct CoreReport {
  bool ok = true;
  int condition = 0;  // 1..4 for the first failed condition
  Vertex witness = -1;
  std::string detail;
};

CoreReport VerifyCore(const Graph& g, const Core& core);

// Path inside H from `from` to `to` with exactly `length` edges, using
// alternate S and T vertices and none of `avoid`.
std::optional<PathWitness> LadderPath(const Core& core, Vertex from, Vertex to,
                                      int length,
                                      const std::vector<Vertex>& avoid);

// Shortest path from v into C and on to y, through C only.
std::optional<PathWitness> ExitThroughC(const Graph& g, const Core& core,
                                        Vertex v);

// k length-condition paths when l >= k, or l = k-1 and T sees C.
PathFamily CorePathsBigL(const Graph& g, const Core& core, int k);

// k semi-length paths when l = k-1, some s in S - x sees C, and G[T] has
// an edge.
PathFamily CorePathsSemilength(const Graph& g, const Core& core, int k);

enum class Attachment {
  kTPaths,    // k-l+1 T-paths avoiding H
  kTxSPaths,  // k-l+1 (T, {x, s})-paths
  kTSPaths,   // k-l+2 (T, S - {x, s})-paths
  kTyPaths,   // k-l (T, y)-paths
  kSyPaths,   // k-l+1 (S - x, y)-paths
};

std::string_view AttachmentName(Attachment a);

// Member count the attachment needs for a core of parameter l.
int AttachmentCount(Attachment a, int l, int k);

// Routes each member through H into an (x, y)-path and adds ladder detours
// on the longest one. s is the vertex of S - x used to reach C for the T
// attachments; pass -1 to take the smallest such vertex. The output keeps
// the class of the input.
PathFamily ExtendFromCore(const Graph& g, const Core& core, Attachment a,
                          const PathFamily& family, int k, Vertex s = -1);

}  // namespace cycmod

#endif  // CYCMOD_CORE_HPP_
