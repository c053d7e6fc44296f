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

#include <map>
#include <random>
#include <set>

#include "cycmod/decomposition.hpp"
#include "cycmod/error.hpp"
#include "cycmod/generate.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cycmod;
using fixtures::KindOf;

namespace {

void CheckSeparation(const Graph& g, const Separation2& sep) {
  CHECK(sep.a.size() >= 3);
  CHECK(sep.b.size() >= 3);
  CHECK(sep.a.Intersect(sep.b) == VertexSet{sep.x, sep.y});
  CHECK(sep.a.Union(sep.b).size() == g.order());
  const VertexSet cut{sep.x, sep.y};
  for (Vertex u : sep.a.Minus(cut)) {
    for (Vertex v : sep.b.Minus(cut)) CHECK_FALSE(g.adjacent(u, v));
  }
  std::vector<char> gone(g.order(), 0);
  gone[sep.x] = gone[sep.y] = 1;
  CHECK_FALSE(ref::ConnectedWithout(g, gone));
}

}  // namespace

TEST_CASE("block-cut tree examples") {
  BlockCutTree path = BlockCutTreeOf(fixtures::PathGraph(3));
  CHECK(path.blocks == std::vector<VertexSet>{{0, 1}, {1, 2}});
  CHECK(path.cut_vertices == VertexSet{1});
  CHECK(path.end_blocks.size() == 2);

  BlockCutTree k4 = BlockCutTreeOf(CompleteGraph(4));
  CHECK(k4.blocks.size() == 1);
  CHECK(k4.cut_vertices.empty());

  BlockCutTree bow = BlockCutTreeOf(fixtures::Bowtie());
  CHECK(bow.blocks == std::vector<VertexSet>{{0, 1, 2}, {2, 3, 4}});
  CHECK(bow.cut_vertices == VertexSet{2});

  CHECK(KindOf([] { BlockCutTreeOf(Graph::FromEdges(4, {{0, 1}, {2, 3}})); }) ==
        ErrorKind::kDisconnected);
}

TEST_CASE("block-cut tree structure on random connected graphs") {
  std::mt19937 rng(21);
  int seen = 0;
  while (seen < 150) {
    Graph g = fixtures::RandomGraph(rng, 9, 0.25);
    if (!ref::Connected(g)) continue;
    ++seen;
    BlockCutTree t = BlockCutTreeOf(g);
    std::map<Vertex, int> membership;
    for (const VertexSet& b : t.blocks) {
      for (Vertex v : b) ++membership[v];
      Subgraph sub = Induced(g, b);
      if (b.size() >= 3) {
        CHECK(ref::TwoConnected(sub.graph));
      } else {
        CHECK(b.size() == 2);
        CHECK(sub.graph.size() == 1);
      }
    }
    // Each edge in exactly one block.
    for (const Edge& e : g.edges()) {
      int holders = 0;
      for (const VertexSet& b : t.blocks) {
        holders += b.contains(e.u) && b.contains(e.v);
      }
      CHECK(holders == 1);
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      CHECK(membership[v] >= 1);
      std::vector<char> gone(g.order(), 0);
      gone[v] = 1;
      const bool is_cut = !ref::ConnectedWithout(g, gone);
      CHECK(t.cut_vertices.contains(v) == is_cut);
      CHECK(is_cut == (membership[v] >= 2));
    }
    // Tree: #blocks + #cuts - 1 incidences.
    CHECK(static_cast<int>(t.incidence.size()) ==
          static_cast<int>(t.blocks.size()) + t.cut_vertices.size() - 1);
    for (int i = 0; i < static_cast<int>(t.blocks.size()); ++i) {
      const bool end = t.CutsOf(i).size() <= 1;
      CHECK(t.IsEndBlock(i) == end);
    }
  }
}

TEST_CASE("rooted 2-connectivity examples") {
  Graph p3 = fixtures::PathGraph(3);
  CHECK(IsRooted2Connected(p3, 0, 2));
  CHECK_FALSE(IsRooted2Connected(p3, 0, 1));
  CHECK(IsRooted2Connected(fixtures::K4MinusEdge(), 0, 1));
  CHECK(KindOf([&] { IsRooted2Connected(p3, 1, 1); }) ==
        ErrorKind::kInvalidArgument);
}

TEST_CASE("rooted 2-connectivity agrees with the end-block rule, n <= 7") {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : EnumerateGraphs(n, [](const Graph& h) {
           return IsConnected(h);
         })) {
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
          const bool via_edge = IsRooted2Connected(g, x, y);
          CHECK(via_edge == SatisfiesEndBlockRule(g, x, y));
          CHECK(via_edge == ref::Rooted2Connected(g, x, y));
        }
      }
    }
  }
}

TEST_CASE("connectivity thresholds and 2-separations") {
  Graph glued = fixtures::TwoK4sOnEdge();
  CHECK(VertexConnectivityAtLeast(glued, 2));
  CHECK_FALSE(VertexConnectivityAtLeast(glued, 3));
  auto sep = Find2Separation(glued);
  REQUIRE(sep.has_value());
  CHECK(sep->x == 0);
  CHECK(sep->y == 1);
  CheckSeparation(glued, *sep);

  CHECK(VertexConnectivityAtLeast(CompleteGraph(4), 3));
  CHECK_FALSE(Find2Separation(CompleteGraph(4)).has_value());

  Graph c5 = CycleGraph(5);
  CHECK(VertexConnectivityAtLeast(c5, 2));
  CHECK_FALSE(VertexConnectivityAtLeast(c5, 3));
  auto c5sep = Find2Separation(c5);
  REQUIRE(c5sep.has_value());
  CheckSeparation(c5, *c5sep);

  CHECK(KindOf([] { VertexConnectivityAtLeast(CompleteGraph(3), 3); }) ==
        ErrorKind::kInvalidArgument);
}

TEST_CASE("connectivity agrees with vertex deletion, n <= 7") {
  for (int n = 4; n <= 7; ++n) {
    for (const Graph& g : EnumerateGraphs(n)) {
      const bool two = ref::TwoConnected(g);
      const bool three = ref::ThreeConnected(g);
      CHECK(IsTwoConnected(g) == two);
      CHECK(VertexConnectivityAtLeast(g, 2) == two);
      CHECK(VertexConnectivityAtLeast(g, 3) == three);
      if (two && !three) {
        auto sep = Find2Separation(g);
        REQUIRE(sep.has_value());
        CheckSeparation(g, *sep);
      }
    }
  }
}

TEST_CASE("feasible end blocks") {
  FeasibleEndBlocks path = FeasibleEndBlocksOf(fixtures::PathGraph(4), 3);
  REQUIRE(path.blocks.size() == 1);
  CHECK(path.blocks[0].block == VertexSet{0, 1});
  CHECK(path.blocks[0].cut == 1);
  CHECK_FALSE(path.two_connected);

  FeasibleEndBlocks bow = FeasibleEndBlocksOf(fixtures::Bowtie(), 0);
  REQUIRE(bow.blocks.size() == 1);
  CHECK(bow.blocks[0].block == VertexSet{2, 3, 4});
  CHECK(bow.blocks[0].cut == 2);

  FeasibleEndBlocks k4 = FeasibleEndBlocksOf(CompleteGraph(4), 2);
  CHECK(k4.two_connected);
  CHECK(k4.blocks.empty());
}

TEST_CASE("feasible end blocks avoid y except at their cut vertex") {
  std::mt19937 rng(4);
  int seen = 0;
  while (seen < 100) {
    Graph g = fixtures::RandomGraph(rng, 8, 0.25);
    if (!ref::Connected(g)) continue;
    ++seen;
    const Vertex y = static_cast<Vertex>(rng() % 8);
    FeasibleEndBlocks f = FeasibleEndBlocksOf(g, y);
    BlockCutTree t = BlockCutTreeOf(g);
    int expect = 0;
    for (int i = 0; i < static_cast<int>(t.blocks.size()); ++i) {
      auto cuts = t.CutsOf(i);
      if (cuts.size() != 1) continue;
      if (!t.blocks[i].contains(y) || y == cuts[0]) ++expect;
    }
    CHECK(static_cast<int>(f.blocks.size()) == expect);
    for (size_t i = 0; i < f.blocks.size(); ++i) {
      const EndBlock& b = f.blocks[i];
      CHECK(b.block.contains(b.cut));
      CHECK((!b.block.contains(y) || y == b.cut));
      if (i > 0) CHECK(f.blocks[i - 1].block < b.block);
    }
  }
}

TEST_CASE("shortest path and two disjoint paths respect the mask") {
  Graph c6 = CycleGraph(6);
  std::vector<char> all(6, 1);
  auto p = ShortestPath(c6, {0}, {3}, all);
  REQUIRE(p.has_value());
  CHECK(p->size() == 4);
  std::vector<char> no1 = all;
  no1[1] = 0;
  auto q = ShortestPath(c6, {0}, {2}, no1);
  REQUIRE(q.has_value());
  CHECK(*q == std::vector<Vertex>{0, 5, 4, 3, 2});
  no1[5] = 0;
  CHECK_FALSE(ShortestPath(c6, {0}, {2}, no1).has_value());

  auto two = TwoDisjointPaths(c6, 0, 1, 3, 4, all);
  REQUIRE(two.has_value());
  std::set<Vertex> used(two->first.begin(), two->first.end());
  for (Vertex v : two->second) CHECK(used.count(v) == 0);
  CHECK(ref::IsSimplePath(c6, two->first));
  CHECK(ref::IsSimplePath(c6, two->second));
}
