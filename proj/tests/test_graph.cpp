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

#include <numeric>
#include <random>
#include <set>

#include "cycmod/error.hpp"
#include "cycmod/graph.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cycmod;

using fixtures::KindOf;
using fixtures::RandomGraph;

TEST_CASE("graph construction merges duplicates and rejects loops") {
  Graph g = Graph::FromEdges(3, {{0, 1}, {1, 0}, {1, 2}, {0, 1}});
  CHECK(g.size() == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(KindOf([] { Graph::FromEdges(3, {{1, 1}}); }) ==
        ErrorKind::kInvalidArgument);
  CHECK(KindOf([] { Graph::FromEdges(3, {{0, 3}}); }) ==
        ErrorKind::kInvalidArgument);
}

TEST_CASE("adjacency is symmetric and degrees match") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = RandomGraph(rng, 9, 0.4);
    int total = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      total += g.degree(v);
      CHECK(std::is_sorted(g.neighbors(v).begin(), g.neighbors(v).end()));
      for (Vertex w : g.neighbors(v)) {
        CHECK(g.adjacent(w, v));
        CHECK(w != v);
      }
    }
    CHECK(total == 2 * g.size());
  }
}

TEST_CASE("edges_between examples") {
  CHECK(EdgesBetween(CompleteGraph(4), {0}, {1, 2, 3}).count == 3);
  CHECK(EdgesBetween(fixtures::PathGraph(3), {0}, {2}).count == 0);
  EdgeCut c5 = EdgesBetween(CycleGraph(5), {0, 2}, {1});
  CHECK(c5.count == 2);
  CHECK(c5.edges == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(KindOf([] { EdgesBetween(CompleteGraph(4), {0, 1}, {1, 2}); }) ==
        ErrorKind::kInvalidArgument);
}

TEST_CASE("edges_between counts neighbours across the cut") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = RandomGraph(rng, 8, 0.5);
    std::vector<Vertex> s;
    std::vector<Vertex> t;
    for (Vertex v = 0; v < 8; ++v) {
      int r = static_cast<int>(rng() % 3);
      if (r == 0) s.push_back(v);
      if (r == 1) t.push_back(v);
    }
    VertexSet ss(s);
    VertexSet ts(t);
    int expect = 0;
    for (Vertex v : s) {
      for (Vertex w : t) expect += g.adjacent(v, w);
    }
    CHECK(EdgesBetween(g, ss, ts).count == expect);
  }
}

TEST_CASE("induced subgraph examples") {
  Subgraph k3 = Induced(CompleteGraph(4), {0, 1, 2});
  CHECK(k3.graph == CompleteGraph(3));
  CHECK(k3.to_parent == std::vector<Vertex>{0, 1, 2});
  Subgraph p = Induced(CycleGraph(5), {0, 1, 2});
  CHECK(p.graph.size() == 2);
  CHECK(p.graph == fixtures::PathGraph(3));
  CHECK(Induced(PetersenGraph(), {}).graph.order() == 0);
  CHECK(KindOf([] { Induced(CompleteGraph(3), {0, 5}); }) ==
        ErrorKind::kInvalidArgument);
}

TEST_CASE("induced on the full vertex set is the identity") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = RandomGraph(rng, 7, 0.5);
    std::vector<Vertex> all(7);
    std::iota(all.begin(), all.end(), 0);
    CHECK(Induced(g, VertexSet(all)).graph == g);
  }
}

TEST_CASE("bipartite subgraph examples") {
  Subgraph c4 = BipartiteSubgraph(CompleteGraph(4), {0, 1}, {2, 3});
  CHECK(c4.graph == CompleteBipartite(2, 2));
  Subgraph star = BipartiteSubgraph(CompleteGraph(3), {0}, {1, 2});
  CHECK(star.graph.size() == 2);
  CHECK(star.graph.degree(0) == 2);
  Graph two = Graph::FromEdges(4, {{0, 1}, {2, 3}});
  Subgraph same = BipartiteSubgraph(two, {0, 2}, {1, 3});
  CHECK(same.graph.size() == 2);
  CHECK(KindOf([] { BipartiteSubgraph(CompleteGraph(3), {0}, {0, 1}); }) ==
        ErrorKind::kInvalidArgument);
}

TEST_CASE("contract_set examples") {
  Graph star = Graph::FromEdges(4, {{0, 1}, {0, 2}, {0, 3}});
  Contraction all = ContractSet(star, {0, 1, 2, 3});
  CHECK(all.graph.order() == 1);
  CHECK(all.graph.size() == 0);

  Contraction c4 = ContractSet(CycleGraph(5), {0, 1});
  CHECK(c4.graph.order() == 4);
  CHECK(ref::CycleLengths(c4.graph) == std::set<int>{4});
  CHECK(c4.graph.degree(c4.merged) == 2);

  Contraction p = ContractSet(CycleGraph(4), {0, 2});
  CHECK(p.graph.order() == 3);
  CHECK(p.graph.size() == 2);
  CHECK(p.graph.degree(p.merged) == 2);
  CHECK_FALSE(p.graph.adjacent(p.Local(1), p.Local(3)));
  CHECK(KindOf([] { ContractSet(CompleteGraph(3), {}); }) ==
        ErrorKind::kInvalidArgument);
}

TEST_CASE("contracted vertex degree equals the neighbourhood size") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = RandomGraph(rng, 8, 0.4);
    std::vector<Vertex> s;
    for (Vertex v = 0; v < 8; ++v) {
      if (rng() % 3 == 0) s.push_back(v);
    }
    if (s.empty()) s.push_back(0);
    VertexSet ss(s);
    std::set<Vertex> nbrs;
    for (Vertex v : s) {
      for (Vertex w : g.neighbors(v)) {
        if (!ss.contains(w)) nbrs.insert(w);
      }
    }
    Contraction c = ContractSet(g, ss);
    CHECK(c.graph.degree(c.merged) == static_cast<int>(nbrs.size()));
  }
}

TEST_CASE("two-colouring") {
  auto c4 = TwoColouring(CycleGraph(4));
  REQUIRE(c4.has_value());
  CHECK((*c4)[0] == (*c4)[2]);
  CHECK((*c4)[1] == (*c4)[3]);
  CHECK((*c4)[0] != (*c4)[1]);
  CHECK_FALSE(TwoColouring(CompleteGraph(3)).has_value());
  CHECK_FALSE(IsBipartite(PetersenGraph()));
  CHECK(ref::Bipartite(PetersenGraph()) == false);

  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = RandomGraph(rng, 7, 0.3);
    auto colour = TwoColouring(g);
    CHECK(colour.has_value() == ref::Bipartite(g));
    if (colour) {
      for (const Edge& e : g.edges()) CHECK((*colour)[e.u] != (*colour)[e.v]);
    }
  }
}

TEST_CASE("graph text format") {
  Graph g = ParseGraph("c a comment\np 4 3\n0 1\n1 2\n# another\n2 1\n2 3\n");
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(ParseGraph(FormatGraph(PetersenGraph())) == PetersenGraph());
  CHECK(ParseGraph("0 1\n1 2\n").order() == 3);
  CHECK(KindOf([] { ParseGraph("0 x\n"); }) == ErrorKind::kParse);
  CHECK(KindOf([] { ParseGraph("1 1\n"); }) == ErrorKind::kParse);
  CHECK(KindOf([] { ParseGraph("p 2 1\n0 5\n"); }) == ErrorKind::kParse);
  CHECK(KindOf([] { ParseGraph("0 1 2\n"); }) == ErrorKind::kParse);
}

TEST_CASE("named generators") {
  CHECK(CompleteGraph(5).size() == 10);
  CHECK(CompleteBipartite(3, 4).size() == 12);
  Graph p = PetersenGraph();
  CHECK(p.size() == 15);
  CHECK(p.min_degree() == 3);
  Graph w = WheelGraph(5);
  CHECK(w.order() == 6);
  CHECK(w.degree(5) == 5);
}
