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

// Named small graphs shared by the unit tests.

#ifndef CYCMOD_TESTS_FIXTURES_HPP_
#define CYCMOD_TESTS_FIXTURES_HPP_

#include <random>
#include <vector>

#include "cycmod/error.hpp"
#include "cycmod/graph.hpp"
#include "doctest.h"

namespace fixtures {

using cycmod::Edge;
using cycmod::Graph;

// Path 0-1-...-(n-1).
inline Graph PathGraph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::FromEdges(n, e);
}

// Two triangles sharing vertex 2.
inline Graph Bowtie() {
  return Graph::FromEdges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

// Two copies of K4 glued along the edge 0-1.
inline Graph TwoK4sOnEdge() {
  return Graph::FromEdges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                              {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}});
}

inline Graph K4MinusEdge() { return cycmod::CompleteGraph(4).WithoutEdge(0, 1); }

// G(n, p) with a caller-owned engine.
inline Graph RandomGraph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) e.push_back({u, v});
    }
  }
  return Graph::FromEdges(n, e);
}

// Kind of the cycmod::Error raised by fn; fails the test if none is.
template <typename Fn>
cycmod::ErrorKind KindOf(Fn&& fn) {
  try {
    fn();
  } catch (const cycmod::Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return cycmod::ErrorKind::kInvalidArgument;
}

}  // namespace fixtures

#endif  // CYCMOD_TESTS_FIXTURES_HPP_
