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

#include "cycmod/cycles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>
#include <utility>
#include <vector>

#include "cycmod/decomposition.hpp"
#include "cycmod/error.hpp"

namespace cycmod {

ParityFlag ParityOf(int k) {
  if (k < 1) Fail(ErrorKind::kInvalidArgument, "k must be positive");
  ParityFlag f;
  f.phi = k % 2 == 0 ? 1 : 0;
  f.l = (k + 1 - f.phi) / 2;
  return f;
}

std::string_view OddCyclePropertyName(OddCycleProperty p) {
  return p == OddCycleProperty::kTriangle ? "triangle" : "two-neighbor-rule";
}

std::string_view BranchName(Branch b) {
  switch (b) {
    case Branch::kSeparation:
      return "I";
    case Branch::kOddCycle:
      return "II";
    case Branch::kBipartite:
      return "III";
  }
  return "?";
}

namespace {

VertexSet AllOf(const Graph& g) {
  std::vector<Vertex> ids(g.order());
  for (int i = 0; i < g.order(); ++i) ids[i] = i;
  return VertexSet(std::move(ids));
}

std::vector<char> MaskOf(int n, const VertexSet& s) {
  std::vector<char> mask(n, 0);
  for (Vertex v : s) mask[v] = 1;
  return mask;
}

// Whether every vertex of the remainder obeys the two-neighbour rule.
std::string CheckTwoNeighborRule(const Graph& g, const CycleWitness& c,
                                 const VertexSet& rest) {
  const int len = static_cast<int>(c.size());
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < len; ++i) pos[c[i]] = i;
  Subgraph r = Induced(g, rest);
  BlockCutTree tree = BlockCutTreeOf(r.graph);
  for (Vertex lv = 0; lv < r.graph.order(); ++lv) {
    if (tree.cut_vertices.contains(lv)) continue;
    const Vertex v = r.to_parent[lv];
    std::vector<int> at;
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] >= 0) at.push_back(pos[w]);
    }
    if (at.size() > 2) {
      return "vertex " + std::to_string(v) + " has " +
             std::to_string(at.size()) + " neighbours on the cycle";
    }
    if (at.size() == 2) {
      const int d = (at[1] - at[0] + len) % len;
      if (d != 2 && d != len - 2) {
        return "vertex " + std::to_string(v) +
               " sees two cycle vertices that are not u+ and u-";
      }
    }
  }
  return {};
}

// Induced cycles of odd length `len`, each starting at its smallest vertex
// with the second vertex below the last, in lexicographic order.
std::vector<CycleWitness> InducedOddCycles(const Graph& g, int len) {
  std::vector<CycleWitness> out;
  const int n = g.order();
  std::vector<Vertex> path;
  std::vector<char> on(n, 0);
  std::function<void(Vertex)> grow = [&](Vertex s) {
    const int depth = static_cast<int>(path.size());
    const Vertex tail = path.back();
    for (Vertex w : g.neighbors(tail)) {
      if (w <= s || on[w]) continue;
      // w may only touch the tail, and s exactly when it closes the cycle.
      bool chord = false;
      for (int i = 1; i + 1 < depth && !chord; ++i) {
        chord = g.adjacent(w, path[i]);
      }
      if (chord) continue;
      const bool closes = depth + 1 == len;
      if (g.adjacent(w, s) != closes && depth >= 2) continue;
      if (closes) {
        if (!g.adjacent(w, s) || path[1] > w) continue;
        path.push_back(w);
        out.push_back(path);
        path.pop_back();
        continue;
      }
      on[w] = 1;
      path.push_back(w);
      grow(s);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    on[s] = 1;
    if (len == 3) {
      for (Vertex a : g.neighbors(s)) {
        for (Vertex b : g.neighbors(a)) {
          if (a > s && b > a && g.adjacent(b, s)) out.push_back({s, a, b});
        }
      }
    } else {
      grow(s);
    }
    on[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string ValidateOddCycle(const Graph& g, const OddCycleWitness& w) {
  const CycleWitness& c = w.cycle;
  const int len = static_cast<int>(c.size());
  if (len < 3 || len % 2 == 0) return "cycle length is not odd";
  if (len != 2 * w.m + 1) return "m does not match the cycle length";
  if (!IsCycleIn(g, c)) return "not a cycle of the graph";
  for (int i = 0; i < len; ++i) {
    for (int j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      if (g.adjacent(c[i], c[j])) return "cycle has a chord";
    }
  }
  VertexSet rest = AllOf(g).Minus(VertexSet(c));
  if (rest.empty()) return "remainder is empty";
  if (!IsConnected(Induced(g, rest).graph)) return "remainder is disconnected";
  if (w.property == OddCycleProperty::kTriangle) {
    return len == 3 ? std::string() : "declared triangle has length " +
                                          std::to_string(len);
  }
  return CheckTwoNeighborRule(g, c, rest);
}

std::vector<OddCycleWitness> NonSepInducedOddCycles(const Graph& g) {
  std::vector<OddCycleWitness> out;
  if (!IsConnected(g) || IsBipartite(g)) return out;
  for (int len = 3; len <= g.order() - 1; len += 2) {
    for (CycleWitness& c : InducedOddCycles(g, len)) {
      OddCycleWitness w;
      w.cycle = std::move(c);
      w.m = (len - 1) / 2;
      w.property = len == 3 ? OddCycleProperty::kTriangle
                            : OddCycleProperty::kTwoNeighborRule;
      if (ValidateOddCycle(g, w).empty()) out.push_back(std::move(w));
    }
  }
  return out;
}

std::optional<OddCycleWitness> FindNonSepInducedOddCycle(const Graph& g) {
  if (!IsConnected(g) || IsBipartite(g)) return std::nullopt;
  for (int len = 3; len <= g.order() - 1; len += 2) {
    for (CycleWitness& c : InducedOddCycles(g, len)) {
      OddCycleWitness w;
      w.cycle = std::move(c);
      w.m = (len - 1) / 2;
      w.property = len == 3 ? OddCycleProperty::kTriangle
                            : OddCycleProperty::kTwoNeighborRule;
      if (ValidateOddCycle(g, w).empty()) return w;
    }
  }
  return std::nullopt;
}

namespace {

std::string Fingerprint(const Graph& g, int k) {
  std::ostringstream out;
  out << "n" << g.order() << "m" << g.size() << "k" << k;
  return out.str();
}

void RequireBasics(const Graph& g, int k) {
  if (k < 1) Fail(ErrorKind::kInvalidArgument, "k must be positive");
  if (g.order() < 3 || !IsTwoConnected(g)) {
    Fail(ErrorKind::kHypothesisNotMet, "graph is not 2-connected");
  }
  if (g.min_degree() < k + 1) {
    Fail(ErrorKind::kHypothesisNotMet,
         "minimum degree " + std::to_string(g.min_degree()) + " < k+1 = " +
             std::to_string(k + 1));
  }
}

bool IsThreeConnected(const Graph& g) {
  return g.order() >= 4 && VertexConnectivityAtLeast(g, 3);
}

PathWitness Glue(PathWitness a, const PathWitness& b) {
  if (b.empty()) return a;
  const size_t from = (!a.empty() && a.back() == b.front()) ? 1 : 0;
  a.insert(a.end(), b.begin() + from, b.end());
  return a;
}

// Shared machinery: constructive path sub-extractions and the final
// acceptance test of a candidate family.
class Builder {
 public:
  Builder(const Graph& g, int k, OracleBudget budget, ExtractionTrace& trace)
      : g_(g), k_(k), budget_(budget), trace_(trace) {}

  // A path family of g[part] lifted to g; empty when the hypothesis fails
  // or the sub-extraction had to fall back to the oracle.
  std::optional<PathFamily> Paths(const VertexSet& part, Vertex x, Vertex y,
                                  int count, PathMode mode) {
    if (count < 1 || x == y || !part.contains(x) || !part.contains(y)) {
      return std::nullopt;
    }
    auto key = std::make_tuple(part.ids(), x, y, count, mode);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    std::optional<PathFamily> out;
    Subgraph sub = Induced(g_, part);
    try {
      PathExtraction r = FindPaths(sub.graph, sub.Local(x), sub.Local(y),
                                   count, mode, budget_);
      trace_.calls += r.trace.calls;
      trace_.max_depth = std::max(trace_.max_depth, r.trace.max_depth + 1);
      trace_.inner_gaps += r.trace.inner_gaps;
      if (r.trace.constructive_gap) {
        ++trace_.inner_gaps;
      } else {
        std::vector<PathWitness> members;
        for (const PathWitness& p : r.family.members) {
          PathWitness q;
          for (Vertex v : p) q.push_back(sub.to_parent[v]);
          members.push_back(std::move(q));
        }
        out = MakePathFamily(std::move(members));
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kBudgetExceeded) throw;
    }
    cache_.emplace(key, out);
    return out;
  }

  // The k shortest members when they form a valid consecutive or
  // length-condition family.
  std::optional<CycleFamily> Accept(std::vector<CycleWitness> cycles,
                                    std::string_view tag,
                                    bool length_only = false) {
    if (static_cast<int>(cycles.size()) < k_) return std::nullopt;
    for (const CycleWitness& c : cycles) {
      if (!IsCycleIn(g_, c)) return std::nullopt;
    }
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const CycleWitness& a, const CycleWitness& b) {
                       return a.size() < b.size();
                     });
    cycles.resize(k_);
    CycleFamily f = MakeCycleFamily(std::move(cycles));
    const bool ok = f.cls.kind == FamilyKind::kLengthCondition ||
                    (!length_only && f.cls.kind == FamilyKind::kConsecutive);
    if (!ok) return std::nullopt;
    trace_.entries.push_back({std::string(tag), Fingerprint(g_, k_),
                              "accept " + FamilyClassName(f.cls), 0});
    return f;
  }

  template <typename Fn>
  std::optional<CycleFamily> Guarded(Fn&& fn) {
    try {
      return fn();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kBudgetExceeded) throw;
      return std::nullopt;
    }
  }

  const Graph& g() const { return g_; }
  int k() const { return k_; }
  ExtractionTrace& trace() { return trace_; }

 private:
  const Graph& g_;
  int k_;
  OracleBudget budget_;
  ExtractionTrace& trace_;
  std::map<std::tuple<std::vector<Vertex>, Vertex, Vertex, int, PathMode>,
           std::optional<PathFamily>>
      cache_;
};

// Cycles x P y Q x for every scheduled pair.
std::vector<CycleWitness> GlueSides(const PathFamily& p, const PathFamily& q,
                                    const PairSchedule& rows) {
  std::vector<CycleWitness> out;
  for (const auto& [i, j] : rows) {
    CycleWitness c = p.members[i - 1];
    const PathWitness& back = q.members[j - 1];
    for (size_t t = back.size() - 2; t >= 1; --t) c.push_back(back[t]);
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<CycleFamily> ShortcutOneCycle(Builder& b) {
  const Graph& g = b.g();
  for (const Edge& e : g.edges()) {
    Graph h = g.WithoutEdge(e.u, e.v);
    std::vector<char> all(g.order(), 1);
    auto p = ShortestPath(h, {e.u}, {e.v}, all);
    if (p) return b.Accept({*p}, "k=1");
  }
  return std::nullopt;
}

// An edge xy closes two flexible (x, y)-paths into two cycles.
std::optional<CycleFamily> ShortcutTwoCycles(Builder& b) {
  const Graph& g = b.g();
  const VertexSet all = AllOf(g);
  for (const Edge& e : g.edges()) {
    auto fam = b.Paths(all, e.u, e.v, 2, PathMode::kFlex);
    if (!fam) continue;
    if (auto f = b.Accept(fam->members, "edge+two-paths")) return f;
  }
  return std::nullopt;
}

struct SidePair {
  VertexSet a;
  VertexSet b;
  Vertex x;
  Vertex y;
};

// All separations of order two, one side being a single component of
// G - {x, y} together with x and y.
std::vector<SidePair> TwoSeparations(const Graph& g) {
  std::vector<SidePair> out;
  const int n = g.order();
  const VertexSet all = AllOf(g);
  std::vector<char> allowed(n, 1);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      allowed[x] = allowed[y] = 0;
      std::vector<VertexSet> parts = ComponentsWithin(g, allowed);
      allowed[x] = allowed[y] = 1;
      if (parts.size() < 2) continue;
      for (const VertexSet& part : parts) {
        VertexSet a = part.With(x).With(y);
        VertexSet b = all.Minus(part);
        out.push_back({a, b, x, y});
      }
    }
  }
  return out;
}

std::optional<CycleFamily> SeparatedConstruct(Builder& b) {
  const int k = b.k();
  if (k == 1) return ShortcutOneCycle(b);
  const ParityFlag pf = ParityOf(k);
  const int l = pf.l;
  for (const SidePair& sep : TwoSeparations(b.g())) {
    auto attempt = [&]() -> std::optional<CycleFamily> {
      if (pf.phi == 0) {
        auto p = b.Paths(sep.a, sep.x, sep.y, l, PathMode::kLength);
        auto q = b.Paths(sep.b, sep.x, sep.y, l, PathMode::kLength);
        if (!p || !q) return std::nullopt;
        return b.Accept(GlueSides(*p, *q, Table1Schedule(l, 0)),
                        "separation-length", true);
      }
      auto p = b.Paths(sep.a, sep.x, sep.y, l + 1, PathMode::kFlex);
      auto q = b.Paths(sep.b, sep.x, sep.y, l + 1, PathMode::kFlex);
      if (!p || !q) return std::nullopt;
      if (p->cls.kind == FamilyKind::kLengthCondition) {
        auto q2 = b.Paths(sep.b, sep.x, sep.y, l, PathMode::kLength);
        if (q2) {
          return b.Accept(GlueSides(*p, *q2, Table1Schedule(l, 1)),
                          "separation-length", true);
        }
      }
      if (q->cls.kind == FamilyKind::kLengthCondition) {
        auto p2 = b.Paths(sep.a, sep.x, sep.y, l, PathMode::kLength);
        if (p2) {
          return b.Accept(GlueSides(*q, *p2, Table1Schedule(l, 1)),
                          "separation-length", true);
        }
      }
      if (p->cls.kind == FamilyKind::kSemiLength &&
          q->cls.kind == FamilyKind::kSemiLength) {
        return b.Accept(GlueSides(*p, *q,
                                  Table2Schedule(l, p->cls.switch_index,
                                                 q->cls.switch_index)),
                        "separation-semilength", true);
      }
      return std::nullopt;
    };
    if (auto f = b.Guarded(attempt)) return f;
  }
  return std::nullopt;
}

struct CycleWalker {
  CycleWitness c;
  int Pos(Vertex v) const {
    return static_cast<int>(std::find(c.begin(), c.end(), v) - c.begin());
  }
  Vertex At(int i) const {
    const int len = static_cast<int>(c.size());
    return c[((i % len) + len) % len];
  }
};

class OddCycleConstruct {
 public:
  OddCycleConstruct(Builder& b, const OddCycleWitness& w)
      : b_(b), g_(b.g()), w_(w), k_(b.k()), pf_(ParityOf(b.k())) {}

  std::optional<CycleFamily> Run() {
    if (k_ == 1) {
      return b_.Accept({w_.cycle}, "k=1");
    }
    if (k_ == 2) return ShortcutTwoCycles(b_);
    if (w_.m == 1) {
      if (auto f = Triangle()) return f;
    }
    if (auto f = Fans()) return f;
    if (w_.m >= 2) {
      if (auto f = TwoEndBlocks()) return f;
    }
    return std::nullopt;
  }

 private:
  PathMode FanMode() const {
    return pf_.phi == 0 ? PathMode::kFlex : PathMode::kLength;
  }

  // Contracting u+ and u- turns (u, u*)-paths into paths from u to the
  // other two triangle vertices.
  std::optional<CycleFamily> Triangle() {
    const CycleWitness& c = w_.cycle;
    for (int i = 0; i < 3; ++i) {
      const Vertex u = c[i];
      const Vertex up = c[(i + 1) % 3];
      const Vertex um = c[(i + 2) % 3];
      auto attempt = [&]() -> std::optional<CycleFamily> {
        Contraction star = ContractSet(g_, VertexSet{up, um});
        const Graph& h = star.graph;
        const Vertex lu = star.Local(u);
        const Vertex ls = star.merged;
        PathExtraction r = FindPaths(h, lu, ls, pf_.l, FanMode());
        b_.trace().calls += r.trace.calls;
        if (r.trace.constructive_gap) {
          ++b_.trace().inner_gaps;
          return std::nullopt;
        }
        std::vector<PathWitness> members;
        for (const PathWitness& p : r.family.members) {
          PathWitness q;
          for (size_t t = 0; t + 1 < p.size(); ++t) {
            q.push_back(star.to_parent[p[t]]);
          }
          const Vertex before = q.back();
          q.push_back(g_.adjacent(before, up) ? up : um);
          members.push_back(std::move(q));
        }
        PathFamily fam = MakePathFamily(std::move(members));
        CycleFamily out = OddCycleFan(c, u, fam, pf_.phi);
        return b_.Accept(out.members, "triangle-fan");
      };
      if (auto f = b_.Guarded(attempt)) return f;
    }
    return std::nullopt;
  }

  struct Piece {
    VertexSet block;
    Vertex cut;
  };

  std::vector<Piece> Pieces(const VertexSet& rest) {
    std::vector<Piece> out;
    Subgraph r = Induced(g_, rest);
    BlockCutTree tree = BlockCutTreeOf(r.graph);
    if (tree.cut_vertices.empty()) {
      for (Vertex v : rest) out.push_back({rest, v});
      return out;
    }
    for (int i = 0; i < static_cast<int>(tree.blocks.size()); ++i) {
      std::vector<Vertex> cuts = tree.CutsOf(i);
      if (cuts.size() != 1) continue;
      std::vector<Vertex> ids;
      for (Vertex v : tree.blocks[i]) ids.push_back(r.to_parent[v]);
      out.push_back({VertexSet(std::move(ids)), r.to_parent[cuts[0]]});
    }
    for (Vertex v : rest) out.push_back({rest, v});
    return out;
  }

  // Fan constructions: paths from a vertex x next to the cycle, through a
  // piece B of G - V(C) to its cut b, on to a neighbour of u^{+-m}.
  std::optional<CycleFamily> Fans() {
    const CycleWitness& c = w_.cycle;
    const int m = w_.m;
    const VertexSet cyc(c);
    const VertexSet rest = AllOf(g_).Minus(cyc);
    CycleWalker walk{c};
    for (const Piece& piece : Pieces(rest)) {
      const VertexSet inner = piece.block.Without(piece.cut);
      const VertexSet outside = rest.Minus(inner).With(piece.cut);
      for (Vertex x : piece.block) {
        if (x == piece.cut) continue;
        for (int iu = 0; iu < static_cast<int>(c.size()); ++iu) {
          const Vertex u = c[iu];
          const Vertex up = walk.At(iu + 1);
          const Vertex um = walk.At(iu - 1);
          for (int sign : {1, -1}) {
            const Vertex target = walk.At(iu + sign * m);
            for (Vertex y : outside) {
              if (!g_.adjacent(y, target)) continue;
              auto route = ShortestPath(g_, {piece.cut}, {y},
                                        MaskOf(g_.order(), outside));
              if (!route) continue;
              if (g_.adjacent(x, u)) {
                auto f = b_.Guarded([&]() -> std::optional<CycleFamily> {
                  auto fam = b_.Paths(piece.block, x, piece.cut, pf_.l,
                                      FanMode());
                  if (!fam) return std::nullopt;
                  std::vector<PathWitness> members;
                  for (const PathWitness& p : fam->members) {
                    members.push_back(
                        Glue(Glue(Glue({u}, p), *route), {target}));
                  }
                  CycleFamily out = OddCycleFan(
                      c, u, MakePathFamily(std::move(members)), pf_.phi);
                  return b_.Accept(out.members, "fan-u");
                });
                if (f) return f;
              }
              if (m >= 2 && g_.adjacent(x, up) && g_.adjacent(x, um)) {
                auto f = b_.Guarded([&]() -> std::optional<CycleFamily> {
                  auto fam = b_.Paths(piece.block, x, piece.cut, pf_.l - 1,
                                      PathMode::kLength);
                  if (!fam) return std::nullopt;
                  std::vector<PathWitness> members;
                  for (const PathWitness& p : fam->members) {
                    members.push_back(Glue(Glue(p, *route), {target}));
                  }
                  CycleWitness oriented = c;
                  if (sign < 0) {
                    std::reverse(oriented.begin(), oriented.end());
                  }
                  CycleFamily out = OddCycleXFan(
                      oriented, u, x, MakePathFamily(std::move(members)));
                  return b_.Accept(out.members, "fan-x");
                });
                if (f) return f;
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  // 2l-3+phi length-condition (x1, x2)-paths through two end blocks.
  std::optional<PathFamily> CrossPaths(const Piece& p1, Vertex x1,
                                       const Piece& p2, Vertex x2,
                                       const PathWitness& mid) {
    const int l = pf_.l;
    auto combine = [&](const PathFamily& left, const PathFamily& right,
                       const PairSchedule& rows) {
      std::vector<PathWitness> out;
      for (const auto& [i, j] : rows) {
        out.push_back(Glue(Glue(left.members[i - 1], mid),
                           Reversed(right.members[j - 1])));
      }
      return MakePathFamily(std::move(out));
    };
    // Families run x1 -> b1 and x2 -> b2.
    if (pf_.phi == 0) {
      if (l < 2) return std::nullopt;
      auto q = b_.Paths(p1.block, x1, p1.cut, l - 1, PathMode::kLength);
      auto r = b_.Paths(p2.block, x2, p2.cut, l - 1, PathMode::kLength);
      if (!q || !r) return std::nullopt;
      return combine(*q, *r, Table1Schedule(l - 1, 0));
    }
    auto q = b_.Paths(p1.block, x1, p1.cut, l, PathMode::kFlex);
    auto r = b_.Paths(p2.block, x2, p2.cut, l, PathMode::kFlex);
    if (!q || !r) return std::nullopt;
    if (q->cls.kind == FamilyKind::kLengthCondition && l >= 2) {
      auto r2 = b_.Paths(p2.block, x2, p2.cut, l - 1, PathMode::kLength);
      if (r2) return combine(*q, *r2, Table1Schedule(l - 1, 1));
    }
    if (r->cls.kind == FamilyKind::kLengthCondition && l >= 2) {
      auto q2 = b_.Paths(p1.block, x1, p1.cut, l - 1, PathMode::kLength);
      if (q2) {
        // Rows index (r, q2); members are still written x1 -> x2.
        std::vector<PathWitness> out;
        for (const auto& [i, j] : Table1Schedule(l - 1, 1)) {
          out.push_back(Glue(Glue(q2->members[j - 1], mid),
                             Reversed(r->members[i - 1])));
        }
        return MakePathFamily(std::move(out));
      }
    }
    if (q->cls.kind == FamilyKind::kSemiLength &&
        r->cls.kind == FamilyKind::kSemiLength) {
      return combine(*q, *r,
                     Table2Schedule(l - 1, q->cls.switch_index,
                                    r->cls.switch_index));
    }
    return std::nullopt;
  }

  std::optional<CycleFamily> TwoEndBlocks() {
    const int m = w_.m;
    const int len = 2 * m + 1;
    const VertexSet cyc(w_.cycle);
    const VertexSet rest = AllOf(g_).Minus(cyc);
    Subgraph r = Induced(g_, rest);
    BlockCutTree tree = BlockCutTreeOf(r.graph);
    std::vector<Piece> ends;
    for (int i = 0; i < static_cast<int>(tree.blocks.size()); ++i) {
      std::vector<Vertex> cuts = tree.CutsOf(i);
      if (cuts.size() != 1) continue;
      std::vector<Vertex> ids;
      for (Vertex v : tree.blocks[i]) ids.push_back(r.to_parent[v]);
      ends.push_back({VertexSet(std::move(ids)), r.to_parent[cuts[0]]});
    }
    for (int orient = 0; orient < 2; ++orient) {
      CycleWitness c = w_.cycle;
      if (orient == 1) std::reverse(c.begin(), c.end());
      CycleWalker walk{c};
      for (size_t i1 = 0; i1 < ends.size(); ++i1) {
        for (size_t i2 = 0; i2 < ends.size(); ++i2) {
          if (i1 == i2) continue;
          const Piece& p1 = ends[i1];
          const Piece& p2 = ends[i2];
          const VertexSet lane = rest.Minus(p1.block.Without(p1.cut))
                                     .Minus(p2.block.Without(p2.cut))
                                     .With(p1.cut)
                                     .With(p2.cut);
          auto mid = ShortestPath(g_, {p1.cut}, {p2.cut},
                                  MaskOf(g_.order(), lane));
          if (!mid) continue;
          for (int a = 0; a < len; ++a) {
            for (int d = 2; d <= 2 * m - 2; ++d) {
              const Vertex u1p = walk.At(a + 1);
              const Vertex u1m = walk.At(a - 1);
              const Vertex u2p = walk.At(a + d + 1);
              const Vertex u2m = walk.At(a + d - 1);
              for (Vertex x1 : p1.block) {
                if (x1 == p1.cut || !g_.adjacent(x1, u1p) ||
                    !g_.adjacent(x1, u1m)) {
                  continue;
                }
                for (Vertex x2 : p2.block) {
                  if (x2 == p2.cut || !g_.adjacent(x2, u2p) ||
                      !g_.adjacent(x2, u2m)) {
                    continue;
                  }
                  auto f = b_.Guarded([&]() -> std::optional<CycleFamily> {
                    auto paths = CrossPaths(p1, x1, p2, x2, *mid);
                    if (!paths ||
                        paths->cls.kind != FamilyKind::kLengthCondition) {
                      return std::nullopt;
                    }
                    // Arc from u2^- back to u1^+, or further to u1^-, or
                    // from u2^+ back to u1^-.
                    auto arc = [&](int from, int to) {
                      std::vector<Vertex> out;
                      for (int s = from; s >= to; --s) out.push_back(walk.At(s));
                      return out;
                    };
                    std::vector<CycleWitness> cycles;
                    for (const PathWitness& p : paths->members) {
                      cycles.push_back(Glue(p, arc(a + d - 1, a + 1)));
                    }
                    const PathWitness& last = paths->members.back();
                    cycles.push_back(Glue(last, arc(a + d - 1, a - 1)));
                    cycles.push_back(Glue(last, arc(a + d + 1, a - 1)));
                    return b_.Accept(cycles, "two-end-blocks", true);
                  });
                  if (f) return f;
                }
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  Builder& b_;
  const Graph& g_;
  const OddCycleWitness& w_;
  int k_;
  ParityFlag pf_;
};

void FallBack(CycleExtraction& out, const Graph& g, int k, bool length_only,
              OracleBudget budget) {
  out.trace.constructive_gap = true;
  out.trace.entries.push_back({"oracle", Fingerprint(g, k), "fallback", 0});
  std::optional<CycleFamily> f = OracleLengthConditionCycles(g, k, budget);
  if (!f && !length_only) f = OracleCycles(g, k, budget);
  if (!f) {
    Fail(ErrorKind::kInvalidWitness, "no family exists for " + Fingerprint(g, k));
  }
  out.family = std::move(*f);
}

}  // namespace

CycleExtraction CyclesSeparated(const Graph& g, int k, OracleBudget budget) {
  RequireBasics(g, k);
  if (IsThreeConnected(g)) {
    Fail(ErrorKind::kHypothesisNotMet, "graph is 3-connected");
  }
  CycleExtraction out;
  out.branch = Branch::kSeparation;
  out.trace.measure = g.order() + g.size();
  Builder b(g, k, budget, out.trace);
  if (auto f = SeparatedConstruct(b)) {
    out.family = std::move(*f);
    return out;
  }
  FallBack(out, g, k, true, budget);
  return out;
}

CycleExtraction CyclesWithOddCycle(const Graph& g, int k,
                                   const OddCycleWitness& w,
                                   OracleBudget budget) {
  RequireBasics(g, k);
  if (std::string why = ValidateOddCycle(g, w); !why.empty()) {
    Fail(ErrorKind::kInvalidWitness, "odd cycle witness: " + why);
  }
  CycleExtraction out;
  out.branch = Branch::kOddCycle;
  out.trace.measure = g.order() + g.size();
  Builder b(g, k, budget, out.trace);
  if (auto f = OddCycleConstruct(b, w).Run()) {
    out.family = std::move(*f);
    return out;
  }
  FallBack(out, g, k, false, budget);
  return out;
}

CycleExtraction CyclesBipartiteOracle(const Graph& g, int k,
                                      OracleBudget budget) {
  RequireBasics(g, k);
  if (!IsBipartite(g)) {
    Fail(ErrorKind::kHypothesisNotMet, "graph is not bipartite");
  }
  CycleExtraction out;
  out.branch = Branch::kBipartite;
  out.oracle_only = true;
  out.trace.measure = g.order() + g.size();
  auto f = OracleLengthConditionCycles(g, k, budget);
  if (!f) {
    Fail(ErrorKind::kInvalidWitness, "no family exists for " + Fingerprint(g, k));
  }
  out.trace.entries.push_back({"bipartite-oracle", Fingerprint(g, k),
                               "accept " + FamilyClassName(f->cls), 0});
  out.family = std::move(*f);
  return out;
}

CycleExtraction FindKCycles(const Graph& g, int k, OracleBudget budget) {
  RequireBasics(g, k);
  if (!IsThreeConnected(g)) return CyclesSeparated(g, k, budget);
  if (IsBipartite(g)) return CyclesBipartiteOracle(g, k, budget);
  // Witnesses in order; the first with a constructive answer wins.
  std::vector<OddCycleWitness> witnesses = NonSepInducedOddCycles(g);
  if (witnesses.empty()) {
    Fail(ErrorKind::kInvalidWitness,
         "no non-separating induced odd cycle in a 3-connected graph");
  }
  for (size_t i = 0; i < witnesses.size(); ++i) {
    CycleExtraction out;
    out.branch = Branch::kOddCycle;
    out.trace.measure = g.order() + g.size();
    Builder b(g, k, budget, out.trace);
    if (auto f = OddCycleConstruct(b, witnesses[i]).Run()) {
      out.family = std::move(*f);
      if (i > 0) {
        out.trace.entries.push_back(
            {"witness", Fingerprint(g, k),
             "odd cycle #" + std::to_string(i + 1), 0});
      }
      return out;
    }
  }
  return CyclesWithOddCycle(g, k, witnesses.front(), budget);
}

ResidueExtraction AllResiduesModK(const Graph& g, int k, OracleBudget budget) {
  if (k < 1) Fail(ErrorKind::kInvalidArgument, "k must be positive");
  if (k % 2 == 0) {
    Fail(ErrorKind::kHypothesisNotMet, "residue coverage needs odd k");
  }
  ResidueExtraction out;
  out.source = FindKCycles(g, k, budget);
  for (const CycleWitness& c : out.source.family.members) {
    out.by_residue.emplace(CycleLength(c) % k, c);
  }
  if (static_cast<int>(out.by_residue.size()) != k) {
    Fail(ErrorKind::kInvalidWitness, "family does not cover every residue");
  }
  return out;
}

std::set<int> CycleLengthSpectrum(const Graph& g, OracleBudget budget) {
  std::set<int> out;
  for (const auto& [len, c] : CycleSpectrum(g, budget)) out.insert(len);
  return out;
}

}  // namespace cycmod
