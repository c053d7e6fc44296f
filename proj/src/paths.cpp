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

#include "cycmod/paths.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cycmod/core.hpp"
#include "cycmod/decomposition.hpp"
#include "cycmod/error.hpp"

namespace cycmod {

std::string_view PathModeName(PathMode mode) {
  return mode == PathMode::kLength ? "length" : "flex";
}

int RequiredDegree(int k, PathMode mode) {
  return mode == PathMode::kLength ? 2 * k : 2 * k - 1;
}

int RootedMinDegree(const Graph& g, Vertex x, Vertex y) {
  int best = 1 << 29;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v != x && v != y) best = std::min(best, g.degree(v));
  }
  return best;
}

namespace {

std::vector<char> MaskOf(int n, const VertexSet& s) {
  std::vector<char> mask(n, 0);
  for (Vertex v : s) mask[v] = 1;
  return mask;
}

VertexSet AllVertices(int n) {
  std::vector<Vertex> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  return VertexSet(std::move(ids));
}

VertexSet NeighbourSet(const Graph& g, Vertex v) {
  return VertexSet(g.neighbors(v));
}

// Vertices outside `part` adjacent to some vertex of it.
VertexSet Boundary(const Graph& g, const VertexSet& part) {
  std::vector<Vertex> out;
  for (Vertex v : part) {
    for (Vertex w : g.neighbors(v)) {
      if (!part.contains(w)) out.push_back(w);
    }
  }
  return VertexSet(std::move(out));
}

bool Touches(const Graph& g, Vertex v, const VertexSet& set) {
  for (Vertex w : set) {
    if (g.adjacent(v, w)) return true;
  }
  return false;
}

bool SetsTouch(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (Vertex v : a) {
    if (Touches(g, v, b)) return true;
  }
  return false;
}

// a followed by b; a shared junction vertex is kept once.
PathWitness Glue(PathWitness a, const PathWitness& b) {
  if (b.empty()) return a;
  size_t from = (!a.empty() && a.back() == b.front()) ? 1 : 0;
  a.insert(a.end(), b.begin() + from, b.end());
  return a;
}

// heads[0] joined to every mid, then heads[1] joined to the last mid.
std::vector<PathWitness> Staircase(const PathWitness& h1, const PathWitness& h2,
                                   const std::vector<PathWitness>& mids,
                                   const PathWitness& tail = {}) {
  std::vector<PathWitness> out;
  for (const PathWitness& m : mids) out.push_back(Glue(Glue(h1, m), tail));
  if (!mids.empty()) out.push_back(Glue(Glue(h2, mids.back()), tail));
  return out;
}

std::optional<PathWitness> Route(const Graph& g, Vertex from, Vertex to,
                                 const VertexSet& allowed) {
  if (from == to) return PathWitness{from};
  std::vector<char> mask = MaskOf(g.order(), allowed);
  mask[from] = 1;
  mask[to] = 1;
  return ShortestPath(g, {from}, {to}, mask);
}

// A derived instance. Base vertices keep their identity; each terminal is a
// new vertex standing for a set of parent vertices and adjacent to every
// base vertex that sees the set.
struct Aux {
  Graph graph;
  std::vector<Vertex> to_parent;
  std::vector<VertexSet> terminals;
  int base_count = 0;

  Vertex Terminal(int i) const { return base_count + i; }
  Vertex Local(Vertex parent) const {
    auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
    if (it == to_parent.end() || *it != parent) return -1;
    return static_cast<Vertex>(it - to_parent.begin());
  }
};

Aux MakeAux(const Graph& g, const VertexSet& base,
            const std::vector<VertexSet>& terminals) {
  Aux aux;
  aux.to_parent = base.ids();
  aux.base_count = base.size();
  aux.terminals = terminals;
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < base.size(); ++i) local[aux.to_parent[i]] = i;
  std::vector<Edge> edges;
  for (int i = 0; i < base.size(); ++i) {
    for (Vertex w : g.neighbors(aux.to_parent[i])) {
      if (local[w] > i) edges.push_back({i, local[w]});
    }
  }
  for (int j = 0; j < static_cast<int>(terminals.size()); ++j) {
    for (int i = 0; i < base.size(); ++i) {
      if (Touches(g, aux.to_parent[i], terminals[j])) {
        edges.push_back({i, aux.base_count + j});
      }
    }
  }
  aux.graph = Graph::FromEdges(
      aux.base_count + static_cast<int>(terminals.size()), edges);
  return aux;
}

// Maps a path of the derived instance back to the parent. A terminal may
// only be an end; it becomes its smallest member adjacent to the next
// vertex along the path.
std::optional<PathWitness> Lift(const Graph& g, const Aux& aux,
                                const PathWitness& p) {
  PathWitness out;
  const int last = static_cast<int>(p.size()) - 1;
  for (int i = 0; i <= last; ++i) {
    const Vertex v = p[i];
    if (v < aux.base_count) {
      out.push_back(aux.to_parent[v]);
      continue;
    }
    if (last < 1 || (i != 0 && i != last)) return std::nullopt;
    const Vertex next = p[i == 0 ? 1 : last - 1];
    if (next >= aux.base_count) return std::nullopt;
    const Vertex anchor = aux.to_parent[next];
    Vertex pick = -1;
    for (Vertex m : aux.terminals[v - aux.base_count]) {
      if (g.adjacent(m, anchor)) {
        pick = m;
        break;
      }
    }
    if (pick < 0) return std::nullopt;
    out.push_back(pick);
  }
  return out;
}

std::string Fingerprint(const Graph& g, Vertex x, Vertex y, int k,
                        PathMode mode) {
  std::ostringstream out;
  out << "n" << g.order() << "m" << g.size() << "x" << x << "y" << y << "k"
      << k << (mode == PathMode::kLength ? "L" : "F");
  return out.str();
}

std::string MemoKey(const Graph& g, Vertex x, Vertex y, int k, PathMode mode) {
  std::string key = Fingerprint(g, x, y, k, mode);
  key.push_back(':');
  for (const Edge& e : g.edges()) {
    key += std::to_string(e.u);
    key.push_back('-');
    key += std::to_string(e.v);
    key.push_back(',');
  }
  return key;
}

struct BlockPart {
  VertexSet block;
  Vertex cut = -1;
};

// Blocks of g[part] in parent ids with their cut vertices.
struct Blocks {
  std::vector<VertexSet> blocks;
  std::vector<std::vector<Vertex>> cuts;
  VertexSet cut_vertices;
};

Blocks BlocksOf(const Graph& g, const VertexSet& part) {
  Subgraph sub = Induced(g, part);
  BlockCutTree tree = BlockCutTreeOf(sub.graph);
  Blocks out;
  for (int i = 0; i < static_cast<int>(tree.blocks.size()); ++i) {
    std::vector<Vertex> ids;
    for (Vertex v : tree.blocks[i]) ids.push_back(sub.to_parent[v]);
    out.blocks.push_back(VertexSet(std::move(ids)));
    std::vector<Vertex> cuts;
    for (Vertex c : tree.CutsOf(i)) cuts.push_back(sub.to_parent[c]);
    std::sort(cuts.begin(), cuts.end());
    out.cuts.push_back(std::move(cuts));
  }
  std::vector<Vertex> cv;
  for (Vertex c : tree.cut_vertices) cv.push_back(sub.to_parent[c]);
  out.cut_vertices = VertexSet(std::move(cv));
  return out;
}

// End blocks (exactly one cut vertex) of g[part].
std::vector<BlockPart> EndBlocksOf(const Blocks& b) {
  std::vector<BlockPart> out;
  for (size_t i = 0; i < b.blocks.size(); ++i) {
    if (b.cuts[i].size() == 1) out.push_back({b.blocks[i], b.cuts[i][0]});
  }
  return out;
}

struct Instance {
  const Graph& g;
  Vertex x;
  Vertex y;
  int k;
  PathMode mode;
  int depth;
};

class Extractor {
 public:
  explicit Extractor(ExtractionTrace& trace) : trace_(trace) {}

  std::optional<PathFamily> Solve(const Graph& g, Vertex x, Vertex y, int k,
                                  PathMode mode, int depth) {
    const std::string key = MemoKey(g, x, y, k, mode);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    ++trace_.calls;
    trace_.max_depth = std::max(trace_.max_depth, depth);
    std::optional<PathFamily> out;
    if (g.degree(x) > g.degree(y)) {
      out = Oriented({g, y, x, k, mode, depth});
      if (out) {
        for (PathWitness& p : out->members) p = Reversed(p);
      }
    } else {
      out = Oriented({g, x, y, k, mode, depth});
    }
    memo_.emplace(key, out);
    return out;
  }

 private:
  void Log(const Instance& in, std::string_view tag, std::string decision) {
    trace_.entries.push_back({std::string(tag),
                              Fingerprint(in.g, in.x, in.y, in.k, in.mode),
                              std::move(decision), in.depth});
  }

  bool ClassFits(const FamilyClass& cls, PathMode mode) const {
    if (cls.kind == FamilyKind::kLengthCondition) return true;
    return mode == PathMode::kFlex && cls.kind == FamilyKind::kSemiLength;
  }

  // Returns the family when the members are k valid (x, y)-paths of an
  // admissible class.
  std::optional<PathFamily> Accept(const Instance& in,
                                   std::vector<PathWitness> members,
                                   std::string_view tag) {
    if (static_cast<int>(members.size()) != in.k) return std::nullopt;
    for (const PathWitness& p : members) {
      if (p.size() < 3 || p.front() != in.x || p.back() != in.y ||
          !IsPathIn(in.g, p)) {
        return std::nullopt;
      }
    }
    PathFamily f = MakePathFamily(std::move(members));
    if (!ClassFits(f.cls, in.mode)) return std::nullopt;
    Log(in, tag, "accept " + FamilyClassName(f.cls));
    return f;
  }

  std::optional<PathFamily> Accept(const Instance& in,
                                   const PathFamily& family,
                                   std::string_view tag) {
    return Accept(in, family.members, tag);
  }

  // Solves a derived instance and lifts the answer to the parent ids.
  std::optional<std::vector<PathWitness>> Sub(const Instance& in,
                                              const Aux& aux, Vertex lx,
                                              Vertex ly, int k, PathMode mode,
                                              std::string_view tag) {
    if (k < 1 || lx < 0 || ly < 0 || lx == ly) return std::nullopt;
    const Graph& h = aux.graph;
    if (h.order() + h.size() >= in.g.order() + in.g.size()) {
      return std::nullopt;
    }
    if (!h.has_vertex(lx) || !h.has_vertex(ly) || h.order() < 3) {
      return std::nullopt;
    }
    if (!IsRooted2Connected(h, lx, ly)) return std::nullopt;
    if (RootedMinDegree(h, lx, ly) < RequiredDegree(k, mode)) {
      return std::nullopt;
    }
    std::optional<PathFamily> f = Solve(h, lx, ly, k, mode, in.depth + 1);
    if (!f) {
      ++trace_.inner_gaps;
      Log(in, tag, "gap in sub-instance");
      return std::nullopt;
    }
    std::vector<PathWitness> lifted;
    for (const PathWitness& p : f->members) {
      auto q = Lift(in.g, aux, p);
      if (!q) return std::nullopt;
      lifted.push_back(std::move(*q));
    }
    return lifted;
  }

  std::optional<PathFamily> Oriented(const Instance& in);
  std::optional<PathFamily> BaseCase(const Instance& in);
  std::optional<PathFamily> CutVertex(const Instance& in);
  std::optional<PathFamily> EdgeRemoval(const Instance& in);
  std::optional<PathFamily> TwoTriangles(const Instance& in);
  std::optional<PathFamily> Contraction(const Instance& in);
  std::optional<PathFamily> CoreCases(const Instance& in);

  ExtractionTrace& trace_;
  std::map<std::string, std::optional<PathFamily>> memo_;
};

std::optional<PathFamily> Extractor::Oriented(const Instance& in) {
  if (in.k == 1) return BaseCase(in);
  if (auto f = CutVertex(in)) return f;
  if (auto f = EdgeRemoval(in)) return f;
  if (in.mode == PathMode::kFlex && in.k == 2) {
    if (auto f = TwoTriangles(in)) return f;
  }
  if (!HasFourCycleThrough(in.g, in.x, in.y)) {
    return Contraction(in);
  }
  if (auto f = CoreCases(in)) return f;
  return Contraction(in);
}

std::optional<PathFamily> Extractor::BaseCase(const Instance& in) {
  Graph h = in.g.adjacent(in.x, in.y) ? in.g.WithoutEdge(in.x, in.y) : in.g;
  std::vector<char> all(h.order(), 1);
  auto p = ShortestPath(h, {in.x}, {in.y}, all);
  if (!p) return std::nullopt;
  return Accept(in, {*p}, "k=1");
}

// A cut vertex c splits G into G1 holding one root r and G2 holding the
// other; k paths from r to c in G1 are extended by one path through G2.
std::optional<PathFamily> Extractor::CutVertex(const Instance& in) {
  const Graph& g = in.g;
  if (IsTwoConnected(g)) return std::nullopt;
  Blocks blocks = BlocksOf(g, AllVertices(g.order()));
  for (Vertex c : blocks.cut_vertices) {
    if (c == in.x || c == in.y) continue;
    std::vector<char> allowed(g.order(), 1);
    allowed[c] = 0;
    for (const VertexSet& part : ComponentsWithin(g, allowed)) {
      if (part.size() < 2) continue;
      for (Vertex r : {in.x, in.y}) {
        const Vertex other = r == in.x ? in.y : in.x;
        if (!part.contains(r) || part.contains(other)) continue;
        Aux aux = MakeAux(g, part.With(c), {});
        auto fam = Sub(in, aux, aux.Local(r), aux.Local(c), in.k, in.mode,
                       "cut-vertex");
        if (!fam) continue;
        VertexSet outside = AllVertices(g.order()).Minus(part);
        auto bridge = Route(g, c, other, outside);
        if (!bridge) continue;
        std::vector<PathWitness> members;
        for (const PathWitness& p : *fam) {
          PathWitness full = Glue(p, *bridge);
          members.push_back(r == in.x ? full : Reversed(full));
        }
        if (auto f = Accept(in, members, "cut-vertex")) return f;
      }
    }
  }
  return std::nullopt;
}

std::optional<PathFamily> Extractor::EdgeRemoval(const Instance& in) {
  if (!in.g.adjacent(in.x, in.y)) return std::nullopt;
  Graph h = in.g.WithoutEdge(in.x, in.y);
  Aux aux = MakeAux(h, AllVertices(h.order()), {});
  auto fam = Sub(in, aux, in.x, in.y, in.k, in.mode, "drop-xy");
  if (!fam) return std::nullopt;
  return Accept(in, *fam, "drop-xy");
}

// Two common neighbours v1 ~ v2 of x and y give x v1 y and x v1 v2 y.
std::optional<PathFamily> Extractor::TwoTriangles(const Instance& in) {
  const Graph& g = in.g;
  for (Vertex v1 : g.neighbors(in.x)) {
    if (v1 == in.y || !g.adjacent(v1, in.y)) continue;
    for (Vertex v2 : g.neighbors(v1)) {
      if (v2 == in.x || v2 == in.y || !g.adjacent(v2, in.y)) continue;
      auto f = Accept(in, {{in.x, v1, in.y}, {in.x, v1, v2, in.y}},
                      "two-triangles");
      if (f) return f;
    }
  }
  return std::nullopt;
}

// No 4-cycle through x avoiding y: contract N(x) + x, or route through a
// component C of G - N(x) - {x, y} split at a partition of N(C).
std::optional<PathFamily> Extractor::Contraction(const Instance& in) {
  const Graph& g = in.g;
  const VertexSet nx = NeighbourSet(g, in.x).Without(in.y);
  if (nx.empty()) return std::nullopt;
  const VertexSet closed = nx.With(in.x);

  ::cycmod::Contraction star = ContractSet(g, closed);
  if (star.graph.order() >= 3 && star.Local(in.y) >= 0) {
    VertexSet block;
    const Vertex ly = star.Local(in.y);
    if (IsTwoConnected(star.graph)) {
      block = AllVertices(star.graph.order());
    } else if (IsConnected(star.graph)) {
      BlockCutTree tree = BlockCutTreeOf(star.graph);
      for (const VertexSet& b : tree.blocks) {
        if (b.contains(ly) && b.contains(star.merged)) block = b;
      }
    }
    if (block.size() >= 3) {
      std::vector<Vertex> base;
      for (Vertex v : block) {
        if (v != star.merged) base.push_back(star.to_parent[v]);
      }
      Aux aux = MakeAux(g, VertexSet(std::move(base)), {nx});
      auto fam = Sub(in, aux, aux.Terminal(0), aux.Local(in.y), in.k, in.mode,
                     "contract-N(x)");
      if (fam) {
        std::vector<PathWitness> members;
        for (const PathWitness& p : *fam) members.push_back(Glue({in.x}, p));
        if (auto f = Accept(in, members, "contract-N(x)")) return f;
      }
    }
  }

  std::vector<char> allowed(g.order(), 1);
  for (Vertex v : closed) allowed[v] = 0;
  allowed[in.y] = 0;
  const VertexSet ny = NeighbourSet(g, in.y);
  for (const VertexSet& part : ComponentsWithin(g, allowed)) {
    VertexSet attach = Boundary(g, part);
    if (attach.contains(in.y) || attach.size() < 2) continue;
    if (attach.Minus(nx).size() > 0) continue;
    const std::vector<Vertex>& ids = attach.ids();
    const int r = static_cast<int>(ids.size());
    if (r > 12) continue;
    for (int mask = 1; mask + 1 < (1 << r); ++mask) {
      std::vector<Vertex> s_ids, t_ids;
      for (int i = 0; i < r; ++i) {
        ((mask >> i) & 1 ? s_ids : t_ids).push_back(ids[i]);
      }
      VertexSet t_set(t_ids);
      if (t_set.Intersect(ny).empty()) continue;
      Aux aux = MakeAux(g, part, {VertexSet(s_ids), t_set});
      auto fam = Sub(in, aux, aux.Terminal(0), aux.Terminal(1), in.k, in.mode,
                     "contract-split");
      if (!fam) continue;
      std::vector<PathWitness> members;
      for (const PathWitness& p : *fam) {
        members.push_back(Glue(Glue({in.x}, p), {in.y}));
      }
      if (auto f = Accept(in, members, "contract-split")) return f;
    }
  }
  return std::nullopt;
}

std::optional<PathFamily> Extractor::CoreCases(const Instance& in) {
  const Graph& g = in.g;
  const Vertex x = in.x;
  const Vertex y = in.y;
  const int k = in.k;
  const PathMode mode = in.mode;
  std::optional<Core> found;
  try {
    found = FindCore(g, x, y);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (!found) return std::nullopt;
  const Core& core = *found;
  const int l = core.l;
  const VertexSet& S = core.s;
  const VertexSet& T = core.t;
  const VertexSet H = core.vertices();
  const VertexSet& C = core.component_c;
  const VertexSet s_minus_x = S.Without(x);
  const VertexSet all = AllVertices(g.order());

  auto guarded = [&](auto&& fn) -> std::optional<PathFamily> {
    try {
      return fn();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kBudgetExceeded) throw;
      return std::nullopt;
    }
  };
  auto extend = [&](Attachment a, std::vector<PathWitness> members,
                    Vertex s, std::string_view tag) {
    return guarded([&]() -> std::optional<PathFamily> {
      PathFamily fam = MakePathFamily(std::move(members));
      return Accept(in, ExtendFromCore(g, core, a, fam, k, s), tag);
    });
  };

  // Constructions inside H + C.
  bool t_sees_c = SetsTouch(g, T, C);
  if (l >= k || (l == k - 1 && t_sees_c)) {
    auto f = guarded([&] { return Accept(in, CorePathsBigL(g, core, k), "core-big-l"); });
    if (f) return f;
  }
  if (mode == PathMode::kFlex && l == k - 1) {
    auto f = guarded([&] {
      return Accept(in, CorePathsSemilength(g, core, k), "core-semilength");
    });
    if (f) return f;
  }
  if (mode == PathMode::kFlex) {
    // A T-T edge t1 t2 with both ends adjacent to y: x t1 y, then odd
    // ladders x..t1 finished by t1 t2 y.
    for (Vertex t1 : T) {
      if (!g.adjacent(t1, y)) continue;
      for (Vertex t2 : T) {
        if (t2 == t1 || !g.adjacent(t1, t2) || !g.adjacent(t2, y)) continue;
        std::vector<PathWitness> members = {{x, t1, y}};
        for (int j = 0; static_cast<int>(members.size()) < k; ++j) {
          auto lead = LadderPath(core, x, t1, 2 * j + 1, {t2});
          if (!lead) break;
          members.push_back(Glue(*lead, {t1, t2, y}));
        }
        if (auto f = Accept(in, members, "core-TT-edge")) return f;
      }
    }
  }

  std::vector<Vertex> exits;
  for (Vertex s : s_minus_x) {
    if (Touches(g, s, C)) exits.push_back(s);
  }

  // Components of G - V(H) other than C that touch T, attached back to H.
  std::vector<char> outside_h(g.order(), 1);
  for (Vertex v : H) outside_h[v] = 0;
  const std::vector<VertexSet> comps = ComponentsWithin(g, outside_h);
  for (Vertex s : exits) {
    const VertexSet rest_s = s_minus_x.Without(s);
    const VertexSet xs = {x, s};
    for (const VertexSet& d : comps) {
      if (d.contains(y) || !SetsTouch(g, d, T)) continue;
      const VertexSet t_in_d = Boundary(g, d).Intersect(T);
      // End block B of D away from T, x, s: (S - {x, s}, b)-paths plus a
      // route from T to b.
      if (l >= 2 && d.size() >= 2) {
        Blocks bd = BlocksOf(g, d);
        for (const BlockPart& bp : EndBlocksOf(bd)) {
          Aux aux = MakeAux(g, bp.block, {rest_s});
          auto fam = Sub(in, aux, aux.Terminal(0), aux.Local(bp.cut),
                         AttachmentCount(Attachment::kTSPaths, l, k), mode,
                         "core-end-block-TS");
          if (!fam) continue;
          VertexSet lane = d.Minus(bp.block).With(bp.cut).Union(T);
          std::vector<char> mask = MaskOf(g.order(), lane);
          auto to_b = ShortestPath(g, T.ids(), {bp.cut}, mask);
          if (!to_b) continue;
          std::vector<PathWitness> members;
          for (const PathWitness& p : *fam) {
            members.push_back(Glue(*to_b, Reversed(p)));
          }
          if (auto f = extend(Attachment::kTSPaths, members, s,
                              "core-end-block-TS")) {
            return f;
          }
        }
      }
      if (SetsTouch(g, d, xs)) {
        Aux aux = MakeAux(g, d, {T, xs});
        auto fam = Sub(in, aux, aux.Terminal(0), aux.Terminal(1),
                       AttachmentCount(Attachment::kTxSPaths, l, k), mode,
                       "core-TxS");
        if (fam) {
          if (auto f = extend(Attachment::kTxSPaths, *fam, s, "core-TxS")) {
            return f;
          }
        }
      }
      if (t_in_d.size() == 1 && l >= 2) {
        const Vertex t = t_in_d.front();
        Aux aux = MakeAux(g, d, {VertexSet{t}, rest_s});
        auto fam = Sub(in, aux, aux.Terminal(0), aux.Terminal(1),
                       AttachmentCount(Attachment::kTSPaths, l, k), mode,
                       "core-single-t");
        if (fam) {
          if (auto f = extend(Attachment::kTSPaths, *fam, s, "core-single-t")) {
            return f;
          }
        }
      }
      if (t_in_d.size() >= 2) {
        for (Vertex t : t_in_d) {
          Aux aux = MakeAux(g, d, {VertexSet{t}, T.Without(t)});
          auto fam = Sub(in, aux, aux.Terminal(0), aux.Terminal(1),
                         AttachmentCount(Attachment::kTPaths, l, k), mode,
                         "core-T-paths");
          if (!fam) continue;
          if (auto f = extend(Attachment::kTPaths, *fam, s, "core-T-paths")) {
            return f;
          }
        }
      }
    }
  }

  if (C.size() == 1) {
    // C = {y}.
    if (T.size() == 2) {
      const Vertex t1 = T.ids()[0];
      const Vertex t2 = T.ids()[1];
      Aux aux = MakeAux(g, all.Without(x).Without(y), {});
      auto fam = Sub(in, aux, aux.Local(t1), aux.Local(t2), k, mode,
                     "core-two-t");
      if (fam) {
        std::vector<PathWitness> members;
        for (const PathWitness& p : *fam) {
          members.push_back(Glue(Glue({x}, p), {y}));
        }
        if (auto f = Accept(in, members, "core-two-t")) return f;
      }
    }
    for (Vertex s : s_minus_x) {
      for (Vertex t : T) {
        const VertexSet kept = all.Without(s).Without(t);
        // G - {s, t} still rooted 2-connected: k-1 paths plus a detour.
        {
          Aux aux = MakeAux(g, kept, {});
          auto fam = Sub(in, aux, aux.Local(x), aux.Local(y), k - 1, mode,
                         "core-drop-st");
          if (fam) {
            std::vector<PathWitness> members = *fam;
            PathWitness longest = fam->back();
            longest.pop_back();
            members.push_back(Glue(longest, {s, t, y}));
            if (auto f = Accept(in, members, "core-drop-st")) return f;
          }
        }
        std::vector<char> mask = MaskOf(g.order(), kept);
        const std::vector<VertexSet> parts = ComponentsWithin(g, mask);
        for (const VertexSet& d : parts) {
          if (!d.Intersect(H).empty() || d.contains(y)) continue;
          Aux aux = MakeAux(g, d.With(s).With(t), {});
          auto fam = Sub(in, aux, aux.Local(s), aux.Local(t), k, mode,
                         "core-st-component");
          if (!fam) continue;
          for (Vertex t2 : T) {
            if (t2 == t) continue;
            std::vector<PathWitness> members;
            for (const PathWitness& p : *fam) {
              members.push_back(Glue(Glue({x}, Reversed(p)), {t2, y}));
            }
            if (auto f = Accept(in, members, "core-st-component")) return f;
          }
        }
        if (parts.size() != 1) continue;
        Blocks bg = BlocksOf(g, kept);
        const VertexSet hy = H.With(y);
        for (const BlockPart& bp : EndBlocksOf(bg)) {
          const VertexSet inner = bp.block.Without(bp.cut);
          if (!inner.Intersect(hy).empty()) continue;
          VertexSet targets = H.Without(x).Without(s).Without(t);
          VertexSet lane = kept.Minus(inner).Minus(hy).With(bp.cut);
          std::vector<char> lmask = MaskOf(g.order(), lane.Union(targets));
          auto to_a = ShortestPath(g, {bp.cut}, targets.ids(), lmask);
          if (!to_a) continue;
          const Vertex a = to_a->back();
          const bool a_in_t = T.contains(a);
          // Route through s.
          {
            Aux aux = MakeAux(g, bp.block.With(s), {});
            auto fam = Sub(in, aux, aux.Local(s), aux.Local(bp.cut), k, mode,
                           "core-block-s");
            if (fam) {
              for (Vertex t2 : T) {
                if (t2 == t || t2 == a) continue;
                PathWitness finish =
                    a_in_t ? Glue(*to_a, {y}) : Glue(*to_a, {t2, y});
                std::vector<PathWitness> members;
                for (const PathWitness& p : *fam) {
                  members.push_back(Glue(Glue({x, t}, p), finish));
                }
                if (auto f = Accept(in, members, "core-block-s")) return f;
                if (a_in_t) break;
              }
            }
          }
          // Route through t with k-1 paths and a detour.
          {
            Aux aux = MakeAux(g, bp.block.With(t), {});
            auto fam = Sub(in, aux, aux.Local(t), aux.Local(bp.cut), k - 1,
                           mode, "core-block-t");
            if (!fam) continue;
            for (Vertex t1 : T) {
              if (t1 == t || t1 == a) continue;
              for (Vertex t2 : T) {
                if (t2 == t || t2 == t1 || t2 == a) continue;
                std::vector<PathWitness> members;
                for (const PathWitness& p : *fam) {
                  PathWitness head = Glue(Glue({x}, p), *to_a);
                  members.push_back(a_in_t ? Glue(head, {y})
                                           : Glue(head, {t1, y}));
                }
                PathWitness head = Glue(Glue({x}, fam->back()), *to_a);
                members.push_back(a_in_t ? Glue(head, {s, t1, y})
                                         : Glue(head, {t1, s, t2, y}));
                if (auto f = Accept(in, members, "core-block-t")) return f;
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  // |C| >= 2.
  {
    Aux aux = MakeAux(g, C.With(x), {});
    auto fam = Sub(in, aux, aux.Local(x), aux.Local(y), k, mode, "core-C+x");
    if (fam) {
      if (auto f = Accept(in, *fam, "core-C+x")) return f;
    }
  }

  Blocks bc = BlocksOf(g, C);
  std::vector<BlockPart> feasible;
  std::optional<BlockPart> by_block;
  for (const BlockPart& bp : EndBlocksOf(bc)) {
    if (bp.block.Without(bp.cut).contains(y)) {
      by_block = bp;
    } else {
      feasible.push_back(bp);
    }
  }
  auto route_to_y = [&](const BlockPart& bp) {
    return Route(g, bp.cut, y, C.Minus(bp.block).With(bp.cut));
  };

  // (T, y)-paths through a block of C.
  {
    std::vector<BlockPart> tries;
    if (bc.cut_vertices.empty()) tries.push_back({C, y});
    for (const BlockPart& bp : feasible) tries.push_back(bp);
    const int count = AttachmentCount(Attachment::kTyPaths, l, k);
    for (const BlockPart& bp : tries) {
      Aux aux = MakeAux(g, bp.block, {T});
      auto fam = Sub(in, aux, aux.Terminal(0), aux.Local(bp.cut), count, mode,
                     "core-Ty");
      if (!fam) continue;
      auto tail = bp.cut == y ? std::optional<PathWitness>(PathWitness{y})
                              : route_to_y(bp);
      if (!tail) continue;
      std::vector<PathWitness> members;
      for (const PathWitness& p : *fam) members.push_back(Glue(p, *tail));
      if (auto f = extend(Attachment::kTyPaths, members, -1, "core-Ty")) {
        return f;
      }
    }
  }

  for (const BlockPart& bp : feasible) {
    auto tail = route_to_y(bp);
    if (!tail) continue;
    {
      Aux aux = MakeAux(g, bp.block.With(x), {});
      auto fam = Sub(in, aux, aux.Local(x), aux.Local(bp.cut), k, mode,
                     "core-block-x");
      if (fam) {
        std::vector<PathWitness> members;
        for (const PathWitness& p : *fam) members.push_back(Glue(p, *tail));
        if (auto f = Accept(in, members, "core-block-x")) return f;
      }
    }
    Aux aux = MakeAux(g, bp.block, {s_minus_x});
    if (l >= 2) {
      auto fam = Sub(in, aux, aux.Terminal(0), aux.Local(bp.cut),
                     AttachmentCount(Attachment::kSyPaths, l, k), mode,
                     "core-Sy");
      if (fam) {
        std::vector<PathWitness> members;
        for (const PathWitness& p : *fam) members.push_back(Glue(p, *tail));
        if (auto f = extend(Attachment::kSyPaths, members, -1, "core-Sy")) {
          return f;
        }
      }
    } else {
      auto fam = Sub(in, aux, aux.Terminal(0), aux.Local(bp.cut), k, mode,
                     "core-block-s");
      if (fam) {
        for (Vertex t : T) {
          std::vector<PathWitness> members;
          for (const PathWitness& p : *fam) {
            members.push_back(Glue(Glue({x, t}, p), *tail));
          }
          if (auto f = Accept(in, members, "core-block-s")) return f;
        }
      }
    }
  }

  if (l != 1 || k < 3 || feasible.empty()) return std::nullopt;
  const Vertex s = s_minus_x.front();

  // k-1 length-condition (v, b)-paths inside B + v.
  std::map<std::pair<int, Vertex>, std::optional<std::vector<PathWitness>>>
      fam_cache;
  auto block_family = [&](int i, Vertex v)
      -> const std::optional<std::vector<PathWitness>>& {
    auto key = std::make_pair(i, v);
    auto it = fam_cache.find(key);
    if (it == fam_cache.end()) {
      const BlockPart& bp = feasible[i];
      Aux aux = MakeAux(g, bp.block.With(v), {});
      it = fam_cache
               .emplace(key, Sub(in, aux, aux.Local(v), aux.Local(bp.cut),
                                 k - 1, PathMode::kLength, "core-block-family"))
               .first;
    }
    return it->second;
  };

  VertexSet c_trim = C;
  for (const BlockPart& bp : feasible) {
    c_trim = c_trim.Minus(bp.block.Without(bp.cut));
  }
  VertexSet u_set;
  {
    std::vector<Vertex> ids;
    for (Vertex v : C) {
      if (v != y && Touches(g, v, T)) ids.push_back(v);
    }
    u_set = VertexSet(std::move(ids));
  }
  const int h = static_cast<int>(feasible.size());

  // Disjoint routes b_i -> u and b_j -> y in C'.
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < h; ++j) {
      if (i == j) continue;
      const auto& pi = block_family(i, x);
      const auto& qj = block_family(j, s);
      if (!pi || !qj || pi->size() < 2) continue;
      for (Vertex u : u_set) {
        if (!c_trim.contains(u)) continue;
        auto pair = TwoDisjointPaths(g, feasible[i].cut, feasible[j].cut, u, y,
                                     MaskOf(g.order(), c_trim));
        if (!pair || pair->first.back() != u) continue;
        for (Vertex t : T) {
          if (!g.adjacent(t, u)) continue;
          PathWitness mid = Glue(pair->first, {t});
          std::vector<PathWitness> members =
              Staircase(Glue((*pi)[0], mid), Glue((*pi)[1], mid), *qj,
                        pair->second);
          if (auto f = Accept(in, members, "core-disjoint-routes")) return f;
        }
      }
    }
  }

  // A vertex v of C - y with two T-neighbours and a route around it.
  for (Vertex v : C) {
    if (v == y) continue;
    std::vector<Vertex> tv;
    for (Vertex t : T) {
      if (g.adjacent(v, t)) tv.push_back(t);
    }
    if (tv.size() < 2) continue;
    for (int i = 0; i < h; ++i) {
      const BlockPart& bp = feasible[i];
      if (bp.block.Without(bp.cut).contains(v) || bp.cut == v) continue;
      auto around = Route(g, bp.cut, y,
                          C.Minus(bp.block).With(bp.cut).Without(v));
      if (!around) continue;
      const auto& qi = block_family(i, s);
      if (!qi) continue;
      for (Vertex t1 : tv) {
        for (Vertex t2 : tv) {
          if (t1 == t2) continue;
          std::vector<PathWitness> members;
          for (const PathWitness& q : *qi) {
            members.push_back(Glue(Glue({x, t1}, q), *around));
          }
          members.push_back(Glue(Glue({x, t2, v, t1}, qi->back()), *around));
          if (auto f = Accept(in, members, "core-heavy-vertex")) return f;
        }
      }
    }
  }

  if (!by_block) return std::nullopt;
  const Vertex by = by_block->cut;
  const VertexSet by_inner = by_block->block.Without(by);

  for (int i = 0; i < h; ++i) {
    const auto& pi = block_family(i, x);
    if (!pi || pi->size() < 2) continue;
    const BlockPart& b1 = feasible[i];
    auto z = Route(g, b1.cut, by, c_trim.Minus(by_inner));
    if (!z) continue;
    std::vector<PathWitness> lead;
    for (const PathWitness& p : *pi) lead.push_back(Glue(p, *z));

    if (by_block->block.size() >= 3) {
      Aux aux = MakeAux(g, by_block->block, {});
      auto fam = Sub(in, aux, aux.Local(by), aux.Local(y), k - 1, mode,
                     "core-y-block");
      if (fam) {
        auto members = Staircase(lead[0], lead[1], *fam);
        if (auto f = Accept(in, members, "core-y-block")) return f;
      }
    }
    if (g.adjacent(by, y)) {
      if (mode == PathMode::kFlex) {
        for (Vertex v : H.Without(x)) {
          if (!g.adjacent(v, y) || !g.adjacent(v, by)) continue;
          std::vector<PathWitness> members;
          for (const PathWitness& p : lead) members.push_back(Glue(p, {y}));
          members.push_back(Glue(lead.back(), {v, y}));
          if (auto f = Accept(in, members, "core-by-common")) return f;
        }
      }
      // Small closing constructions around b_y.
      std::vector<std::vector<PathWitness>> options;
      for (Vertex t1 : T) {
        for (Vertex t2 : T) {
          if (t1 == t2 || !g.adjacent(t1, t2)) continue;
          if (g.adjacent(t1, by) && g.adjacent(t2, y)) {
            options.push_back({Glue(lead[0], {y}), Glue(lead[1], {y}),
                               Glue(lead[1], {t1, t2, y})});
          }
        }
      }
      for (Vertex a : H.Without(x)) {
        if (!g.adjacent(a, y)) continue;
        for (Vertex t : T) {
          if (t == a || !g.adjacent(t, by) || !g.adjacent(t, a)) continue;
          options.push_back({Glue(lead[0], {y}), Glue(lead[1], {y}),
                             Glue(lead[1], {t, a, y})});
        }
        if (g.adjacent(by, s) && a != s && g.adjacent(s, a)) {
          options.push_back({Glue(lead[0], {y}), Glue(lead[1], {y}),
                             Glue(lead[1], {s, a, y})});
        }
      }
      if (mode == PathMode::kFlex) {
        for (Vertex a : T) {
          if (!g.adjacent(a, y)) continue;
          for (Vertex t1 : T) {
            for (Vertex t2 : T) {
              if (t1 == t2 || t1 == a || t2 == a) continue;
              if (!g.adjacent(a, t1) || !g.adjacent(t1, y) ||
                  !g.adjacent(t2, y)) {
                continue;
              }
              options.push_back({{x, a, y}, {x, a, t1, y},
                                 {x, a, t1, s, t2, y}});
            }
          }
        }
        if (g.adjacent(by, x)) {
          for (Vertex t1 : T) {
            for (Vertex t2 : T) {
              if (t1 == t2 || !g.adjacent(t1, by) || !g.adjacent(t2, by)) {
                continue;
              }
              options.push_back({{x, by, y}, {x, t1, by, y},
                                 {x, t1, s, t2, by, y}});
            }
          }
        }
      }
      for (auto& members : options) {
        if (static_cast<int>(members.size()) != k) continue;
        if (auto f = Accept(in, members, "core-close-by")) return f;
      }
    }

    // Route through a second feasible block and back into H.
    for (int j = 0; j < h; ++j) {
      if (j == i) continue;
      const auto& qj = block_family(j, s);
      if (!qj) continue;
      auto r = Route(g, b1.cut, feasible[j].cut, c_trim.Without(y));
      if (!r) continue;
      for (Vertex a : H.Without(x)) {
        if (!g.adjacent(a, y)) continue;
        PathWitness to_a;
        if (a == s) {
          to_a = {s};
        } else if (T.contains(a)) {
          to_a = {s, a};
        } else {
          for (Vertex t : T) {
            to_a = {s, t, a};
            break;
          }
        }
        std::vector<PathWitness> mids;
        for (const PathWitness& q : *qj) {
          mids.push_back(Glue(Reversed(q), Glue(to_a, {y})));
        }
        auto members = Staircase(Glue((*pi)[0], *r), Glue((*pi)[1], *r), mids);
        if (auto f = Accept(in, members, "core-two-blocks")) return f;
      }
    }

    // The block W next to B_y and its other cut vertex w.
    for (size_t wi = 0; wi < bc.blocks.size(); ++wi) {
      const VertexSet& w_block = bc.blocks[wi];
      if (w_block == by_block->block || !w_block.contains(by)) continue;
      if (w_block.size() < 3) continue;
      for (Vertex w : bc.cuts[wi]) {
        if (w == by) continue;
        Aux aux = MakeAux(g, w_block, {});
        auto fam = Sub(in, aux, aux.Local(w), aux.Local(by), k - 1, mode,
                       "core-W");
        if (!fam) continue;
        VertexSet lane = C.Minus(b1.block.Without(b1.cut))
                             .Minus(w_block.Without(w))
                             .Minus(by_inner);
        auto zw = Route(g, b1.cut, w, lane);
        if (!zw) continue;
        auto members = Staircase(Glue((*pi)[0], *zw), Glue((*pi)[1], *zw),
                                 *fam, PathWitness{by, y});
        if (auto f = Accept(in, members, "core-W")) return f;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

PathExtraction FindPaths(const Graph& g, Vertex x, Vertex y, int k,
                         PathMode mode, OracleBudget budget) {
  if (k < 1) Fail(ErrorKind::kInvalidArgument, "k must be positive");
  if (!g.has_vertex(x) || !g.has_vertex(y) || x == y) {
    Fail(ErrorKind::kInvalidArgument, "roots must be two distinct vertices");
  }
  if (!IsRooted2Connected(g, x, y)) {
    Fail(ErrorKind::kHypothesisNotMet, "(G, x, y) is not rooted 2-connected");
  }
  const int need = RequiredDegree(k, mode);
  const int have = RootedMinDegree(g, x, y);
  if (have < need) {
    Fail(ErrorKind::kHypothesisNotMet,
         "internal minimum degree " + std::to_string(have) + " < " +
             std::to_string(need));
  }
  PathExtraction out;
  out.trace.measure = g.order() + g.size();
  Extractor extractor(out.trace);
  std::optional<PathFamily> f = extractor.Solve(g, x, y, k, mode, 0);
  if (f) {
    out.family = std::move(*f);
    return out;
  }
  out.trace.constructive_gap = true;
  out.trace.entries.push_back({"oracle", Fingerprint(g, x, y, k, mode),
                               "fallback", 0});
  auto oracle = OraclePaths(g, x, y, k,
                            mode == PathMode::kLength
                                ? OracleMode::kLength
                                : OracleMode::kLengthOrSemi,
                            budget);
  if (!oracle) {
    Fail(ErrorKind::kInvalidWitness, "no family exists for " +
                                         Fingerprint(g, x, y, k, mode));
  }
  out.family = std::move(*oracle);
  return out;
}

}  // namespace cycmod
