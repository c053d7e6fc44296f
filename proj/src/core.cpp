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

#include "cycmod/core.hpp"

#include <algorithm>

#include "cycmod/decomposition.hpp"
#include "cycmod/error.hpp"

namespace cycmod {

namespace {

int CommonNeighbours(const Graph& g, Vertex a, Vertex b, Vertex skip) {
  int count = 0;
  for (Vertex w : g.neighbors(a)) {
    if (w != skip && g.adjacent(w, b)) ++count;
  }
  return count;
}

VertexSet ComponentHolding(const Graph& g, const VertexSet& removed,
                           Vertex y) {
  std::vector<char> allowed(g.order(), 1);
  for (Vertex v : removed) allowed[v] = 0;
  for (const VertexSet& part : ComponentsWithin(g, allowed)) {
    if (part.contains(y)) return part;
  }
  return {};
}

struct Candidate {
  std::vector<Vertex> s;  // sorted, includes x
  std::vector<Vertex> t;
  int c_size = 0;
  int attach = 0;
  VertexSet c;
};

// Enumerates S = {x} + subsets of `pool` with exactly `extra` members whose
// common neighbourhood (minus y) has at least |S| vertices.
class CoreSearch {
 public:
  CoreSearch(const Graph& g, Vertex x, Vertex y, std::vector<Vertex> pool)
      : g_(g), x_(x), y_(y), pool_(std::move(pool)) {}

  std::vector<Candidate> Run(int extra) {
    found_.clear();
    std::vector<Vertex> common;
    for (Vertex w : g_.neighbors(x_)) {
      if (w != y_) common.push_back(w);
    }
    std::vector<Vertex> chosen = {x_};
    Grow(0, extra, chosen, common);
    return std::move(found_);
  }

 private:
  void Grow(size_t from, int extra, std::vector<Vertex>& chosen,
            const std::vector<Vertex>& common) {
    const int target = static_cast<int>(chosen.size()) + extra;
    if (static_cast<int>(common.size()) < target) return;
    if (extra == 0) {
      Candidate c;
      c.s = chosen;
      std::sort(c.s.begin(), c.s.end());
      c.t = common;
      found_.push_back(std::move(c));
      return;
    }
    for (size_t i = from; i < pool_.size(); ++i) {
      if (pool_.size() - i < static_cast<size_t>(extra)) break;
      Vertex v = pool_[i];
      std::vector<Vertex> next;
      for (Vertex w : common) {
        if (g_.adjacent(v, w)) next.push_back(w);
      }
      chosen.push_back(v);
      Grow(i + 1, extra - 1, chosen, next);
      chosen.pop_back();
    }
  }

  const Graph& g_;
  Vertex x_;
  Vertex y_;
  std::vector<Vertex> pool_;
  std::vector<Candidate> found_;
};

}  // namespace

bool HasFourCycleThrough(const Graph& g, Vertex x, Vertex y) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == x || v == y) continue;
    if (CommonNeighbours(g, x, v, y) >= 2) return true;
  }
  return false;
}

std::optional<Core> FindCore(const Graph& g, Vertex x, Vertex y) {
  if (!IsRooted2Connected(g, x, y)) {
    Fail(ErrorKind::kNotRooted2Connected, "core search needs (G, x, y) rooted 2-connected");
  }
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v != x && v != y && CommonNeighbours(g, x, v, y) >= 2) pool.push_back(v);
  }
  if (pool.empty()) return std::nullopt;
  CoreSearch search(g, x, y, pool);
  const int max_extra =
      std::min<int>(static_cast<int>(pool.size()), (g.order() - 1) / 2 - 1);
  for (int extra = std::max(max_extra, 1); extra >= 1; --extra) {
    std::vector<Candidate> found = search.Run(extra);
    if (found.empty()) continue;
    Candidate* best = nullptr;
    for (Candidate& c : found) {
      VertexSet h = VertexSet(c.s).Union(VertexSet(c.t));
      c.c = ComponentHolding(g, h, y);
      c.c_size = c.c.size();
      c.attach = 0;
      for (Vertex v : c.s) {
        for (Vertex w : g.neighbors(v)) {
          if (c.c.contains(w)) {
            ++c.attach;
            break;
          }
        }
      }
      if (best == nullptr || c.c_size > best->c_size ||
          (c.c_size == best->c_size &&
           (c.attach < best->attach ||
            (c.attach == best->attach && c.s < best->s)))) {
        best = &c;
      }
    }
    Core core;
    core.s = VertexSet(best->s);
    core.t = VertexSet(best->t);
    core.l = core.s.size() - 1;
    core.x = x;
    core.y = y;
    core.component_c = best->c;
    return core;
  }
  return std::nullopt;
}

CoreReport VerifyCore(const Graph& g, const Core& core) {
  auto fail = [](int condition, Vertex witness, std::string detail) {
    return CoreReport{false, condition, witness, std::move(detail)};
  };
  for (Vertex v : core.s.Union(core.t)) {
    if (!g.has_vertex(v)) return fail(1, v, "vertex outside the graph");
  }
  // Membership first: a misplaced root makes the other checks meaningless.
  if (!core.s.contains(core.x)) return fail(2, core.x, "x is not in S");
  if (core.s.contains(core.y) || core.t.contains(core.y)) {
    return fail(2, core.y, "y lies in H");
  }
  if (!core.s.Intersect(core.t).empty()) {
    return fail(1, core.s.Intersect(core.t).front(), "S and T overlap");
  }
  if (core.s.size() < 2 || core.s.size() != core.l + 1) {
    return fail(1, core.x, "|S| must be l+1 >= 2");
  }
  if (core.t.size() < core.s.size()) {
    return fail(1, core.t.empty() ? core.x : core.t.front(), "|T| < |S|");
  }
  for (Vertex a : core.s) {
    for (Vertex b : core.t) {
      if (!g.adjacent(a, b)) {
        return fail(1, b, "missing edge " + std::to_string(a) + "-" +
                              std::to_string(b));
      }
    }
  }
  const VertexSet h = core.s.Union(core.t);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (h.contains(v) || v == core.y) continue;
    int into_s = 0;
    for (Vertex w : core.s) into_s += g.adjacent(v, w);
    if (into_s > core.l) return fail(3, v, "too many neighbours in S");
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (core.s.contains(v) || v == core.y) continue;
    int into_t = 0;
    for (Vertex w : core.t) into_t += (w != v && g.adjacent(v, w));
    if (into_t > core.l + 1) return fail(4, v, "too many neighbours in T");
  }
  return {};
}

std::optional<PathWitness> LadderPath(const Core& core, Vertex from, Vertex to,
                                      int length,
                                      const std::vector<Vertex>& avoid) {
  const bool from_s = core.s.contains(from);
  const bool to_s = core.s.contains(to);
  if ((!from_s && !core.t.contains(from)) || (!to_s && !core.t.contains(to))) {
    return std::nullopt;
  }
  if (from == to || length < 1) return std::nullopt;
  if ((from_s == to_s) != (length % 2 == 0)) return std::nullopt;
  auto usable = [&](const VertexSet& side) {
    std::vector<Vertex> out;
    for (Vertex v : side) {
      if (v == from || v == to) continue;
      if (std::find(avoid.begin(), avoid.end(), v) != avoid.end()) continue;
      out.push_back(v);
    }
    return out;
  };
  std::vector<Vertex> free_s = usable(core.s);
  std::vector<Vertex> free_t = usable(core.t);
  size_t next_s = 0;
  size_t next_t = 0;
  PathWitness path = {from};
  bool on_s = !from_s;
  for (int i = 1; i < length; ++i) {
    if (on_s) {
      if (next_s >= free_s.size()) return std::nullopt;
      path.push_back(free_s[next_s++]);
    } else {
      if (next_t >= free_t.size()) return std::nullopt;
      path.push_back(free_t[next_t++]);
    }
    on_s = !on_s;
  }
  path.push_back(to);
  return path;
}

std::optional<PathWitness> ExitThroughC(const Graph& g, const Core& core,
                                        Vertex v) {
  std::vector<char> allowed(g.order(), 0);
  for (Vertex c : core.component_c) allowed[c] = 1;
  allowed[v] = 1;
  return ShortestPath(g, {v}, {core.y}, allowed);
}

namespace {

bool SeesC(const Graph& g, const Core& core, Vertex v) {
  for (Vertex w : g.neighbors(v)) {
    if (core.component_c.contains(w)) return true;
  }
  return false;
}

PathFamily Finish(const Graph& g, const Core& core,
                  std::vector<PathWitness> paths) {
  for (const PathWitness& p : paths) {
    if (!IsPathIn(g, p) || p.front() != core.x || p.back() != core.y) {
      Fail(ErrorKind::kInvalidWitness, "core construction produced a bad path");
    }
  }
  return MakePathFamily(std::move(paths));
}

}  // namespace

PathFamily CorePathsBigL(const Graph& g, const Core& core, int k) {
  if (k < 1) Fail(ErrorKind::kHypothesisNotMet, "k must be positive");
  const int l = core.l;
  bool t_sees_c = false;
  for (Vertex t : core.t) t_sees_c = t_sees_c || SeesC(g, core, t);
  if (l < 1 || !(l >= k || (l == k - 1 && t_sees_c))) {
    Fail(ErrorKind::kHypothesisNotMet, "needs l >= k, or l = k-1 with E(T, C) nonempty");
  }
  std::vector<Vertex> exits;
  for (Vertex t : core.t) {
    if (SeesC(g, core, t)) exits.push_back(t);
  }
  if (l >= k) {
    for (Vertex s : core.s) {
      if (s != core.x && SeesC(g, core, s)) exits.push_back(s);
    }
  }
  for (Vertex h : exits) {
    std::optional<PathWitness> exit = ExitThroughC(g, core, h);
    if (!exit) continue;
    const int base = core.t.contains(h) ? 1 : 2;
    std::vector<PathWitness> paths;
    for (int i = 0; i < k; ++i) {
      auto inside = LadderPath(core, core.x, h, base + 2 * i, {});
      if (!inside) break;
      paths.push_back(Join(*inside, *exit));
    }
    if (static_cast<int>(paths.size()) == k) return Finish(g, core, paths);
  }
  Fail(ErrorKind::kHypothesisNotMet, "no exit from H into C");
}

PathFamily CorePathsSemilength(const Graph& g, const Core& core, int k) {
  const int l = core.l;
  if (l < 1 || l != k - 1) Fail(ErrorKind::kHypothesisNotMet, "needs l = k-1");
  Vertex t1 = -1;
  Vertex t2 = -1;
  for (Vertex a : core.t) {
    for (Vertex b : core.t) {
      if (t1 < 0 && a < b && g.adjacent(a, b)) {
        t1 = a;
        t2 = b;
      }
    }
  }
  if (t1 < 0) Fail(ErrorKind::kHypothesisNotMet, "G[T] has no edge");
  for (Vertex s : core.s) {
    if (s == core.x || !SeesC(g, core, s)) continue;
    std::optional<PathWitness> exit = ExitThroughC(g, core, s);
    if (!exit) continue;
    std::vector<PathWitness> paths;
    for (int i = 1; i <= l; ++i) {
      auto inside = LadderPath(core, core.x, s, 2 * i, {});
      if (inside) paths.push_back(Join(*inside, *exit));
    }
    auto tail = LadderPath(core, t2, s, 2 * l - 1, {core.x, t1});
    if (!tail || static_cast<int>(paths.size()) != l) continue;
    PathWitness odd = {core.x, t1};
    odd = Join(Join(odd, PathWitness{t1, t2}), *tail);
    paths.push_back(Join(odd, *exit));
    return Finish(g, core, paths);
  }
  Fail(ErrorKind::kHypothesisNotMet, "no vertex of S - x sees C");
}

std::string_view AttachmentName(Attachment a) {
  switch (a) {
    case Attachment::kTPaths:
      return "TPaths";
    case Attachment::kTxSPaths:
      return "TxSPaths";
    case Attachment::kTSPaths:
      return "TSPaths";
    case Attachment::kTyPaths:
      return "TyPaths";
    case Attachment::kSyPaths:
      return "SyPaths";
  }
  return "?";
}

int AttachmentCount(Attachment a, int l, int k) {
  switch (a) {
    case Attachment::kTPaths:
    case Attachment::kTxSPaths:
    case Attachment::kSyPaths:
      return k - l + 1;
    case Attachment::kTSPaths:
      return k - l + 2;
    case Attachment::kTyPaths:
      return k - l;
  }
  return 0;
}

PathFamily ExtendFromCore(const Graph& g, const Core& core, Attachment a,
                          const PathFamily& family, int k, Vertex s) {
  const int l = core.l;
  const int need = AttachmentCount(a, l, k);
  if (need < 1 || family.size() != need) {
    Fail(ErrorKind::kHypothesisNotMet,
         std::string(AttachmentName(a)) + " needs " + std::to_string(need) +
             " paths, got " + std::to_string(family.size()));
  }
  if (a == Attachment::kTSPaths && l < 2) {
    Fail(ErrorKind::kHypothesisNotMet, "S - {x, s} is empty");
  }
  FamilyClass cls = Classify(family.lengths(), ClassContext::kPaths);
  if (cls.kind != FamilyKind::kLengthCondition &&
      cls.kind != FamilyKind::kSemiLength) {
    Fail(ErrorKind::kHypothesisNotMet, "input class " + FamilyClassName(cls));
  }
  const VertexSet h = core.vertices();
  for (const PathWitness& p : family.members) {
    for (size_t i = 1; i + 1 < p.size(); ++i) {
      if (h.contains(p[i]) || p[i] == core.y) {
        Fail(ErrorKind::kInvalidWitness, "member runs through H");
      }
    }
  }

  const bool needs_exit = a == Attachment::kTPaths ||
                          a == Attachment::kTxSPaths ||
                          a == Attachment::kTSPaths;
  std::optional<PathWitness> exit;
  if (needs_exit) {
    if (s < 0) {
      for (Vertex v : core.s) {
        if (v != core.x && SeesC(g, core, v)) {
          s = v;
          break;
        }
      }
    }
    if (s < 0 || s == core.x || !core.s.contains(s)) {
      Fail(ErrorKind::kHypothesisNotMet, "no vertex of S - x sees C");
    }
    exit = ExitThroughC(g, core, s);
    if (!exit) Fail(ErrorKind::kHypothesisNotMet, "s has no route through C");
  }

  auto in_t = [&](Vertex v) { return core.t.contains(v); };
  // Builds the (x, y)-path for member p with an inner ladder of `ladder`
  // edges. Returns nullopt when H is too small for that ladder.
  auto route = [&](PathWitness p, int ladder) -> std::optional<PathWitness> {
    std::optional<PathWitness> lead;
    switch (a) {
      case Attachment::kTPaths: {
        if (!in_t(p.front()) || !in_t(p.back())) return std::nullopt;
        lead = LadderPath(core, core.x, p.front(), ladder, {s, p.back()});
        if (!lead) return std::nullopt;
        return Join(Join(Join(*lead, p), PathWitness{p.back(), s}), *exit);
      }
      case Attachment::kTxSPaths: {
        if (!in_t(p.front())) p = Reversed(p);
        if (!in_t(p.front())) return std::nullopt;
        if (p.back() == s) {
          lead = LadderPath(core, core.x, p.front(), ladder, {s});
          if (!lead) return std::nullopt;
          return Join(Join(*lead, p), *exit);
        }
        if (p.back() != core.x) return std::nullopt;
        auto tail = LadderPath(core, p.front(), s, ladder, {core.x});
        if (!tail) return std::nullopt;
        return Join(Join(Reversed(p), *tail), *exit);
      }
      case Attachment::kTSPaths: {
        if (!in_t(p.front())) p = Reversed(p);
        const Vertex v = p.back();
        if (!in_t(p.front()) || !core.s.contains(v) || v == core.x || v == s) {
          return std::nullopt;
        }
        Vertex t = -1;
        for (Vertex w : core.t) {
          if (w != p.front()) {
            t = w;
            break;
          }
        }
        lead = LadderPath(core, core.x, p.front(), ladder, {s, v, t});
        if (!lead) return std::nullopt;
        return Join(Join(Join(*lead, p), PathWitness{v, t, s}), *exit);
      }
      case Attachment::kTyPaths: {
        if (p.front() == core.y) p = Reversed(p);
        if (!in_t(p.front()) || p.back() != core.y) return std::nullopt;
        lead = LadderPath(core, core.x, p.front(), ladder, {});
        if (!lead) return std::nullopt;
        return Join(*lead, p);
      }
      case Attachment::kSyPaths: {
        if (p.front() == core.y) p = Reversed(p);
        if (!core.s.contains(p.front()) || p.front() == core.x ||
            p.back() != core.y) {
          return std::nullopt;
        }
        lead = LadderPath(core, core.x, p.front(), ladder, {});
        if (!lead) return std::nullopt;
        return Join(*lead, p);
      }
    }
    return std::nullopt;
  };

  const int base = a == Attachment::kSyPaths ? 2 : 1;
  std::vector<PathWitness> out;
  for (const PathWitness& p : family.members) {
    auto routed = route(p, base);
    if (!routed) {
      Fail(ErrorKind::kHypothesisNotMet,
           std::string(AttachmentName(a)) + ": member has the wrong ends");
    }
    out.push_back(*routed);
  }
  const PathWitness& last = family.members.back();
  for (int j = 1; static_cast<int>(out.size()) < k; ++j) {
    auto routed = route(last, base + 2 * j);
    if (!routed) {
      Fail(ErrorKind::kHypothesisNotMet, "H too small for the ladder");
    }
    out.push_back(*routed);
  }
  for (const PathWitness& p : out) {
    if (!IsPathIn(g, p) || p.front() != core.x || p.back() != core.y) {
      Fail(ErrorKind::kInvalidWitness,
           std::string(AttachmentName(a)) + ": routed path is not simple");
    }
  }
  PathFamily result = MakePathFamily(std::move(out));
  if (result.cls.kind != cls.kind) {
    Fail(ErrorKind::kInvalidWitness, "extension changed the family class");
  }
  return result;
}

}  // namespace cycmod
