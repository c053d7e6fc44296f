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

#include "cycmod/families.hpp"

#include <algorithm>
#include <set>

#include "cycmod/error.hpp"

namespace cycmod {

PathWitness Reversed(PathWitness p) {
  std::reverse(p.begin(), p.end());
  return p;
}

PathWitness Join(const PathWitness& a, const PathWitness& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.back() != b.front()) {
    Fail(ErrorKind::kInvalidWitness, "joined paths do not meet");
  }
  PathWitness out = a;
  out.insert(out.end(), b.begin() + 1, b.end());
  return out;
}

namespace {

bool AllDistinct(const std::vector<Vertex>& seq) {
  std::vector<Vertex> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

bool IsPathIn(const Graph& g, const PathWitness& p) {
  return IsWalkInGraph(g, p) && AllDistinct(p);
}

bool IsCycleIn(const Graph& g, const CycleWitness& c) {
  return c.size() >= 3 && IsWalkInGraph(g, c) && AllDistinct(c) &&
         g.adjacent(c.back(), c.front());
}

std::string_view FamilyKindName(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kConsecutive:
      return "Consecutive";
    case FamilyKind::kLengthCondition:
      return "LengthCondition";
    case FamilyKind::kSemiLength:
      return "SemiLength";
    case FamilyKind::kUnclassified:
      return "Unclassified";
  }
  return "Unclassified";
}

std::string FamilyClassName(const FamilyClass& c) {
  std::string name(FamilyKindName(c.kind));
  if (c.kind == FamilyKind::kSemiLength) {
    name += "(switch=" + std::to_string(c.switch_index) + ")";
  }
  return name;
}

FamilyClass Classify(const std::vector<int>& lengths, ClassContext context) {
  if (lengths.empty() || lengths.front() < 2) return {};
  int ones = 0;
  int twos = 0;
  int switch_at = 0;
  for (size_t i = 0; i + 1 < lengths.size(); ++i) {
    int d = lengths[i + 1] - lengths[i];
    if (d == 1) {
      ++ones;
      switch_at = static_cast<int>(i) + 1;
    } else if (d == 2) {
      ++twos;
    } else {
      return {};
    }
  }
  const int gaps = static_cast<int>(lengths.size()) - 1;
  const bool length = twos == gaps;
  const bool consecutive = ones == gaps;
  const bool semi = ones == 1;
  if (length) return {FamilyKind::kLengthCondition, 0};
  if (consecutive && context != ClassContext::kPaths) {
    return {FamilyKind::kConsecutive, 0};
  }
  if (semi && context != ClassContext::kCycles) {
    return {FamilyKind::kSemiLength, switch_at};
  }
  return {};
}

std::vector<int> PathFamily::lengths() const {
  std::vector<int> out;
  for (const auto& p : members) out.push_back(PathLength(p));
  return out;
}

std::vector<int> CycleFamily::lengths() const {
  std::vector<int> out;
  for (const auto& c : members) out.push_back(CycleLength(c));
  return out;
}

PathFamily MakePathFamily(std::vector<PathWitness> members) {
  std::stable_sort(members.begin(), members.end(),
                   [](const PathWitness& a, const PathWitness& b) {
                     return a.size() < b.size();
                   });
  PathFamily f{std::move(members), {}};
  f.cls = Classify(f.lengths(), ClassContext::kPaths);
  return f;
}

CycleFamily MakeCycleFamily(std::vector<CycleWitness> members) {
  std::stable_sort(members.begin(), members.end(),
                   [](const CycleWitness& a, const CycleWitness& b) {
                     return a.size() < b.size();
                   });
  CycleFamily f{std::move(members), {}};
  f.cls = Classify(f.lengths(), ClassContext::kCycles);
  return f;
}

bool IsPathFamilyIn(const Graph& g, const PathFamily& f, Vertex x, Vertex y) {
  for (const auto& p : f.members) {
    if (!IsPathIn(g, p) || p.front() != x || p.back() != y) return false;
  }
  return true;
}

bool IsCycleFamilyIn(const Graph& g, const CycleFamily& f) {
  for (const auto& c : f.members) {
    if (!IsCycleIn(g, c)) return false;
  }
  return true;
}

PathFamily CombineAcrossCut(const PathFamily& family, const PathWitness& bridge,
                            CutSide side) {
  if (bridge.empty()) Fail(ErrorKind::kInvalidArgument, "empty bridge");
  PathFamily out;
  out.members.reserve(family.members.size());
  for (const PathWitness& p : family.members) {
    const Vertex junction = side == CutSide::kPrefix ? p.front() : p.back();
    const Vertex bridge_end =
        side == CutSide::kPrefix ? bridge.back() : bridge.front();
    if (junction != bridge_end) {
      Fail(ErrorKind::kInvalidWitness, "bridge does not meet the family");
    }
    for (Vertex v : bridge) {
      if (v != junction && std::find(p.begin(), p.end(), v) != p.end()) {
        Fail(ErrorKind::kInvalidWitness,
             "bridge meets a member at " + std::to_string(v));
      }
    }
    out.members.push_back(side == CutSide::kPrefix ? Join(bridge, p)
                                                   : Join(p, bridge));
  }
  out.cls = Classify(out.lengths(), ClassContext::kPaths);
  return out;
}

PairSchedule Table1Schedule(int l, int phi) {
  PairSchedule rows;
  for (int j = 1; j <= l; ++j) rows.push_back({1, j});
  for (int i = 2; i <= l + phi; ++i) rows.push_back({i, l});
  return rows;
}

PairSchedule Table2Schedule(int l, int p_switch, int q_switch) {
  const int p = p_switch;
  const int q = q_switch;
  PairSchedule rows;
  for (int j = 1; j <= q; ++j) rows.push_back({1, j});
  for (int i = 2; i <= p; ++i) rows.push_back({i, q});
  rows.push_back({p + 1, q + 1});
  // Printed as "Q_{q+2} ... Q_l, Q_{l+1}"; the column holds l-q cycles.
  for (int j = q + 2; j <= l + 1; ++j) rows.push_back({p + 1, j});
  for (int i = p + 2; i <= l + 1; ++i) rows.push_back({i, l + 1});
  return rows;
}

std::vector<std::pair<int, Arc>> Table3Schedule(int l) {
  std::vector<std::pair<int, Arc>> rows;
  for (int i = 1; i <= l; ++i) {
    rows.push_back({i, Arc::kShort});
    rows.push_back({i, Arc::kLong});
  }
  return rows;
}

std::vector<std::pair<int, Arc>> Table4Schedule(int l, int switch_index) {
  const int j = switch_index;
  std::vector<std::pair<int, Arc>> rows;
  for (int i = 1; i <= j; ++i) {
    rows.push_back({i, Arc::kShort});
    rows.push_back({i, Arc::kLong});
  }
  rows.push_back({j + 1, Arc::kLong});
  for (int i = j + 2; i <= l; ++i) {
    rows.push_back({i, Arc::kShort});
    rows.push_back({i, Arc::kLong});
  }
  return rows;
}

std::vector<std::pair<int, XArc>> Table5Schedule(int l) {
  std::vector<std::pair<int, XArc>> rows;
  for (int i = 1; i <= l - 1; ++i) {
    rows.push_back({i, XArc::kPlusShort});
    rows.push_back({i, XArc::kMinusShort});
  }
  rows.push_back({l - 1, XArc::kMinusLong});
  rows.push_back({l - 1, XArc::kPlusLong});
  return rows;
}

namespace {

void RequireKind(const PathFamily& f, FamilyKind kind, const char* what) {
  FamilyClass c = Classify(f.lengths(), ClassContext::kPaths);
  if (c.kind != kind) {
    Fail(ErrorKind::kInvalidArgument,
         std::string(what) + " has class " + FamilyClassName(c));
  }
}

// x P y, then back along q to x.
CycleWitness CloseThrough(const PathWitness& p, const PathWitness& q) {
  if (p.front() != q.front() || p.back() != q.back()) {
    Fail(ErrorKind::kInvalidWitness, "sides do not share both ends");
  }
  std::set<Vertex> inner(p.begin() + 1, p.end() - 1);
  for (size_t i = 1; i + 1 < q.size(); ++i) {
    if (inner.count(q[i]) || q[i] == p.front() || q[i] == p.back()) {
      Fail(ErrorKind::kInvalidWitness,
           "sides meet at " + std::to_string(q[i]));
    }
  }
  for (Vertex v : inner) {
    if (v == q.front() || v == q.back()) {
      Fail(ErrorKind::kInvalidWitness, "path repeats a root");
    }
  }
  CycleWitness c = p;
  for (size_t i = q.size() - 2; i >= 1; --i) c.push_back(q[i]);
  if (c.size() < 3) Fail(ErrorKind::kInvalidWitness, "degenerate cycle");
  return c;
}

CycleFamily FromSchedule(const PathFamily& p, const PathFamily& q,
                         const PairSchedule& rows) {
  CycleFamily out;
  for (const auto& [i, j] : rows) {
    out.members.push_back(CloseThrough(p.members[i - 1], q.members[j - 1]));
  }
  out.cls = Classify(out.lengths(), ClassContext::kCycles);
  return out;
}

struct OddCycle {
  const CycleWitness& c;
  int pos_u;
  int m;

  Vertex At(int offset) const {
    const int len = static_cast<int>(c.size());
    return c[((pos_u + offset) % len + len) % len];
  }

  // Vertices from offset a to offset b stepping by dir, inclusive.
  std::vector<Vertex> Walk(int a, int steps, int dir) const {
    std::vector<Vertex> out;
    for (int s = 0; s <= steps; ++s) out.push_back(At(a + dir * s));
    return out;
  }
};

OddCycle LocateOnOddCycle(const CycleWitness& c, Vertex u) {
  if (c.size() < 3 || c.size() % 2 == 0) {
    Fail(ErrorKind::kInvalidArgument, "expected an odd cycle");
  }
  auto it = std::find(c.begin(), c.end(), u);
  if (it == c.end()) Fail(ErrorKind::kInvalidArgument, "u is not on c");
  return {c, static_cast<int>(it - c.begin()),
          static_cast<int>(c.size() - 1) / 2};
}

void CheckOffCycle(const CycleWitness& c, const PathWitness& p,
                   size_t skip_front, size_t skip_back) {
  std::set<Vertex> on(c.begin(), c.end());
  for (size_t i = skip_front; i + skip_back < p.size(); ++i) {
    if (on.count(p[i])) {
      Fail(ErrorKind::kInvalidWitness,
           "path meets the odd cycle at " + std::to_string(p[i]));
    }
  }
}

}  // namespace

CycleFamily GlueTwoSidedLength(const PathFamily& p, const PathFamily& q) {
  const int l = q.size();
  const int phi = p.size() - l;
  if (l < 1 || (phi != 0 && phi != 1)) {
    Fail(ErrorKind::kInvalidArgument, "family sizes do not fit l+phi and l");
  }
  RequireKind(p, FamilyKind::kLengthCondition, "p");
  RequireKind(q, FamilyKind::kLengthCondition, "q");
  return FromSchedule(p, q, Table1Schedule(l, phi));
}

CycleFamily GlueTwoSidedSemilength(const PathFamily& p, const PathFamily& q) {
  if (p.size() != q.size() || p.size() < 2) {
    Fail(ErrorKind::kInvalidArgument,
         "semi-length gluing needs two families of size l+1");
  }
  RequireKind(p, FamilyKind::kSemiLength, "p");
  RequireKind(q, FamilyKind::kSemiLength, "q");
  const int l = p.size() - 1;
  const int ps = Classify(p.lengths(), ClassContext::kPaths).switch_index;
  const int qs = Classify(q.lengths(), ClassContext::kPaths).switch_index;
  return FromSchedule(p, q, Table2Schedule(l, ps, qs));
}

CycleFamily OddCycleFan(const CycleWitness& c, Vertex u,
                        const PathFamily& paths, int phi) {
  OddCycle oc = LocateOnOddCycle(c, u);
  const int l = paths.size();
  if (l < 1) Fail(ErrorKind::kInvalidArgument, "no paths");
  FamilyClass cls = Classify(paths.lengths(), ClassContext::kPaths);
  std::vector<std::pair<int, Arc>> rows;
  if (cls.kind == FamilyKind::kLengthCondition) {
    rows = Table3Schedule(l);
  } else if (cls.kind == FamilyKind::kSemiLength) {
    if (phi != 0) {
      Fail(ErrorKind::kInvalidArgument,
           "semi-length paths only close up when k is odd");
    }
    rows = Table4Schedule(l, cls.switch_index);
  } else {
    Fail(ErrorKind::kInvalidArgument, "paths have class " + FamilyClassName(cls));
  }
  const int m = oc.m;
  const Vertex plus = oc.At(m);
  const Vertex minus = oc.At(-m);
  CycleFamily out;
  for (const auto& [i, arc] : rows) {
    const PathWitness& p = paths.members[i - 1];
    if (p.front() != u || (p.back() != plus && p.back() != minus)) {
      Fail(ErrorKind::kInvalidWitness, "path does not run from u to u^{+-m}");
    }
    CheckOffCycle(c, p, 1, 1);
    // From u^{+m}: stepping back m edges reaches u, forward m+1 edges too.
    const int start = p.back() == plus ? m : -m;
    const int dir_short = p.back() == plus ? -1 : 1;
    std::vector<Vertex> walk = arc == Arc::kShort
                                   ? oc.Walk(start, m, dir_short)
                                   : oc.Walk(start, m + 1, -dir_short);
    CycleWitness cyc = p;
    cyc.insert(cyc.end(), walk.begin() + 1, walk.end() - 1);
    out.members.push_back(std::move(cyc));
  }
  out.cls = Classify(out.lengths(), ClassContext::kCycles);
  return out;
}

CycleFamily OddCycleXFan(const CycleWitness& c, Vertex u, Vertex x,
                         const PathFamily& paths) {
  OddCycle oc = LocateOnOddCycle(c, u);
  const int m = oc.m;
  if (m < 2) Fail(ErrorKind::kInvalidArgument, "needs an odd cycle of length >= 5");
  if (std::find(c.begin(), c.end(), x) != c.end()) {
    Fail(ErrorKind::kInvalidArgument, "x lies on the cycle");
  }
  const int l = paths.size() + 1;
  if (l < 2) Fail(ErrorKind::kInvalidArgument, "no paths");
  RequireKind(paths, FamilyKind::kLengthCondition, "paths");
  const Vertex target = oc.At(m);
  CycleFamily out;
  for (const auto& [i, arc] : Table5Schedule(l)) {
    const PathWitness& p = paths.members[i - 1];
    if (p.front() != x || p.back() != target) {
      Fail(ErrorKind::kInvalidWitness, "path does not run from x to u^{+m}");
    }
    CheckOffCycle(c, p, 1, 1);
    std::vector<Vertex> walk;
    switch (arc) {
      case XArc::kPlusShort:
        walk = oc.Walk(m, m - 1, -1);
        break;
      case XArc::kMinusShort:
        walk = oc.Walk(m, m, 1);
        break;
      case XArc::kMinusLong:
        walk = oc.Walk(m, m + 1, -1);
        break;
      case XArc::kPlusLong:
        walk = oc.Walk(m, m + 2, 1);
        break;
    }
    CycleWitness cyc = p;
    cyc.insert(cyc.end(), walk.begin() + 1, walk.end());
    out.members.push_back(std::move(cyc));
  }
  out.cls = Classify(out.lengths(), ClassContext::kCycles);
  return out;
}

ResidueCoverage ResiduesModK(const std::vector<int>& lengths, int k) {
  if (k < 1) Fail(ErrorKind::kInvalidArgument, "k must be positive");
  std::set<int> seen;
  for (int len : lengths) seen.insert(((len % k) + k) % k);
  ResidueCoverage out;
  out.residues.assign(seen.begin(), seen.end());
  out.full = static_cast<int>(seen.size()) == k;
  return out;
}

}  // namespace cycmod
