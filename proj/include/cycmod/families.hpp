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

// Path and cycle families, their length classes, and the fixed row
// schedules that turn two families into a cycle family.

#ifndef CYCMOD_FAMILIES_HPP_
#define CYCMOD_FAMILIES_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cycmod/graph.hpp"

namespace cycmod {

// Oriented vertex sequence; length is the number of edges.
using PathWitness = std::vector<Vertex>;
// Vertex sequence read cyclically; length is the number of vertices.
using CycleWitness = std::vector<Vertex>;

inline int PathLength(const PathWitness& p) {
  return static_cast<int>(p.size()) - 1;
}
inline int CycleLength(const CycleWitness& c) {
  return static_cast<int>(c.size());
}

PathWitness Reversed(PathWitness p);

// Concatenates paths that share their junction vertex.
PathWitness Join(const PathWitness& a, const PathWitness& b);

bool IsPathIn(const Graph& g, const PathWitness& p);
bool IsCycleIn(const Graph& g, const CycleWitness& c);

enum class FamilyKind {
  kConsecutive,
  kLengthCondition,
  kSemiLength,
  kUnclassified,
};

struct FamilyClass {
  FamilyKind kind = FamilyKind::kUnclassified;
  // 1-based position of the unit gap for kSemiLength, else 0.
  int switch_index = 0;

  friend bool operator==(const FamilyClass&, const FamilyClass&) = default;
};

std::string_view FamilyKindName(FamilyKind kind);
std::string FamilyClassName(const FamilyClass& c);

// Which classes a context can produce. Lists like [3,4] match more than one
// pattern, so the context fixes the precedence:
//   kAny:    length condition, then consecutive, then semi-length.
//   kPaths:  length condition, then semi-length.
//   kCycles: length condition, then consecutive.
enum class ClassContext { kAny, kPaths, kCycles };

FamilyClass Classify(const std::vector<int>& lengths,
                     ClassContext context = ClassContext::kAny);

struct PathFamily {
  std::vector<PathWitness> members;
  FamilyClass cls;

  int size() const { return static_cast<int>(members.size()); }
  std::vector<int> lengths() const;
};

struct CycleFamily {
  std::vector<CycleWitness> members;
  FamilyClass cls;

  int size() const { return static_cast<int>(members.size()); }
  std::vector<int> lengths() const;
};

// Sorts members by length and records their class in the paths context.
PathFamily MakePathFamily(std::vector<PathWitness> members);
CycleFamily MakeCycleFamily(std::vector<CycleWitness> members);

// Each member is a path of g from x to y.
bool IsPathFamilyIn(const Graph& g, const PathFamily& f, Vertex x, Vertex y);
bool IsCycleFamilyIn(const Graph& g, const CycleFamily& f);

enum class CutSide { kPrefix, kSuffix };

// kPrefix: bridge then member (bridge ends where members start).
// kSuffix: member then bridge (bridge starts where members end).
PathFamily CombineAcrossCut(const PathFamily& family, const PathWitness& bridge,
                            CutSide side);

// 1-based (P index, Q index) pairs, in row order.
using PairSchedule = std::vector<std::pair<int, int>>;

PairSchedule Table1Schedule(int l, int phi);
PairSchedule Table2Schedule(int l, int p_switch, int q_switch);

enum class Arc { kShort, kLong };

// (path index, arc) rows. kShort closes through m edges of the odd cycle,
// kLong through m+1.
std::vector<std::pair<int, Arc>> Table3Schedule(int l);
std::vector<std::pair<int, Arc>> Table4Schedule(int l, int switch_index);

enum class XArc { kPlusShort, kMinusShort, kMinusLong, kPlusLong };

// Arc lengths m-1, m, m+1, m+2 respectively.
std::vector<std::pair<int, XArc>> Table5Schedule(int l);

// p: l+phi length-condition (x,y)-paths; q: l length-condition
// (x,y)-paths from the other side. Returns l + (l+phi-1) cycles.
CycleFamily GlueTwoSidedLength(const PathFamily& p, const PathFamily& q);

// Both families have l+1 members and the semi-length condition; returns 2l
// cycles satisfying the length condition.
CycleFamily GlueTwoSidedSemilength(const PathFamily& p, const PathFamily& q);

// c is an odd cycle 2m+1; paths run from u to u^{+m} or u^{-m} and avoid c
// otherwise. Returns every row of the matching table: 2l cycles for the
// length condition, 2l-1 for the semi-length condition (phi = 0 only).
CycleFamily OddCycleFan(const CycleWitness& c, Vertex u,
                        const PathFamily& paths, int phi);

// x is off c and adjacent to u^+ and u^-; paths run from x to u^{+m}.
// Returns 2l cycles where l-1 = number of paths.
CycleFamily OddCycleXFan(const CycleWitness& c, Vertex u, Vertex x,
                         const PathFamily& paths);

struct ResidueCoverage {
  std::vector<int> residues;  // sorted, distinct
  bool full = false;
};

ResidueCoverage ResiduesModK(const std::vector<int>& lengths, int k);

}  // namespace cycmod

#endif  // CYCMOD_FAMILIES_HPP_
