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

#include <random>
#include <set>

#include "cycmod/error.hpp"
#include "cycmod/families.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cycmod;
using fixtures::KindOf;

namespace {

// Paths from `from` to `to` with the given lengths. Interior ids are fresh
// numbers starting at `base`, so no two members share an interior vertex.
PathFamily Synthetic(Vertex from, Vertex to, const std::vector<int>& lengths,
                     Vertex base) {
  std::vector<PathWitness> members;
  for (int len : lengths) {
    PathWitness p = {from};
    for (int i = 1; i < len; ++i) p.push_back(base++);
    p.push_back(to);
    members.push_back(p);
  }
  return MakePathFamily(members);
}

std::vector<int> LengthSeq(int start, int count) {
  std::vector<int> out;
  for (int i = 0; i < count; ++i) out.push_back(start + 2 * i);
  return out;
}

std::vector<int> SemiSeq(int start, int count, int sw) {
  std::vector<int> out = {start};
  for (int i = 1; i < count; ++i) out.push_back(out.back() + (i == sw ? 1 : 2));
  return out;
}

bool DistinctVertices(const CycleWitness& c) {
  return std::set<Vertex>(c.begin(), c.end()).size() == c.size();
}

// Odd cycle 0 .. 2m with u = 0.
CycleWitness OddRing(int m) {
  CycleWitness c;
  for (int i = 0; i <= 2 * m; ++i) c.push_back(i);
  return c;
}

}  // namespace

TEST_CASE("classify examples") {
  CHECK(Classify({3, 5, 7}).kind == FamilyKind::kLengthCondition);
  FamilyClass semi = Classify({2, 4, 5, 7});
  CHECK(semi.kind == FamilyKind::kSemiLength);
  CHECK(semi.switch_index == 2);
  CHECK(Classify({1, 2, 3}).kind == FamilyKind::kUnclassified);
  CHECK(Classify({3, 4, 5}).kind == FamilyKind::kConsecutive);
  CHECK(Classify({2, 5}).kind == FamilyKind::kUnclassified);
  CHECK(FamilyClassName(semi) == "SemiLength(switch=2)");
}

TEST_CASE("classify precedence by context") {
  // Two members one apart are both consecutive and semi-length.
  CHECK(Classify({2, 3}).kind == FamilyKind::kConsecutive);
  CHECK(Classify({2, 3}, ClassContext::kPaths).kind == FamilyKind::kSemiLength);
  CHECK(Classify({2, 3}, ClassContext::kCycles).kind ==
        FamilyKind::kConsecutive);
  // A single member satisfies every pattern; length wins.
  CHECK(Classify({4}).kind == FamilyKind::kLengthCondition);
  CHECK(Classify({3, 4, 6}, ClassContext::kCycles).kind ==
        FamilyKind::kUnclassified);
}

TEST_CASE("classify agrees with the reference classifier and shifts") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 3000; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 6);
    std::vector<int> lengths = {1 + static_cast<int>(rng() % 5)};
    for (int i = 1; i < k; ++i) {
      lengths.push_back(lengths.back() + static_cast<int>(rng() % 4));
    }
    const FamilyClass c = Classify(lengths, ClassContext::kPaths);
    const std::string r = ref::PathClassOf(lengths);
    if (r == "length") {
      CHECK(c.kind == FamilyKind::kLengthCondition);
    } else if (r.rfind("semi:", 0) == 0) {
      CHECK(c.kind == FamilyKind::kSemiLength);
      CHECK(c.switch_index == std::stoi(r.substr(5)));
    } else {
      CHECK(c.kind == FamilyKind::kUnclassified);
      if (ref::ClassOf(lengths) == "consecutive") {
        CHECK(Classify(lengths).kind == FamilyKind::kConsecutive);
      }
    }
    if (lengths.front() >= 2) {
      std::vector<int> shifted = lengths;
      for (int& x : shifted) x += 3;
      CHECK(Classify(shifted) == Classify(lengths));
    }
  }
}

TEST_CASE("combine across a cut vertex") {
  PathFamily f = Synthetic(0, 1, {2, 4}, 100);
  PathFamily prefixed = CombineAcrossCut(f, {50, 51, 52, 0}, CutSide::kPrefix);
  CHECK(prefixed.lengths() == std::vector<int>{5, 7});
  CHECK(prefixed.cls.kind == FamilyKind::kLengthCondition);
  for (const PathWitness& p : prefixed.members) CHECK(p.front() == 50);

  PathFamily semi = Synthetic(0, 1, {2, 3, 5}, 100);
  REQUIRE(semi.cls.switch_index == 1);
  PathFamily suffixed = CombineAcrossCut(semi, {1, 60}, CutSide::kSuffix);
  CHECK(suffixed.lengths() == std::vector<int>{3, 4, 6});
  CHECK(suffixed.cls == semi.cls);

  CHECK(KindOf([&] { CombineAcrossCut(f, {100, 0}, CutSide::kPrefix); }) ==
        ErrorKind::kInvalidWitness);
}

TEST_CASE("table 1 gluing") {
  CycleFamily four =
      GlueTwoSidedLength(Synthetic(0, 1, {2, 4, 6}, 100),
                         Synthetic(0, 1, {2, 4}, 200));
  CHECK(four.lengths() == std::vector<int>{4, 6, 8, 10});
  CHECK(four.cls.kind == FamilyKind::kLengthCondition);

  CycleFamily two = GlueTwoSidedLength(Synthetic(0, 1, {2, 4}, 100),
                                       Synthetic(0, 1, {2}, 200));
  CHECK(two.lengths() == std::vector<int>{4, 6});

  CHECK(KindOf([] {
          GlueTwoSidedLength(Synthetic(0, 1, {2, 3, 4}, 100),
                             Synthetic(0, 1, {2, 4}, 200));
        }) == ErrorKind::kInvalidArgument);
}

TEST_CASE("table 2 gluing") {
  CycleFamily a = GlueTwoSidedSemilength(Synthetic(0, 1, {2, 4, 5}, 100),
                                         Synthetic(0, 1, {2, 3, 5}, 200));
  CHECK(a.lengths() == std::vector<int>{4, 6, 8, 10});
  CHECK(a.cls.kind == FamilyKind::kLengthCondition);

  CycleFamily b = GlueTwoSidedSemilength(Synthetic(0, 1, {2, 3, 5}, 100),
                                         Synthetic(0, 1, {2, 3, 5}, 200));
  CHECK(b.lengths() == std::vector<int>{4, 6, 8, 10});

  CHECK(KindOf([] {
          GlueTwoSidedSemilength(Synthetic(0, 1, {2, 4, 6}, 100),
                                 Synthetic(0, 1, {2, 3, 5}, 200));
        }) == ErrorKind::kInvalidArgument);
}

TEST_CASE("table 3 and 4 fans around an odd cycle") {
  CycleWitness c5 = OddRing(2);
  CycleFamily t3 = OddCycleFan(c5, 0, Synthetic(0, 2, {2, 4}, 100), 1);
  CHECK(t3.lengths() == std::vector<int>{4, 5, 6, 7});
  CHECK(t3.cls.kind == FamilyKind::kConsecutive);

  CycleFamily t4 = OddCycleFan(c5, 0, Synthetic(0, 2, {2, 3}, 100), 0);
  CHECK(t4.lengths() == std::vector<int>{4, 5, 6});
  CHECK(t4.cls.kind == FamilyKind::kConsecutive);

  CycleFamily c3 = OddCycleFan(OddRing(1), 0, Synthetic(0, 1, {2, 4}, 100), 0);
  CHECK(c3.lengths() == std::vector<int>{3, 4, 5, 6});

  CHECK(KindOf([&] { OddCycleFan(c5, 0, Synthetic(0, 2, {2, 3}, 100), 1); }) ==
        ErrorKind::kInvalidArgument);
}

TEST_CASE("table 5 fan through a vertex beside the cycle") {
  // x = 99 sees u+ = 1 and u- = 2m.
  CycleFamily c5 = OddCycleXFan(OddRing(2), 0, 99, Synthetic(99, 2, {2}, 100));
  CHECK(c5.lengths() == std::vector<int>{4, 5, 6, 7});
  CHECK(c5.cls.kind == FamilyKind::kConsecutive);

  CycleFamily c7 =
      OddCycleXFan(OddRing(3), 0, 99, Synthetic(99, 3, {2, 4}, 100));
  CHECK(c7.lengths() == std::vector<int>{5, 6, 7, 8, 9, 10});
  CHECK(c7.cls.kind == FamilyKind::kConsecutive);

  CHECK(KindOf([] {
          OddCycleXFan(OddRing(1), 0, 99, Synthetic(99, 1, {2}, 100));
        }) == ErrorKind::kInvalidArgument);
}

TEST_CASE("row counts of every table for l <= 5") {
  for (int l = 1; l <= 5; ++l) {
    for (int phi = 0; phi <= 1; ++phi) {
      CHECK(static_cast<int>(Table1Schedule(l, phi).size()) == l + (l + phi - 1));
    }
    CHECK(static_cast<int>(Table3Schedule(l).size()) == 2 * l);
    for (int p = 1; p <= l; ++p) {
      for (int q = 1; q <= l; ++q) {
        CHECK(static_cast<int>(Table2Schedule(l, p, q).size()) == 2 * l);
      }
    }
    for (int j = 1; j < l; ++j) {
      CHECK(static_cast<int>(Table4Schedule(l, j).size()) == 2 * l - 1);
    }
    if (l >= 2) CHECK(static_cast<int>(Table5Schedule(l).size()) == 2 * l);
  }
}

TEST_CASE("glue and fan outputs follow the arithmetic for l <= 5") {
  for (int l = 1; l <= 5; ++l) {
    for (int phi = 0; phi <= 1; ++phi) {
      for (int a = 2; a <= 4; ++a) {
        for (int b = 2; b <= 4; ++b) {
          CycleFamily f = GlueTwoSidedLength(
              Synthetic(0, 1, LengthSeq(a, l + phi), 100),
              Synthetic(0, 1, LengthSeq(b, l), 500));
          CHECK(f.size() == 2 * l - 1 + phi);
          CHECK(ref::ClassOf(f.lengths()) == "length");
          CHECK(f.lengths().front() == a + b);
          for (const auto& c : f.members) CHECK(DistinctVertices(c));
        }
      }
    }
    for (int p = 1; p <= l; ++p) {
      for (int q = 1; q <= l; ++q) {
        CycleFamily f = GlueTwoSidedSemilength(
            Synthetic(0, 1, SemiSeq(2, l + 1, p), 100),
            Synthetic(0, 1, SemiSeq(3, l + 1, q), 500));
        CHECK(f.size() == 2 * l);
        CHECK(ref::ClassOf(f.lengths()) == "length");
        CHECK(f.lengths().front() == 5);
      }
    }
    for (int m = 1; m <= 3; ++m) {
      CycleFamily t3 =
          OddCycleFan(OddRing(m), 0, Synthetic(0, m, LengthSeq(2, l), 100), 1);
      CHECK(t3.size() == 2 * l);
      CHECK(ref::ClassOf(t3.lengths()) == "consecutive");
      CHECK(t3.lengths().front() == 2 + m);
      for (int j = 1; j < l; ++j) {
        CycleFamily t4 = OddCycleFan(OddRing(m), 0,
                                     Synthetic(0, m, SemiSeq(2, l, j), 100), 0);
        CHECK(t4.size() == 2 * l - 1);
        CHECK(ref::ClassOf(t4.lengths()) == "consecutive");
      }
      if (m >= 2 && l >= 2) {
        CycleFamily t5 = OddCycleXFan(OddRing(m), 0, 99,
                                      Synthetic(99, m, LengthSeq(2, l - 1), 100));
        CHECK(t5.size() == 2 * l);
        CHECK(ref::ClassOf(t5.lengths()) == "consecutive");
        CHECK(t5.lengths().front() == 2 + m);
      }
    }
  }
}

TEST_CASE("residues modulo k") {
  ResidueCoverage a = ResiduesModK({3, 5, 7}, 3);
  CHECK(a.residues == std::vector<int>{0, 1, 2});
  CHECK(a.full);
  ResidueCoverage b = ResiduesModK({3, 5, 7, 9, 11}, 5);
  CHECK(b.residues == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(b.full);
  ResidueCoverage c = ResiduesModK({3, 5, 7, 9}, 4);
  CHECK(c.residues == std::vector<int>{1, 3});
  CHECK_FALSE(c.full);
}

TEST_CASE("odd k length-condition families cover every residue") {
  std::mt19937 rng(23);
  for (int k : {1, 3, 5, 7}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const int start = 3 + static_cast<int>(rng() % 1000);
      CHECK(ResiduesModK(LengthSeq(start, k), k).full);
    }
  }
}
