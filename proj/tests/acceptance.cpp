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

// Acceptance driver. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cycmod/certificate.hpp"
#include "cycmod/cycles.hpp"
#include "cycmod/decomposition.hpp"
#include "cycmod/error.hpp"
#include "cycmod/families.hpp"
#include "cycmod/generate.hpp"
#include "cycmod/oracle.hpp"
#include "cycmod/paths.hpp"
#include "cycmod/sweep.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace cycmod;
using Json = nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void Fail(const std::string& what) {
    if (pass) first_failure = what;
    pass = false;
  }
};

std::string GraphLine(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order();
  for (const Edge& e : g.edges()) out << " " << e.u << "-" << e.v;
  return out.str();
}

bool AllSimpleCycles(const Graph& g, const CycleFamily& f) {
  for (const auto& c : f.members) {
    if (!ref::IsSimpleCycle(g, c)) return false;
  }
  return true;
}

// 1. Every 2-connected graph on at most 7 vertices, every k with
// min degree >= k+1.
Outcome CycleFamiliesExhaustive() {
  Outcome out;
  int instances = 0;
  int graphs = 0;
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : EnumerateGraphs(
             n, [](const Graph& h) { return ref::TwoConnected(h); })) {
      ++graphs;
      const std::set<int> spectrum = ref::CycleLengths(g);
      for (int k = 1; k + 1 <= g.min_degree(); ++k) {
        ++instances;
        try {
          CycleExtraction r = FindKCycles(g, k);
          const std::string cls = ref::ClassOf(r.family.lengths());
          bool ok = r.family.size() == k && AllSimpleCycles(g, r.family) &&
                    (cls == "length" || cls == "consecutive");
          for (int len : r.family.lengths()) ok = ok && spectrum.count(len);
          if (!ok) out.Fail("k=" + std::to_string(k) + " " + GraphLine(g));
        } catch (const Error& e) {
          out.Fail(std::string(e.what()) + " k=" + std::to_string(k) + " " +
                   GraphLine(g));
        }
      }
    }
  }
  out.detail = std::to_string(graphs) + " graphs, " + std::to_string(instances) +
               " (graph, k) instances";
  return out;
}

// 2. Every rooted 2-connected (G, x, y) on at most 7 vertices, both modes.
Outcome PathFamiliesExhaustive() {
  Outcome out;
  int instances = 0;
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : EnumerateGraphs(
             n, [](const Graph& h) { return ref::Connected(h); })) {
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = 0; y < n; ++y) {
          if (x == y || !ref::Rooted2Connected(g, x, y)) continue;
          const int delta = ref::RootedMinDegree(g, x, y);
          for (PathMode mode : {PathMode::kLength, PathMode::kFlex}) {
            const int step = mode == PathMode::kLength ? 0 : 1;
            for (int k = 1; 2 * k - step <= delta; ++k) {
              ++instances;
              const std::string where =
                  std::string(PathModeName(mode)) + " k=" + std::to_string(k) +
                  " x=" + std::to_string(x) + " y=" + std::to_string(y) + " " +
                  GraphLine(g);
              try {
                PathExtraction r = FindPaths(g, x, y, k, mode);
                bool ok = r.family.size() == k;
                for (const auto& p : r.family.members) {
                  ok = ok && ref::IsSimplePath(g, p) && p.front() == x &&
                       p.back() == y;
                }
                const std::string cls = ref::ClassOf(r.family.lengths());
                const bool semi = cls.rfind("semi:", 0) == 0 ||
                                  (k == 2 && cls == "consecutive");
                ok = ok && (cls == "length" || (mode == PathMode::kFlex && semi));
                if (!ok) out.Fail(where);
              } catch (const Error& e) {
                out.Fail(std::string(e.what()) + " " + where);
              }
            }
          }
        }
      }
    }
  }
  out.detail = std::to_string(instances) + " rooted instances";
  return out;
}

// 3. K_{2k} admits semi-length but not length families; K_{2k-1} admits
// neither, for k = 2, 3.
Outcome Sharpness() {
  Outcome out;
  for (int k : {2, 3}) {
    Graph even = CompleteGraph(2 * k);
    Graph odd = CompleteGraph(2 * k - 1);
    for (Vertex x = 0; x < 2 * k; ++x) {
      for (Vertex y = 0; y < 2 * k; ++y) {
        if (x == y) continue;
        const std::string tag =
            "k=" + std::to_string(k) + " x=" + std::to_string(x) +
            " y=" + std::to_string(y);
        const std::set<int> lens = ref::PathLengths(even, x, y);
        if (OraclePaths(even, x, y, k, OracleMode::kLength) ||
            ref::AdmitsLength(lens, k)) {
          out.Fail("K_2k has a length family " + tag);
        }
        auto semi = OraclePaths(even, x, y, k, OracleMode::kLengthOrSemi);
        if (!semi || semi->cls.kind != FamilyKind::kSemiLength ||
            !ref::AdmitsSemi(lens, k)) {
          out.Fail("K_2k lacks a semi-length family " + tag);
        }
        if (x < 2 * k - 1 && y < 2 * k - 1) {
          const std::set<int> olens = ref::PathLengths(odd, x, y);
          if (OraclePaths(odd, x, y, k, OracleMode::kLengthOrSemi) ||
              ref::AdmitsLength(olens, k) || ref::AdmitsSemi(olens, k)) {
            out.Fail("K_2k-1 has a family " + tag);
          }
        }
      }
    }
  }
  out.detail = "K4, K6 and K3, K5 over all root pairs";
  return out;
}

// Two graphs glued on the vertices 0 and 1: 2-connected, not 3-connected.
Graph GlueOnTwo(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  const int na = a.order();
  auto map = [&](Vertex v) { return v < 2 ? v : v + na - 2; };
  for (const Edge& x : b.edges()) e.push_back({map(x.u), map(x.v)});
  return Graph::FromEdges(na + b.order() - 2, e);
}

// 4. Residue coverage for k = 3, 5 on generated graphs from all branches.
Outcome ResiduesEveryBranch(int* per_branch) {
  Outcome out;
  int total = 0;
  std::uint64_t seed = 1;
  auto gen = [&](GenSpec spec) {
    for (int tries = 0; tries < 1000; ++tries, ++seed) {
      spec.seed = seed;
      if (auto g = GenerateGraph(spec)) {
        ++seed;
        return *g;
      }
    }
    cycmod::Fail(ErrorKind::kInvalidArgument, "generator gave up");
  };
  for (int k : {3, 5}) {
    const int d = k + 1;
    for (int i = 0; i < 102; ++i) {
      Graph g;
      switch (i % 3) {
        case 0: {
          const int n1 = d + 2 + i % 2;
          g = GlueOnTwo(gen({n1, d, 3, false}), gen({d + 2, d, 3, false}));
          break;
        }
        case 1:
          g = gen({d + 3 + i % 3, d, 3, false});
          break;
        default:
          g = gen({2 * d + i % 2 * 2, d, 2, true});
          break;
      }
      ++total;
      const std::string where = "k=" + std::to_string(k) + " " + GraphLine(g);
      try {
        ResidueExtraction r = AllResiduesModK(g, k);
        ++per_branch[static_cast<int>(r.source.branch)];
        bool ok = static_cast<int>(r.by_residue.size()) == k;
        for (int key = 0; key < k && ok; ++key) {
          auto it = r.by_residue.find(key);
          ok = it != r.by_residue.end() && ref::IsSimpleCycle(g, it->second) &&
               static_cast<int>(it->second.size()) % k == key;
        }
        if (!ok) out.Fail(where);
      } catch (const Error& e) {
        out.Fail(std::string(e.what()) + " " + where);
      }
    }
  }
  out.detail = std::to_string(total) + " graphs, branches I/II/III = " +
               std::to_string(per_branch[0]) + "/" +
               std::to_string(per_branch[1]) + "/" +
               std::to_string(per_branch[2]);
  if (per_branch[0] == 0 || per_branch[1] == 0 || per_branch[2] == 0) {
    out.Fail("branch mix incomplete");
  }
  return out;
}

bool RefOddCycleOk(const Graph& g, const OddCycleWitness& w) {
  const CycleWitness& c = w.cycle;
  const int len = static_cast<int>(c.size());
  if (!ref::IsSimpleCycle(g, c) || len % 2 == 0 || len != 2 * w.m + 1 ||
      len >= g.order()) {
    return false;
  }
  for (int i = 0; i < len; ++i) {
    for (int j = i + 2; j < len; ++j) {
      if (!(i == 0 && j == len - 1) && g.adjacent(c[i], c[j])) return false;
    }
  }
  std::vector<char> gone(g.order(), 0);
  for (Vertex v : c) gone[v] = 1;
  return ref::ConnectedWithout(g, gone);
}

// 5. Non-separating induced odd cycles in 3-connected non-bipartite graphs.
Outcome OddCycleFinder() {
  Outcome out;
  int exhaustive = 0;
  auto check = [&](const Graph& g) {
    auto w = FindNonSepInducedOddCycle(g);
    if (!w) {
      out.Fail("no witness " + GraphLine(g));
      return;
    }
    const std::string why = ValidateOddCycle(g, *w);
    if (!why.empty() || !RefOddCycleOk(g, *w)) {
      out.Fail("bad witness (" + why + ") " + GraphLine(g));
    }
  };
  for (int n = 4; n <= 7; ++n) {
    for (const Graph& g : EnumerateGraphs(n, [](const Graph& h) {
           return ref::ThreeConnected(h) && !ref::Bipartite(h);
         })) {
      ++exhaustive;
      check(g);
    }
  }
  int sampled = 0;
  for (std::uint64_t seed = 1; sampled < 100; ++seed) {
    GenSpec spec{8 + static_cast<int>(seed % 7), 3 + static_cast<int>(seed % 3),
                 3, false, seed};
    auto g = GenerateGraph(spec);
    if (!g || ref::Bipartite(*g)) continue;
    ++sampled;
    check(*g);
  }
  out.detail = std::to_string(exhaustive) + " exhaustive graphs, " +
               std::to_string(sampled) + " random graphs";
  return out;
}

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

std::vector<int> Steps(int start, int count, int sw, int unit) {
  std::vector<int> out = {start};
  for (int i = 1; i < count; ++i) out.push_back(out.back() + (i == sw ? 1 : unit));
  return out;
}

// 6. Table row counts and the lengths they produce, l <= 5.
Outcome TableArithmetic() {
  Outcome out;
  int checks = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) out.Fail(what);
  };
  for (int l = 1; l <= 5; ++l) {
    const std::string tag = " l=" + std::to_string(l);
    for (int phi = 0; phi <= 1; ++phi) {
      const int rows = static_cast<int>(Table1Schedule(l, phi).size());
      expect(rows == l + (l + phi - 1), "table 1 rows" + tag);
      CycleFamily f = GlueTwoSidedLength(Synthetic(0, 1, Steps(2, l + phi, 0, 2), 100),
                                         Synthetic(0, 1, Steps(3, l, 0, 2), 900));
      expect(f.lengths() == Steps(5, 2 * l - 1 + phi, 0, 2), "table 1 lengths" + tag);
    }
    for (int p = 1; p <= l; ++p) {
      for (int q = 1; q <= l; ++q) {
        const std::string sw = tag + " p=" + std::to_string(p) + " q=" + std::to_string(q);
        expect(static_cast<int>(Table2Schedule(l, p, q).size()) == 2 * l,
               "table 2 rows" + sw);
        CycleFamily f = GlueTwoSidedSemilength(
            Synthetic(0, 1, Steps(2, l + 1, p, 2), 100),
            Synthetic(0, 1, Steps(2, l + 1, q, 2), 900));
        expect(f.lengths() == Steps(4, 2 * l, 0, 2), "table 2 lengths" + sw);
      }
    }
    for (int m = 1; m <= 4; ++m) {
      CycleWitness ring;
      for (int i = 0; i <= 2 * m; ++i) ring.push_back(i);
      const std::string mt = tag + " m=" + std::to_string(m);
      expect(static_cast<int>(Table3Schedule(l).size()) == 2 * l, "table 3 rows" + mt);
      CycleFamily t3 = OddCycleFan(ring, 0, Synthetic(0, m, Steps(2, l, 0, 2), 100), 1);
      expect(t3.lengths() == Steps(2 + m, 2 * l, 0, 1), "table 3 lengths" + mt);
      for (int j = 1; j < l; ++j) {
        expect(static_cast<int>(Table4Schedule(l, j).size()) == 2 * l - 1,
               "table 4 rows" + mt);
        CycleFamily t4 =
            OddCycleFan(ring, 0, Synthetic(0, m, Steps(2, l, j, 2), 100), 0);
        expect(t4.lengths() == Steps(2 + m, 2 * l - 1, 0, 1), "table 4 lengths" + mt);
      }
      if (m >= 2 && l >= 2) {
        expect(static_cast<int>(Table5Schedule(l).size()) == 2 * l, "table 5 rows" + mt);
        CycleFamily t5 =
            OddCycleXFan(ring, 0, 99, Synthetic(99, m, Steps(2, l - 1, 0, 2), 100));
        expect(t5.lengths() == Steps(2 + m, 2 * l, 0, 1), "table 5 lengths" + mt);
      }
    }
  }
  out.detail = std::to_string(checks) + " schedule checks";
  return out;
}

// Mutations that keep the JSON well-formed. Each returns false when it
// does not apply to the given certificate.
using Mutation = std::function<bool(Json&, std::mt19937&)>;

std::vector<std::pair<std::string, Mutation>> Mutations() {
  return {
      {"k", [](Json& j, std::mt19937&) { j["k"] = j["k"].get<int>() + 1; return true; }},
      {"class",
       [](Json& j, std::mt19937&) {
         const std::string c = j["class"];
         j["class"] = c == "LengthCondition" ? "Consecutive" : "LengthCondition";
         return true;
       }},
      {"branch",
       [](Json& j, std::mt19937&) {
         if (j["command"] != "cycles") return false;
         j["branch"] = j["branch"] == "I" ? "II" : "I";
         return true;
       }},
      {"repeat",
       [](Json& j, std::mt19937& rng) {
         auto& fam = j["family"];
         auto& member = fam[rng() % fam.size()];
         member[1] = member[0];
         return true;
       }},
      {"drop",
       [](Json& j, std::mt19937&) {
         j["family"].erase(j["family"].size() - 1);
         return true;
       }},
      {"roots",
       [](Json& j, std::mt19937&) {
         if (j["command"] != "paths") return false;
         std::swap(j["roots"][0], j["roots"][1]);
         return true;
       }},
      {"residue",
       [](Json& j, std::mt19937&) {
         if (!j.contains("residues")) return false;
         auto& r = j["residues"];
         std::swap(r["0"], r["1"]);
         return true;
       }},
      {"mode",
       [](Json& j, std::mt19937&) {
         if (j["command"] == "paths") {
           j["mode"] = j["mode"] == "length" ? "flex" : "length";
         } else {
           j["mode"] = j["mode"] == "cycles" ? "mod" : "cycles";
         }
         return true;
       }},
  };
}

std::string Unchecked(Json j) {
  j.erase("checksum");
  return SerializeCertificate(ParseCertificate(j.dump()));
}

bool Detected(const std::string& text) {
  try {
    return !VerifyCertificateText(text).ok;
  } catch (const Error&) {
    return true;
  }
}

// 7. Random certificates verify; every mutation is rejected.
Outcome CertificateRoundTrip() {
  Outcome out;
  std::mt19937 rng(2026);
  const auto mutations = Mutations();
  int emitted = 0;
  int mutated = 0;
  int content_caught = 0;
  for (std::uint64_t seed = 1; emitted < 1000; ++seed) {
    GenSpec spec{5 + static_cast<int>(rng() % 5), 3 + static_cast<int>(rng() % 3),
                 2 + static_cast<int>(rng() % 2), rng() % 5 == 0, seed};
    auto g = GenerateGraph(spec);
    if (!g) continue;
    std::string text;
    const int kind = static_cast<int>(rng() % 3);
    try {
      if (kind == 0) {
        const Vertex x = static_cast<Vertex>(rng() % g->order());
        const Vertex y = static_cast<Vertex>((x + 1) % g->order());
        const PathMode mode = rng() % 2 ? PathMode::kFlex : PathMode::kLength;
        const int k = std::max(1, (ref::RootedMinDegree(*g, x, y) +
                                   (mode == PathMode::kFlex)) / 2);
        PathExtraction r = FindPaths(*g, x, y, k, mode);
        text = SerializeCertificate(
            MakePathCertificate(*g, x, y, k, mode, r.family, r.trace, false));
      } else {
        int k = g->min_degree() - 1;
        if (kind == 2 && k % 2 == 0) --k;
        if (k < 1 || k + 1 > g->min_degree()) continue;
        if (kind == 2) {
          text = SerializeCertificate(
              MakeResidueCertificate(*g, k, AllResiduesModK(*g, k)));
        } else {
          text = SerializeCertificate(MakeCycleCertificate(*g, k, FindKCycles(*g, k)));
        }
      }
    } catch (const Error& e) {
      out.Fail(std::string("emit: ") + e.what() + " " + GraphLine(*g));
      continue;
    }
    ++emitted;
    VerifyReport report = VerifyCertificateText(text);
    if (!report.ok) {
      out.Fail("verify " + report.check + ": " + report.detail);
      continue;
    }
    if (SerializeCertificate(ParseCertificate(text)) != text) {
      out.Fail("re-serialization changed the text");
    }
    const Json base = Json::parse(text);
    for (const auto& [name, mutate] : mutations) {
      Json j = base;
      if (!mutate(j, rng)) continue;
      ++mutated;
      if (!Detected(j.dump(2))) out.Fail("unsealed " + name + " mutation accepted");
      // Re-sealed: the checksum matches, so the content checks must object.
      // Switching a path certificate between length and flex can leave it
      // consistent, so only the checksum covers that edit.
      if (name == "mode" && base["command"] == "paths") continue;
      std::string resealed;
      try {
        resealed = Unchecked(j);
      } catch (const Error&) {
        ++content_caught;
        continue;
      }
      if (Detected(resealed)) {
        ++content_caught;
      } else {
        out.Fail("resealed " + name + " mutation accepted");
      }
    }
  }
  out.detail = std::to_string(emitted) + " certificates, " +
               std::to_string(mutated) + " mutations, " +
               std::to_string(content_caught) + " caught by content checks";
  return out;
}

// 8. The sweep over n <= 7 reports a zero constructive-gap rate.
Outcome SweepGapRate() {
  Outcome out;
  SweepOptions opt;
  opt.n_min = 3;
  opt.n_max = 7;
  opt.k_max = 6;
  opt.exhaustive = true;
  SweepReport r = RunSweep(opt);
  std::ostringstream d;
  d << r.instances << " instances, " << r.failures << " failures, gap rate "
    << r.GapRate();
  out.detail = d.str();
  if (r.gaps != 0 || r.failures != 0 || r.budget_exceeded || r.instances == 0) {
    out.Fail(r.notes.empty() ? "nonzero gap rate" : r.notes.front());
  }
  return out;
}

}  // namespace

int main() {
  int per_branch[3] = {0, 0, 0};
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"cycle families on every 2-connected graph, n <= 7", CycleFamiliesExhaustive},
      {"path families on every rooted graph, n <= 7", PathFamiliesExhaustive},
      {"degree bounds are sharp on K4, K6, K3, K5", Sharpness},
      {"all residues mod k for k = 3, 5", [&] { return ResiduesEveryBranch(per_branch); }},
      {"non-separating induced odd cycles", OddCycleFinder},
      {"table row counts and lengths, l <= 5", TableArithmetic},
      {"certificate round-trip and mutation", CertificateRoundTrip},
      {"sweep constructive-gap rate is zero, n <= 7", SweepGapRate},
  };
  bool all = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.Fail(std::string("uncaught: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    all = all && o.pass;
    std::printf("%s [%zu] %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
    if (!o.pass) std::printf("       first failure: %s\n", o.first_failure.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
