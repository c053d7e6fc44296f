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

#include "cycmod/certificate.hpp"

#include <cstdint>
#include <cstdio>
#include <set>

#include "cycmod/decomposition.hpp"
#include "cycmod/error.hpp"
#include "json.hpp"

namespace cycmod {

namespace {

using Json = nlohmann::json;

TraceSummary Summarize(const ExtractionTrace& t, bool oracle_only) {
  TraceSummary s;
  s.calls = t.calls;
  s.max_depth = t.max_depth;
  s.measure = t.measure;
  s.inner_gaps = t.inner_gaps;
  s.constructive_gap = t.constructive_gap;
  s.oracle_only = oracle_only;
  return s;
}

std::string Checksum(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

Json ToJson(const Certificate& c) {
  Json j;
  Json edges = Json::array();
  for (const Edge& e : c.graph.edges()) edges.push_back({e.u, e.v});
  j["graph"] = {{"n", c.graph.order()}, {"edges", edges}};
  j["k"] = c.k;
  j["command"] = c.command;
  j["mode"] = c.mode;
  j["branch"] = c.branch;
  if (c.command == "paths") j["roots"] = {c.x, c.y};
  j["family"] = c.family;
  std::vector<int> lengths;
  for (const auto& w : c.family) {
    lengths.push_back(static_cast<int>(w.size()) -
                      (c.command == "paths" ? 1 : 0));
  }
  j["lengths"] = lengths;
  j["class"] = c.declared_class;
  if (c.has_residues) {
    Json r = Json::object();
    for (const auto& [key, cyc] : c.residues) r[std::to_string(key)] = cyc;
    j["residues"] = r;
  }
  j["trace"] = {{"calls", c.trace.calls},
                {"max_depth", c.trace.max_depth},
                {"measure", c.trace.measure},
                {"inner_gaps", c.trace.inner_gaps},
                {"constructive_gap", c.trace.constructive_gap},
                {"oracle_only", c.trace.oracle_only}};
  j["version"] = c.version;
  return j;
}

Certificate FromJson(const Json& j) {
  Certificate c;
  const Json& g = j.at("graph");
  std::vector<Edge> edges;
  for (const Json& e : g.at("edges")) {
    if (e.size() != 2) Fail(ErrorKind::kParse, "edge must have two ends");
    edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  }
  c.graph = Graph::FromEdges(g.at("n").get<int>(), edges);
  c.k = j.at("k").get<int>();
  c.command = j.at("command").get<std::string>();
  c.mode = j.at("mode").get<std::string>();
  c.branch = j.at("branch").get<std::string>();
  if (j.contains("roots")) {
    const Json& r = j.at("roots");
    if (r.size() != 2) Fail(ErrorKind::kParse, "roots must have two entries");
    c.x = r.at(0).get<int>();
    c.y = r.at(1).get<int>();
  }
  c.family = j.at("family").get<std::vector<std::vector<Vertex>>>();
  c.declared_class = j.at("class").get<std::string>();
  if (j.contains("residues")) {
    c.has_residues = true;
    for (const auto& [key, cyc] : j.at("residues").items()) {
      size_t used = 0;
      int r = std::stoi(key, &used);
      if (used != key.size()) Fail(ErrorKind::kParse, "bad residue key " + key);
      c.residues[r] = cyc.get<CycleWitness>();
    }
  }
  const Json& t = j.at("trace");
  c.trace.calls = t.at("calls").get<int>();
  c.trace.max_depth = t.at("max_depth").get<int>();
  c.trace.measure = t.at("measure").get<int>();
  c.trace.inner_gaps = t.at("inner_gaps").get<int>();
  c.trace.constructive_gap = t.at("constructive_gap").get<bool>();
  c.trace.oracle_only = t.at("oracle_only").get<bool>();
  c.version = j.at("version").get<std::string>();
  return c;
}

VerifyReport Bad(std::string check, std::string detail) {
  return {false, std::move(check), std::move(detail)};
}

std::string ExpectedBranch(const Graph& g) {
  const bool three = g.order() >= 4 && VertexConnectivityAtLeast(g, 3);
  if (!three) return "I";
  return IsBipartite(g) ? "III" : "II";
}

}  // namespace

Certificate MakePathCertificate(const Graph& g, Vertex x, Vertex y, int k,
                                PathMode mode, const PathFamily& family,
                                const ExtractionTrace& trace,
                                bool oracle_only) {
  Certificate c;
  c.graph = g;
  c.k = k;
  c.command = "paths";
  c.mode = std::string(PathModeName(mode));
  c.x = x;
  c.y = y;
  c.branch = "-";
  c.family = family.members;
  c.declared_class = FamilyClassName(family.cls);
  c.trace = Summarize(trace, oracle_only);
  return c;
}

Certificate MakeCycleCertificate(const Graph& g, int k,
                                 const CycleExtraction& result) {
  Certificate c;
  c.graph = g;
  c.k = k;
  c.command = "cycles";
  c.mode = "cycles";
  c.branch = std::string(BranchName(result.branch));
  c.family = result.family.members;
  c.declared_class = FamilyClassName(result.family.cls);
  c.trace = Summarize(result.trace, result.oracle_only);
  return c;
}

Certificate MakeResidueCertificate(const Graph& g, int k,
                                   const ResidueExtraction& result) {
  Certificate c = MakeCycleCertificate(g, k, result.source);
  c.mode = "mod";
  c.has_residues = true;
  c.residues = result.by_residue;
  return c;
}

std::string SerializeCertificate(const Certificate& cert) {
  Json j = ToJson(cert);
  j["checksum"] = Checksum(j.dump());
  return j.dump(2) + "\n";
}

Certificate ParseCertificate(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    Fail(ErrorKind::kParse, std::string("certificate is not JSON: ") + e.what());
  }
  try {
    return FromJson(j);
  } catch (const Json::exception& e) {
    Fail(ErrorKind::kParse, std::string("certificate schema: ") + e.what());
  } catch (const Error& e) {
    Fail(ErrorKind::kParse, std::string("certificate schema: ") + e.what());
  }
}

VerifyReport VerifyCertificate(const Certificate& c) {
  const Graph& g = c.graph;
  if (c.k < 1) return Bad("k", "k must be positive");
  const bool paths = c.command == "paths";
  if (!paths && c.command != "cycles") {
    return Bad("command", "unknown command " + c.command);
  }

  // Hypotheses of the statement being certified.
  if (paths) {
    if (c.mode != "length" && c.mode != "flex") {
      return Bad("mode", "unknown path mode " + c.mode);
    }
    if (c.branch != "-") return Bad("branch", "path certificates carry no branch");
    if (!g.has_vertex(c.x) || !g.has_vertex(c.y) || c.x == c.y) {
      return Bad("roots", "roots are not two distinct vertices");
    }
    if (!IsRooted2Connected(g, c.x, c.y)) {
      return Bad("hypothesis", "graph is not rooted 2-connected");
    }
    const PathMode mode = c.mode == "length" ? PathMode::kLength : PathMode::kFlex;
    if (RootedMinDegree(g, c.x, c.y) < RequiredDegree(c.k, mode)) {
      return Bad("hypothesis", "internal degree bound fails");
    }
  } else {
    if (c.mode != "cycles" && c.mode != "mod") {
      return Bad("mode", "unknown cycle mode " + c.mode);
    }
    if (g.order() < 3 || !IsTwoConnected(g)) {
      return Bad("hypothesis", "graph is not 2-connected");
    }
    if (g.min_degree() < c.k + 1) {
      return Bad("hypothesis", "minimum degree below k+1");
    }
    const std::string expected = ExpectedBranch(g);
    if (c.branch != expected) {
      return Bad("branch", "declared " + c.branch + ", graph calls for " + expected);
    }
    if ((c.branch == "III") != c.trace.oracle_only) {
      return Bad("branch", "oracle flag does not match the branch");
    }
  }

  if (static_cast<int>(c.family.size()) != c.k) {
    return Bad("count", "family has " + std::to_string(c.family.size()) +
                            " members, expected " + std::to_string(c.k));
  }
  std::vector<int> lengths;
  for (size_t i = 0; i < c.family.size(); ++i) {
    const auto& w = c.family[i];
    const std::string which = "member " + std::to_string(i + 1);
    if (paths) {
      if (w.size() < 2 || w.front() != c.x || w.back() != c.y) {
        return Bad("endpoints", which + " does not run from x to y");
      }
      if (!IsPathIn(g, w)) return Bad("adjacency", which + " is not a path");
      lengths.push_back(PathLength(w));
    } else {
      if (!IsCycleIn(g, w)) return Bad("adjacency", which + " is not a cycle");
      lengths.push_back(CycleLength(w));
    }
  }

  const FamilyClass cls =
      Classify(lengths, paths ? ClassContext::kPaths : ClassContext::kCycles);
  const std::string name = FamilyClassName(cls);
  if (name != c.declared_class) {
    return Bad("classification",
               "declared " + c.declared_class + ", lengths give " + name);
  }
  bool admissible = false;
  if (paths) {
    admissible = cls.kind == FamilyKind::kLengthCondition ||
                 (c.mode == "flex" && cls.kind == FamilyKind::kSemiLength);
  } else {
    admissible = cls.kind == FamilyKind::kLengthCondition ||
                 cls.kind == FamilyKind::kConsecutive;
  }
  if (!admissible) {
    return Bad("classification", name + " is not admissible for " + c.command +
                                     "/" + c.mode);
  }

  if (c.has_residues != (c.mode == "mod")) {
    return Bad("residues", "residue map presence does not match the mode");
  }
  if (c.has_residues) {
    if (c.k % 2 == 0) return Bad("residues", "residue coverage needs odd k");
    if (static_cast<int>(c.residues.size()) != c.k) {
      return Bad("residues", "residue map does not have k keys");
    }
    std::set<std::vector<Vertex>> members(c.family.begin(), c.family.end());
    for (int r = 0; r < c.k; ++r) {
      auto it = c.residues.find(r);
      if (it == c.residues.end()) {
        return Bad("residues", "missing residue " + std::to_string(r));
      }
      if (!IsCycleIn(g, it->second) || !members.count(it->second)) {
        return Bad("residues", "witness for residue " + std::to_string(r) +
                                   " is not a family cycle");
      }
      if (CycleLength(it->second) % c.k != r) {
        return Bad("residues", "witness length is not " + std::to_string(r) +
                                   " mod k");
      }
    }
  }
  return {};
}

VerifyReport VerifyCertificateText(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    Fail(ErrorKind::kParse, std::string("certificate is not JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("checksum") || !j["checksum"].is_string()) {
    return Bad("schema", "missing checksum");
  }
  const std::string declared = j["checksum"].get<std::string>();
  j.erase("checksum");
  Certificate c;
  try {
    c = FromJson(j);
  } catch (const Json::exception& e) {
    return Bad("schema", e.what());
  } catch (const Error& e) {
    return Bad("schema", e.what());
  }
  if (ToJson(c) != j) return Bad("schema", "unexpected or non-canonical fields");
  VerifyReport report = VerifyCertificate(c);
  if (!report.ok) return report;
  if (Checksum(j.dump()) != declared) {
    return Bad("checksum", "content does not match the checksum");
  }
  return {};
}

}  // namespace cycmod
