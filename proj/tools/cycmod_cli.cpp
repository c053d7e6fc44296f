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

// cycmod command-line tool.
//
// Exit codes: 0 success, 1 parse or usage error, 2 hypothesis not met,
// 3 no family or constructive gap, 4 verification failed, 5 generator spec
// infeasible, 6 search budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cycmod/certificate.hpp"
#include "cycmod/cycles.hpp"
#include "cycmod/decomposition.hpp"
#include "cycmod/error.hpp"
#include "cycmod/generate.hpp"
#include "cycmod/oracle.hpp"
#include "cycmod/paths.hpp"
#include "cycmod/sweep.hpp"

namespace {

using namespace cycmod;

enum Exit {
  kOk = 0,
  kParseError = 1,
  kHypothesis = 2,
  kNoFamily = 3,
  kVerifyFailed = 4,
  kInfeasible = 5,
  kBudget = 6,
};

int ExitFor(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kParse:
      return kParseError;
    case ErrorKind::kDisconnected:
    case ErrorKind::kNotRooted2Connected:
    case ErrorKind::kHypothesisNotMet:
      return kHypothesis;
    case ErrorKind::kInvalidWitness:
      return kNoFamily;
    case ErrorKind::kBudgetExceeded:
      return kBudget;
  }
  return kParseError;
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kParse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct PathsArgs {
  std::string graph;
  int x = -1;
  int y = -1;
  int k = 1;
  std::string mode = "length";
  bool oracle = false;
};

int RunPaths(const PathsArgs& a) {
  Graph g = ReadGraphFile(a.graph);
  if (!g.has_vertex(a.x) || !g.has_vertex(a.y) || a.x == a.y) {
    Fail(ErrorKind::kInvalidArgument, "roots must be two distinct vertices of the graph");
  }
  const PathMode mode = a.mode == "flex" ? PathMode::kFlex : PathMode::kLength;
  if (!a.oracle) {
    PathExtraction r = FindPaths(g, a.x, a.y, a.k, mode);
    std::cout << SerializeCertificate(MakePathCertificate(
        g, a.x, a.y, a.k, mode, r.family, r.trace, false));
    return r.trace.constructive_gap ? kNoFamily : kOk;
  }
  if (!IsRooted2Connected(g, a.x, a.y)) {
    Fail(ErrorKind::kHypothesisNotMet, "(G, x, y) is not rooted 2-connected");
  }
  if (RootedMinDegree(g, a.x, a.y) < RequiredDegree(a.k, mode)) {
    Fail(ErrorKind::kHypothesisNotMet, "internal degree bound fails");
  }
  auto f = OraclePaths(g, a.x, a.y, a.k,
                       mode == PathMode::kLength ? OracleMode::kLength
                                                 : OracleMode::kLengthOrSemi);
  if (!f) {
    std::cerr << "no family of the requested kind exists\n";
    return kNoFamily;
  }
  ExtractionTrace trace;
  trace.measure = g.order() + g.size();
  std::cout << SerializeCertificate(
      MakePathCertificate(g, a.x, a.y, a.k, mode, *f, trace, true));
  return kOk;
}

int RunCycles(const std::string& path, int k, bool mod) {
  Graph g = ReadGraphFile(path);
  if (mod) {
    ResidueExtraction r = AllResiduesModK(g, k);
    std::cout << SerializeCertificate(MakeResidueCertificate(g, k, r));
    return r.source.trace.constructive_gap ? kNoFamily : kOk;
  }
  CycleExtraction r = FindKCycles(g, k);
  std::cout << SerializeCertificate(MakeCycleCertificate(g, k, r));
  return r.trace.constructive_gap ? kNoFamily : kOk;
}

int RunVerify(const std::string& path) {
  VerifyReport report = VerifyCertificateText(ReadText(path));
  if (report.ok) {
    std::cout << "OK\n";
    return kOk;
  }
  std::cout << "FAIL (" << report.check << "): " << report.detail << "\n";
  return kVerifyFailed;
}

int RunGen(const GenSpec& spec) {
  if (std::string why = InfeasibilityReason(spec); !why.empty()) {
    std::cerr << "infeasible: " << why << "\n";
    return kInfeasible;
  }
  auto g = GenerateGraph(spec);
  if (!g) {
    std::cerr << "no graph found within " << spec.max_attempts << " attempts\n";
    return kInfeasible;
  }
  std::cout << "c generated n=" << spec.n << " mindeg=" << spec.min_degree
            << " conn=" << spec.connectivity
            << (spec.bipartite ? " bipartite" : "") << " seed=" << spec.seed
            << "\n"
            << FormatGraph(*g);
  return kOk;
}

int RunSweepCommand(const SweepOptions& opt) {
  SweepReport report = RunSweep(opt);
  std::cout << FormatSweepReport(report);
  if (report.budget_exceeded) return kBudget;
  if (report.failures > 0 || report.gaps > 0) return kNoFamily;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k cycles and k paths with prescribed length patterns"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  PathsArgs pa;
  auto* paths = app.add_subcommand("paths", "k (x, y)-paths");
  paths->add_option("--graph", pa.graph, "graph file")->required();
  paths->add_option("--x", pa.x, "first root")->required();
  paths->add_option("--y", pa.y, "second root")->required();
  paths->add_option("--k", pa.k, "number of paths")->required();
  paths->add_option("--mode", pa.mode, "length or flex")
      ->check(CLI::IsMember({"length", "flex"}));
  paths->add_flag("--oracle", pa.oracle, "use the exhaustive search");

  std::string cycles_graph;
  int cycles_k = 1;
  bool cycles_mod = false;
  auto* cycles = app.add_subcommand("cycles", "k cycles");
  cycles->add_option("--graph", cycles_graph, "graph file")->required();
  cycles->add_option("--k", cycles_k, "number of cycles")->required();
  cycles->add_flag("--mod", cycles_mod, "also map every residue mod k");

  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "check a certificate");
  verify->add_option("--cert", cert_path, "certificate file")->required();

  GenSpec spec;
  auto* gen = app.add_subcommand("gen", "random graph with given properties");
  gen->add_option("--n", spec.n, "vertices")->required();
  gen->add_option("--mindeg", spec.min_degree, "minimum degree")->required();
  gen->add_option("--conn", spec.connectivity, "2 or 3")
      ->check(CLI::IsMember({2, 3}));
  gen->add_flag("--bipartite", spec.bipartite, "bipartite graph");
  gen->add_option("--seed", spec.seed, "random seed");
  gen->add_option("--attempts", spec.max_attempts, "rejection sampling cap");

  SweepOptions sweep_opt;
  sweep_opt.exhaustive = false;
  auto* sweep = app.add_subcommand("sweep", "batch run over small graphs");
  sweep->add_option("--nmin", sweep_opt.n_min, "smallest order");
  sweep->add_option("--nmax", sweep_opt.n_max, "largest order")->required();
  sweep->add_option("--kmax", sweep_opt.k_max, "largest k")->required();
  auto* ex = sweep->add_flag("--exhaustive", sweep_opt.exhaustive,
                             "every graph up to isomorphism");
  auto* sm = sweep->add_option("--samples", sweep_opt.samples, "random graphs");
  ex->excludes(sm);
  sweep->add_option("--seed", sweep_opt.seed, "random seed");
  bool no_paths = false;
  bool no_cycles = false;
  sweep->add_flag("--no-paths", no_paths, "skip path instances");
  sweep->add_flag("--no-cycles", no_cycles, "skip cycle instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*paths) return RunPaths(pa);
    if (*cycles) return RunCycles(cycles_graph, cycles_k, cycles_mod);
    if (*verify) return RunVerify(cert_path);
    if (*gen) return RunGen(spec);
    if (*sweep) {
      if (!sweep_opt.exhaustive && sweep_opt.samples <= 0) {
        std::cerr << "sweep needs --exhaustive or --samples M\n";
        return kParseError;
      }
      sweep_opt.paths = !no_paths;
      sweep_opt.cycles = !no_cycles;
      return RunSweepCommand(sweep_opt);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return ExitFor(e);
  }
  return kParseError;
}
