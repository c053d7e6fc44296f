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


#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>
#include <tuple>

#include "cycmod/certificate.hpp"
#include "cycmod/cycles.hpp"
#include "cycmod/error.hpp"
#include "cycmod/families.hpp"
#include "cycmod/generate.hpp"
#include "cycmod/graph.hpp"
#include "cycmod/paths.hpp"
#include "cycmod/sweep.hpp"

namespace py = pybind11;
using namespace cycmod;

namespace {

Graph MakeGraph(int order, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v});
  return Graph::FromEdges(order, edges);
}

std::vector<std::pair<int, int>> EdgeList(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

PathMode ModeOf(const std::string& mode) {
  if (mode == "length") return PathMode::kLength;
  if (mode == "flex") return PathMode::kFlex;
  Fail(ErrorKind::kInvalidArgument, "mode must be 'length' or 'flex'");
}

ClassContext ContextOf(const std::string& context) {
  if (context == "any") return ClassContext::kAny;
  if (context == "paths") return ClassContext::kPaths;
  if (context == "cycles") return ClassContext::kCycles;
  Fail(ErrorKind::kInvalidArgument, "context must be 'any', 'paths' or 'cycles'");
}

py::dict PathResult(const PathExtraction& r) {
  py::dict d;
  d["lengths"] = r.family.lengths();
  d["class"] = FamilyClassName(r.family.cls);
  d["members"] = r.family.members;
  d["constructive_gap"] = r.trace.constructive_gap;
  return d;
}

py::dict CycleResult(const CycleExtraction& r) {
  py::dict d;
  d["branch"] = std::string(BranchName(r.branch));
  d["lengths"] = r.family.lengths();
  d["class"] = FamilyClassName(r.family.cls);
  d["members"] = r.family.members;
  d["oracle_only"] = r.oracle_only;
  d["constructive_gap"] = r.trace.constructive_gap;
  return d;
}

}  // namespace

PYBIND11_MODULE(_cycmod, m) {
  m.doc() = "Path and cycle families with prescribed length patterns.";
  m.attr("__version__") = "1.0.0";

  // Leaked on purpose so it outlives interpreter shutdown.
  static auto* error = new py::object(
      py::exception<Error>(m, "CycmodError", PyExc_ValueError));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = (*error)(e.what());
      exc.attr("kind") = std::string(ErrorKindName(e.kind()));
      PyErr_SetObject(error->ptr(), exc.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init(&MakeGraph), py::arg("order"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &EdgeList)
      .def("neighbors", &Graph::neighbors, py::arg("v"))
      .def("degree", &Graph::degree, py::arg("v"))
      .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
      .def("min_degree", &Graph::min_degree)
      .def("to_text", &FormatGraph)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        std::ostringstream out;
        out << "Graph(order=" << g.order() << ", size=" << g.size() << ")";
        return out.str();
      });

  m.def("parse_graph", py::overload_cast<const std::string&>(&ParseGraph),
        py::arg("text"));
  m.def("read_graph", &ReadGraphFile, py::arg("path"));
  m.def("complete_graph", &CompleteGraph, py::arg("n"));
  m.def("cycle_graph", &CycleGraph, py::arg("n"));
  m.def("complete_bipartite", &CompleteBipartite, py::arg("a"), py::arg("b"));
  m.def("petersen_graph", &PetersenGraph);
  m.def("wheel_graph", &WheelGraph, py::arg("spokes"));

  m.def("classify",
        [](const std::vector<int>& lengths, const std::string& context) {
          return FamilyClassName(Classify(lengths, ContextOf(context)));
        },
        py::arg("lengths"), py::arg("context") = "any");

  m.def("find_paths",
        [](const Graph& g, Vertex x, Vertex y, int k, const std::string& mode) {
          return PathResult(FindPaths(g, x, y, k, ModeOf(mode)));
        },
        py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("k"),
        py::arg("mode") = "length");

  m.def("find_cycles",
        [](const Graph& g, int k) { return CycleResult(FindKCycles(g, k)); },
        py::arg("graph"), py::arg("k"));

  m.def("residues_mod_k",
        [](const Graph& g, int k) { return AllResiduesModK(g, k).by_residue; },
        py::arg("graph"), py::arg("k"));

  m.def("cycle_spectrum",
        [](const Graph& g) { return CycleLengthSpectrum(g); }, py::arg("graph"));

  m.def("path_certificate",
        [](const Graph& g, Vertex x, Vertex y, int k, const std::string& mode) {
          const PathMode pm = ModeOf(mode);
          PathExtraction r = FindPaths(g, x, y, k, pm);
          return SerializeCertificate(
              MakePathCertificate(g, x, y, k, pm, r.family, r.trace, false));
        },
        py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("k"),
        py::arg("mode") = "length");

  m.def("cycle_certificate",
        [](const Graph& g, int k, bool residues) {
          if (residues) {
            return SerializeCertificate(
                MakeResidueCertificate(g, k, AllResiduesModK(g, k)));
          }
          return SerializeCertificate(MakeCycleCertificate(g, k, FindKCycles(g, k)));
        },
        py::arg("graph"), py::arg("k"), py::arg("residues") = false);

  m.def("verify_certificate",
        [](const std::string& text) {
          VerifyReport r = VerifyCertificateText(text);
          return std::make_tuple(r.ok, r.check, r.detail);
        },
        py::arg("text"));

  m.def("generate_graph",
        [](int n, int min_degree, int connectivity, bool bipartite,
           std::uint64_t seed) {
          GenSpec spec;
          spec.n = n;
          spec.min_degree = min_degree;
          spec.connectivity = connectivity;
          spec.bipartite = bipartite;
          spec.seed = seed;
          return GenerateGraph(spec);
        },
        py::arg("n"), py::arg("min_degree"), py::arg("connectivity") = 2,
        py::arg("bipartite") = false, py::arg("seed") = 0);

  m.def("canonical_code", &CanonicalCode, py::arg("graph"));

  m.def("sweep",
        [](int n_min, int n_max, int k_max, bool exhaustive, int samples,
           std::uint64_t seed) {
          SweepOptions opt;
          opt.n_min = n_min;
          opt.n_max = n_max;
          opt.k_max = k_max;
          opt.exhaustive = exhaustive;
          opt.samples = samples;
          opt.seed = seed;
          SweepReport r = RunSweep(opt);
          py::dict d;
          d["instances"] = r.instances;
          d["failures"] = r.failures;
          d["gaps"] = r.gaps;
          d["gap_rate"] = r.GapRate();
          d["report"] = FormatSweepReport(r);
          return d;
        },
        py::arg("n_min") = 3, py::arg("n_max") = 6, py::arg("k_max") = 3,
        py::arg("exhaustive") = true, py::arg("samples") = 0,
        py::arg("seed") = 1);
}
