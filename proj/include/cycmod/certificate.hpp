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

// Self-contained JSON certificates. Verification re-derives everything
// from the embedded graph and never calls an extractor.

#ifndef CYCMOD_CERTIFICATE_HPP_
#define CYCMOD_CERTIFICATE_HPP_

#include <map>
#include <string>
#include <vector>

#include "cycmod/cycles.hpp"
#include "cycmod/graph.hpp"
#include "cycmod/paths.hpp"

namespace cycmod {

inline constexpr const char* kToolVersion = "cycmod 1.0.0";

struct TraceSummary {
  int calls = 0;
  int max_depth = 0;
  int measure = 0;
  int inner_gaps = 0;
  bool constructive_gap = false;
  bool oracle_only = false;
};

struct Certificate {
  Graph graph;
  int k = 0;
  std::string command;  // "paths" or "cycles"
  std::string mode;     // paths: "length" or "flex"; cycles: "cycles"
  Vertex x = -1;        // paths only
  Vertex y = -1;
  std::string branch;   // cycles: I, II or III; paths: "-"
  std::vector<std::vector<Vertex>> family;
  std::string declared_class;
  bool has_residues = false;
  std::map<int, CycleWitness> residues;
  TraceSummary trace;
  std::string version = kToolVersion;
};

Certificate MakePathCertificate(const Graph& g, Vertex x, Vertex y, int k,
                                PathMode mode, const PathFamily& family,
                                const ExtractionTrace& trace,
                                bool oracle_only);

Certificate MakeCycleCertificate(const Graph& g, int k,
                                 const CycleExtraction& result);

Certificate MakeResidueCertificate(const Graph& g, int k,
                                   const ResidueExtraction& result);

// Canonical JSON: sorted keys, sorted edge list, trailing checksum field.
std::string SerializeCertificate(const Certificate& cert);

// Raises Parse on malformed JSON or a schema mismatch.
Certificate ParseCertificate(const std::string& text);

struct VerifyReport {
  bool ok = true;
  std::string check;   // first failed check
  std::string detail;
};

VerifyReport VerifyCertificate(const Certificate& cert);

// Parses, verifies the content, then the checksum. JSON syntax errors
// raise Parse; schema errors are reported as a failed "schema" check.
VerifyReport VerifyCertificateText(const std::string& text);

}  // namespace cycmod

#endif  // CYCMOD_CERTIFICATE_HPP_
