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

#include "cycmod/error.hpp"

namespace cycmod {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return "InvalidArgument";
    case ErrorKind::kParse:
      return "ParseError";
    case ErrorKind::kDisconnected:
      return "Disconnected";
    case ErrorKind::kNotRooted2Connected:
      return "NotRooted2Connected";
    case ErrorKind::kHypothesisNotMet:
      return "HypothesisNotMet";
    case ErrorKind::kInvalidWitness:
      return "InvalidWitness";
    case ErrorKind::kBudgetExceeded:
      return "BudgetExceeded";
  }
  return "Unknown";
}

void Fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(ErrorKindName(kind)) + ": " + what);
}

}  // namespace cycmod
