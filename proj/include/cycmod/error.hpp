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

#ifndef CYCMOD_ERROR_HPP_
#define CYCMOD_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cycmod {

enum class ErrorKind {
  kInvalidArgument,
  kParse,
  kDisconnected,
  kNotRooted2Connected,
  kHypothesisNotMet,
  kInvalidWitness,
  kBudgetExceeded,
};

std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void Fail(ErrorKind kind, const std::string& what);

}  // namespace cycmod

#endif  // CYCMOD_ERROR_HPP_
