// Copyright 2026 The fqmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace fqm {

enum class ErrorKind {
    kDimension,       // operands of different qubit counts
    kInvalidSize,     // generator parameters out of range
    kParse,           // malformed text or JSON input
    kDuplicateLabel,
    kDanglingEndpoint,
    kInvalidGraph,    // self loops, duplicate edges
    kSchemeMismatch,  // scheme is not a bijection over the graph labels
    kGeometry,        // operation needs a lattice the graph is not
    kPrecondition,
    kCapExceeded,
    kUndefined,       // e.g. average over an empty edge set
    kUnknownFormula,
};

// Single error type for the library. The CLI maps kind() to exit codes.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace fqm
