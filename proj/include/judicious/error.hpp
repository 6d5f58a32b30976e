// Copyright 2026 The Judicious Authors
//
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace judicious {

enum class ErrorCode {
  kContractViolation,
  kParity,
  kSizeLimit,
  kDomain,
  kNoEdge,
  kInvalidCycle,
  kInvalidMultiplicity,
  kInfeasible,
  kIndex,
  kParse,
  kUnknownId,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kContractViolation: return "contract_violation";
    case ErrorCode::kParity: return "parity";
    case ErrorCode::kSizeLimit: return "size_limit";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kNoEdge: return "no_edge";
    case ErrorCode::kInvalidCycle: return "invalid_cycle";
    case ErrorCode::kInvalidMultiplicity: return "invalid_multiplicity";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kIndex: return "index";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kUnknownId: return "unknown_id";
  }
  return "unknown";
}

// Every failure raised by the library carries a machine-readable code so the
// CLI can map it to an exit status and tests can match on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace judicious
