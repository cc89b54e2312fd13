// Copyright 2026 The facloc Authors
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

#ifndef FACLOC_ERROR_HPP_
#define FACLOC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace facloc {

// Every failure the library reports deliberately. Anything else escaping a
// facloc function is a programming error, not an input error.
enum class Errc {
  kEmptyAgents,
  kCoordinateOutOfRange,
  kEmptyRegion,
  kBadInterval,
  kBadFacilityCount,
  kEmptyList,
  kArityMismatch,
  kMechanismInfeasibleOutput,
  kInfeasibleMechanismOutput,
  kNegativeValue,
  kSyntaxError,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::kEmptyAgents: return "EmptyAgents";
    case Errc::kCoordinateOutOfRange: return "CoordinateOutOfRange";
    case Errc::kEmptyRegion: return "EmptyRegion";
    case Errc::kBadInterval: return "BadInterval";
    case Errc::kBadFacilityCount: return "BadFacilityCount";
    case Errc::kEmptyList: return "EmptyList";
    case Errc::kArityMismatch: return "ArityMismatch";
    case Errc::kMechanismInfeasibleOutput: return "MechanismInfeasibleOutput";
    case Errc::kInfeasibleMechanismOutput: return "InfeasibleMechanismOutput";
    case Errc::kNegativeValue: return "NegativeValue";
    case Errc::kSyntaxError: return "SyntaxError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  Errc code() const { return code_; }

  // Message without the error-name prefix, for rethrowing with context.
  const std::string& detail() const { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace facloc

#endif  // FACLOC_ERROR_HPP_
