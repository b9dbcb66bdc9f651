// Copyright 2026 The symratio Authors
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

#ifndef SYMRATIO_ERRORS_HPP_
#define SYMRATIO_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace symratio {

enum class Errc {
  kSelfLoop,
  kVertexOutOfRange,
  kDuplicateEdge,
  kNotASubset,
  kMalformedGraph6,
  kMalformedEdgeList,
  kCapExceeded,
  kDegreeMismatch,
  kInvalidPermutation,
  kEmptyEdgeSet,
  kMOutOfRange,
  kRangeError,
  kNotDivisible,
  kPreconditionViolated,
};

constexpr std::string_view ErrcName(Errc code) {
  switch (code) {
    case Errc::kSelfLoop: return "SelfLoop";
    case Errc::kVertexOutOfRange: return "VertexOutOfRange";
    case Errc::kDuplicateEdge: return "DuplicateEdge";
    case Errc::kNotASubset: return "NotASubset";
    case Errc::kMalformedGraph6: return "MalformedGraph6";
    case Errc::kMalformedEdgeList: return "MalformedEdgeList";
    case Errc::kCapExceeded: return "CapExceeded";
    case Errc::kDegreeMismatch: return "DegreeMismatch";
    case Errc::kInvalidPermutation: return "InvalidPermutation";
    case Errc::kEmptyEdgeSet: return "EmptyEdgeSet";
    case Errc::kMOutOfRange: return "MOutOfRange";
    case Errc::kRangeError: return "RangeError";
    case Errc::kNotDivisible: return "NotDivisible";
    case Errc::kPreconditionViolated: return "PreconditionViolated";
  }
  return "Unknown";
}

// All library failures are reported through this exception; `code()` tells
// callers (and the CLI exit-code mapping) which contract was broken.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(ErrcName(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace symratio

#endif  // SYMRATIO_ERRORS_HPP_
