// Copyright 2026 The Antimagic Authors.
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

#include "antimagic/error.hpp"

namespace antimagic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidParameter: return "invalid-parameter";
    case ErrorKind::kInvalidGraph: return "invalid-graph";
    case ErrorKind::kInvalidDistanceSet: return "invalid-distance-set";
    case ErrorKind::kInvalidLabeling: return "invalid-labeling";
    case ErrorKind::kInvalidSpec: return "invalid-spec";
    case ErrorKind::kNotAPath: return "not-a-path";
    case ErrorKind::kPreconditionViolation: return "precondition-violation";
    case ErrorKind::kTheoremPrecondition: return "theorem-precondition-violation";
    case ErrorKind::kParse: return "parse-error";
  }
  return "unknown";
}

}  // namespace antimagic
