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

#ifndef ANTIMAGIC_ERROR_HPP_
#define ANTIMAGIC_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace antimagic {

enum class ErrorKind {
  kInvalidParameter,
  kInvalidGraph,
  kInvalidDistanceSet,
  kInvalidLabeling,
  kInvalidSpec,
  kNotAPath,
  kPreconditionViolation,
  // A construction was asked for parameters outside its theorem's hypothesis.
  kTheoremPrecondition,
  kParse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace antimagic

#endif  // ANTIMAGIC_ERROR_HPP_
