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

// Closed-form D-antimagic labelings for oriented paths and linear forests.
// Every constructor verifies its own output and throws std::logic_error if
// the verifier ever disagrees.

#ifndef ANTIMAGIC_CONSTRUCTIONS_HPP_
#define ANTIMAGIC_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include "antimagic/digraph.hpp"
#include "antimagic/distance_set.hpp"
#include "antimagic/forest.hpp"
#include "antimagic/labeling.hpp"

namespace antimagic {

namespace theorem {
inline constexpr const char* kUnidirectionalPath = "unidirectional-path";
inline constexpr const char* kThetaPrimePath = "theta-prime-path";
inline constexpr const char* kThetaDoublePrimePath = "theta-double-prime-path";
inline constexpr const char* kMpnZeroK = "mpn-zero-k";
inline constexpr const char* kMpnGeneral = "mpn-general";
inline constexpr const char* kLinearForest = "linear-forest-zero-one";
}  // namespace theorem

struct ConstructionResult {
  OrientedGraph graph;
  Labeling labeling;
  DistanceSet distance_set;
  std::string theorem;
  WeightProfile weights;
  // Set for the forest families; gives the v_i^{j,s} naming.
  std::optional<LinearForestSpec> forest;
};

// v1 -> ... -> vn labelled g(vi) = n - i + 1. Requires n >= 3,
// min(D) <= 1 and max(D) <= n - 1.
ConstructionResult label_unidirectional_path(std::size_t n, const DistanceSet& d);

// Theta-prime path labelled g(v1) = 1, g(vi) = n - i + 2.
// Requires n >= 3 and {0, n-2} <= D <= {0..n-2}.
ConstructionResult label_theta_prime(std::size_t n, const DistanceSet& d);

// Theta-double-prime path labelled f(vi) = i, same hypothesis.
ConstructionResult label_theta_double_prime(std::size_t n, const DistanceSet& d);

// m copies of P_n under Phi with h(v_i^j) = m(i-1) + j and D = {0, k},
// 1 <= k <= n - 1.
ConstructionResult label_mpn(std::size_t m, std::size_t n, std::size_t k);

// Same orientation and labels for any D with min(D) = 0, max(D) <= n - 1.
// Requires m, n >= 2.
ConstructionResult label_mpn_general(std::size_t m, std::size_t n,
                                     const DistanceSet& d);

// f* on a Phi-oriented linear forest, D = {0, 1}.
ConstructionResult label_forest(const LinearForestSpec& spec);

// f*(v_i^{j,s}) evaluated directly from its closed form (1-based indices).
Label forest_label(const LinearForestSpec& spec, std::size_t component,
                   std::size_t copy, std::size_t position);

}  // namespace antimagic

#endif  // ANTIMAGIC_CONSTRUCTIONS_HPP_
