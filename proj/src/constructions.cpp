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

#include "antimagic/constructions.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "antimagic/error.hpp"

namespace antimagic {
namespace {

[[noreturn]] void hypothesis(const std::string& what) {
  throw Error(ErrorKind::kTheoremPrecondition, what);
}

ConstructionResult finish(OrientedGraph g, std::vector<Label> labels, DistanceSet d,
                          const char* theorem_tag,
                          std::optional<LinearForestSpec> forest = std::nullopt) {
  Labeling f(std::move(labels));
  auto weights = weight_profile(DistanceMatrix(g), f, d);
  if (!weights.distinct) {
    throw std::logic_error(std::string("construction ") + theorem_tag + " produced " +
                           std::to_string(weights.collisions.size()) +
                           " weight collisions for D = " + d.to_string());
  }
  return ConstructionResult{std::move(g), std::move(f), std::move(d), theorem_tag,
                            std::move(weights), std::move(forest)};
}

void require_theta_hypothesis(std::size_t n, const DistanceSet& d, const char* name) {
  if (n < 3) hypothesis(std::string(name) + " path needs n >= 3");
  if (!d.contains(0) || !d.contains(n - 2) || d.max() > n - 2) {
    hypothesis(std::string(name) + " labeling needs {0, n-2} <= D <= {0..n-2}; got D = " +
               d.to_string() + " for n = " + std::to_string(n));
  }
}

}  // namespace

ConstructionResult label_unidirectional_path(std::size_t n, const DistanceSet& d) {
  if (n < 3) hypothesis("unidirectional path labeling needs n >= 3");
  if (d.min() > 1) {
    hypothesis("a D-antimagic path needs min(D) <= 1; got D = " + d.to_string());
  }
  if (d.max() > n - 1) {
    hypothesis("D = " + d.to_string() + " exceeds the diameter n - 1 = " +
               std::to_string(n - 1));
  }
  std::vector<Label> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[v] = static_cast<Label>(n - v);
  return finish(build_path(n, PathOrientation::kForward), std::move(labels), d,
                theorem::kUnidirectionalPath);
}

ConstructionResult label_theta_prime(std::size_t n, const DistanceSet& d) {
  require_theta_hypothesis(n, d, "theta-prime");
  std::vector<Label> labels(n);
  labels[0] = 1;
  // g(vi) = n - i + 2 with i = v + 1.
  for (std::size_t v = 1; v < n; ++v) labels[v] = static_cast<Label>(n - v + 1);
  return finish(build_path(n, PathOrientation::kThetaPrime), std::move(labels), d,
                theorem::kThetaPrimePath);
}

ConstructionResult label_theta_double_prime(std::size_t n, const DistanceSet& d) {
  require_theta_hypothesis(n, d, "theta-double-prime");
  std::vector<Label> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[v] = static_cast<Label>(v + 1);
  return finish(build_path(n, PathOrientation::kThetaDoublePrime), std::move(labels), d,
                theorem::kThetaDoublePrimePath);
}

namespace {

ConstructionResult label_phi_copies(std::size_t m, std::size_t n, DistanceSet d,
                                    const char* tag) {
  LinearForestSpec spec({{m, n}}, ForestOrientation::kPhi);
  std::vector<Label> labels(spec.total_order());
  for (std::size_t j = 1; j <= m; ++j) {
    for (std::size_t i = 1; i <= n; ++i) {
      labels[spec.vertex_index(1, j, i)] = static_cast<Label>(m * (i - 1) + j);
    }
  }
  return finish(build_forest(spec), std::move(labels), std::move(d), tag, spec);
}

}  // namespace

ConstructionResult label_mpn(std::size_t m, std::size_t n, std::size_t k) {
  if (m < 1 || n < 2) hypothesis("mPn labeling needs m >= 1 and n >= 2");
  if (k < 1 || k > n - 1) {
    hypothesis("mPn {0,k} labeling needs 1 <= k <= n-1; got k = " + std::to_string(k));
  }
  return label_phi_copies(m, n, DistanceSet{0, k}, theorem::kMpnZeroK);
}

ConstructionResult label_mpn_general(std::size_t m, std::size_t n, const DistanceSet& d) {
  if (m < 2 || n < 2) hypothesis("general mPn labeling needs m, n >= 2");
  if (d.min() != 0) {
    hypothesis("a D-antimagic mPn needs min(D) = 0; got D = " + d.to_string());
  }
  if (d.max() > n - 1) {
    hypothesis("D = " + d.to_string() + " exceeds the path diameter n - 1 = " +
               std::to_string(n - 1));
  }
  return label_phi_copies(m, n, d, theorem::kMpnGeneral);
}

Label forest_label(const LinearForestSpec& spec, std::size_t component, std::size_t copy,
                   std::size_t position) {
  // Validates the indices.
  (void)spec.vertex_index(component, copy, position);
  const auto& parts = spec.components();
  const std::size_t t = parts.size();
  const auto m = [&](std::size_t q) { return parts[q - 1].multiplicity; };
  const auto len = [&](std::size_t q) -> std::size_t {
    return q == 0 ? 0 : parts[q - 1].order;
  };
  const std::size_t i = position;
  // Layer of the position: len(layer - 1) < i <= len(layer).
  std::size_t layer = 1;
  while (len(layer) < i) ++layer;

  std::size_t value = 0;
  for (std::size_t q = 1; q < layer; ++q) {
    std::size_t longer = 0;
    for (std::size_t p = q; p <= t; ++p) longer += m(p);
    value += longer * (len(q) - len(q - 1));
  }
  std::size_t alive = 0;
  for (std::size_t q = layer; q <= t; ++q) alive += m(q);
  value += (i - len(layer - 1) - 1) * alive;
  for (std::size_t q = layer; q < component; ++q) value += m(q);
  value += copy;
  return static_cast<Label>(value);
}

ConstructionResult label_forest(const LinearForestSpec& spec) {
  if (spec.orientation() != ForestOrientation::kPhi) {
    hypothesis("the f* labeling is defined for the unidirectional orientation Phi");
  }
  const auto& parts = spec.components();
  if (parts.back().order < 2) {
    throw Error(ErrorKind::kInvalidDistanceSet,
                "D = {0,1} needs a path of order >= 2 in the forest");
  }
  std::vector<Label> labels(spec.total_order());
  for (std::size_t j = 1; j <= parts.size(); ++j) {
    for (std::size_t s = 1; s <= parts[j - 1].multiplicity; ++s) {
      for (std::size_t i = 1; i <= parts[j - 1].order; ++i) {
        labels[spec.vertex_index(j, s, i)] = forest_label(spec, j, s, i);
      }
    }
  }
  return finish(build_forest(spec), std::move(labels), DistanceSet{0, 1},
                theorem::kLinearForest, spec);
}

}  // namespace antimagic
