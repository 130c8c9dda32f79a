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

// Linear forests: disjoint unions of oriented paths.
//
// Vertex layout of build_forest is fixed: component blocks in spec order,
// within a block the copies s = 1..m_j, within a copy the path vertices
// i = 1..n_j. vertex_index() and locate() convert between the layout and
// the (j, s, i) naming, all three 1-based.

#ifndef ANTIMAGIC_FOREST_HPP_
#define ANTIMAGIC_FOREST_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "antimagic/digraph.hpp"

namespace antimagic {

struct PathComponent {
  std::size_t multiplicity = 1;
  std::size_t order = 1;

  friend bool operator==(const PathComponent&, const PathComponent&) = default;
};

enum class ForestOrientation {
  // Every arc points from v{i+1} to vi inside its copy.
  kPhi,
  // Every arc points from vi to v{i+1}.
  kForward,
  // Theta orientations apply to a single path of order >= 3.
  kThetaPrime,
  kThetaDoublePrime,
  // Arcs given explicitly; they must orient every path edge exactly once.
  kExplicit,
};

struct ForestVertex {
  std::size_t component = 1;  // j
  std::size_t copy = 1;       // s
  std::size_t position = 1;   // i
};

class LinearForestSpec {
 public:
  // Throws Error(kInvalidSpec) when empty, when a multiplicity or order is 0,
  // when orders are not strictly increasing, or when a theta orientation is
  // requested for anything but one path of order >= 3.
  explicit LinearForestSpec(std::vector<PathComponent> components,
                            ForestOrientation orientation = ForestOrientation::kPhi,
                            std::vector<Arc> explicit_arcs = {});

  // Sorts by order and merges equal orders into one multiplicity.
  static LinearForestSpec merged(std::vector<PathComponent> components,
                                 ForestOrientation orientation = ForestOrientation::kPhi);

  const std::vector<PathComponent>& components() const noexcept {
    return components_;
  }
  ForestOrientation orientation() const noexcept { return orientation_; }
  const std::vector<Arc>& explicit_arcs() const noexcept { return explicit_arcs_; }

  std::size_t total_order() const noexcept { return total_order_; }
  std::size_t path_count() const noexcept { return path_count_; }

  // 0-based index of v_i^{j,s}. Throws Error(kInvalidParameter) when out of range.
  Vertex vertex_index(std::size_t component, std::size_t copy,
                      std::size_t position) const;
  ForestVertex locate(Vertex v) const;
  // "v3^{2,1}"
  std::string vertex_label(Vertex v) const;

  // Undirected path edges (lower index first), copy by copy.
  std::vector<Arc> edges() const;

  // "2x3,1x5,1x7"
  std::string to_string() const;

  friend bool operator==(const LinearForestSpec&, const LinearForestSpec&) = default;

 private:
  std::vector<PathComponent> components_;
  ForestOrientation orientation_;
  std::vector<Arc> explicit_arcs_;
  std::vector<std::size_t> block_offsets_;
  std::size_t total_order_ = 0;
  std::size_t path_count_ = 0;
};

// Throws Error(kInvalidSpec) when explicit arcs do not orient the forest.
OrientedGraph build_forest(const LinearForestSpec& spec);

}  // namespace antimagic

#endif  // ANTIMAGIC_FOREST_HPP_
