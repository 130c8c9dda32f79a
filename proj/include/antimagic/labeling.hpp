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

// Vertex labelings and D-weights.
//
// The D-neighborhood of v is every u with d(v, u) in D, measured from v. The
// D-weight of v is the label sum over its D-neighborhood; an empty
// neighborhood weighs 0. A labeling is D-antimagic when all weights differ
// and D-magic when they all coincide.

#ifndef ANTIMAGIC_LABELING_HPP_
#define ANTIMAGIC_LABELING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "antimagic/digraph.hpp"
#include "antimagic/distance_set.hpp"

namespace antimagic {

using Label = std::uint32_t;
using Weight = std::uint64_t;

// A bijection from vertices 0..n-1 onto labels 1..n.
class Labeling {
 public:
  Labeling() = default;
  // Throws Error(kInvalidLabeling) unless `labels` is a permutation of 1..n.
  explicit Labeling(std::vector<Label> labels);

  static Labeling identity(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  Label operator[](Vertex v) const { return labels_[v]; }
  std::span<const Label> labels() const noexcept { return labels_; }

  friend auto operator<=>(const Labeling&, const Labeling&) = default;

 private:
  std::vector<Label> labels_;
};

using VertexPair = std::pair<Vertex, Vertex>;

struct WeightProfile {
  std::vector<Weight> weights;
  // Every pair u < v with equal weight, lexicographically sorted.
  std::vector<VertexPair> collisions;
  bool distinct = true;
};

// Strict rejects D with max(D) beyond the partial diameter; Clamp lets such
// distances simply match nothing.
enum class DistancePolicy { kStrict, kClamp };

// N_D(v) for every v, flattened.
class NeighborhoodTable {
 public:
  // Throws Error(kInvalidDistanceSet) under kStrict when D does not fit.
  NeighborhoodTable(const DistanceMatrix& dm, const DistanceSet& d,
                    DistancePolicy policy = DistancePolicy::kStrict);

  std::size_t order() const noexcept { return offsets_.size() - 1; }
  std::span<const Vertex> members(Vertex v) const {
    return std::span<const Vertex>(members_).subspan(
        offsets_[v], offsets_[v + 1] - offsets_[v]);
  }

  Weight weight(Vertex v, std::span<const Label> labels) const {
    Weight w = 0;
    for (const Vertex u : members(v)) w += labels[u];
    return w;
  }

  // First pair u < v (lexicographically) with N_D(u) == N_D(v).
  std::optional<VertexPair> equal_pair() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> members_;
};

std::vector<Vertex> d_neighborhood(const DistanceMatrix& dm, Vertex v,
                                   const DistanceSet& d,
                                   DistancePolicy policy = DistancePolicy::kStrict);

WeightProfile weight_profile(const DistanceMatrix& dm, const Labeling& f,
                             const DistanceSet& d,
                             DistancePolicy policy = DistancePolicy::kStrict);
WeightProfile weight_profile(const NeighborhoodTable& table, const Labeling& f);

bool is_d_antimagic(const DistanceMatrix& dm, const Labeling& f,
                    const DistanceSet& d,
                    DistancePolicy policy = DistancePolicy::kStrict);
bool is_d_antimagic(const OrientedGraph& g, const Labeling& f,
                    const DistanceSet& d,
                    DistancePolicy policy = DistancePolicy::kStrict);

// The magic constant, if every vertex has the same weight.
std::optional<Weight> magic_constant(const DistanceMatrix& dm, const Labeling& f,
                                     const DistanceSet& d,
                                     DistancePolicy policy = DistancePolicy::kStrict);
std::optional<Weight> magic_constant(const OrientedGraph& g, const Labeling& f,
                                     const DistanceSet& d,
                                     DistancePolicy policy = DistancePolicy::kStrict);

// Two distinct vertices with identical D-neighborhoods. When one exists no
// labeling can be D-antimagic.
std::optional<VertexPair> equal_neighborhood_pair(
    const DistanceMatrix& dm, const DistanceSet& d,
    DistancePolicy policy = DistancePolicy::kStrict);

// Structural obstruction to {1}-antimagic labelings: two sinks (both weigh
// 0), or a single sink with two in-neighbours of out-degree one (both weigh
// the sink's label). Returns the colliding pair.
std::optional<VertexPair> distance_antimagic_obstruction(const OrientedGraph& g);

// 1 + 2 + ... + n
constexpr Weight label_total(std::size_t n) {
  return static_cast<Weight>(n) * (n + 1) / 2;
}

struct DualityReport {
  DistanceSet d;
  DistanceSet complement;
  Weight total = 0;
  // omega_D(v) + omega_{D*}(v) == total at every v.
  bool weight_sums_hold = true;
  bool antimagic = false;
  bool complement_antimagic = false;
  std::optional<Weight> magic;
  std::optional<Weight> complement_magic;

  bool flags_agree() const { return antimagic == complement_antimagic; }
  // Either both magic with constants summing to total, or neither magic.
  bool magic_constants_complement() const {
    if (magic.has_value() != complement_magic.has_value()) return false;
    return !magic || *magic + *complement_magic == total;
  }
  bool holds() const {
    return weight_sums_hold && flags_agree() && magic_constants_complement();
  }
};

// Requires a strongly connected graph (Error(kPreconditionViolation)) and a
// proper D with non-empty complement (Error(kInvalidDistanceSet)).
DualityReport check_duality(const OrientedGraph& g, const Labeling& f,
                            const DistanceSet& d);

}  // namespace antimagic

#endif  // ANTIMAGIC_LABELING_HPP_
