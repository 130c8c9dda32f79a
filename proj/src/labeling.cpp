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

#include "antimagic/labeling.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "antimagic/error.hpp"

namespace antimagic {

Labeling::Labeling(std::vector<Label> labels) : labels_(std::move(labels)) {
  std::vector<char> seen(labels_.size() + 1, 0);
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    const Label l = labels_[v];
    if (l == 0 || l > labels_.size()) {
      throw Error(ErrorKind::kInvalidLabeling,
                  "label " + std::to_string(l) + " of " + vertex_name(static_cast<Vertex>(v)) +
                      " outside 1.." + std::to_string(labels_.size()));
    }
    if (seen[l]) {
      throw Error(ErrorKind::kInvalidLabeling,
                  "label " + std::to_string(l) + " used twice; labelings are bijective");
    }
    seen[l] = 1;
  }
}

Labeling Labeling::identity(std::size_t n) {
  std::vector<Label> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[v] = static_cast<Label>(v + 1);
  return Labeling(std::move(labels));
}

NeighborhoodTable::NeighborhoodTable(const DistanceMatrix& dm, const DistanceSet& d,
                                     DistancePolicy policy) {
  if (policy == DistancePolicy::kStrict) d.require_fits(dm.partial_diameter());
  const std::size_t n = dm.order();
  // Membership lookup over 0..n-1, the only distances that can occur.
  std::vector<char> wanted(n, 0);
  for (const std::size_t k : d.values()) {
    if (k < n) wanted[k] = 1;
  }
  offsets_.reserve(n + 1);
  offsets_.push_back(0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < n; ++u) {
      const auto dist = dm.raw(v, u);
      if (dist != DistanceMatrix::kUnreachable && wanted[static_cast<std::size_t>(dist)]) {
        members_.push_back(u);
      }
    }
    offsets_.push_back(members_.size());
  }
}

std::optional<VertexPair> NeighborhoodTable::equal_pair() const {
  const std::size_t n = order();
  for (Vertex u = 0; u < n; ++u) {
    const auto a = members(u);
    for (Vertex v = u + 1; v < n; ++v) {
      const auto b = members(v);
      if (std::equal(a.begin(), a.end(), b.begin(), b.end())) return VertexPair{u, v};
    }
  }
  return std::nullopt;
}

std::vector<Vertex> d_neighborhood(const DistanceMatrix& dm, Vertex v,
                                   const DistanceSet& d, DistancePolicy policy) {
  if (policy == DistancePolicy::kStrict) d.require_fits(dm.partial_diameter());
  std::vector<Vertex> out;
  for (Vertex u = 0; u < dm.order(); ++u) {
    const auto dist = dm(v, u);
    if (dist && d.contains(*dist)) out.push_back(u);
  }
  return out;
}

WeightProfile weight_profile(const NeighborhoodTable& table, const Labeling& f) {
  const std::size_t n = table.order();
  if (f.size() != n) {
    throw Error(ErrorKind::kInvalidLabeling,
                "labeling has " + std::to_string(f.size()) + " labels for " +
                    std::to_string(n) + " vertices");
  }
  WeightProfile profile;
  profile.weights.resize(n);
  for (Vertex v = 0; v < n; ++v) profile.weights[v] = table.weight(v, f.labels());

  std::unordered_map<Weight, std::vector<Vertex>> by_weight;
  for (Vertex v = 0; v < n; ++v) by_weight[profile.weights[v]].push_back(v);
  for (const auto& [w, group] : by_weight) {
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        profile.collisions.emplace_back(group[a], group[b]);
      }
    }
  }
  std::sort(profile.collisions.begin(), profile.collisions.end());
  profile.distinct = profile.collisions.empty();
  return profile;
}

WeightProfile weight_profile(const DistanceMatrix& dm, const Labeling& f,
                             const DistanceSet& d, DistancePolicy policy) {
  return weight_profile(NeighborhoodTable(dm, d, policy), f);
}

bool is_d_antimagic(const DistanceMatrix& dm, const Labeling& f, const DistanceSet& d,
                    DistancePolicy policy) {
  return weight_profile(dm, f, d, policy).distinct;
}

bool is_d_antimagic(const OrientedGraph& g, const Labeling& f, const DistanceSet& d,
                    DistancePolicy policy) {
  return is_d_antimagic(DistanceMatrix(g), f, d, policy);
}

std::optional<Weight> magic_constant(const DistanceMatrix& dm, const Labeling& f,
                                     const DistanceSet& d, DistancePolicy policy) {
  const auto profile = weight_profile(dm, f, d, policy);
  if (profile.weights.empty()) return std::nullopt;
  const Weight first = profile.weights.front();
  for (const Weight w : profile.weights) {
    if (w != first) return std::nullopt;
  }
  return first;
}

std::optional<Weight> magic_constant(const OrientedGraph& g, const Labeling& f,
                                     const DistanceSet& d, DistancePolicy policy) {
  return magic_constant(DistanceMatrix(g), f, d, policy);
}

std::optional<VertexPair> equal_neighborhood_pair(const DistanceMatrix& dm,
                                                  const DistanceSet& d,
                                                  DistancePolicy policy) {
  return NeighborhoodTable(dm, d, policy).equal_pair();
}

std::optional<VertexPair> distance_antimagic_obstruction(const OrientedGraph& g) {
  const auto sink_list = sinks(g);
  if (sink_list.size() >= 2) return VertexPair{sink_list[0], sink_list[1]};
  if (sink_list.size() == 1) {
    std::vector<Vertex> feeders;
    for (const Vertex u : g.in_neighbors(sink_list[0])) {
      if (g.out_degree(u) == 1) feeders.push_back(u);
    }
    if (feeders.size() >= 2) return VertexPair{feeders[0], feeders[1]};
  }
  return std::nullopt;
}

DualityReport check_duality(const OrientedGraph& g, const Labeling& f,
                            const DistanceSet& d) {
  if (!is_strongly_connected(g)) {
    throw Error(ErrorKind::kPreconditionViolation,
                "complement duality needs a strongly connected graph");
  }
  const DistanceMatrix dm(g);
  DualityReport report{d, complement_distance_set(d, dm.partial_diameter()),
                       label_total(g.order())};
  const auto w = weight_profile(dm, f, report.d);
  const auto w_star = weight_profile(dm, f, report.complement);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (w.weights[v] + w_star.weights[v] != report.total) report.weight_sums_hold = false;
  }
  report.antimagic = w.distinct;
  report.complement_antimagic = w_star.distinct;
  const auto constant = [](const WeightProfile& p) -> std::optional<Weight> {
    for (const Weight x : p.weights) {
      if (x != p.weights.front()) return std::nullopt;
    }
    return p.weights.front();
  };
  report.magic = constant(w);
  report.complement_magic = constant(w_star);
  return report;
}

}  // namespace antimagic
