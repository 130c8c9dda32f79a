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

#include "antimagic/forest.hpp"

#include <algorithm>
#include <map>

#include "antimagic/error.hpp"

namespace antimagic {

LinearForestSpec::LinearForestSpec(std::vector<PathComponent> components,
                                   ForestOrientation orientation,
                                   std::vector<Arc> explicit_arcs)
    : components_(std::move(components)),
      orientation_(orientation),
      explicit_arcs_(std::move(explicit_arcs)) {
  if (components_.empty()) {
    throw Error(ErrorKind::kInvalidSpec, "linear forest needs at least one component");
  }
  for (std::size_t j = 0; j < components_.size(); ++j) {
    const auto& c = components_[j];
    if (c.multiplicity == 0 || c.order == 0) {
      throw Error(ErrorKind::kInvalidSpec, "multiplicities and path orders must be >= 1");
    }
    if (j > 0 && components_[j - 1].order >= c.order) {
      throw Error(ErrorKind::kInvalidSpec,
                  "path orders must be strictly increasing (n_j < n_j' for j < j'); "
                  "merge equal orders into one multiplicity");
    }
  }
  if (orientation_ == ForestOrientation::kThetaPrime ||
      orientation_ == ForestOrientation::kThetaDoublePrime) {
    if (components_.size() != 1 || components_[0].multiplicity != 1 ||
        components_[0].order < 3) {
      throw Error(ErrorKind::kInvalidSpec,
                  "theta orientations apply to a single path of order >= 3");
    }
  }
  if (orientation_ != ForestOrientation::kExplicit && !explicit_arcs_.empty()) {
    throw Error(ErrorKind::kInvalidSpec, "explicit arcs given without explicit orientation");
  }
  block_offsets_.reserve(components_.size());
  for (const auto& c : components_) {
    block_offsets_.push_back(total_order_);
    total_order_ += c.multiplicity * c.order;
    path_count_ += c.multiplicity;
  }
}

LinearForestSpec LinearForestSpec::merged(std::vector<PathComponent> components,
                                          ForestOrientation orientation) {
  std::map<std::size_t, std::size_t> by_order;
  for (const auto& c : components) by_order[c.order] += c.multiplicity;
  std::vector<PathComponent> out;
  for (const auto& [order, multiplicity] : by_order) out.push_back({multiplicity, order});
  return LinearForestSpec(std::move(out), orientation);
}

Vertex LinearForestSpec::vertex_index(std::size_t component, std::size_t copy,
                                      std::size_t position) const {
  if (component == 0 || component > components_.size()) {
    throw Error(ErrorKind::kInvalidParameter, "component index out of range");
  }
  const auto& c = components_[component - 1];
  if (copy == 0 || copy > c.multiplicity || position == 0 || position > c.order) {
    throw Error(ErrorKind::kInvalidParameter, "copy or position out of range");
  }
  return static_cast<Vertex>(block_offsets_[component - 1] + (copy - 1) * c.order +
                             (position - 1));
}

ForestVertex LinearForestSpec::locate(Vertex v) const {
  if (v >= total_order_) throw Error(ErrorKind::kInvalidParameter, "vertex out of range");
  std::size_t j = components_.size();
  while (block_offsets_[j - 1] > v) --j;
  const std::size_t offset = v - block_offsets_[j - 1];
  const std::size_t order = components_[j - 1].order;
  return {j, offset / order + 1, offset % order + 1};
}

std::string LinearForestSpec::vertex_label(Vertex v) const {
  const auto at = locate(v);
  return "v" + std::to_string(at.position) + "^{" + std::to_string(at.component) + "," +
         std::to_string(at.copy) + "}";
}

std::vector<Arc> LinearForestSpec::edges() const {
  std::vector<Arc> out;
  for (std::size_t j = 1; j <= components_.size(); ++j) {
    for (std::size_t s = 1; s <= components_[j - 1].multiplicity; ++s) {
      for (std::size_t i = 1; i < components_[j - 1].order; ++i) {
        out.push_back({vertex_index(j, s, i), vertex_index(j, s, i + 1)});
      }
    }
  }
  return out;
}

std::string LinearForestSpec::to_string() const {
  std::string out;
  for (const auto& c : components_) {
    if (!out.empty()) out += ",";
    out += std::to_string(c.multiplicity) + "x" + std::to_string(c.order);
  }
  return out;
}

OrientedGraph build_forest(const LinearForestSpec& spec) {
  auto edges = spec.edges();
  switch (spec.orientation()) {
    case ForestOrientation::kPhi:
      for (auto& e : edges) std::swap(e.tail, e.head);
      break;
    case ForestOrientation::kForward:
      break;
    case ForestOrientation::kThetaPrime:
      std::swap(edges.front().tail, edges.front().head);
      break;
    case ForestOrientation::kThetaDoublePrime:
      for (std::size_t k = 1; k < edges.size(); ++k) std::swap(edges[k].tail, edges[k].head);
      break;
    case ForestOrientation::kExplicit: {
      auto arcs = spec.explicit_arcs();
      std::vector<Arc> undirected;
      for (const Arc& a : arcs) {
        undirected.push_back({std::min(a.tail, a.head), std::max(a.tail, a.head)});
      }
      std::sort(undirected.begin(), undirected.end());
      auto expected = edges;
      std::sort(expected.begin(), expected.end());
      if (undirected != expected) {
        throw Error(ErrorKind::kInvalidSpec,
                    "explicit arcs must orient each path edge of " + spec.to_string() +
                        " exactly once");
      }
      return OrientedGraph(spec.total_order(), std::move(arcs));
    }
  }
  return OrientedGraph(spec.total_order(), std::move(edges));
}

}  // namespace antimagic
