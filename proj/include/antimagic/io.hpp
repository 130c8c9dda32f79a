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

// JSON and DOT formats. All vertex ids on the wire are 1-based.
//
//   graph     {"n": 3, "arcs": [[1, 2], [3, 2]]}
//   labeling  {"labels": [1, 2, 3]}
//   weights   {"weights": [...], "collisions": [[u, v], ...], "distinct": b}
//
// Output is canonical (arcs sorted, fixed key order), so equal values
// serialize to identical bytes.

#ifndef ANTIMAGIC_IO_HPP_
#define ANTIMAGIC_IO_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"

#include "antimagic/constructions.hpp"
#include "antimagic/digraph.hpp"
#include "antimagic/distance_set.hpp"
#include "antimagic/forest.hpp"
#include "antimagic/labeling.hpp"
#include "antimagic/search.hpp"

namespace antimagic {

using Json = nlohmann::ordered_json;

Json to_json(const OrientedGraph& g);
Json to_json(const Labeling& f);
Json to_json(const DistanceSet& d);
Json to_json(const WeightProfile& w);
Json to_json(const ConstructionResult& r);
Json to_json(const SearchReport& r);
Json to_json(const CharacterizationCheck& c);
Json to_json(const DualityReport& r);

// All parsers throw Error(kParse) on malformed input; semantic violations
// (digons, non-bijective labels) keep their own error kinds.
OrientedGraph graph_from_json(const Json& j);
// {"labels": [...]} or a bare array, label of v1 first.
Labeling labeling_from_json(const Json& j);
Json parse_json(std::string_view text);

// "0,2,3"
DistanceSet parse_distance_set(std::string_view text);
// "2x3,1x5,1x7" (multiplicity x order); a bare "5" means 1x5.
LinearForestSpec parse_forest_spec(std::string_view text,
                                   ForestOrientation orientation = ForestOrientation::kPhi);
// "0b1011" or "1011": digit count is the width, rightmost digit is bit 0.
ArcBitmask parse_bitmask(std::string_view text);

struct DotOptions {
  std::optional<Labeling> labels;
  std::optional<WeightProfile> weights;
  // Names vertices v_i^{j,s} in node labels.
  std::optional<LinearForestSpec> forest;
};

// digraph { v1 -> v2; ... }. Graphs with several weak components put each
// one in its own cluster subgraph.
std::string to_dot(const OrientedGraph& g, const DotOptions& options = {});

}  // namespace antimagic

#endif  // ANTIMAGIC_IO_HPP_
