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

#include "antimagic/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "antimagic/error.hpp"

namespace antimagic {
namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::kParse, what); }

std::size_t parse_count(std::string_view text, const char* what) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    parse_error(std::string("expected a non-negative integer for ") + what + ", got '" +
                std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Json pair_json(const VertexPair& p) { return Json::array({p.first + 1, p.second + 1}); }

}  // namespace

Json to_json(const OrientedGraph& g) {
  Json arcs = Json::array();
  for (const Arc& a : g.arcs()) arcs.push_back(Json::array({a.tail + 1, a.head + 1}));
  return Json{{"n", g.order()}, {"arcs", std::move(arcs)}};
}

Json to_json(const Labeling& f) {
  return Json{{"labels", std::vector<Label>(f.labels().begin(), f.labels().end())}};
}

Json to_json(const DistanceSet& d) {
  return Json(std::vector<std::size_t>(d.values().begin(), d.values().end()));
}

Json to_json(const WeightProfile& w) {
  Json collisions = Json::array();
  for (const auto& p : w.collisions) collisions.push_back(pair_json(p));
  return Json{{"weights", w.weights}, {"collisions", std::move(collisions)},
              {"distinct", w.distinct}};
}

Json to_json(const ConstructionResult& r) {
  Json j{{"theorem", r.theorem},
         {"graph", to_json(r.graph)},
         {"labeling", to_json(r.labeling)},
         {"D", to_json(r.distance_set)},
         {"weights", to_json(r.weights)}};
  if (r.forest) {
    j["forest"] = r.forest->to_string();
    Json names = Json::array();
    for (Vertex v = 0; v < r.graph.order(); ++v) names.push_back(r.forest->vertex_label(v));
    j["vertex_names"] = std::move(names);
  }
  return j;
}

Json to_json(const SearchReport& r) {
  Json j{{"outcome", std::string(to_string(r.outcome))}};
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  if (r.graph) j["graph"] = to_json(*r.graph);
  if (r.magic_constant) j["lambda"] = *r.magic_constant;
  j["candidates_examined"] = r.candidates_examined;
  j["shortcut"] = r.shortcut;
  j["elapsed_ms"] =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(r.elapsed).count();
  return j;
}

Json to_json(const CharacterizationCheck& c) {
  return Json{{"theorem", c.theorem},   {"range", c.range},
              {"agree", c.agree},       {"instances", c.instances},
              {"skipped", c.skipped},   {"counterexamples", c.counterexamples}};
}

Json to_json(const DualityReport& r) {
  Json j{{"D", to_json(r.d)},
         {"D_complement", to_json(r.complement)},
         {"label_total", r.total},
         {"weight_sums_hold", r.weight_sums_hold},
         {"antimagic", r.antimagic},
         {"complement_antimagic", r.complement_antimagic}};
  j["lambda"] = r.magic ? Json(*r.magic) : Json(nullptr);
  j["complement_lambda"] = r.complement_magic ? Json(*r.complement_magic) : Json(nullptr);
  j["holds"] = r.holds();
  return j;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
}

OrientedGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("arcs")) {
    parse_error("graph JSON needs keys \"n\" and \"arcs\"");
  }
  if (!j["n"].is_number_unsigned()) parse_error("graph \"n\" must be a non-negative integer");
  const auto n = j["n"].get<std::size_t>();
  if (!j["arcs"].is_array()) parse_error("graph \"arcs\" must be an array");
  std::vector<Arc> arcs;
  for (const auto& a : j["arcs"]) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_unsigned() ||
        !a[1].is_number_unsigned()) {
      parse_error("each arc must be a pair [u, v] of 1-based vertex ids");
    }
    const auto u = a[0].get<std::size_t>();
    const auto v = a[1].get<std::size_t>();
    if (u == 0 || v == 0 || u > n || v > n) {
      parse_error("arc [" + std::to_string(u) + ", " + std::to_string(v) +
                  "] outside 1.." + std::to_string(n));
    }
    arcs.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
  }
  return OrientedGraph(n, std::move(arcs));
}

Labeling labeling_from_json(const Json& j) {
  const bool wrapped = j.is_object() && j.contains("labels") && j["labels"].is_array();
  if (!wrapped && !j.is_array()) {
    parse_error("labeling JSON needs an array \"labels\" or a bare array");
  }
  std::vector<Label> labels;
  for (const auto& l : wrapped ? j["labels"] : j) {
    if (!l.is_number_unsigned()) parse_error("labels must be positive integers");
    labels.push_back(l.get<Label>());
  }
  return Labeling(std::move(labels));
}

DistanceSet parse_distance_set(std::string_view text) {
  std::vector<std::size_t> values;
  for (const auto part : split(text, ',')) values.push_back(parse_count(trim(part), "D"));
  return DistanceSet(std::move(values));
}

LinearForestSpec parse_forest_spec(std::string_view text, ForestOrientation orientation) {
  std::vector<PathComponent> components;
  for (const auto raw : split(text, ',')) {
    const auto part = trim(raw);
    const auto x = part.find('x');
    if (x == std::string_view::npos) {
      components.push_back({1, parse_count(part, "path order")});
    } else {
      components.push_back({parse_count(part.substr(0, x), "multiplicity"),
                            parse_count(part.substr(x + 1), "path order")});
    }
  }
  return LinearForestSpec(std::move(components), orientation);
}

ArcBitmask parse_bitmask(std::string_view text) {
  if (text.starts_with("0b") || text.starts_with("0B")) text.remove_prefix(2);
  if (text.empty() || text.size() > 64) parse_error("bitmask needs 1..64 binary digits");
  ArcBitmask mask{0, text.size()};
  for (const char ch : text) {
    if (ch != '0' && ch != '1') parse_error("bitmask digits must be 0 or 1");
    mask.bits = (mask.bits << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return mask;
}

std::string to_dot(const OrientedGraph& g, const DotOptions& options) {
  std::ostringstream out;
  out << "digraph {\n";
  const auto node = [&](Vertex v) {
    std::string text;
    if (options.forest) text = options.forest->vertex_label(v);
    if (options.labels) {
      text += (text.empty() ? "" : " ") + std::string("f=") +
              std::to_string((*options.labels)[v]);
    }
    if (options.weights) {
      text += (text.empty() ? "" : " ") + std::string("w=") +
              std::to_string(options.weights->weights[v]);
    }
    out << "    " << vertex_name(v);
    if (!text.empty()) out << " [label=\"" << vertex_name(v) << ": " << text << "\"]";
    out << ";\n";
  };
  const auto components = weak_components(g);
  if (components.size() > 1) {
    for (std::size_t k = 0; k < components.size(); ++k) {
      out << "  subgraph cluster_" << k + 1 << " {\n";
      for (const Vertex v : components[k]) node(v);
      out << "  }\n";
    }
  } else {
    for (Vertex v = 0; v < g.order(); ++v) node(v);
  }
  for (const Arc& a : g.arcs()) {
    out << "  " << vertex_name(a.tail) << " -> " << vertex_name(a.head) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace antimagic
