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

// Reference implementations used only by the tests. They read nothing but
// the arc list of a graph and share no code with the library algorithms.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "antimagic/digraph.hpp"
#include "antimagic/distance_set.hpp"
#include "antimagic/error.hpp"
#include "antimagic/forest.hpp"
#include "antimagic/labeling.hpp"

namespace oracle {

inline constexpr int kInf = 1 << 20;

// -1 marks unreachable pairs.
inline std::vector<std::vector<int>> floyd_warshall(const antimagic::OrientedGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& a : g.arcs()) d[a.tail][a.head] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  for (auto& row : d) {
    for (auto& x : row) {
      if (x >= kInf) x = -1;
    }
  }
  return d;
}

inline std::size_t diameter(const std::vector<std::vector<int>>& d) {
  int best = 0;
  for (const auto& row : d) {
    for (const int x : row) best = std::max(best, x);
  }
  return static_cast<std::size_t>(best);
}

inline bool in_set(const antimagic::DistanceSet& d, int x) {
  if (x < 0) return false;
  const auto values = d.values();
  return std::find(values.begin(), values.end(), static_cast<std::size_t>(x)) != values.end();
}

inline std::vector<std::uint64_t> weights(const std::vector<std::vector<int>>& dist,
                                          const std::vector<std::uint32_t>& labels,
                                          const antimagic::DistanceSet& d) {
  const std::size_t n = dist.size();
  std::vector<std::uint64_t> w(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < n; ++u) {
      if (in_set(d, dist[v][u])) w[v] += labels[u];
    }
  }
  return w;
}

inline std::vector<std::uint64_t> weights(const antimagic::OrientedGraph& g,
                                          const std::vector<std::uint32_t>& labels,
                                          const antimagic::DistanceSet& d) {
  return weights(floyd_warshall(g), labels, d);
}

inline bool all_distinct(std::vector<std::uint64_t> w) {
  std::sort(w.begin(), w.end());
  return std::adjacent_find(w.begin(), w.end()) == w.end();
}

inline bool all_equal(const std::vector<std::uint64_t>& w) {
  return std::adjacent_find(w.begin(), w.end(), std::not_equal_to<>()) == w.end();
}

// Plain next_permutation scan with no shortcuts.
inline std::optional<std::vector<std::uint32_t>> brute_force_antimagic(
    const antimagic::OrientedGraph& g, const antimagic::DistanceSet& d) {
  const auto dist = floyd_warshall(g);
  std::vector<std::uint32_t> labels(g.order());
  std::iota(labels.begin(), labels.end(), 1U);
  do {
    if (all_distinct(weights(dist, labels, d))) return labels;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return std::nullopt;
}

inline bool is_acyclic(const antimagic::OrientedGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& a : g.arcs()) ++indegree[a.head];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const auto v = ready.back();
    ready.pop_back();
    ++removed;
    for (const auto& a : g.arcs()) {
      if (a.tail == v && --indegree[a.head] == 0) ready.push_back(a.head);
    }
  }
  return removed == n;
}

// Handshake plus: an acyclic graph with an arc has a sink and a source.
inline bool degree_lemmas_hold(const antimagic::OrientedGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> out(n, 0), in(n, 0);
  for (const auto& a : g.arcs()) {
    ++out[a.tail];
    ++in[a.head];
  }
  const auto sum_out = std::accumulate(out.begin(), out.end(), std::size_t{0});
  const auto sum_in = std::accumulate(in.begin(), in.end(), std::size_t{0});
  if (sum_out != g.arc_count() || sum_in != g.arc_count()) return false;
  if (n == 0 || !is_acyclic(g)) return true;
  bool sink = false, source = false;
  for (std::size_t v = 0; v < n; ++v) {
    sink = sink || out[v] == 0;
    source = source || in[v] == 0;
  }
  return sink && source;
}

// f* by counting: walk layers i = 1, 2, ... and inside a layer the
// components j in order and their copies s in order, handing out 1, 2, ...
// to every vertex v_i^{j,s} that exists. Indexed [j][s][i], 0-based.
inline std::vector<std::vector<std::vector<std::uint32_t>>> layered_forest_labels(
    const antimagic::LinearForestSpec& spec) {
  const auto& comps = spec.components();
  std::vector<std::vector<std::vector<std::uint32_t>>> out(comps.size());
  std::size_t longest = 0;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    out[j].assign(comps[j].multiplicity, std::vector<std::uint32_t>(comps[j].order, 0));
    longest = std::max(longest, comps[j].order);
  }
  std::uint32_t next = 1;
  for (std::size_t i = 0; i < longest; ++i) {
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (i >= comps[j].order) continue;
      for (std::size_t s = 0; s < comps[j].multiplicity; ++s) out[j][s][i] = next++;
    }
  }
  return out;
}

// Kind of the antimagic::Error thrown by f, if any.
template <class F>
std::optional<antimagic::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const antimagic::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace oracle
