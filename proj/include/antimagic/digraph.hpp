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

// Oriented graphs: simple digraphs with no loops and no 2-cycles.
//
// Vertices are the indices 0..n-1. Everything user-facing (JSON, DOT, error
// messages) uses 1-based names v1..vn, so vertex index i prints as v{i+1}.

#ifndef ANTIMAGIC_DIGRAPH_HPP_
#define ANTIMAGIC_DIGRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace antimagic {

using Vertex = std::uint32_t;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

class OrientedGraph {
 public:
  OrientedGraph() = default;

  // Throws Error(kInvalidGraph) on loops, out-of-range endpoints, repeated
  // arcs, or digons. Arcs are stored in lexicographic order.
  OrientedGraph(std::size_t order, std::vector<Arc> arcs);

  std::size_t order() const noexcept { return order_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  std::span<const Vertex> out_neighbors(Vertex v) const;
  std::span<const Vertex> in_neighbors(Vertex v) const;
  std::size_t out_degree(Vertex v) const { return out_neighbors(v).size(); }
  std::size_t in_degree(Vertex v) const { return in_neighbors(v).size(); }

  bool has_arc(Vertex tail, Vertex head) const;
  // True when either direction is present.
  bool adjacent(Vertex u, Vertex v) const {
    return has_arc(u, v) || has_arc(v, u);
  }

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    return a.order_ == b.order_ && a.arcs_ == b.arcs_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Vertex> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Vertex> in_sources_;
};

// Shortest directed path lengths. Unreachable pairs hold an explicit
// sentinel, never a large number.
class DistanceMatrix {
 public:
  static constexpr std::int32_t kUnreachable = -1;

  DistanceMatrix() = default;
  explicit DistanceMatrix(const OrientedGraph& g);

  std::size_t order() const noexcept { return order_; }

  std::optional<std::size_t> operator()(Vertex from, Vertex to) const {
    const auto d = raw(from, to);
    if (d == kUnreachable) return std::nullopt;
    return static_cast<std::size_t>(d);
  }
  std::int32_t raw(Vertex from, Vertex to) const {
    return entries_[static_cast<std::size_t>(from) * order_ + to];
  }
  bool reachable(Vertex from, Vertex to) const {
    return raw(from, to) != kUnreachable;
  }

  // Maximum finite distance over all ordered pairs (0 for edgeless graphs).
  std::size_t partial_diameter() const noexcept { return partial_diameter_; }
  bool all_reachable() const noexcept { return all_reachable_; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<std::int32_t> entries_;
  std::size_t partial_diameter_ = 0;
  bool all_reachable_ = true;
};

// BFS from every vertex.
DistanceMatrix all_pairs_distances(const OrientedGraph& g);

std::size_t partial_diameter(const OrientedGraph& g);
std::vector<Vertex> sinks(const OrientedGraph& g);
std::vector<Vertex> sources(const OrientedGraph& g);
inline std::size_t in_degree(const OrientedGraph& g, Vertex v) {
  return g.in_degree(v);
}
inline std::size_t out_degree(const OrientedGraph& g, Vertex v) {
  return g.out_degree(v);
}
bool is_strongly_connected(const OrientedGraph& g);

// Components of the underlying undirected graph, each sorted, ordered by
// smallest member.
std::vector<std::vector<Vertex>> weak_components(const OrientedGraph& g);

// Sum of in-degrees, sum of out-degrees and arc count all agree.
bool satisfies_handshake(const OrientedGraph& g);

// ---------------------------------------------------------------------------
// Paths and cycles.

enum class PathOrientation { kForward, kThetaPrime, kThetaDoublePrime };

// Direction of each path edge: bit i set means v{i+1} -> v{i+2}, clear means
// v{i+2} -> v{i+1}. `width` must equal n - 1.
struct ArcBitmask {
  std::uint64_t bits = 0;
  std::size_t width = 0;
};

// Forward: v1 -> v2 -> ... -> vn.
// Theta-prime: v2 -> v1 and vi -> v{i+1} for i >= 2.
// Theta-double-prime: v1 -> v2 and v{i+1} -> vi for i >= 2.
OrientedGraph build_path(std::size_t n, PathOrientation orientation);
OrientedGraph build_path(std::size_t n, ArcBitmask mask);

// Unidirectional cycle v1 -> v2 -> ... -> vn -> v1, n >= 3.
OrientedGraph build_cycle(std::size_t n);

enum class PathClass { kUnidirectional, kThetaPrime, kThetaDoublePrime, kOther };

std::string_view to_string(PathClass c);

// Vertices of the underlying path in traversal order, starting from the
// lower-indexed end. Throws Error(kNotAPath).
std::vector<Vertex> path_traversal(const OrientedGraph& g);

// Orientation class up to reading the path from either end. Checked in the
// order unidirectional, theta-prime, theta-double-prime, so paths on at most
// two vertices are unidirectional. Throws Error(kNotAPath).
PathClass classify_path_orientation(const OrientedGraph& g);

bool is_unidirectional_path(const OrientedGraph& g);

enum class PathEnds { kTrivial, kBothSinks, kBothSources, kSinkAndSource };

struct OrientationCensus {
  std::size_t sinks = 0;
  std::size_t sources = 0;
  PathEnds ends = PathEnds::kTrivial;
};

// Throws Error(kNotAPath).
OrientationCensus orientation_census(const OrientedGraph& g);

// ---------------------------------------------------------------------------
// Enumeration. Every enumerator is indexable so that callers can partition
// the index space; the for_each forms walk it in index order.

std::uint64_t path_orientation_count(std::size_t n);

template <typename Visitor>
void for_each_path_orientation(std::size_t n, Visitor&& visit) {
  const std::uint64_t count = path_orientation_count(n);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    visit(build_path(n, ArcBitmask{bits, n == 0 ? 0 : n - 1}));
  }
}

inline constexpr std::size_t kMaxTreeOrder = 8;

// n^(n-2) labeled trees; undirected edges (a, b) with a < b, sorted.
std::uint64_t labeled_tree_count(std::size_t n);
std::vector<Arc> prufer_tree(std::size_t n, std::uint64_t index);

// Labeled trees times orientations of their n - 1 edges. Labeled, not
// isomorphism-reduced: the same oriented tree shape repeats across
// labelings. Throws Error(kInvalidParameter) unless 1 <= n <= kMaxTreeOrder.
std::uint64_t oriented_tree_count(std::size_t n);
OrientedGraph oriented_tree(std::size_t n, std::uint64_t index);

template <typename Visitor>
void for_each_oriented_tree(std::size_t n, Visitor&& visit) {
  const std::uint64_t count = oriented_tree_count(n);
  for (std::uint64_t i = 0; i < count; ++i) visit(oriented_tree(n, i));
}

inline constexpr std::size_t kMaxEnumeratedGraphOrder = 6;

// All oriented graphs on n labeled vertices: each unordered pair {u < v} is
// absent, u -> v, or v -> u, encoded as a base-3 digit (pairs in
// lexicographic order, first pair least significant).
std::uint64_t oriented_graph_count(std::size_t n);
OrientedGraph oriented_graph(std::size_t n, std::uint64_t code);

template <typename Visitor>
void for_each_oriented_graph(std::size_t n, Visitor&& visit) {
  const std::uint64_t count = oriented_graph_count(n);
  for (std::uint64_t c = 0; c < count; ++c) visit(oriented_graph(n, c));
}

// "v3"
std::string vertex_name(Vertex v);

}  // namespace antimagic

#endif  // ANTIMAGIC_DIGRAPH_HPP_
