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

#include "antimagic/digraph.hpp"

#include <algorithm>
#include <string>

#include "antimagic/error.hpp"

namespace antimagic {
namespace {

void build_csr(std::size_t n, std::span<const Arc> arcs, bool by_tail,
               std::vector<std::size_t>& offsets, std::vector<Vertex>& targets) {
  offsets.assign(n + 1, 0);
  for (const Arc& a : arcs) ++offsets[(by_tail ? a.tail : a.head) + 1];
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  targets.resize(arcs.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Arc& a : arcs) {
    const Vertex key = by_tail ? a.tail : a.head;
    targets[cursor[key]++] = by_tail ? a.head : a.tail;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(targets.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              targets.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
  }
}

std::string arc_name(const Arc& a) {
  return "(" + vertex_name(a.tail) + "," + vertex_name(a.head) + ")";
}

// Undirected neighbours, used by the path and component helpers.
std::vector<std::vector<Vertex>> underlying_adjacency(const OrientedGraph& g) {
  std::vector<std::vector<Vertex>> adj(g.order());
  for (const Arc& a : g.arcs()) {
    adj[a.tail].push_back(a.head);
    adj[a.head].push_back(a.tail);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

}  // namespace

std::string vertex_name(Vertex v) { return "v" + std::to_string(v + 1); }

OrientedGraph::OrientedGraph(std::size_t order, std::vector<Arc> arcs)
    : order_(order), arcs_(std::move(arcs)) {
  for (const Arc& a : arcs_) {
    if (a.tail >= order_ || a.head >= order_) {
      throw Error(ErrorKind::kInvalidGraph,
                  "arc " + arc_name(a) + " has an endpoint outside v1..v" +
                      std::to_string(order_));
    }
    if (a.tail == a.head) {
      throw Error(ErrorKind::kInvalidGraph, "loop at " + vertex_name(a.tail));
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  for (std::size_t i = 0; i + 1 < arcs_.size(); ++i) {
    if (arcs_[i] == arcs_[i + 1]) {
      throw Error(ErrorKind::kInvalidGraph, "repeated arc " + arc_name(arcs_[i]));
    }
  }
  for (const Arc& a : arcs_) {
    if (std::binary_search(arcs_.begin(), arcs_.end(), Arc{a.head, a.tail})) {
      throw Error(ErrorKind::kInvalidGraph,
                  "digon between " + vertex_name(a.tail) + " and " +
                      vertex_name(a.head) + "; oriented graphs allow one direction");
    }
  }
  build_csr(order_, arcs_, true, out_offsets_, out_targets_);
  build_csr(order_, arcs_, false, in_offsets_, in_sources_);
}

std::span<const Vertex> OrientedGraph::out_neighbors(Vertex v) const {
  return std::span<const Vertex>(out_targets_)
      .subspan(out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]);
}

std::span<const Vertex> OrientedGraph::in_neighbors(Vertex v) const {
  return std::span<const Vertex>(in_sources_)
      .subspan(in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]);
}

bool OrientedGraph::has_arc(Vertex tail, Vertex head) const {
  if (tail >= order_ || head >= order_) return false;
  const auto out = out_neighbors(tail);
  return std::binary_search(out.begin(), out.end(), head);
}

DistanceMatrix::DistanceMatrix(const OrientedGraph& g)
    : order_(g.order()), entries_(g.order() * g.order(), kUnreachable) {
  std::vector<Vertex> queue;
  queue.reserve(order_);
  for (Vertex s = 0; s < order_; ++s) {
    std::int32_t* row = entries_.data() + static_cast<std::size_t>(s) * order_;
    row[s] = 0;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (const Vertex w : g.out_neighbors(u)) {
        if (row[w] != kUnreachable) continue;
        row[w] = row[u] + 1;
        queue.push_back(w);
      }
    }
  }
  for (const std::int32_t d : entries_) {
    if (d == kUnreachable) {
      all_reachable_ = false;
    } else {
      partial_diameter_ = std::max(partial_diameter_, static_cast<std::size_t>(d));
    }
  }
}

DistanceMatrix all_pairs_distances(const OrientedGraph& g) { return DistanceMatrix(g); }

std::size_t partial_diameter(const OrientedGraph& g) {
  return DistanceMatrix(g).partial_diameter();
}

std::vector<Vertex> sinks(const OrientedGraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.out_degree(v) == 0) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> sources(const OrientedGraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.in_degree(v) == 0) out.push_back(v);
  }
  return out;
}

bool is_strongly_connected(const OrientedGraph& g) {
  if (g.order() <= 1) return true;
  // Everything reachable from v1 in g and in its converse.
  for (const bool forward : {true, false}) {
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (const Vertex w : forward ? g.out_neighbors(u) : g.in_neighbors(u)) {
        if (seen[w]) continue;
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
    if (reached != g.order()) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> weak_components(const OrientedGraph& g) {
  const auto adj = underlying_adjacency(g);
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<Vertex>> components;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> component{root};
    seen[root] = 1;
    for (std::size_t i = 0; i < component.size(); ++i) {
      for (const Vertex w : adj[component[i]]) {
        if (!seen[w]) {
          seen[w] = 1;
          component.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool satisfies_handshake(const OrientedGraph& g) {
  std::size_t in_sum = 0;
  std::size_t out_sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    in_sum += g.in_degree(v);
    out_sum += g.out_degree(v);
  }
  return in_sum == out_sum && out_sum == g.arc_count();
}

// ---------------------------------------------------------------------------

OrientedGraph build_path(std::size_t n, PathOrientation orientation) {
  if (n == 0) throw Error(ErrorKind::kInvalidParameter, "path order must be >= 1");
  if (orientation != PathOrientation::kForward && n < 3) {
    throw Error(ErrorKind::kInvalidParameter,
                "theta orientations need a path of order >= 3, got " + std::to_string(n));
  }
  std::vector<Arc> arcs;
  arcs.reserve(n - 1);
  for (Vertex i = 0; i + 1 < n; ++i) {
    bool forward = true;
    switch (orientation) {
      case PathOrientation::kForward: forward = true; break;
      case PathOrientation::kThetaPrime: forward = i != 0; break;
      case PathOrientation::kThetaDoublePrime: forward = i == 0; break;
    }
    arcs.push_back(forward ? Arc{i, i + 1} : Arc{i + 1, i});
  }
  return OrientedGraph(n, std::move(arcs));
}

OrientedGraph build_path(std::size_t n, ArcBitmask mask) {
  if (n == 0) throw Error(ErrorKind::kInvalidParameter, "path order must be >= 1");
  if (n - 1 > 64) {
    throw Error(ErrorKind::kInvalidParameter, "bitmask paths are limited to 65 vertices");
  }
  if (mask.width != n - 1) {
    throw Error(ErrorKind::kInvalidParameter,
                "orientation bitmask for P" + std::to_string(n) + " needs " +
                    std::to_string(n - 1) + " bits, got " + std::to_string(mask.width));
  }
  if (mask.width < 64 && (mask.bits >> mask.width) != 0) {
    throw Error(ErrorKind::kInvalidParameter, "orientation bitmask wider than n - 1 bits");
  }
  std::vector<Arc> arcs;
  arcs.reserve(n - 1);
  for (Vertex i = 0; i + 1 < n; ++i) {
    const bool forward = (mask.bits >> i) & 1U;
    arcs.push_back(forward ? Arc{i, i + 1} : Arc{i + 1, i});
  }
  return OrientedGraph(n, std::move(arcs));
}

OrientedGraph build_cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::kInvalidParameter, "cycle order must be >= 3");
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i) {
    arcs.push_back({i, static_cast<Vertex>((i + 1) % n)});
  }
  return OrientedGraph(n, std::move(arcs));
}

std::string_view to_string(PathClass c) {
  switch (c) {
    case PathClass::kUnidirectional: return "unidirectional";
    case PathClass::kThetaPrime: return "theta-prime";
    case PathClass::kThetaDoublePrime: return "theta-double-prime";
    case PathClass::kOther: return "other";
  }
  return "other";
}

std::vector<Vertex> path_traversal(const OrientedGraph& g) {
  const std::size_t n = g.order();
  if (n == 0 || g.arc_count() != n - 1) {
    throw Error(ErrorKind::kNotAPath, "underlying graph is not a path");
  }
  if (n == 1) return {0};
  const auto adj = underlying_adjacency(g);
  Vertex start = static_cast<Vertex>(n);
  for (Vertex v = 0; v < n; ++v) {
    if (adj[v].size() > 2) {
      throw Error(ErrorKind::kNotAPath, vertex_name(v) + " has degree above 2");
    }
    if (adj[v].size() == 1 && start == n) start = v;
  }
  if (start == n) throw Error(ErrorKind::kNotAPath, "underlying graph has no end vertex");
  std::vector<Vertex> order{start};
  Vertex previous = start;
  Vertex current = adj[start][0];
  while (true) {
    order.push_back(current);
    const auto& next = adj[current];
    if (next.size() == 1) break;
    const Vertex following = next[0] == previous ? next[1] : next[0];
    previous = current;
    current = following;
    if (order.size() > n) break;
  }
  if (order.size() != n) {
    throw Error(ErrorKind::kNotAPath, "underlying graph is disconnected");
  }
  return order;
}

PathClass classify_path_orientation(const OrientedGraph& g) {
  const auto order = path_traversal(g);
  const std::size_t edges = order.size() - 1;
  if (edges <= 1) return PathClass::kUnidirectional;

  std::vector<bool> dir(edges);
  for (std::size_t k = 0; k < edges; ++k) dir[k] = g.has_arc(order[k], order[k + 1]);
  // Reading from the other end reverses edge order and flips every arc.
  std::vector<bool> rev(edges);
  for (std::size_t k = 0; k < edges; ++k) rev[k] = !dir[edges - 1 - k];

  const auto matches = [&](const std::vector<bool>& d, auto&& expected) {
    for (std::size_t k = 0; k < edges; ++k) {
      if (d[k] != expected(k)) return false;
    }
    return true;
  };
  const auto either = [&](auto&& expected) {
    return matches(dir, expected) || matches(rev, expected);
  };
  if (either([](std::size_t) { return true; })) return PathClass::kUnidirectional;
  if (either([](std::size_t k) { return k != 0; })) return PathClass::kThetaPrime;
  if (either([](std::size_t k) { return k == 0; })) return PathClass::kThetaDoublePrime;
  return PathClass::kOther;
}

bool is_unidirectional_path(const OrientedGraph& g) {
  try {
    return classify_path_orientation(g) == PathClass::kUnidirectional;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kNotAPath) return false;
    throw;
  }
}

OrientationCensus orientation_census(const OrientedGraph& g) {
  const auto order = path_traversal(g);
  OrientationCensus census;
  census.sinks = sinks(g).size();
  census.sources = sources(g).size();
  if (order.size() < 2) return census;
  const bool first_sink = g.out_degree(order.front()) == 0;
  const bool last_sink = g.out_degree(order.back()) == 0;
  if (first_sink && last_sink) {
    census.ends = PathEnds::kBothSinks;
  } else if (!first_sink && !last_sink) {
    census.ends = PathEnds::kBothSources;
  } else {
    census.ends = PathEnds::kSinkAndSource;
  }
  return census;
}

// ---------------------------------------------------------------------------

std::uint64_t path_orientation_count(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::kInvalidParameter, "path order must be >= 1");
  if (n - 1 >= 64) throw Error(ErrorKind::kInvalidParameter, "too many orientations");
  return std::uint64_t{1} << (n - 1);
}

std::uint64_t labeled_tree_count(std::size_t n) {
  if (n == 0 || n > kMaxTreeOrder) {
    throw Error(ErrorKind::kInvalidParameter,
                "tree order must be in 1.." + std::to_string(kMaxTreeOrder));
  }
  if (n <= 2) return 1;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n - 2; ++i) count *= n;
  return count;
}

std::vector<Arc> prufer_tree(std::size_t n, std::uint64_t index) {
  const std::uint64_t count = labeled_tree_count(n);
  if (index >= count) throw Error(ErrorKind::kInvalidParameter, "tree index out of range");
  if (n == 1) return {};
  if (n == 2) return {Arc{0, 1}};

  // Digits of the index, most significant first, form the Prüfer sequence.
  std::vector<Vertex> sequence(n - 2);
  for (std::size_t k = n - 2; k-- > 0;) {
    sequence[k] = static_cast<Vertex>(index % n);
    index /= n;
  }
  std::vector<std::size_t> degree(n, 1);
  for (const Vertex v : sequence) ++degree[v];

  std::vector<Arc> edges;
  edges.reserve(n - 1);
  for (const Vertex v : sequence) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({std::min(leaf, v), std::max(leaf, v)});
    --degree[leaf];
    --degree[v];
  }
  Vertex a = 0;
  while (degree[a] != 1) ++a;
  Vertex b = a + 1;
  while (degree[b] != 1) ++b;
  edges.push_back({a, b});
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::uint64_t oriented_tree_count(std::size_t n) {
  return labeled_tree_count(n) << (n - 1);
}

OrientedGraph oriented_tree(std::size_t n, std::uint64_t index) {
  if (index >= oriented_tree_count(n)) {
    throw Error(ErrorKind::kInvalidParameter, "oriented tree index out of range");
  }
  const std::uint64_t orientations = std::uint64_t{1} << (n - 1);
  auto edges = prufer_tree(n, index / orientations);
  const std::uint64_t bits = index % orientations;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (((bits >> e) & 1U) == 0) std::swap(edges[e].tail, edges[e].head);
  }
  return OrientedGraph(n, std::move(edges));
}

std::uint64_t oriented_graph_count(std::size_t n) {
  if (n > kMaxEnumeratedGraphOrder) {
    throw Error(ErrorKind::kInvalidParameter,
                "graph enumeration is limited to order " +
                    std::to_string(kMaxEnumeratedGraphOrder));
  }
  std::uint64_t count = 1;
  for (std::size_t p = 0; p < n * (n - (n > 0 ? 1 : 0)) / 2; ++p) count *= 3;
  return count;
}

OrientedGraph oriented_graph(std::size_t n, std::uint64_t code) {
  if (code >= oriented_graph_count(n)) {
    throw Error(ErrorKind::kInvalidParameter, "graph code out of range");
  }
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const auto digit = code % 3;
      code /= 3;
      if (digit == 1) arcs.push_back({u, v});
      if (digit == 2) arcs.push_back({v, u});
    }
  }
  return OrientedGraph(n, std::move(arcs));
}

}  // namespace antimagic
