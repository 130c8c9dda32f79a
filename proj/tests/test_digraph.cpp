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

#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

using namespace antimagic;

namespace {

std::set<Arc> arc_set(const OrientedGraph& g) { return {g.arcs().begin(), g.arcs().end()}; }

void check_against_floyd_warshall(const OrientedGraph& g) {
  const auto expected = oracle::floyd_warshall(g);
  const DistanceMatrix dm(g);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto got = dm(u, v);
      if (expected[u][v] < 0) {
        REQUIRE_FALSE(got.has_value());
      } else {
        REQUIRE(got.has_value());
        REQUIRE(*got == static_cast<std::size_t>(expected[u][v]));
      }
    }
  }
  REQUIRE(dm.partial_diameter() == oracle::diameter(expected));
}

}  // namespace

TEST_CASE("oriented graphs reject loops, digons and bad endpoints") {
  CHECK(oracle::error_kind([] { OrientedGraph(2, {{0, 0}}); }) == ErrorKind::kInvalidGraph);
  CHECK(oracle::error_kind([] { OrientedGraph(2, {{0, 1}, {1, 0}}); }) == ErrorKind::kInvalidGraph);
  CHECK(oracle::error_kind([] { OrientedGraph(2, {{0, 2}}); }) == ErrorKind::kInvalidGraph);
  CHECK(oracle::error_kind([] { OrientedGraph(2, {{0, 1}, {0, 1}}); }) == ErrorKind::kInvalidGraph);
  const OrientedGraph g(3, {{2, 1}, {0, 1}});
  CHECK(g.arcs()[0] == Arc{0, 1});
  CHECK(g.has_arc(2, 1));
  CHECK_FALSE(g.has_arc(1, 2));
  CHECK(g.adjacent(1, 2));
}

TEST_CASE("build_path examples") {
  CHECK(arc_set(build_path(3, PathOrientation::kThetaPrime)) == std::set<Arc>{{1, 0}, {1, 2}});
  CHECK(build_path(1, PathOrientation::kForward).arc_count() == 0);
  CHECK(arc_set(build_path(4, PathOrientation::kThetaDoublePrime)) ==
        std::set<Arc>{{0, 1}, {2, 1}, {3, 2}});
  CHECK(oracle::error_kind([] { build_path(2, PathOrientation::kThetaPrime); }) ==
        ErrorKind::kInvalidParameter);
  CHECK(oracle::error_kind([] { build_path(2, PathOrientation::kThetaDoublePrime); }) ==
        ErrorKind::kInvalidParameter);
  CHECK(oracle::error_kind([] { build_path(4, ArcBitmask{0b11, 2}); }) ==
        ErrorKind::kInvalidParameter);
  CHECK(arc_set(build_path(4, ArcBitmask{0b101, 3})) == std::set<Arc>{{0, 1}, {2, 1}, {2, 3}});
}

TEST_CASE("every path has n-1 arcs on the undirected path v1..vn") {
  for (std::size_t n = 1; n <= 10; ++n) {
    for_each_path_orientation(n, [&](const OrientedGraph& g) {
      REQUIRE(g.arc_count() == n - 1);
      for (Vertex i = 0; i + 1 < n; ++i) REQUIRE(g.adjacent(i, i + 1));
    });
  }
}

TEST_CASE("distance examples") {
  const DistanceMatrix p4(build_path(4, PathOrientation::kForward));
  CHECK(p4(0, 3) == std::optional<std::size_t>(3));
  CHECK_FALSE(p4(3, 0).has_value());

  const DistanceMatrix theta(build_path(5, PathOrientation::kThetaDoublePrime));
  CHECK(theta(4, 1) == std::optional<std::size_t>(3));
  CHECK_FALSE(theta(0, 2).has_value());

  const DistanceMatrix c4(build_cycle(4));
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = 0; v < 4; ++v) {
      if (u == v) continue;
      const auto d = c4(u, v);
      REQUIRE(d.has_value());
      CHECK(*d >= 1);
      CHECK(*d <= 3);
    }
  }
  CHECK(c4.partial_diameter() == 3);
  CHECK(c4.all_reachable());
}

TEST_CASE("BFS distances agree with Floyd-Warshall on every graph of order <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for_each_oriented_graph(n, [&](const OrientedGraph& g) { check_against_floyd_warshall(g); });
  }
}

TEST_CASE("BFS distances agree with Floyd-Warshall on random graphs of order 5..8") {
  std::mt19937_64 rng(20240611);
  for (std::size_t n = 5; n <= 8; ++n) {
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<Arc> arcs;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          switch (rng() % 3) {
            case 1: arcs.push_back({u, v}); break;
            case 2: arcs.push_back({v, u}); break;
            default: break;
          }
        }
      }
      check_against_floyd_warshall(OrientedGraph(n, arcs));
    }
  }
}

TEST_CASE("sinks, sources and partial diameter examples") {
  CHECK(sinks(build_path(5, PathOrientation::kThetaPrime)) == std::vector<Vertex>{0, 4});
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(sources(build_path(n, PathOrientation::kForward)) == std::vector<Vertex>{0});
  }
  for (std::size_t n = 3; n <= 9; ++n) {
    CHECK(partial_diameter(build_path(n, PathOrientation::kThetaDoublePrime)) == n - 2);
  }
}

TEST_CASE("strong connectivity") {
  CHECK(is_strongly_connected(build_cycle(4)));
  CHECK_FALSE(is_strongly_connected(build_path(3, PathOrientation::kForward)));
  CHECK(is_strongly_connected(OrientedGraph(1, {})));
}

TEST_CASE("weak components of a forest are its path copies") {
  const LinearForestSpec spec({{2, 3}, {1, 5}, {1, 7}});
  const auto g = build_forest(spec);
  const auto comps = weak_components(g);
  REQUIRE(comps.size() == 4);
  CHECK(comps[0] == std::vector<Vertex>{0, 1, 2});
  CHECK(comps[3].size() == 7);
}

TEST_CASE("path classifier") {
  CHECK(classify_path_orientation(build_path(6, PathOrientation::kThetaPrime)) ==
        PathClass::kThetaPrime);
  CHECK(classify_path_orientation(build_path(6, PathOrientation::kThetaDoublePrime)) ==
        PathClass::kThetaDoublePrime);
  CHECK(classify_path_orientation(build_path(6, PathOrientation::kForward)) ==
        PathClass::kUnidirectional);
  CHECK(classify_path_orientation(build_path(6, ArcBitmask{0, 5})) ==
        PathClass::kUnidirectional);
  CHECK(classify_path_orientation(build_path(4, ArcBitmask{0b101, 3})) == PathClass::kOther);
  // On P3 the templates are the out-star and the in-star.
  CHECK(classify_path_orientation(build_path(3, PathOrientation::kThetaDoublePrime)) ==
        PathClass::kThetaDoublePrime);
  CHECK(classify_path_orientation(build_path(3, PathOrientation::kThetaPrime)) ==
        PathClass::kThetaPrime);
  CHECK(to_string(PathClass::kThetaPrime) == "theta-prime");
  CHECK(oracle::error_kind([] { classify_path_orientation(build_cycle(3)); }) ==
        ErrorKind::kNotAPath);
}

TEST_CASE("classifier is invariant under relabelling the path end to end") {
  for (std::size_t n = 4; n <= 9; ++n) {
    for_each_path_orientation(n, [&](const OrientedGraph& g) {
      std::vector<Arc> mirrored;
      for (const auto& a : g.arcs()) {
        mirrored.push_back({static_cast<Vertex>(n - 1 - a.tail),
                            static_cast<Vertex>(n - 1 - a.head)});
      }
      REQUIRE(classify_path_orientation(OrientedGraph(n, mirrored)) ==
              classify_path_orientation(g));
    });
  }
}

TEST_CASE("orientation census examples") {
  const auto fwd = orientation_census(build_path(5, PathOrientation::kForward));
  CHECK(fwd.sinks == 1);
  CHECK(fwd.sources == 1);
  CHECK(fwd.ends == PathEnds::kSinkAndSource);
  const auto tp = orientation_census(build_path(5, PathOrientation::kThetaPrime));
  CHECK(tp.sinks == 2);
  CHECK(tp.sources == 1);
  CHECK(tp.ends == PathEnds::kBothSinks);
  const auto tdp = orientation_census(build_path(5, PathOrientation::kThetaDoublePrime));
  CHECK(tdp.sinks == 1);
  CHECK(tdp.sources == 2);
  CHECK(tdp.ends == PathEnds::kBothSources);
}

TEST_CASE("path census properties for n <= 12") {
  for (std::size_t n = 2; n <= 12; ++n) {
    std::size_t unidirectional = 0;
    for_each_path_orientation(n, [&](const OrientedGraph& g) {
      const auto c = orientation_census(g);
      REQUIRE(c.sinks >= 1);
      REQUIRE(c.sources >= 1);
      // Sinks and sources alternate along the path.
      REQUIRE((c.sinks + 1 == c.sources || c.sinks == c.sources || c.sinks == c.sources + 1));
      REQUIRE(c.sinks == sinks(g).size());
      REQUIRE(c.sources == sources(g).size());
      const bool uni = is_unidirectional_path(g);
      REQUIRE(uni == (c.sinks == 1 && c.sources == 1 && c.ends == PathEnds::kSinkAndSource));
      if (uni) ++unidirectional;
      REQUIRE(oracle::degree_lemmas_hold(g));
    });
    REQUIRE(unidirectional == 2);
  }
}

TEST_CASE("enumeration counts") {
  CHECK(path_orientation_count(3) == 4);
  CHECK(path_orientation_count(1) == 1);
  CHECK(path_orientation_count(5) == 16);
  std::size_t seen = 0, uni = 0;
  for_each_path_orientation(5, [&](const OrientedGraph& g) {
    ++seen;
    if (classify_path_orientation(g) == PathClass::kUnidirectional) ++uni;
  });
  CHECK(seen == 16);
  CHECK(uni == 2);

  CHECK(oriented_tree_count(2) == 2);
  CHECK(oriented_tree_count(3) == 12);
  CHECK(oriented_tree_count(4) == 128);
  CHECK(oriented_graph_count(3) == 27);
}

TEST_CASE("enumerated trees are distinct trees") {
  for (std::size_t n = 2; n <= 5; ++n) {
    std::set<std::set<Arc>> seen;
    for_each_oriented_tree(n, [&](const OrientedGraph& g) {
      REQUIRE(g.arc_count() == n - 1);
      REQUIRE(weak_components(g).size() == 1);
      REQUIRE(oracle::degree_lemmas_hold(g));
      seen.insert(arc_set(g));
    });
    REQUIRE(seen.size() == oriented_tree_count(n));
  }
}

TEST_CASE("enumerated oriented graphs are distinct and satisfy the degree lemmas") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::set<Arc>> seen;
    for_each_oriented_graph(n, [&](const OrientedGraph& g) {
      REQUIRE(satisfies_handshake(g));
      REQUIRE(oracle::degree_lemmas_hold(g));
      seen.insert(arc_set(g));
    });
    REQUIRE(seen.size() == oriented_graph_count(n));
  }
}

TEST_CASE("forest generator examples") {
  const auto g = build_forest(LinearForestSpec({{3, 5}}));
  CHECK(g.order() == 15);
  CHECK(g.arc_count() == 12);
  CHECK(sinks(g) == std::vector<Vertex>{0, 5, 10});

  const auto single = build_forest(LinearForestSpec({{1, 1}}));
  CHECK(single.order() == 1);
  CHECK(single.arc_count() == 0);

  const auto fig = build_forest(LinearForestSpec({{2, 3}, {1, 5}, {1, 7}}));
  CHECK(fig.order() == 18);
  CHECK(fig.arc_count() == 14);
  CHECK(sinks(fig).size() == 4);
}

TEST_CASE("forest spec validation") {
  CHECK(oracle::error_kind([] { LinearForestSpec({}); }) == ErrorKind::kInvalidSpec);
  CHECK(oracle::error_kind([] { LinearForestSpec({{1, 5}, {1, 3}}); }) ==
        ErrorKind::kInvalidSpec);
  CHECK(oracle::error_kind([] { LinearForestSpec({{1, 3}, {1, 3}}); }) ==
        ErrorKind::kInvalidSpec);
  CHECK(oracle::error_kind([] { LinearForestSpec({{0, 3}}); }) == ErrorKind::kInvalidSpec);
  CHECK(oracle::error_kind([] {
          LinearForestSpec({{2, 3}}, ForestOrientation::kThetaPrime);
        }) == ErrorKind::kInvalidSpec);
  const auto merged = LinearForestSpec::merged({{1, 5}, {1, 3}, {1, 3}});
  CHECK(merged.to_string() == "2x3,1x5");
}

TEST_CASE("forest vertex naming round-trips") {
  const LinearForestSpec spec({{2, 3}, {1, 5}, {1, 7}});
  for (Vertex v = 0; v < spec.total_order(); ++v) {
    const auto loc = spec.locate(v);
    REQUIRE(spec.vertex_index(loc.component, loc.copy, loc.position) == v);
  }
  CHECK(spec.vertex_label(spec.vertex_index(2, 1, 3)) == "v3^{2,1}");
}

TEST_CASE("distance sets") {
  const DistanceSet d({3, 0, 2, 2});
  CHECK(d.to_string() == "{0,2,3}");
  CHECK(d.min() == 0);
  CHECK(d.max() == 3);
  CHECK(oracle::error_kind([] { DistanceSet(std::vector<std::size_t>{}); }) ==
        ErrorKind::kInvalidDistanceSet);
  CHECK(complement_distance_set(DistanceSet{0, 1}, 4) == DistanceSet{2, 3, 4});
  CHECK(complement_distance_set(DistanceSet{0}, 5) == DistanceSet::range(1, 5));
  CHECK(complement_distance_set(DistanceSet{1, 3}, 3) == DistanceSet{0, 2});
  CHECK(oracle::error_kind([] { complement_distance_set(DistanceSet{0}, 0); }) ==
        ErrorKind::kInvalidDistanceSet);
  CHECK(oracle::error_kind([] { DistanceSet{0, 4}.require_fits(3); }) ==
        ErrorKind::kInvalidDistanceSet);
}
