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

#include "doctest.h"
#include "oracles.hpp"

using namespace antimagic;

namespace {

std::vector<Label> labels_of(const Labeling& f) { return {f.labels().begin(), f.labels().end()}; }

// Every non-empty D within {0..diameter}.
std::vector<DistanceSet> all_distance_sets(std::size_t diameter) {
  std::vector<DistanceSet> out;
  for (unsigned long long mask = 1; mask < (1ULL << (diameter + 1)); ++mask) {
    out.push_back(DistanceSet::from_mask(mask));
  }
  return out;
}

OrientedGraph two_sink_path() { return build_path(5, PathOrientation::kThetaPrime); }

}  // namespace

TEST_CASE("labelings are bijections onto 1..n") {
  CHECK(oracle::error_kind([] { Labeling({1, 1, 3}); }) == ErrorKind::kInvalidLabeling);
  CHECK(oracle::error_kind([] { Labeling({0, 1, 2}); }) == ErrorKind::kInvalidLabeling);
  CHECK(oracle::error_kind([] { Labeling({1, 2, 4}); }) == ErrorKind::kInvalidLabeling);
  CHECK(labels_of(Labeling::identity(3)) == std::vector<Label>{1, 2, 3});
  CHECK(label_total(4) == 10);
}

TEST_CASE("D-neighborhood examples") {
  const DistanceMatrix theta(build_path(5, PathOrientation::kThetaDoublePrime));
  CHECK(d_neighborhood(theta, 4, DistanceSet{0, 3}) == std::vector<Vertex>{1, 4});

  for_each_oriented_graph(3, [](const OrientedGraph& g) {
    const DistanceMatrix dm(g);
    for (Vertex v = 0; v < 3; ++v) REQUIRE(d_neighborhood(dm, v, DistanceSet{0}) == std::vector<Vertex>{v});
  });

  const LinearForestSpec spec({{3, 5}});
  const DistanceMatrix forest(build_forest(spec));
  auto got = d_neighborhood(forest, spec.vertex_index(1, 2, 3), DistanceSet{0, 1});
  std::vector<Vertex> expected{spec.vertex_index(1, 2, 3), spec.vertex_index(1, 2, 2)};
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);
}

TEST_CASE("weight examples") {
  const auto p3 = weight_profile(DistanceMatrix(build_path(3, PathOrientation::kThetaDoublePrime)),
                                 Labeling::identity(3), DistanceSet{0, 1});
  CHECK(p3.weights == std::vector<Weight>{3, 2, 5});
  CHECK(p3.distinct);

  const auto tp = weight_profile(DistanceMatrix(build_path(3, PathOrientation::kThetaPrime)),
                                 Labeling({1, 3, 2}), DistanceSet{0, 1});
  CHECK(tp.weights[1] == 6);
  CHECK(tp.distinct);

  const auto c4 = weight_profile(DistanceMatrix(build_cycle(4)), Labeling::identity(4),
                                 DistanceSet{0, 2});
  CHECK_FALSE(c4.distinct);
  CHECK(c4.collisions == std::vector<VertexPair>{{0, 2}, {1, 3}});
}

TEST_CASE("empty neighborhoods weigh zero") {
  const auto w = weight_profile(DistanceMatrix(build_path(3, PathOrientation::kForward)),
                                Labeling({3, 2, 1}), DistanceSet{1});
  CHECK(w.weights == std::vector<Weight>{2, 1, 0});
}

TEST_CASE("strict policy rejects D beyond the diameter, clamp ignores it") {
  const DistanceMatrix dm(build_path(3, PathOrientation::kForward));
  CHECK(oracle::error_kind([&] { weight_profile(dm, Labeling::identity(3), DistanceSet{0, 5}); }) ==
        ErrorKind::kInvalidDistanceSet);
  const auto w = weight_profile(dm, Labeling::identity(3), DistanceSet{0, 5}, DistancePolicy::kClamp);
  CHECK(w.weights == std::vector<Weight>{1, 2, 3});
}

TEST_CASE("weights match a Floyd-Warshall recomputation") {
  std::mt19937_64 rng(77);
  for (std::size_t n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Arc> arcs;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          const auto r = rng() % 3;
          if (r == 1) arcs.push_back({u, v});
          if (r == 2) arcs.push_back({v, u});
        }
      }
      const OrientedGraph g(n, arcs);
      std::vector<Label> labels(n);
      std::iota(labels.begin(), labels.end(), 1U);
      std::shuffle(labels.begin(), labels.end(), rng);
      const DistanceMatrix dm(g);
      const auto mask = 1 + rng() % ((1ULL << (dm.partial_diameter() + 1)) - 1);
      const auto d = DistanceSet::from_mask(mask);
      const auto profile = weight_profile(dm, Labeling(labels), d);
      const auto expected = oracle::weights(g, labels, d);
      REQUIRE(profile.weights == expected);
      REQUIRE(profile.distinct == oracle::all_distinct(expected));
      REQUIRE(profile.distinct == profile.collisions.empty());
      REQUIRE(magic_constant(dm, Labeling(labels), d).has_value() ==
              oracle::all_equal(expected));
    }
  }
}

TEST_CASE("every oriented graph is {0}-antimagic") {
  for_each_oriented_graph(4, [](const OrientedGraph& g) {
    std::vector<Label> labels{1, 2, 3, 4};
    do {
      REQUIRE(is_d_antimagic(g, Labeling(labels), DistanceSet{0}));
    } while (std::next_permutation(labels.begin(), labels.end()));
  });
}

TEST_CASE("the Phi-oriented 3P5 labeling 3(i-1)+j is {0,1}-antimagic") {
  const LinearForestSpec spec({{3, 5}});
  std::vector<Label> labels(15);
  for (std::size_t s = 1; s <= 3; ++s) {
    for (std::size_t i = 1; i <= 5; ++i) labels[spec.vertex_index(1, s, i)] = static_cast<Label>(3 * (i - 1) + s);
  }
  CHECK(is_d_antimagic(build_forest(spec), Labeling(labels), DistanceSet{0, 1}));
}

TEST_CASE("a path with two sinks is never {1}-antimagic") {
  const auto g = two_sink_path();
  std::vector<Label> labels{1, 2, 3, 4, 5};
  do {
    REQUIRE_FALSE(is_d_antimagic(g, Labeling(labels), DistanceSet{1}));
  } while (std::next_permutation(labels.begin(), labels.end()));
}

TEST_CASE("magic constant examples") {
  CHECK(magic_constant(OrientedGraph(1, {}), Labeling::identity(1), DistanceSet{0}) ==
        std::optional<Weight>(1));
  CHECK_FALSE(magic_constant(build_cycle(3), Labeling::identity(3), DistanceSet{1, 2}).has_value());
  // C4 with D={1,3}: the weight is the sum of the two neighbours on the cycle.
  std::vector<Label> labels{1, 2, 3, 4};
  do {
    const auto lambda = magic_constant(build_cycle(4), Labeling(labels), DistanceSet{1, 3});
    const bool opposite_pairs_balanced = labels[0] + labels[2] == labels[1] + labels[3];
    REQUIRE(lambda.has_value() == opposite_pairs_balanced);
    if (lambda) REQUIRE(*lambda == 5);
  } while (std::next_permutation(labels.begin(), labels.end()));
}

TEST_CASE("equal-neighborhood witness examples") {
  const DistanceMatrix c4(build_cycle(4));
  const auto pair = equal_neighborhood_pair(c4, DistanceSet{0, 2});
  REQUIRE(pair.has_value());
  CHECK((pair->second - pair->first) == 2);
  for (std::size_t n = 1; n <= 7; ++n) {
    CHECK_FALSE(equal_neighborhood_pair(DistanceMatrix(build_path(n, PathOrientation::kForward)),
                                        DistanceSet{0})
                    .has_value());
  }
  CHECK(equal_neighborhood_pair(DistanceMatrix(two_sink_path()), DistanceSet{1}) ==
        std::optional<VertexPair>({0, 4}));
}

TEST_CASE("an equal-neighborhood witness rules out every labeling (paths n <= 6)") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for_each_path_orientation(n, [&](const OrientedGraph& g) {
      const DistanceMatrix dm(g);
      for (const auto& d : all_distance_sets(dm.partial_diameter())) {
        if (!equal_neighborhood_pair(dm, d)) continue;
        REQUIRE_FALSE(oracle::brute_force_antimagic(g, d).has_value());
      }
    });
  }
}

TEST_CASE("an equal-neighborhood witness rules out every labeling (graphs n <= 4)") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for_each_oriented_graph(n, [&](const OrientedGraph& g) {
      const DistanceMatrix dm(g);
      for (const auto& d : all_distance_sets(dm.partial_diameter())) {
        if (!equal_neighborhood_pair(dm, d)) continue;
        REQUIRE_FALSE(oracle::brute_force_antimagic(g, d).has_value());
      }
    });
  }
}

TEST_CASE("distance-antimagic obstruction") {
  const auto two = distance_antimagic_obstruction(two_sink_path());
  REQUIRE(two.has_value());
  CHECK(*two == VertexPair{0, 4});
  // Unique sink v4 fed by out-degree-one vertices v1 and v2.
  const OrientedGraph fan(4, {{0, 3}, {1, 3}, {2, 0}});
  CHECK(distance_antimagic_obstruction(fan) == std::optional<VertexPair>({0, 1}));
  for (std::size_t n = 2; n <= 8; ++n) {
    CHECK_FALSE(distance_antimagic_obstruction(build_path(n, PathOrientation::kForward)).has_value());
  }
}

TEST_CASE("the obstruction is sound on all trees n <= 6 and all graphs n <= 4") {
  const DistanceSet one{1};
  const auto check = [&](const OrientedGraph& g) {
    const auto pair = distance_antimagic_obstruction(g);
    if (!pair) return;
    const auto dm = oracle::floyd_warshall(g);
    std::vector<Label> labels(g.order());
    std::iota(labels.begin(), labels.end(), 1U);
    const auto w = oracle::weights(dm, labels, one);
    REQUIRE(w[pair->first] == w[pair->second]);
    REQUIRE_FALSE(oracle::brute_force_antimagic(g, one).has_value());
  };
  for (std::size_t n = 2; n <= 6; ++n) for_each_oriented_tree(n, check);
  for (std::size_t n = 2; n <= 4; ++n) for_each_oriented_graph(n, check);
}

TEST_CASE("duality examples") {
  const auto r = check_duality(build_cycle(4), Labeling::identity(4), DistanceSet{1});
  CHECK(r.complement == DistanceSet{0, 2, 3});
  CHECK(r.total == 10);
  CHECK(r.weight_sums_hold);
  CHECK(r.holds());

  std::vector<Label> labels{1, 2, 3};
  do {
    const auto c3 = check_duality(build_cycle(3), Labeling(labels), DistanceSet{1});
    REQUIRE(c3.antimagic == c3.complement_antimagic);
    REQUIRE(c3.holds());
  } while (std::next_permutation(labels.begin(), labels.end()));

  CHECK(oracle::error_kind([] { check_duality(OrientedGraph(1, {}), Labeling::identity(1), DistanceSet{0}); }) ==
        ErrorKind::kInvalidDistanceSet);
  CHECK(oracle::error_kind([] {
          check_duality(build_path(3, PathOrientation::kForward), Labeling::identity(3), DistanceSet{1});
        }) == ErrorKind::kPreconditionViolation);
}

TEST_CASE("complementary weights sum to n(n+1)/2 on strongly connected graphs of order 4") {
  for_each_oriented_graph(4, [](const OrientedGraph& g) {
    if (!is_strongly_connected(g)) return;
    const auto dist = oracle::floyd_warshall(g);
    const auto diam = oracle::diameter(dist);
    for (const auto& d : all_distance_sets(diam)) {
      if (d.size() == diam + 1) continue;
      const auto dstar = complement_distance_set(d, diam);
      std::vector<Label> labels{1, 2, 3, 4};
      do {
        const auto a = oracle::weights(dist, labels, d);
        const auto b = oracle::weights(dist, labels, dstar);
        for (std::size_t v = 0; v < 4; ++v) REQUIRE(a[v] + b[v] == 10);
        REQUIRE(check_duality(g, Labeling(labels), d).holds());
      } while (std::next_permutation(labels.begin(), labels.end()));
    }
  });
}
