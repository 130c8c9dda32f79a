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

// Brute-force oracles: exhaustive labeling search, magic search, graph
// search, and sweeps that check characterization theorems against them.

#ifndef ANTIMAGIC_SEARCH_HPP_
#define ANTIMAGIC_SEARCH_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "antimagic/digraph.hpp"
#include "antimagic/distance_set.hpp"
#include "antimagic/forest.hpp"
#include "antimagic/labeling.hpp"

namespace antimagic {

// 10!, enough for any graph on ten vertices.
inline constexpr std::uint64_t kDefaultBudget = 3'628'800;

struct SearchOptions {
  // Maximum number of candidate labelings examined.
  std::uint64_t budget = kDefaultBudget;
  // Worker threads. Witnesses do not depend on this.
  unsigned jobs = 1;
  // Report exhausted-none immediately when two vertices share a
  // D-neighborhood.
  bool neighborhood_shortcut = true;
  DistancePolicy policy = DistancePolicy::kStrict;
};

enum class SearchOutcome { kFound, kExhaustedNone, kAbortedBudget };

std::string_view to_string(SearchOutcome outcome);

struct SearchReport {
  SearchOutcome outcome = SearchOutcome::kExhaustedNone;
  std::optional<Labeling> witness;
  // Graph searches also return the graph that carries the witness.
  std::optional<OrientedGraph> graph;
  std::optional<Weight> magic_constant;
  std::uint64_t candidates_examined = 0;
  // The equal-neighborhood shortcut decided the outcome.
  bool shortcut = false;
  std::chrono::nanoseconds elapsed{0};

  bool found() const { return outcome == SearchOutcome::kFound; }
};

// n! saturated at UINT64_MAX.
std::uint64_t factorial(std::size_t n);

// Permutation of 1..n with the given lexicographic rank.
std::vector<Label> permutation_at(std::size_t n, std::uint64_t rank);

// Walks labelings in lexicographic order and returns the first D-antimagic
// one. Workers own contiguous rank ranges; the reported witness is always the
// lexicographically smallest. candidates_examined is exact for jobs == 1 and
// for exhausted searches.
SearchReport exhaustive_labeling_search(const OrientedGraph& g,
                                        const DistanceSet& d,
                                        const SearchOptions& options = {});

struct MagicLabeling {
  Labeling labeling;
  Weight constant = 0;
};

inline constexpr std::size_t kMaxMagicSearchOrder = 8;

// Every D-magic labeling, lexicographically ordered.
std::vector<MagicLabeling> exhaustive_magic_search(
    const OrientedGraph& g, const DistanceSet& d,
    DistancePolicy policy = DistancePolicy::kStrict);

inline constexpr std::size_t kMaxMagicGraphOrder = 5;

// Scans the oriented graphs on n labelled vertices in code order, keeps the
// strongly connected ones that D fits, and returns the first D-magic
// (graph, labeling) pair, with constant `target` when given. The search space
// (and candidates_examined once exhausted) counts n! labelings per kept graph.
SearchReport find_magic_graph(std::size_t n, const DistanceSet& d,
                              std::optional<Weight> target,
                              const SearchOptions& options = {});

// ---------------------------------------------------------------------------
// Sweeps.

struct CharacterizationCheck {
  std::string theorem;
  std::string range;
  bool agree = true;
  std::vector<std::string> counterexamples;
  std::uint64_t instances = 0;
  // (graph, D) pairs dropped because max(D) exceeds the partial diameter.
  std::uint64_t skipped = 0;

  void record(std::string counterexample) {
    agree = false;
    counterexamples.push_back(std::move(counterexample));
  }
};

namespace check {
inline constexpr const char* kPathMinDOne = "path-min-d-1-iff-unidirectional";
inline constexpr const char* kPathMinDAtLeastTwo = "path-min-d-ge-2-never";
inline constexpr const char* kPathLongestDistance = "path-n-1-in-d-iff-unidirectional";
inline constexpr const char* kPathZeroAndNMinusTwo = "path-0-and-n-2-iff-three-classes";
inline constexpr const char* kTreeDistanceAntimagic = "tree-d-1-iff-unidirectional-path";
inline constexpr const char* kForestMinDAtLeastTwo = "forest-min-d-ge-2-never";
inline constexpr const char* kForestMinDOne = "forest-min-d-1-single-unidirectional-path";
inline constexpr const char* kMpnZeroNMinusOne = "mpn-0-n-1-iff-unidirectional";
inline constexpr const char* kMpnMinDZero = "mpn-orientation-exists-iff-min-d-0";
inline constexpr const char* kUnionCounterexample = "union-not-antimagic-c4";
inline constexpr const char* kDuality = "complement-duality";
inline constexpr const char* kMagicBounds = "magic-constant-bounds";
inline constexpr const char* kConstructions = "constructions-verify";
inline constexpr const char* kNeighborhoodSufficiency = "distinct-neighborhoods-suffice";
}  // namespace check

inline constexpr std::size_t kMaxPathSweepOrder = 7;

// For 3 <= n <= n_max, every orientation and every non-empty D within
// {0..n-1} that fits the orientation: exhaustive search against
//  - min(D) = 1: antimagic iff unidirectional;
//  - min(D) >= 2: never antimagic;
//  - n-1 in D and min(D) <= 1: antimagic iff unidirectional;
//  - {0, n-2} <= D <= {0..n-2}: antimagic iff unidirectional, theta-prime or
//    theta-double-prime.
std::vector<CharacterizationCheck> check_path_characterizations(
    std::size_t n_max, const SearchOptions& options = {});

inline constexpr std::size_t kMaxTreeSweepOrder = 6;

// For 2 <= n <= n_max over every oriented labeled tree: {1}-antimagic iff
// the tree is a unidirectional path.
CharacterizationCheck check_tree_characterization(std::size_t n_max,
                                                  const SearchOptions& options = {});

inline constexpr std::size_t kMaxForestSweepOrder = 9;

// Every orientation of every forest in `forests` against every D in
// `distance_sets`:
//  - min(D) >= 2: never antimagic;
//  - min(D) = 1: antimagic only for a single unidirectional path;
//  - mP_n with D = {0, n-1}: antimagic iff every copy is unidirectional;
//  - mP_n with m, n >= 2: some orientation is antimagic iff min(D) = 0.
std::vector<CharacterizationCheck> check_forest_lemmas(
    std::span<const LinearForestSpec> forests,
    std::span<const DistanceSet> distance_sets,
    const SearchOptions& options = {});

// Unidirectional C4: {0}- and {2}-antimagic but not {0,2}-antimagic.
CharacterizationCheck check_union_counterexample();

// Strongly connected graphs of the given order (all of them for order <= 5,
// otherwise not supported) plus unidirectional cycles C3..C5, all proper D,
// and the first `trials` labelings of each in lexicographic order (0 = all).
CharacterizationCheck check_duality_sweep(std::size_t order, std::uint64_t trials);

// Every magic constant on strongly connected graphs of order lo..hi
// (3 <= lo <= hi <= 5) over every proper D lies in [5, n(n+1)/2 - 5].
CharacterizationCheck check_magic_bounds(std::size_t lo, std::size_t hi);

struct ConstructionSweepLimits {
  std::size_t path_max = 10;
  std::size_t theta_max = 9;
  std::size_t mpn_max = 8;
  std::size_t mpn_general_max = 6;
  std::size_t forest_total_max = 18;
  std::size_t forest_path_max = 7;
};

// Runs every constructor over its full parameter range up to the limits and
// checks the verifier (and, for forests, bijectivity of f*).
CharacterizationCheck check_constructions(const ConstructionSweepLimits& limits = {});

// Every strictly increasing (multiplicity, order) list with orders at most
// `max_path` and total order at most `max_total`.
std::vector<LinearForestSpec> enumerate_forest_specs(std::size_t max_total,
                                                     std::size_t max_path);

// Exploratory: on all oriented graphs of the given order (<= 5) and every
// fitting D, does "no two vertices share a D-neighborhood" already imply a
// D-antimagic labeling? Counterexamples are graphs where it does not.
CharacterizationCheck check_neighborhood_sufficiency(std::size_t order);

// Plain-text table, one row per check.
std::string render_table(std::span<const CharacterizationCheck> checks);

}  // namespace antimagic

#endif  // ANTIMAGIC_SEARCH_HPP_
