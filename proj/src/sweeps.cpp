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

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "antimagic/constructions.hpp"
#include "antimagic/error.hpp"
#include "antimagic/search.hpp"

namespace antimagic {
namespace {

std::string mask_text(std::uint64_t bits, std::size_t width) {
  std::string out = "0b";
  if (width == 0) return out + "0";
  for (std::size_t i = width; i-- > 0;) out += ((bits >> i) & 1U) ? '1' : '0';
  return out;
}

std::string outcome_text(bool found) { return found ? "found" : "exhausted-none"; }

std::string graph_text(const OrientedGraph& g) {
  std::string out = "n=" + std::to_string(g.order()) + " arcs=[";
  for (std::size_t k = 0; k < g.arcs().size(); ++k) {
    if (k) out += ",";
    out += vertex_name(g.arcs()[k].tail) + "->" + vertex_name(g.arcs()[k].head);
  }
  return out + "]";
}

// Proper non-empty subsets of {0..diameter}, as masks.
std::uint64_t proper_mask_end(std::size_t diameter) {
  return (std::uint64_t{1} << (diameter + 1)) - 1;
}

bool found_labeling(const OrientedGraph& g, const DistanceSet& d,
                    const SearchOptions& options) {
  const auto report = exhaustive_labeling_search(g, d, options);
  if (report.outcome == SearchOutcome::kAbortedBudget) {
    throw Error(ErrorKind::kInvalidParameter,
                "search budget too small for a sweep instance of order " +
                    std::to_string(g.order()));
  }
  return report.found();
}

}  // namespace

std::vector<CharacterizationCheck> check_path_characterizations(std::size_t n_max,
                                                                const SearchOptions& options) {
  if (n_max < 3 || n_max > kMaxPathSweepOrder) {
    throw Error(ErrorKind::kInvalidParameter,
                "path sweep needs 3 <= n_max <= " + std::to_string(kMaxPathSweepOrder));
  }
  const std::string range = "3<=n<=" + std::to_string(n_max) +
                            ", all orientations, all D within {0..n-1} fitting the path";
  std::vector<CharacterizationCheck> checks{
      {check::kPathMinDOne, range},
      {check::kPathMinDAtLeastTwo, range},
      {check::kPathLongestDistance, range},
      {check::kPathZeroAndNMinusTwo, range},
  };
  auto& min_one = checks[0];
  auto& min_two = checks[1];
  auto& longest = checks[2];
  auto& theta = checks[3];

  for (std::size_t n = 3; n <= n_max; ++n) {
    for (std::uint64_t bits = 0; bits < path_orientation_count(n); ++bits) {
      const auto g = build_path(n, ArcBitmask{bits, n - 1});
      const auto cls = classify_path_orientation(g);
      const bool uni = cls == PathClass::kUnidirectional;
      const std::size_t diameter = partial_diameter(g);
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        const auto d = DistanceSet::from_mask(mask);
        const bool in_min_one = d.min() == 1;
        const bool in_min_two = d.min() >= 2;
        const bool in_longest = d.contains(n - 1) && d.min() <= 1;
        const bool in_theta = d.contains(0) && d.contains(n - 2) && d.max() <= n - 2;
        if (!(in_min_one || in_min_two || in_longest || in_theta)) continue;

        std::vector<CharacterizationCheck*> families;
        if (in_min_one) families.push_back(&min_one);
        if (in_min_two) families.push_back(&min_two);
        if (in_longest) families.push_back(&longest);
        if (in_theta) families.push_back(&theta);
        if (!d.fits(diameter)) {
          for (auto* c : families) ++c->skipped;
          continue;
        }
        const bool found = found_labeling(g, d, options);
        const std::string where = "P" + std::to_string(n) + " " + mask_text(bits, n - 1) +
                                  " (" + std::string(to_string(cls)) + ") D=" + d.to_string();
        const auto compare = [&](CharacterizationCheck& c, bool predicted) {
          ++c.instances;
          if (predicted != found) {
            c.record(where + ": predicted " + outcome_text(predicted) + ", search " +
                     outcome_text(found));
          }
        };
        if (in_min_one) compare(min_one, uni);
        if (in_min_two) compare(min_two, false);
        if (in_longest) compare(longest, uni);
        if (in_theta) compare(theta, cls != PathClass::kOther);
      }
    }
  }
  return checks;
}

CharacterizationCheck check_tree_characterization(std::size_t n_max,
                                                  const SearchOptions& options) {
  if (n_max < 2 || n_max > kMaxTreeSweepOrder) {
    throw Error(ErrorKind::kInvalidParameter,
                "tree sweep needs 2 <= n_max <= " + std::to_string(kMaxTreeSweepOrder));
  }
  CharacterizationCheck c{check::kTreeDistanceAntimagic,
                          "2<=n<=" + std::to_string(n_max) +
                              ", all labeled trees x all orientations, D={1}"};
  const DistanceSet d{1};
  for (std::size_t n = 2; n <= n_max; ++n) {
    for (std::uint64_t index = 0; index < oriented_tree_count(n); ++index) {
      const auto g = oriented_tree(n, index);
      const bool predicted = is_unidirectional_path(g);
      const bool found = found_labeling(g, d, options);
      ++c.instances;
      if (predicted != found) {
        c.record(graph_text(g) + ": predicted " + outcome_text(predicted) + ", search " +
                 outcome_text(found));
      }
    }
  }
  return c;
}

std::vector<CharacterizationCheck> check_forest_lemmas(
    std::span<const LinearForestSpec> forests, std::span<const DistanceSet> distance_sets,
    const SearchOptions& options) {
  std::string range = "forests {";
  for (std::size_t k = 0; k < forests.size(); ++k) {
    range += (k ? " | " : "") + forests[k].to_string();
  }
  range += "}, all orientations, D in {";
  for (std::size_t k = 0; k < distance_sets.size(); ++k) {
    range += (k ? " " : "") + distance_sets[k].to_string();
  }
  range += "}";
  std::vector<CharacterizationCheck> checks{
      {check::kForestMinDAtLeastTwo, range},
      {check::kForestMinDOne, range},
      {check::kMpnZeroNMinusOne, range},
      {check::kMpnMinDZero, range},
  };
  auto& min_two = checks[0];
  auto& min_one = checks[1];
  auto& longest = checks[2];
  auto& exists = checks[3];

  for (const auto& spec : forests) {
    if (spec.total_order() > kMaxForestSweepOrder) {
      throw Error(ErrorKind::kInvalidParameter,
                  "forest sweep instances are limited to total order " +
                      std::to_string(kMaxForestSweepOrder));
    }
    const auto edges = spec.edges();
    const bool mpn = spec.components().size() == 1;
    const std::size_t n = spec.components().front().order;
    const bool mpn_exists_family = mpn && spec.components().front().multiplicity >= 2 && n >= 2;

    // Orientation `bits`: bit e set orients edge e from its lower to its
    // higher position, so bits = 0 is Phi.
    const auto orient = [&](std::uint64_t bits) {
      std::vector<Arc> arcs = edges;
      for (std::size_t e = 0; e < arcs.size(); ++e) {
        if (((bits >> e) & 1U) == 0) std::swap(arcs[e].tail, arcs[e].head);
      }
      return OrientedGraph(spec.total_order(), std::move(arcs));
    };
    const std::uint64_t orientations = std::uint64_t{1} << edges.size();

    for (const auto& d : distance_sets) {
      const bool zero_longest = mpn && n >= 2 && d == DistanceSet{0, n - 1};
      const bool needs_all = d.min() >= 1 || zero_longest;
      bool any_found = false;
      bool any_fits = false;
      for (std::uint64_t bits = 0; bits < orientations; ++bits) {
        const auto g = orient(bits);
        const std::size_t diameter = partial_diameter(g);
        const std::string where = spec.to_string() + " " + mask_text(bits, edges.size()) +
                                  " D=" + d.to_string();
        any_fits = any_fits || d.fits(diameter);
        if (!d.fits(diameter)) {
          if (d.min() >= 2) ++min_two.skipped;
          if (d.min() == 1) ++min_one.skipped;
          if (zero_longest) ++longest.skipped;
          continue;
        }
        const bool found = found_labeling(g, d, options);
        any_found = any_found || found;
        if (d.min() >= 2) {
          ++min_two.instances;
          if (found) min_two.record(where + ": predicted exhausted-none, search found");
        }
        if (d.min() == 1) {
          const bool predicted = spec.path_count() == 1 && is_unidirectional_path(g);
          ++min_one.instances;
          if (predicted != found) {
            min_one.record(where + ": predicted " + outcome_text(predicted) + ", search " +
                           outcome_text(found));
          }
        }
        if (zero_longest) {
          bool all_uni = true;
          for (const auto& comp : weak_components(g)) {
            std::vector<Arc> local;
            for (const Arc& a : g.arcs()) {
              const auto pos = std::lower_bound(comp.begin(), comp.end(), a.tail);
              if (pos == comp.end() || *pos != a.tail) continue;
              const auto head = std::lower_bound(comp.begin(), comp.end(), a.head);
              local.push_back({static_cast<Vertex>(pos - comp.begin()),
                               static_cast<Vertex>(head - comp.begin())});
            }
            all_uni = all_uni && is_unidirectional_path(OrientedGraph(comp.size(), local));
          }
          ++longest.instances;
          if (all_uni != found) {
            longest.record(where + ": predicted " + outcome_text(all_uni) + ", search " +
                           outcome_text(found));
          }
        }
        if (!needs_all && any_found) break;
      }
      if (mpn_exists_family && !any_fits) {
        ++exists.skipped;
      } else if (mpn_exists_family) {
        const bool predicted = d.min() == 0;
        ++exists.instances;
        if (predicted != any_found) {
          exists.record(spec.to_string() + " D=" + d.to_string() + ": predicted " +
                        (predicted ? "some orientation antimagic" : "no orientation antimagic") +
                        ", search " + (any_found ? "found one" : "found none"));
        }
      }
    }
  }
  return checks;
}

CharacterizationCheck check_union_counterexample() {
  CharacterizationCheck c{check::kUnionCounterexample,
                          "unidirectional C4, D in {0} {2} {0,2}, all 24 labelings"};
  const auto g = build_cycle(4);
  SearchOptions full;
  full.neighborhood_shortcut = false;
  const struct {
    DistanceSet d;
    bool expected;
  } cases[] = {{DistanceSet{0}, true}, {DistanceSet{2}, true}, {DistanceSet{0, 2}, false}};
  for (const auto& [d, expected] : cases) {
    const auto report = exhaustive_labeling_search(g, d, full);
    ++c.instances;
    if (report.found() != expected) {
      c.record("C4 D=" + d.to_string() + ": expected " + outcome_text(expected) +
               ", search " + outcome_text(report.found()));
    }
  }
  // The cyclic labeling 1,2,3,4 is a {2}-antimagic witness.
  ++c.instances;
  if (!is_d_antimagic(g, Labeling({1, 2, 3, 4}), DistanceSet{2})) {
    c.record("C4 cyclic labels 1,2,3,4 are not {2}-antimagic");
  }
  return c;
}

namespace {

// Strongly connected graphs of the given order, in code order.
std::vector<OrientedGraph> strongly_connected_graphs(std::size_t order) {
  std::vector<OrientedGraph> out;
  for_each_oriented_graph(order, [&](const OrientedGraph& g) {
    if (is_strongly_connected(g)) out.push_back(g);
  });
  return out;
}

}  // namespace

CharacterizationCheck check_duality_sweep(std::size_t order, std::uint64_t trials) {
  if (order < 1 || order > 5) {
    throw Error(ErrorKind::kInvalidParameter, "duality sweep order must be in 1..5");
  }
  CharacterizationCheck c{check::kDuality,
                          "C3, C4, C5 and all strongly connected order-" +
                              std::to_string(order) + " graphs, all proper D, " +
                              (trials == 0 ? std::string("all") : std::to_string(trials)) +
                              " labelings each"};
  auto fixtures = strongly_connected_graphs(order);
  for (std::size_t k = 3; k <= 5; ++k) fixtures.push_back(build_cycle(k));

  for (const auto& g : fixtures) {
    const std::size_t n = g.order();
    const std::size_t diameter = partial_diameter(g);
    const std::uint64_t labelings =
        trials == 0 ? factorial(n) : std::min<std::uint64_t>(trials, factorial(n));
    for (std::uint64_t mask = 1; mask < proper_mask_end(diameter); ++mask) {
      const auto d = DistanceSet::from_mask(mask);
      std::vector<Label> perm = permutation_at(n, 0);
      for (std::uint64_t r = 0; r < labelings; ++r) {
        const auto report = check_duality(g, Labeling(perm), d);
        ++c.instances;
        if (!report.holds()) {
          c.record(graph_text(g) + " D=" + d.to_string() + " labels rank " +
                   std::to_string(r) + ": duality identity violated");
        }
        std::next_permutation(perm.begin(), perm.end());
      }
    }
  }
  return c;
}

CharacterizationCheck check_magic_bounds(std::size_t lo, std::size_t hi) {
  if (lo < 3 || hi > kMaxMagicGraphOrder || lo > hi) {
    throw Error(ErrorKind::kInvalidParameter, "magic bound sweep needs 3 <= lo <= hi <= 5");
  }
  CharacterizationCheck c{check::kMagicBounds,
                          "strongly connected graphs of order " + std::to_string(lo) + ".." +
                              std::to_string(hi) + ", all proper D, all labelings"};
  for (std::size_t n = lo; n <= hi; ++n) {
    const Weight upper = label_total(n) - 5;
    for (const auto& g : strongly_connected_graphs(n)) {
      const std::size_t diameter = partial_diameter(g);
      for (std::uint64_t mask = 1; mask < proper_mask_end(diameter); ++mask) {
        const auto d = DistanceSet::from_mask(mask);
        for (const auto& magic : exhaustive_magic_search(g, d)) {
          ++c.instances;
          if (magic.constant < 5 || magic.constant > upper) {
            c.record(graph_text(g) + " D=" + d.to_string() + ": lambda " +
                     std::to_string(magic.constant) + " outside [5, " +
                     std::to_string(upper) + "]");
          }
        }
      }
    }
  }
  return c;
}

std::vector<LinearForestSpec> enumerate_forest_specs(std::size_t max_total,
                                                     std::size_t max_path) {
  std::vector<LinearForestSpec> out;
  std::vector<PathComponent> current;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t next_order,
                                                              std::size_t used) {
    if (!current.empty()) out.emplace_back(current);
    for (std::size_t order = next_order; order <= max_path; ++order) {
      for (std::size_t m = 1; used + m * order <= max_total; ++m) {
        current.push_back({m, order});
        extend(order + 1, used + m * order);
        current.pop_back();
      }
    }
  };
  extend(1, 0);
  return out;
}

CharacterizationCheck check_constructions(const ConstructionSweepLimits& limits) {
  CharacterizationCheck c{
      check::kConstructions,
      "uni paths n<=" + std::to_string(limits.path_max) + ", theta n<=" +
          std::to_string(limits.theta_max) + ", mPn{0,k} m,n<=" +
          std::to_string(limits.mpn_max) + ", general mPn m,n<=" +
          std::to_string(limits.mpn_general_max) + ", forests order<=" +
          std::to_string(limits.forest_total_max) + " with n_j<=" +
          std::to_string(limits.forest_path_max)};
  const auto attempt = [&c](const std::string& what, auto&& build) {
    ++c.instances;
    try {
      const ConstructionResult r = build();
      if (!weight_profile(DistanceMatrix(r.graph), r.labeling, r.distance_set).distinct) {
        c.record(what + ": weights collide");
      }
    } catch (const std::exception& e) {
      c.record(what + ": " + e.what());
    }
  };

  for (std::size_t n = 3; n <= limits.path_max; ++n) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      const auto d = DistanceSet::from_mask(mask);
      if (d.min() > 1) continue;
      attempt("uni P" + std::to_string(n) + " D=" + d.to_string(),
              [&] { return label_unidirectional_path(n, d); });
    }
  }
  for (std::size_t n = 3; n <= limits.theta_max; ++n) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      const auto d = DistanceSet::from_mask(mask);
      if (!d.contains(0) || !d.contains(n - 2)) continue;
      attempt("theta' P" + std::to_string(n) + " D=" + d.to_string(),
              [&] { return label_theta_prime(n, d); });
      attempt("theta'' P" + std::to_string(n) + " D=" + d.to_string(),
              [&] { return label_theta_double_prime(n, d); });
    }
  }
  for (std::size_t m = 1; m <= limits.mpn_max; ++m) {
    for (std::size_t n = 2; n <= limits.mpn_max; ++n) {
      for (std::size_t k = 1; k < n; ++k) {
        attempt(std::to_string(m) + "P" + std::to_string(n) + " k=" + std::to_string(k),
                [&] { return label_mpn(m, n, k); });
      }
    }
  }
  for (std::size_t m = 2; m <= limits.mpn_general_max; ++m) {
    for (std::size_t n = 2; n <= limits.mpn_general_max; ++n) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
        const auto d = DistanceSet::from_mask(mask);
        attempt(std::to_string(m) + "P" + std::to_string(n) + " D=" + d.to_string(),
                [&] { return label_mpn_general(m, n, d); });
      }
    }
  }
  for (const auto& spec : enumerate_forest_specs(limits.forest_total_max,
                                                 limits.forest_path_max)) {
    if (spec.components().back().order < 2) continue;
    attempt("forest " + spec.to_string(), [&] {
      auto r = label_forest(spec);
      std::vector<Label> sorted(r.labeling.labels().begin(), r.labeling.labels().end());
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k] != k + 1) throw std::logic_error("f* is not a bijection");
      }
      return r;
    });
  }
  return c;
}

CharacterizationCheck check_neighborhood_sufficiency(std::size_t order) {
  if (order < 1 || order > 5) {
    throw Error(ErrorKind::kInvalidParameter, "neighborhood sweep order must be in 1..5");
  }
  CharacterizationCheck c{check::kNeighborhoodSufficiency,
                          "all oriented graphs of order " + std::to_string(order) +
                              ", all fitting D (exploratory)"};
  SearchOptions options;
  options.neighborhood_shortcut = false;
  for_each_oriented_graph(order, [&](const OrientedGraph& g) {
    const DistanceMatrix dm(g);
    const std::size_t diameter = dm.partial_diameter();
    for (std::uint64_t mask = 1; mask <= proper_mask_end(diameter); ++mask) {
      const auto d = DistanceSet::from_mask(mask);
      if (NeighborhoodTable(dm, d).equal_pair()) continue;
      ++c.instances;
      if (!exhaustive_labeling_search(g, d, options).found()) {
        c.record(graph_text(g) + " D=" + d.to_string() +
                 ": distinct neighborhoods but no antimagic labeling");
      }
    }
  });
  return c;
}

std::string render_table(std::span<const CharacterizationCheck> checks) {
  std::size_t width = 7;
  for (const auto& c : checks) width = std::max(width, c.theorem.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "theorem"
      << "  instances  skipped  agree  counterexamples\n";
  for (const auto& c : checks) {
    out << std::left << std::setw(static_cast<int>(width)) << c.theorem << "  "
        << std::right << std::setw(9) << c.instances << "  " << std::setw(7) << c.skipped
        << "  " << std::left << std::setw(5) << (c.agree ? "yes" : "NO") << "  "
        << c.counterexamples.size() << "\n";
  }
  for (const auto& c : checks) {
    for (const auto& example : c.counterexamples) {
      out << "  " << c.theorem << ": " << example << "\n";
    }
  }
  return out.str();
}

}  // namespace antimagic
