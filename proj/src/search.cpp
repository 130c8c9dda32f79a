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

#include "antimagic/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "antimagic/error.hpp"

namespace antimagic {
namespace {

using Clock = std::chrono::steady_clock;

// Ranges shorter than this per worker are not worth a thread.
constexpr std::uint64_t kMinRanksPerWorker = 20'000;

// Distinctness test with a stamped seen-array instead of sorting.
class DistinctWeights {
 public:
  explicit DistinctWeights(const NeighborhoodTable& table)
      : table_(&table), stamp_(label_total(table.order()) + 1, 0) {}

  bool operator()(std::span<const Label> labels) {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    for (Vertex v = 0; v < table_->order(); ++v) {
      const Weight w = table_->weight(v, labels);
      if (stamp_[w] == epoch_) return false;
      stamp_[w] = epoch_;
    }
    return true;
  }

 private:
  const NeighborhoodTable* table_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

std::optional<Weight> common_weight(const NeighborhoodTable& table,
                                    std::span<const Label> labels) {
  if (table.order() == 0) return std::nullopt;
  const Weight first = table.weight(0, labels);
  for (Vertex v = 1; v < table.order(); ++v) {
    if (table.weight(v, labels) != first) return std::nullopt;
  }
  return first;
}

struct RangeHit {
  std::optional<std::uint64_t> rank;
  std::vector<Label> labels;
  std::uint64_t examined = 0;
};

template <typename Accept>
RangeHit scan_ranks(std::size_t n, std::uint64_t begin, std::uint64_t end, Accept& accept,
                    const std::atomic<std::uint64_t>* best) {
  RangeHit hit;
  if (begin >= end) return hit;
  auto perm = permutation_at(n, begin);
  for (std::uint64_t r = begin; r < end; ++r) {
    if (best != nullptr && best->load(std::memory_order_relaxed) < r) break;
    ++hit.examined;
    if (accept(std::span<const Label>(perm))) {
      hit.rank = r;
      hit.labels = perm;
      return hit;
    }
    std::next_permutation(perm.begin(), perm.end());
  }
  return hit;
}

// Smallest accepted rank in [0, limit). `make_accept` builds one predicate per
// worker so that scratch state is never shared.
template <typename MakeAccept>
RangeHit first_accepted(std::size_t n, std::uint64_t limit, unsigned jobs,
                        MakeAccept&& make_accept) {
  const std::uint64_t workers =
      std::clamp<std::uint64_t>(limit / kMinRanksPerWorker, 1, std::max(1U, jobs));
  if (workers == 1) {
    auto accept = make_accept();
    return scan_ranks(n, 0, limit, accept, nullptr);
  }
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  std::vector<RangeHit> hits(workers);
  const std::uint64_t chunk = (limit + workers - 1) / workers;
  {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        auto accept = make_accept();
        const std::uint64_t begin = std::min(limit, w * chunk);
        const std::uint64_t end = std::min(limit, begin + chunk);
        hits[w] = scan_ranks(n, begin, end, accept, &best);
        if (hits[w].rank) {
          auto seen = best.load();
          while (*hits[w].rank < seen && !best.compare_exchange_weak(seen, *hits[w].rank)) {
          }
        }
      });
    }
  }
  RangeHit merged;
  for (auto& h : hits) {
    merged.examined += h.examined;
    if (h.rank && (!merged.rank || *h.rank < *merged.rank)) {
      merged.rank = h.rank;
      merged.labels = std::move(h.labels);
    }
  }
  return merged;
}

}  // namespace

std::string_view to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::kFound: return "found";
    case SearchOutcome::kExhaustedNone: return "exhausted-none";
    case SearchOutcome::kAbortedBudget: return "aborted-budget";
  }
  return "unknown";
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t k = 2; k <= n; ++k) {
    if (f > std::numeric_limits<std::uint64_t>::max() / k) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    f *= k;
  }
  return f;
}

std::vector<Label> permutation_at(std::size_t n, std::uint64_t rank) {
  if (rank >= factorial(n) && factorial(n) != std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorKind::kInvalidParameter, "permutation rank out of range");
  }
  std::vector<Label> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Label>(i + 1);
  std::vector<Label> out;
  out.reserve(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::uint64_t block = factorial(n - 1 - pos);
    const std::uint64_t index = rank / block;
    rank %= block;
    out.push_back(pool[index]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(index));
  }
  return out;
}

SearchReport exhaustive_labeling_search(const OrientedGraph& g, const DistanceSet& d,
                                        const SearchOptions& options) {
  const auto start = Clock::now();
  const DistanceMatrix dm(g);
  const NeighborhoodTable table(dm, d, options.policy);
  SearchReport report;

  if (options.neighborhood_shortcut && table.equal_pair()) {
    report.outcome = SearchOutcome::kExhaustedNone;
    report.shortcut = true;
    report.elapsed = Clock::now() - start;
    return report;
  }

  const std::size_t n = g.order();
  const std::uint64_t space = factorial(n);
  const std::uint64_t limit = std::min(space, options.budget);
  auto hit = first_accepted(n, limit, options.jobs,
                            [&table] { return DistinctWeights(table); });
  report.candidates_examined = hit.examined;
  if (hit.rank) {
    report.outcome = SearchOutcome::kFound;
    report.witness = Labeling(std::move(hit.labels));
  } else {
    report.outcome =
        limit == space ? SearchOutcome::kExhaustedNone : SearchOutcome::kAbortedBudget;
  }
  report.elapsed = Clock::now() - start;
  return report;
}

std::vector<MagicLabeling> exhaustive_magic_search(const OrientedGraph& g,
                                                   const DistanceSet& d,
                                                   DistancePolicy policy) {
  const std::size_t n = g.order();
  if (n > kMaxMagicSearchOrder) {
    throw Error(ErrorKind::kInvalidParameter,
                "magic search is limited to order " + std::to_string(kMaxMagicSearchOrder));
  }
  const NeighborhoodTable table(DistanceMatrix(g), d, policy);
  std::vector<MagicLabeling> found;
  std::vector<Label> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Label>(i + 1);
  do {
    if (const auto constant = common_weight(table, perm)) {
      found.push_back({Labeling(perm), *constant});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return found;
}

SearchReport find_magic_graph(std::size_t n, const DistanceSet& d,
                              std::optional<Weight> target, const SearchOptions& options) {
  if (n == 0 || n > kMaxMagicGraphOrder) {
    throw Error(ErrorKind::kInvalidParameter,
                "magic graph search needs 1 <= n <= " + std::to_string(kMaxMagicGraphOrder));
  }
  const auto start = Clock::now();
  SearchReport report;
  const std::uint64_t graphs = oriented_graph_count(n);
  const std::uint64_t per_graph = factorial(n);
  std::vector<Label> perm(n);
  for (std::uint64_t code = 0; code < graphs; ++code) {
    const auto g = oriented_graph(n, code);
    if (!is_strongly_connected(g)) continue;
    const DistanceMatrix dm(g);
    if (options.policy == DistancePolicy::kStrict && !d.fits(dm.partial_diameter())) continue;
    if (report.candidates_examined + per_graph > options.budget) {
      report.outcome = SearchOutcome::kAbortedBudget;
      report.elapsed = Clock::now() - start;
      return report;
    }
    const NeighborhoodTable table(dm, d, options.policy);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Label>(i + 1);
    do {
      ++report.candidates_examined;
      const auto constant = common_weight(table, perm);
      if (constant && (!target || *constant == *target)) {
        report.outcome = SearchOutcome::kFound;
        report.graph = g;
        report.witness = Labeling(perm);
        report.magic_constant = constant;
        report.elapsed = Clock::now() - start;
        return report;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  report.outcome = SearchOutcome::kExhaustedNone;
  report.elapsed = Clock::now() - start;
  return report;
}

}  // namespace antimagic
