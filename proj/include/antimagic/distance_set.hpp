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

#ifndef ANTIMAGIC_DISTANCE_SET_HPP_
#define ANTIMAGIC_DISTANCE_SET_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace antimagic {

// A non-empty set of admissible distances, kept sorted and duplicate-free.
class DistanceSet {
 public:
  // Throws Error(kInvalidDistanceSet) if empty.
  explicit DistanceSet(std::vector<std::size_t> values);
  DistanceSet(std::initializer_list<std::size_t> values)
      : DistanceSet(std::vector<std::size_t>(values)) {}

  // {lo, lo + 1, ..., hi}
  static DistanceSet range(std::size_t lo, std::size_t hi);
  // Members are the set bits of `mask` (bit d <=> distance d).
  static DistanceSet from_mask(unsigned long long mask);

  std::span<const std::size_t> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::size_t min() const noexcept { return values_.front(); }
  std::size_t max() const noexcept { return values_.back(); }
  bool contains(std::size_t d) const;

  // max() <= partial_diameter
  bool fits(std::size_t partial_diameter) const noexcept {
    return max() <= partial_diameter;
  }
  // Throws Error(kInvalidDistanceSet) unless fits().
  void require_fits(std::size_t partial_diameter) const;

  // "{0,2,3}"
  std::string to_string() const;

  friend bool operator==(const DistanceSet&, const DistanceSet&) = default;

 private:
  std::vector<std::size_t> values_;
};

// {0, ..., diameter} minus `d`. Throws Error(kInvalidDistanceSet) when `d`
// does not fit the diameter or the complement is empty.
DistanceSet complement_distance_set(const DistanceSet& d, std::size_t diameter);

}  // namespace antimagic

#endif  // ANTIMAGIC_DISTANCE_SET_HPP_
