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

#include "antimagic/distance_set.hpp"

#include <algorithm>

#include "antimagic/error.hpp"

namespace antimagic {

DistanceSet::DistanceSet(std::vector<std::size_t> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorKind::kInvalidDistanceSet, "distance set must be non-empty");
  }
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

DistanceSet DistanceSet::range(std::size_t lo, std::size_t hi) {
  if (lo > hi) throw Error(ErrorKind::kInvalidDistanceSet, "empty distance range");
  std::vector<std::size_t> values;
  for (std::size_t d = lo; d <= hi; ++d) values.push_back(d);
  return DistanceSet(std::move(values));
}

DistanceSet DistanceSet::from_mask(unsigned long long mask) {
  std::vector<std::size_t> values;
  for (std::size_t d = 0; d < 64; ++d) {
    if ((mask >> d) & 1ULL) values.push_back(d);
  }
  return DistanceSet(std::move(values));
}

bool DistanceSet::contains(std::size_t d) const {
  return std::binary_search(values_.begin(), values_.end(), d);
}

void DistanceSet::require_fits(std::size_t partial_diameter) const {
  if (!fits(partial_diameter)) {
    throw Error(ErrorKind::kInvalidDistanceSet,
                "distance set " + to_string() + " exceeds the partial diameter " +
                    std::to_string(partial_diameter));
  }
}

std::string DistanceSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values_[i]);
  }
  return out + "}";
}

DistanceSet complement_distance_set(const DistanceSet& d, std::size_t diameter) {
  d.require_fits(diameter);
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k <= diameter; ++k) {
    if (!d.contains(k)) rest.push_back(k);
  }
  if (rest.empty()) {
    throw Error(ErrorKind::kInvalidDistanceSet,
                "complement of " + d.to_string() + " in {0.." +
                    std::to_string(diameter) + "} is empty");
  }
  return DistanceSet(std::move(rest));
}

}  // namespace antimagic
