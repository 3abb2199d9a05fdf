// Copyright 2026 The subvar Authors.
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

#include "subvar/subset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace subvar {

GroundSet::GroundSet(std::size_t size) : n(size) {
  if (n == 0) throw std::invalid_argument("ground set must be nonempty");
}

SubsetMask::SubsetMask(std::size_t n, std::initializer_list<std::size_t> members)
    : bits_(n, 0) {
  for (std::size_t i : members) {
    if (i >= n) throw std::out_of_range("subset member out of range");
    bits_[i] = 1;
  }
}

SubsetMask SubsetMask::full(std::size_t n) {
  SubsetMask mask(n);
  std::fill(mask.bits_.begin(), mask.bits_.end(), 1);
  return mask;
}

SubsetMask SubsetMask::from_indices(std::size_t n, std::span<const std::size_t> members) {
  SubsetMask mask(n);
  for (std::size_t i : members) {
    if (i >= n) throw std::out_of_range("subset member out of range");
    mask.bits_[i] = 1;
  }
  return mask;
}

SubsetMask SubsetMask::from_bits(std::size_t n, std::uint64_t bits) {
  if (n > kMaxBitmaskElements) throw std::length_error("ground set too large for a bitmask");
  SubsetMask mask(n);
  for (std::size_t i = 0; i < n; ++i) mask.bits_[i] = (bits >> i) & 1U;
  return mask;
}

std::size_t SubsetMask::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<std::size_t> SubsetMask::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(i);
  }
  return out;
}

std::uint64_t SubsetMask::to_bits() const {
  if (bits_.size() > kMaxBitmaskElements) {
    throw std::length_error("ground set too large for a bitmask");
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) bits |= std::uint64_t{1} << i;
  }
  return bits;
}

void SubsetMask::check_same_ground(const SubsetMask& other) const {
  if (other.bits_.size() != bits_.size()) {
    throw std::invalid_argument("subsets over different ground sets");
  }
}

SubsetMask SubsetMask::operator|(const SubsetMask& other) const {
  check_same_ground(other);
  SubsetMask out(*this);
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] |= other.bits_[i];
  return out;
}

SubsetMask SubsetMask::operator&(const SubsetMask& other) const {
  check_same_ground(other);
  SubsetMask out(*this);
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] &= other.bits_[i];
  return out;
}

SubsetMask SubsetMask::complement() const {
  SubsetMask out(*this);
  for (auto& b : out.bits_) b = b ? 0 : 1;
  return out;
}

bool SubsetMask::is_subset_of(const SubsetMask& other) const {
  check_same_ground(other);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.bits_[i]) return false;
  }
  return true;
}

std::string SubsetMask::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (!bits_[i]) continue;
    if (!first) out << ',';
    out << i;
    first = false;
  }
  out << '}';
  return out.str();
}

Ordering::Ordering(std::vector<std::size_t> order) : order_(std::move(order)) {
  std::vector<std::uint8_t> seen(order_.size(), 0);
  for (std::size_t j : order_) {
    if (j >= order_.size() || seen[j]) throw std::invalid_argument("ordering is not a permutation");
    seen[j] = 1;
  }
}

Ordering Ordering::identity(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return Ordering(std::move(order));
}

Ordering Ordering::descending(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  return Ordering(std::move(order));
}

Ordering Ordering::ascending(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  return Ordering(std::move(order));
}

}  // namespace subvar
