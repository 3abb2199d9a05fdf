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

#ifndef SUBVAR_SUBSET_HPP_
#define SUBVAR_SUBSET_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace subvar {

/// Finite ground set V = {0, ..., n-1}.
struct GroundSet {
  std::size_t n = 0;

  explicit GroundSet(std::size_t size);
  std::size_t size() const { return n; }
};

/// Largest ground set that can be enumerated through a 64-bit mask.
inline constexpr std::size_t kMaxBitmaskElements = 63;

/// Membership indicator over a ground set of fixed size.
class SubsetMask {
 public:
  SubsetMask() = default;
  explicit SubsetMask(std::size_t n) : bits_(n, 0) {}
  SubsetMask(std::size_t n, std::initializer_list<std::size_t> members);

  static SubsetMask full(std::size_t n);
  static SubsetMask from_indices(std::size_t n, std::span<const std::size_t> members);
  /// Bit i of `bits` is element i. Requires n <= kMaxBitmaskElements.
  static SubsetMask from_bits(std::size_t n, std::uint64_t bits);

  std::size_t ground_size() const { return bits_.size(); }
  bool contains(std::size_t i) const { return bits_[i] != 0; }
  void insert(std::size_t i) { bits_[i] = 1; }
  void erase(std::size_t i) { bits_[i] = 0; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }

  std::vector<std::size_t> indices() const;
  std::uint64_t to_bits() const;

  SubsetMask operator|(const SubsetMask& other) const;
  SubsetMask operator&(const SubsetMask& other) const;
  SubsetMask complement() const;
  bool is_subset_of(const SubsetMask& other) const;

  bool operator==(const SubsetMask& other) const = default;

  /// "{0,2,5}" style rendering, mostly for diagnostics.
  std::string to_string() const;

 private:
  void check_same_ground(const SubsetMask& other) const;

  std::vector<std::uint8_t> bits_;
};

/// A permutation j_1, ..., j_n of the ground set.
class Ordering {
 public:
  /// Throws std::invalid_argument unless `order` is a permutation of 0..n-1.
  explicit Ordering(std::vector<std::size_t> order);

  static Ordering identity(std::size_t n);
  /// Sort by value descending, ties by ascending index.
  static Ordering descending(std::span<const double> values);
  /// Sort by value ascending, ties by ascending index.
  static Ordering ascending(std::span<const double> values);

  std::size_t size() const { return order_.size(); }
  std::size_t operator[](std::size_t k) const { return order_[k]; }
  std::span<const std::size_t> elements() const { return order_; }

 private:
  std::vector<std::size_t> order_;
};

}  // namespace subvar

#endif  // SUBVAR_SUBSET_HPP_
