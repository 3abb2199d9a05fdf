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

#ifndef SUBVAR_MODULAR_HPP_
#define SUBVAR_MODULAR_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "subvar/subset.hpp"

namespace subvar {

/// A point s in R^V. Doubles as the modular set function s(A) = sum_{i in A} s_i.
class ModularVector {
 public:
  ModularVector() = default;
  explicit ModularVector(std::size_t n, double fill = 0.0) : values_(n, fill) {}
  explicit ModularVector(std::vector<double> values) : values_(std::move(values)) {}
  ModularVector(std::initializer_list<double> values) : values_(values) {}

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  const std::vector<double>& vector() const { return values_; }

  /// s(A), summed in ascending index order.
  double evaluate(const SubsetMask& subset) const;
  /// s(V).
  double total() const;

  double dot(const ModularVector& other) const;
  double squared_norm() const { return dot(*this); }
  double max_abs() const;

  ModularVector& operator+=(const ModularVector& other);
  ModularVector& operator-=(const ModularVector& other);
  ModularVector& operator*=(double scale);

  bool operator==(const ModularVector& other) const = default;

 private:
  std::vector<double> values_;
};

ModularVector operator+(ModularVector lhs, const ModularVector& rhs);
ModularVector operator-(ModularVector lhs, const ModularVector& rhs);
ModularVector operator*(double scale, ModularVector v);

/// max_i |a_i - b_i|.
double linf_distance(const ModularVector& a, const ModularVector& b);

}  // namespace subvar

#endif  // SUBVAR_MODULAR_HPP_
