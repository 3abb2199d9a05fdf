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

#include "subvar/modular.hpp"

#include <cmath>
#include <stdexcept>

namespace subvar {

double ModularVector::evaluate(const SubsetMask& subset) const {
  if (subset.ground_size() != values_.size()) {
    throw std::invalid_argument("subset and modular vector sizes differ");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (subset.contains(i)) sum += values_[i];
  }
  return sum;
}

double ModularVector::total() const {
  double sum = 0.0;
  for (double v : values_) sum += v;
  return sum;
}

double ModularVector::dot(const ModularVector& other) const {
  if (other.size() != size()) throw std::invalid_argument("dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) sum += values_[i] * other.values_[i];
  return sum;
}

double ModularVector::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

ModularVector& ModularVector::operator+=(const ModularVector& other) {
  if (other.size() != size()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

ModularVector& ModularVector::operator-=(const ModularVector& other) {
  if (other.size() != size()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

ModularVector& ModularVector::operator*=(double scale) {
  for (double& v : values_) v *= scale;
  return *this;
}

ModularVector operator+(ModularVector lhs, const ModularVector& rhs) { return lhs += rhs; }
ModularVector operator-(ModularVector lhs, const ModularVector& rhs) { return lhs -= rhs; }
ModularVector operator*(double scale, ModularVector v) { return v *= scale; }

double linf_distance(const ModularVector& a, const ModularVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace subvar
