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

#ifndef SUBVAR_NUMERIC_HPP_
#define SUBVAR_NUMERIC_HPP_

#include <cmath>
#include <span>

namespace subvar {

/// sigma(u) = 1 / (1 + e^{-u}), evaluated without overflow.
inline double sigmoid(double u) {
  if (u >= 0.0) return 1.0 / (1.0 + std::exp(-u));
  const double e = std::exp(u);
  return e / (1.0 + e);
}

/// log(1 + e^u), evaluated without overflow.
inline double softplus(double u) {
  if (u > 0.0) return u + std::log1p(std::exp(-u));
  return std::log1p(std::exp(u));
}

/// Binary entropy in nats, h(0) = h(1) = 0.
inline double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log(p);
  if (p < 1.0) h -= (1.0 - p) * std::log1p(-p);
  return h;
}

/// log sum_i e^{x_i} with max shifting. Empty input gives -inf.
double log_sum_exp(std::span<const double> values);

}  // namespace subvar

#endif  // SUBVAR_NUMERIC_HPP_
