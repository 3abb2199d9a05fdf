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

#ifndef SUBVAR_SEPARABLE_HPP_
#define SUBVAR_SEPARABLE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "subvar/modular.hpp"

namespace subvar {

/// A separable, strictly convex objective sum_v psi_v(s_v) whose derivatives
/// can be inverted on a common level scale.
///
/// level_point(v, t) returns the s with psi_v'(s) = h(t) for a fixed strictly
/// increasing h shared by all v, so equalizing derivatives across elements is
/// a scalar root-find in t. Choosing h per family keeps the inverse well
/// conditioned (the logistic derivative saturates at -1 and 0).
class SeparableObjective {
 public:
  virtual ~SeparableObjective() = default;

  virtual std::size_t size() const = 0;
  virtual double value(std::size_t v, double s) const = 0;
  virtual double derivative(std::size_t v, double s) const = 0;
  virtual double level_point(std::size_t v, double level) const = 0;
  /// Level t with sum over `elements` of level_point(v, t) == target.
  /// The default brackets and bisects; the built-in families are affine in t
  /// and solve it directly.
  virtual double level_for_sum(std::span<const std::size_t> elements, double target) const;

  double total(const ModularVector& s) const;
};

/// psi_v(s) = w_v (s - y_v)^2, w_v > 0. Level t means psi_v' = t.
class QuadraticObjective final : public SeparableObjective {
 public:
  QuadraticObjective(ModularVector center, std::vector<double> weights);
  /// Unit weights.
  explicit QuadraticObjective(ModularVector center);

  std::size_t size() const override { return center_.size(); }
  double value(std::size_t v, double s) const override;
  double derivative(std::size_t v, double s) const override;
  double level_point(std::size_t v, double level) const override;
  double level_for_sum(std::span<const std::size_t> elements, double target) const override;

 private:
  ModularVector center_;
  std::vector<double> weights_;
};

/// psi_v(s) = log(1 + e^{-s}), the variational log-partition bound. Level t
/// means psi_v' = -sigma(-t), so level_point is the identity.
class LogisticObjective final : public SeparableObjective {
 public:
  explicit LogisticObjective(std::size_t n) : n_(n) {}

  std::size_t size() const override { return n_; }
  double value(std::size_t v, double s) const override;
  double derivative(std::size_t v, double s) const override;
  double level_point(std::size_t v, double level) const override;
  double level_for_sum(std::span<const std::size_t> elements, double target) const override;

 private:
  std::size_t n_;
};

/// psi_v(s) = (1 / w_v) log(e^{-w_v s} + e^{-w_v y_v}), w_v > 0. Shares its
/// minimizer over B(F) with the QuadraticObjective of the same (y, w).
/// Level t means psi_v' = -sigma(-t).
class WeightedLogSumExpObjective final : public SeparableObjective {
 public:
  WeightedLogSumExpObjective(ModularVector center, std::vector<double> weights);

  std::size_t size() const override { return center_.size(); }
  double value(std::size_t v, double s) const override;
  double derivative(std::size_t v, double s) const override;
  double level_point(std::size_t v, double level) const override;
  double level_for_sum(std::span<const std::size_t> elements, double target) const override;

 private:
  ModularVector center_;
  std::vector<double> weights_;
};

}  // namespace subvar

#endif  // SUBVAR_SEPARABLE_HPP_
