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

#include "subvar/separable.hpp"

#include <cmath>
#include <stdexcept>

#include "subvar/numeric.hpp"

namespace subvar {

namespace {

void check_weights(const ModularVector& center, const std::vector<double>& weights) {
  if (weights.size() != center.size()) {
    throw std::invalid_argument("weights and center differ in size");
  }
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("weights must be positive");
  }
}

}  // namespace

double SeparableObjective::total(const ModularVector& s) const {
  double sum = 0.0;
  for (std::size_t v = 0; v < s.size(); ++v) sum += value(v, s[v]);
  return sum;
}

double SeparableObjective::level_for_sum(std::span<const std::size_t> elements,
                                         double target) const {
  const auto sum_at = [&](double level) {
    double sum = 0.0;
    for (std::size_t v : elements) sum += level_point(v, level);
    return sum;
  };
  double lo = -1.0;
  double hi = 1.0;
  for (int i = 0; i < 2000 && sum_at(lo) > target; ++i) lo *= 2.0;
  for (int i = 0; i < 2000 && sum_at(hi) < target; ++i) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sum_at(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::abs(sum_at(lo) - target) <= std::abs(sum_at(hi) - target) ? lo : hi;
}

QuadraticObjective::QuadraticObjective(ModularVector center, std::vector<double> weights)
    : center_(std::move(center)), weights_(std::move(weights)) {
  check_weights(center_, weights_);
}

QuadraticObjective::QuadraticObjective(ModularVector center)
    : center_(std::move(center)), weights_(center_.size(), 1.0) {}

double QuadraticObjective::value(std::size_t v, double s) const {
  const double d = s - center_[v];
  return weights_[v] * d * d;
}

double QuadraticObjective::derivative(std::size_t v, double s) const {
  return 2.0 * weights_[v] * (s - center_[v]);
}

double QuadraticObjective::level_point(std::size_t v, double level) const {
  return center_[v] + level / (2.0 * weights_[v]);
}

double QuadraticObjective::level_for_sum(std::span<const std::size_t> elements,
                                         double target) const {
  double offset = 0.0;
  double slope = 0.0;
  for (std::size_t v : elements) {
    offset += center_[v];
    slope += 0.5 / weights_[v];
  }
  return (target - offset) / slope;
}

double LogisticObjective::value(std::size_t, double s) const { return softplus(-s); }

double LogisticObjective::derivative(std::size_t, double s) const { return -sigmoid(-s); }

double LogisticObjective::level_point(std::size_t, double level) const { return level; }

double LogisticObjective::level_for_sum(std::span<const std::size_t> elements,
                                        double target) const {
  return target / static_cast<double>(elements.size());
}

WeightedLogSumExpObjective::WeightedLogSumExpObjective(ModularVector center,
                                                       std::vector<double> weights)
    : center_(std::move(center)), weights_(std::move(weights)) {
  check_weights(center_, weights_);
}

double WeightedLogSumExpObjective::value(std::size_t v, double s) const {
  const double w = weights_[v];
  return -center_[v] + softplus(-w * (s - center_[v])) / w;
}

double WeightedLogSumExpObjective::derivative(std::size_t v, double s) const {
  return -sigmoid(-weights_[v] * (s - center_[v]));
}

double WeightedLogSumExpObjective::level_point(std::size_t v, double level) const {
  return center_[v] + level / weights_[v];
}

double WeightedLogSumExpObjective::level_for_sum(std::span<const std::size_t> elements,
                                                 double target) const {
  double offset = 0.0;
  double slope = 0.0;
  for (std::size_t v : elements) {
    offset += center_[v];
    slope += 1.0 / weights_[v];
  }
  return (target - offset) / slope;
}

}  // namespace subvar
