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

#include "subvar/min_norm.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "subvar/base_polytope.hpp"

namespace subvar {

namespace {

// Coefficients below this count as nonpositive in the minor-cycle test.
constexpr double kPositiveCoefficient = 1e-12;
// Convex weights below this are dropped from the active set.
constexpr double kDropWeight = 1e-14;

// alpha minimizing ||sum_j alpha_j s_j|| subject to sum_j alpha_j = 1.
std::vector<double> affine_minimizer(const std::vector<ModularVector>& active) {
  const std::size_t k = active.size();
  if (k == 1) return {1.0};
  const std::size_t n = active.front().size();
  Eigen::MatrixXd differences(n, k - 1);
  Eigen::VectorXd rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    rhs(i) = -active[0][i];
    for (std::size_t j = 1; j < k; ++j) differences(i, j - 1) = active[j][i] - active[0][i];
  }
  const Eigen::VectorXd beta = differences.completeOrthogonalDecomposition().solve(rhs);
  std::vector<double> alpha(k);
  double rest = 0.0;
  for (std::size_t j = 1; j < k; ++j) {
    alpha[j] = beta(static_cast<Eigen::Index>(j - 1));
    rest += alpha[j];
  }
  alpha[0] = 1.0 - rest;
  return alpha;
}

}  // namespace

MinNormPointSolver::MinNormPointSolver(LinearOracle oracle, std::size_t dimension,
                                       WolfeOptions options)
    : oracle_(std::move(oracle)), options_(options) {
  if (!oracle_) throw std::invalid_argument("linear oracle must be callable");
  max_major_ = options_.max_major_cycles > 0 ? options_.max_major_cycles
                                             : 10 * std::max<std::size_t>(dimension, 1);
  ModularVector start = oracle_(ModularVector(dimension));
  if (start.size() != dimension) throw std::invalid_argument("linear oracle returned a wrong size");
  state_.x = start;
  state_.active.push_back(std::move(start));
  state_.lambda.push_back(1.0);
}

MinNormPointSolver::MinNormPointSolver(const SubmodularOracle& f, WolfeOptions options)
    : MinNormPointSolver(
          [f](const ModularVector& cost) { return linear_minimize_over_base(f, cost); }, f.size(),
          options) {}

double MinNormPointSolver::gap_threshold() const {
  double scale = 1.0;
  for (const auto& s : state_.active) scale = std::max(scale, s.squared_norm());
  return options_.tol * scale;
}

void MinNormPointSolver::recompute_point() {
  ModularVector x(state_.x.size());
  for (std::size_t j = 0; j < state_.active.size(); ++j) {
    const double l = state_.lambda[j];
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += l * state_.active[j][i];
  }
  state_.x = std::move(x);
}

void MinNormPointSolver::minor_cycles() {
  auto& active = state_.active;
  auto& lambda = state_.lambda;
  for (;;) {
    const auto alpha = affine_minimizer(active);
    const bool interior = std::all_of(alpha.begin(), alpha.end(),
                                      [](double a) { return a > kPositiveCoefficient; });
    if (interior) {
      lambda = alpha;
      recompute_point();
      return;
    }
    ++state_.minor_cycles;
    // Largest step from lambda toward alpha that keeps every weight >= 0.
    double theta = 1.0;
    std::size_t blocking = active.size();
    for (std::size_t j = 0; j < active.size(); ++j) {
      if (alpha[j] > kPositiveCoefficient) continue;
      const double denom = lambda[j] - alpha[j];
      const double ratio = denom > 0.0 ? lambda[j] / denom : 0.0;
      if (ratio < theta || blocking == active.size()) {
        theta = std::min(theta, ratio);
        blocking = j;
      }
    }
    double total = 0.0;
    for (std::size_t j = 0; j < active.size(); ++j) {
      lambda[j] = (1.0 - theta) * lambda[j] + theta * alpha[j];
      if (j == blocking || lambda[j] < kDropWeight) lambda[j] = 0.0;
      total += lambda[j];
    }
    std::size_t kept = 0;
    for (std::size_t j = 0; j < active.size(); ++j) {
      if (lambda[j] <= 0.0) continue;
      if (kept != j) active[kept] = std::move(active[j]);
      lambda[kept] = lambda[j] / total;
      ++kept;
    }
    active.resize(kept);
    lambda.resize(kept);
    recompute_point();
    if (kept == 1) return;
  }
}

bool MinNormPointSolver::step() {
  if (status_ != Status::kRunning) return false;
  const ModularVector q = oracle_(state_.x);
  state_.gap = state_.x.squared_norm() - state_.x.dot(q);
  if (state_.gap <= gap_threshold()) {
    status_ = Status::kConverged;
    return false;
  }
  if (state_.major_cycles >= max_major_) {
    status_ = Status::kCycleLimit;
    return false;
  }
  for (const auto& s : state_.active) {
    if (linf_distance(s, q) <= options_.duplicate_tol) {
      status_ = Status::kStalled;
      return false;
    }
  }
  ++state_.major_cycles;
  state_.active.push_back(q);
  state_.lambda.push_back(0.0);
  minor_cycles();
  return true;
}

SolverReport MinNormPointSolver::solve() {
  const auto start = std::chrono::steady_clock::now();
  while (step()) {
  }
  SolverReport report;
  report.solution = state_.x;
  report.objective = state_.x.squared_norm();
  report.gap = state_.gap;
  report.iterations = state_.major_cycles;
  report.converged = state_.gap <= gap_threshold();
  report.milliseconds =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SolverReport min_norm_point(const SubmodularOracle& f, WolfeOptions options) {
  return MinNormPointSolver(f, options).solve();
}

}  // namespace subvar
