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

#include "subvar/divergence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "subvar/inference.hpp"

namespace subvar {

namespace {

std::vector<double> axis(double lower, double upper, double step) {
  const auto count = static_cast<std::size_t>(std::llround((upper - lower) / step)) + 1;
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) values[i] = lower + static_cast<double>(i) * step;
  return values;
}

// Visits every point of the product grid axes[0] x ... x axes[n-1].
void for_each_point(const std::vector<std::vector<double>>& axes,
                    const std::function<void(const ModularVector&)>& visit) {
  const std::size_t n = axes.size();
  ModularVector q(n);
  std::vector<std::size_t> index(n, 0);
  for (std::size_t v = 0; v < n; ++v) q[v] = axes[v][0];
  for (;;) {
    visit(q);
    std::size_t v = n;
    while (v > 0) {
      --v;
      if (++index[v] < axes[v].size()) {
        q[v] = axes[v][index[v]];
        break;
      }
      index[v] = 0;
      q[v] = axes[v][0];
      if (v == 0) return;
    }
    if (n == 0) return;
  }
}

GridSearchResult grid_search(const SubmodularOracle& f, const GridSpec& grid,
                             bool lower_bounds_only) {
  const std::size_t n = f.size();
  if (n > kMaxGridSearchElements) throw std::length_error("grid search supports n <= 3");
  if (!(grid.step > 0.0) || grid.upper < grid.lower) throw std::invalid_argument("bad grid");
  const DivergenceEvaluator evaluator(f);
  GridSearchResult best;
  best.objective = std::numeric_limits<double>::infinity();
  auto visit = [&](const ModularVector& q) {
    const double slack = evaluator.slack(q);
    if (lower_bounds_only && slack > 1e-12) return;
    const double objective = logpartition_upper_bound(q) + slack;
    if (objective < best.objective) best = GridSearchResult{q, slack, objective};
  };
  for_each_point(std::vector<std::vector<double>>(n, axis(grid.lower, grid.upper, grid.step)),
                 visit);
  double previous = grid.step;
  for (double step : grid.refinements) {
    if (!std::isfinite(best.objective)) break;
    std::vector<std::vector<double>> axes(n);
    for (std::size_t v = 0; v < n; ++v) {
      axes[v] = axis(best.q[v] - previous, best.q[v] + previous, step);
    }
    for_each_point(axes, visit);
    previous = step;
  }
  if (!std::isfinite(best.objective)) throw std::runtime_error("grid contains no feasible point");
  return best;
}

}  // namespace

DivergenceEvaluator::DivergenceEvaluator(const SubmodularOracle& f)
    : n_(f.size()), table_(tabulate(f)), log_z_p_(exact_partition_from_table(table_)) {}

double DivergenceEvaluator::slack(const ModularVector& q) const {
  if (q.size() != n_) throw std::invalid_argument("divergence: size mismatch");
  std::vector<double> sums(table_.size(), 0.0);
  double best = 0.0;
  for (std::uint64_t bits = 1; bits < table_.size(); ++bits) {
    const std::uint64_t low = bits & (~bits + 1);
    sums[bits] = sums[bits ^ low] + q[static_cast<std::size_t>(std::countr_zero(low))];
    best = std::max(best, sums[bits] - table_[bits]);
  }
  return best;
}

DivergenceReport DivergenceEvaluator::evaluate(const ModularVector& q) const {
  DivergenceReport report;
  report.log_z_q = logpartition_upper_bound(q);
  report.log_z_p = log_z_p_;
  report.slack = slack(q);
  report.d_infty = report.log_z_q - report.log_z_p + report.slack;
  return report;
}

DivergenceReport renyi_infty(const SubmodularOracle& f, const ModularVector& q) {
  return DivergenceEvaluator(f).evaluate(q);
}

double dinfty_objective(const SubmodularOracle& f, const ModularVector& q) {
  return logpartition_upper_bound(q) + DivergenceEvaluator(f).slack(q);
}

GridSearchResult dinfty_bruteforce_min(const SubmodularOracle& f, const GridSpec& grid) {
  return grid_search(f, grid, false);
}

GridSearchResult dinfty_bruteforce_min_lower_bounds(const SubmodularOracle& f,
                                                    const GridSpec& grid) {
  return grid_search(f, grid, true);
}

}  // namespace subvar
