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

#include "subvar/solvers.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "subvar/base_polytope.hpp"
#include "subvar/numeric.hpp"

namespace subvar {

namespace {

constexpr std::size_t kDefaultBruteForceElements = 18;

SubsetMask threshold_below(const ModularVector& s, double level, bool inclusive) {
  SubsetMask out(s.size());
  for (std::size_t v = 0; v < s.size(); ++v) {
    if (inclusive ? s[v] <= level : s[v] < level) out.insert(v);
  }
  return out;
}

}  // namespace

SfmResult sfm_brute_force(const SubmodularOracle& g, const ModularVector& z, double tie_tol) {
  const std::size_t n = g.size();
  if (z.size() != n) throw std::invalid_argument("sfm_brute_force: size mismatch");
  if (n > kMaxBruteForceSfmElements) throw std::length_error("sfm_brute_force: too many elements");
  const std::vector<double> table = tabulate(g);
  std::vector<double> values(table.size());
  std::vector<double> zsum(table.size(), 0.0);
  double best = 0.0;
  for (std::uint64_t bits = 1; bits < table.size(); ++bits) {
    const std::uint64_t low = bits & (~bits + 1);
    zsum[bits] = zsum[bits ^ low] + z[static_cast<std::size_t>(std::countr_zero(low))];
  }
  for (std::uint64_t bits = 0; bits < table.size(); ++bits) {
    values[bits] = table[bits] - zsum[bits];
    best = std::min(best, values[bits]);
  }
  std::uint64_t lower = table.size() - 1;
  std::uint64_t upper = 0;
  for (std::uint64_t bits = 0; bits < table.size(); ++bits) {
    if (values[bits] <= best + tie_tol) {
      lower &= bits;
      upper |= bits;
    }
  }
  return SfmResult{SubsetMask::from_bits(n, lower), SubsetMask::from_bits(n, upper), best};
}

SfmResult sfm_brute_force(const SubmodularOracle& f, double tie_tol) {
  return sfm_brute_force(f, ModularVector(f.size()), tie_tol);
}

SfmResult sfm_by_min_norm(const SubmodularOracle& f, WolfeOptions options, double band) {
  const SolverReport report = min_norm_point(f, options);
  if (!report.converged) {
    throw SolverError("minimum-norm point did not converge (gap " + std::to_string(report.gap) +
                      ")");
  }
  SfmResult result;
  result.minimal = threshold_below(report.solution, -band, false);
  result.maximal = threshold_below(report.solution, band, true);
  result.value = f.evaluate(result.minimal);
  return result;
}

SfmResult sfm_minimize(const SubmodularOracle& f) {
  if (f.size() <= kMaxBruteForceSfmElements) return sfm_brute_force(f);
  return sfm_by_min_norm(f);
}

SubsetMask cardinality_sfm(const SubmodularOracle& f, const ModularVector& z) {
  const auto* term = f.get_if<ConcaveCardinalityTerm>();
  if (term == nullptr) throw std::invalid_argument("cardinality_sfm needs a concave-cardinality oracle");
  if (z.size() != f.size()) throw std::invalid_argument("cardinality_sfm: size mismatch");
  SubsetMask chosen(f.size());
  SubsetMask in_region(f.size());
  for (std::size_t v : term->region) in_region.insert(v);
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (!in_region.contains(v) && z[v] > 0.0) chosen.insert(v);
  }
  std::vector<std::size_t> order = term->region;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return z[a] > z[b]; });
  double prefix = 0.0;
  double best = 0.0;
  std::size_t best_k = 0;
  for (std::size_t k = 1; k <= order.size(); ++k) {
    prefix += z[order[k - 1]];
    const double value = term->value_at(k) - prefix;
    if (value < best) {
      best = value;
      best_k = k;
    }
  }
  for (std::size_t k = 0; k < best_k; ++k) chosen.insert(order[k]);
  return chosen;
}

SfmOracle default_sfm_oracle() {
  return [](const SubmodularOracle& g, const ModularVector& z) {
    if (g.kind() == OracleKind::kConcaveCardinality) {
      SubsetMask a = cardinality_sfm(g, z);
      const double value = g.evaluate(a) - z.evaluate(a);
      return SfmResult{a, a, value};
    }
    if (g.size() <= kDefaultBruteForceElements) return sfm_brute_force(g, z);
    ModularVector negated = z;
    negated *= -1.0;
    const auto shifted = SubmodularOracle::sum({g, SubmodularOracle::modular(std::move(negated))});
    return sfm_by_min_norm(shifted);
  };
}

namespace {

struct DivideAndConquer {
  const SeparableObjective& objective;
  SfmOracle sfm;
  double tol;
  ModularVector solution;
  std::size_t sfm_calls = 0;
  std::size_t max_depth = 0;

  void solve(const SubmodularOracle& g, const std::vector<std::size_t>& elements,
             std::size_t depth) {
    max_depth = std::max(max_depth, depth);
    const std::size_t m = elements.size();
    if (m == 0) return;
    const double target = g.total();
    if (m == 1) {
      solution[elements[0]] = target;
      return;
    }
    const double level = objective.level_for_sum(elements, target);
    ModularVector candidate(m);
    for (std::size_t k = 0; k < m; ++k) candidate[k] = objective.level_point(elements[k], level);

    ++sfm_calls;
    const SfmResult cut = sfm(g, candidate);
    const SubsetMask& a = cut.minimal;
    const double value = g.evaluate(a) - candidate.evaluate(a);
    const std::size_t size_a = a.count();
    if (value >= -tol || size_a == 0 || size_a == m) {
      for (std::size_t k = 0; k < m; ++k) solution[elements[k]] = candidate[k];
      return;
    }
    std::vector<std::size_t> inside;
    std::vector<std::size_t> outside;
    std::vector<std::size_t> inside_global;
    std::vector<std::size_t> outside_global;
    for (std::size_t k = 0; k < m; ++k) {
      if (a.contains(k)) {
        inside.push_back(k);
        inside_global.push_back(elements[k]);
      } else {
        outside.push_back(k);
        outside_global.push_back(elements[k]);
      }
    }
    solve(restrict_to(g, inside), inside_global, depth + 1);
    solve(minor(g, outside, a), outside_global, depth + 1);
  }
};

}  // namespace

DivideAndConquerResult divide_and_conquer(const SubmodularOracle& f,
                                          const SeparableObjective& objective,
                                          const DivideAndConquerOptions& options) {
  if (objective.size() != f.size()) throw std::invalid_argument("objective size differs from F");
  DivideAndConquer solver{objective, options.sfm ? options.sfm : default_sfm_oracle(),
                          options.tol * std::max(1.0, std::abs(f.total())),
                          ModularVector(f.size())};
  std::vector<std::size_t> all(f.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  solver.solve(f, all, 0);
  return DivideAndConquerResult{std::move(solver.solution), solver.sfm_calls, solver.max_depth};
}

ModularVector weighted_min_norm(const SubmodularOracle& f, const ModularVector& center,
                                const std::vector<double>& weights, double tol,
                                ProjectionMethod method) {
  const std::size_t n = f.size();
  if (center.size() != n || weights.size() != n) {
    throw std::invalid_argument("weighted_min_norm: size mismatch");
  }
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("weights must be positive");
  }
  if (method == ProjectionMethod::kDivideAndConquer) {
    DivideAndConquerOptions options;
    options.tol = tol;
    return divide_and_conquer(f, QuadraticObjective(center, weights), options).solution;
  }
  std::vector<double> root(n);
  for (std::size_t v = 0; v < n; ++v) root[v] = std::sqrt(weights[v]);
  LinearOracle oracle = [&](const ModularVector& cost) {
    ModularVector scaled(n);
    for (std::size_t v = 0; v < n; ++v) scaled[v] = cost[v] * root[v];
    ModularVector s = linear_minimize_over_base(f, scaled);
    for (std::size_t v = 0; v < n; ++v) s[v] = root[v] * (s[v] - center[v]);
    return s;
  };
  WolfeOptions options;
  options.tol = tol;
  const SolverReport report = MinNormPointSolver(oracle, n, options).solve();
  ModularVector s(n);
  for (std::size_t v = 0; v < n; ++v) s[v] = center[v] + report.solution[v] / root[v];
  return s;
}

SolverReport frank_wolfe_lfield(const SubmodularOracle& f, std::size_t iterations,
                                const FrankWolfeObserver& observer) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = f.size();
  ModularVector s = linear_minimize_over_base(f, ModularVector(n));
  ModularVector gradient(n);
  auto gap_at = [&](const ModularVector& point, ModularVector& vertex) {
    for (std::size_t v = 0; v < n; ++v) gradient[v] = -sigmoid(-point[v]);
    vertex = linear_minimize_over_base(f, gradient);
    double gap = 0.0;
    for (std::size_t v = 0; v < n; ++v) gap += gradient[v] * (point[v] - vertex[v]);
    return gap;
  };
  ModularVector vertex;
  double gap = 0.0;
  for (std::size_t k = 0; k < iterations; ++k) {
    gap = gap_at(s, vertex);
    const double step = 2.0 / (static_cast<double>(k) + 2.0);
    for (std::size_t v = 0; v < n; ++v) s[v] += step * (vertex[v] - s[v]);
    if (observer) observer(k + 1, s, gap);
  }
  gap = gap_at(s, vertex);
  SolverReport report;
  report.objective = 0.0;
  for (std::size_t v = 0; v < n; ++v) report.objective += softplus(-s[v]);
  report.solution = std::move(s);
  report.gap = gap;
  report.iterations = iterations;
  report.converged = gap <= 1e-6 * std::max(1.0, report.objective);
  report.milliseconds =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace subvar
