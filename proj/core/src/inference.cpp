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

#include "subvar/inference.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "subvar/base_polytope.hpp"
#include "subvar/numeric.hpp"
#include "subvar/separable.hpp"
#include "subvar/solvers.hpp"

namespace subvar {

LFieldMethod parse_lfield_method(const std::string& name) {
  if (name == "min-norm" || name == "minnorm" || name == "wolfe") return LFieldMethod::kMinNorm;
  if (name == "divide-and-conquer" || name == "dc") return LFieldMethod::kDivideAndConquer;
  if (name == "frank-wolfe" || name == "fw") return LFieldMethod::kFrankWolfe;
  throw std::invalid_argument("unknown method '" + name + "'");
}

std::string to_string(LFieldMethod method) {
  switch (method) {
    case LFieldMethod::kMinNorm: return "min-norm";
    case LFieldMethod::kDivideAndConquer: return "divide-and-conquer";
    case LFieldMethod::kFrankWolfe: return "frank-wolfe";
  }
  return "unknown";
}

double logpartition_upper_bound(const ModularVector& s) {
  double sum = 0.0;
  for (double v : s.values()) sum += softplus(-v);
  return sum;
}

std::vector<double> marginals_from_potentials(const ModularVector& s) {
  std::vector<double> p(s.size());
  for (std::size_t v = 0; v < s.size(); ++v) p[v] = sigmoid(-s[v]);
  return p;
}

std::pair<SubsetMask, SubsetMask> map_from_marginals(const std::vector<double>& p, double band) {
  SubsetMask minimal(p.size());
  SubsetMask maximal(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (p[v] > 0.5 + band) minimal.insert(v);
    if (p[v] >= 0.5 - band) maximal.insert(v);
  }
  return {minimal, maximal};
}

InferenceResult make_inference_result(ModularVector s, SolverReport report) {
  InferenceResult result;
  result.marginals = marginals_from_potentials(s);
  result.log_z_upper = logpartition_upper_bound(s);
  auto [minimal, maximal] = map_from_marginals(result.marginals);
  result.map_minimal = std::move(minimal);
  result.map_maximal = std::move(maximal);
  result.s_star = std::move(s);
  result.report = std::move(report);
  return result;
}

InferenceResult lfield_infer(const SubmodularOracle& f, const LFieldOptions& options) {
  switch (options.method) {
    case LFieldMethod::kMinNorm: {
      SolverReport report = min_norm_point(f, options.wolfe);
      ModularVector s = report.solution;
      return make_inference_result(std::move(s), std::move(report));
    }
    case LFieldMethod::kDivideAndConquer: {
      const auto start = std::chrono::steady_clock::now();
      DivideAndConquerOptions dc;
      dc.tol = options.wolfe.tol;
      auto solved = divide_and_conquer(f, LogisticObjective(f.size()), dc);
      SolverReport report;
      report.solution = solved.solution;
      report.objective = logpartition_upper_bound(solved.solution);
      report.iterations = solved.sfm_calls;
      report.converged = true;
      report.milliseconds =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      return make_inference_result(std::move(solved.solution), std::move(report));
    }
    case LFieldMethod::kFrankWolfe: {
      SolverReport report = frank_wolfe_lfield(f, options.frank_wolfe_iterations);
      ModularVector s = report.solution;
      return make_inference_result(std::move(s), std::move(report));
    }
  }
  throw std::invalid_argument("unknown method");
}

double exact_partition_from_table(const std::vector<double>& table) {
  std::vector<double> negated(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) negated[i] = -table[i];
  return log_sum_exp(negated);
}

double exact_partition(const SubmodularOracle& f) { return exact_partition_from_table(tabulate(f)); }

std::vector<double> exact_marginals(const SubmodularOracle& f) {
  const std::vector<double> table = tabulate(f);
  const double log_z = exact_partition_from_table(table);
  std::vector<double> p(f.size(), 0.0);
  for (std::uint64_t bits = 0; bits < table.size(); ++bits) {
    const double weight = std::exp(-table[bits] - log_z);
    for (std::size_t v = 0; v < f.size(); ++v) {
      if ((bits >> v) & 1U) p[v] += weight;
    }
  }
  return p;
}

double duality_gap(const SubmodularOracle& f, const ModularVector& s,
                   const std::vector<double>& p) {
  if (p.size() != s.size() || s.size() != f.size()) {
    throw std::invalid_argument("duality_gap: size mismatch");
  }
  double entropy = 0.0;
  for (double pv : p) {
    if (!(pv >= 0.0 && pv <= 1.0)) throw std::invalid_argument("marginal outside [0, 1]");
    entropy += binary_entropy(pv);
  }
  return logpartition_upper_bound(s) - (entropy - lovasz_extension(f, ModularVector(p)));
}

}  // namespace subvar
