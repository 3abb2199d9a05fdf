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

#ifndef SUBVAR_DIVERGENCE_HPP_
#define SUBVAR_DIVERGENCE_HPP_

#include <cstddef>
#include <vector>

#include "subvar/modular.hpp"
#include "subvar/set_function.hpp"

namespace subvar {

/// Rényi divergence of infinite order between P ∝ e^{-F} and the factorized
/// Q ∝ e^{-q}, split into its closed-form parts.
struct DivergenceReport {
  double d_infty = 0.0;
  double log_z_q = 0.0;
  double log_z_p = 0.0;
  /// max_A q(A) - F(A).
  double slack = 0.0;
};

/// Exhaustive evaluation, n <= 20.
DivergenceReport renyi_infty(const SubmodularOracle& f, const ModularVector& q);

/// Reusable tabulation of F for repeated divergence queries on one model.
class DivergenceEvaluator {
 public:
  explicit DivergenceEvaluator(const SubmodularOracle& f);

  DivergenceReport evaluate(const ModularVector& q) const;
  /// max_A q(A) - F(A).
  double slack(const ModularVector& q) const;
  double log_z_p() const { return log_z_p_; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<double> table_;
  double log_z_p_;
};

struct GridSpec {
  double lower = -25.0;
  double upper = 5.0;
  double step = 0.5;
  /// Each refinement re-grids +-(previous step) around the incumbent.
  std::vector<double> refinements = {0.05, 0.005};
};

struct GridSearchResult {
  ModularVector q;
  double slack = 0.0;
  double objective = 0.0;
};

inline constexpr std::size_t kMaxGridSearchElements = 3;

/// Minimizes sum_v log(1 + e^{-q_v}) + max_A (q(A) - F(A)) over a grid with
/// local refinements. Throws std::length_error for n > 3.
GridSearchResult dinfty_bruteforce_min(const SubmodularOracle& f, const GridSpec& grid = {});

/// Same search restricted to q with q(A) <= F(A) for all A (slack 0).
GridSearchResult dinfty_bruteforce_min_lower_bounds(const SubmodularOracle& f,
                                                    const GridSpec& grid = {});

/// sum_v log(1 + e^{-q_v}) + max_A (q(A) - F(A)).
double dinfty_objective(const SubmodularOracle& f, const ModularVector& q);

}  // namespace subvar

#endif  // SUBVAR_DIVERGENCE_HPP_
