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

#ifndef SUBVAR_SOLVERS_HPP_
#define SUBVAR_SOLVERS_HPP_

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "subvar/min_norm.hpp"
#include "subvar/modular.hpp"
#include "subvar/separable.hpp"
#include "subvar/set_function.hpp"
#include "subvar/subset.hpp"

namespace subvar {

/// Raised when an inner solver cannot produce a usable answer.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SfmResult {
  SubsetMask minimal;
  SubsetMask maximal;
  double value = 0.0;
};

/// Minimizes g(A) - z(A) over subsets of g's ground set.
using SfmOracle = std::function<SfmResult(const SubmodularOracle& g, const ModularVector& z)>;

inline constexpr std::size_t kMaxBruteForceSfmElements = 20;
/// Threshold band around zero when reading minimizers off s*.
inline constexpr double kThresholdBand = 1e-8;

/// Exhaustive minimization of g - z. Minimal/maximal minimizers are the
/// intersection/union of all subsets within `tie_tol` of the minimum.
SfmResult sfm_brute_force(const SubmodularOracle& g, const ModularVector& z,
                          double tie_tol = 1e-9);
SfmResult sfm_brute_force(const SubmodularOracle& f, double tie_tol = 1e-9);

/// Minimizers read off the minimum-norm point: A_- = {s*_v < -band},
/// A_0 = {s*_v <= band}. Throws SolverError when Wolfe does not converge.
SfmResult sfm_by_min_norm(const SubmodularOracle& f, WolfeOptions options = {},
                          double band = kThresholdBand);

/// Brute force for n <= 20, thresholded minimum-norm point otherwise.
SfmResult sfm_minimize(const SubmodularOracle& f);

/// argmin_A c phi(|A|/|P|) - z(A) for a concave-cardinality oracle, by
/// scanning k largest entries of z for every k. Ties prefer the smaller k.
/// Elements outside the region enter iff z_v > 0. Throws
/// std::invalid_argument for any other oracle kind.
SubsetMask cardinality_sfm(const SubmodularOracle& f, const ModularVector& z);

/// Brute force up to 18 elements, cardinality_sfm for concave-cardinality
/// oracles, thresholded minimum-norm point otherwise.
SfmOracle default_sfm_oracle();

struct DivideAndConquerOptions {
  /// Accept the level point once min_A F(A) - s(A) >= -tol * max(1, |F(V)|).
  double tol = 1e-10;
  /// Null selects default_sfm_oracle().
  SfmOracle sfm;
};

struct DivideAndConquerResult {
  ModularVector solution;
  std::size_t sfm_calls = 0;
  std::size_t max_depth = 0;
};

/// argmin over B(F) of sum_v psi_v(s_v) by recursive splitting on the
/// minimizers of F - s_hat, where s_hat equalizes derivatives subject to
/// s_hat(V) = F(V).
DivideAndConquerResult divide_and_conquer(const SubmodularOracle& f,
                                          const SeparableObjective& objective,
                                          const DivideAndConquerOptions& options = {});

enum class ProjectionMethod { kWolfe, kDivideAndConquer };

/// argmin over B(F) of sum_v w_v (s_v - y_v)^2. The Wolfe route runs the
/// min-norm solver in rescaled coordinates sqrt(w) (s - y).
/// Throws std::invalid_argument on a nonpositive weight.
ModularVector weighted_min_norm(const SubmodularOracle& f, const ModularVector& center,
                                const std::vector<double>& weights, double tol = 1e-10,
                                ProjectionMethod method = ProjectionMethod::kWolfe);

/// Called after every Frank-Wolfe step with (iteration, iterate, gap).
using FrankWolfeObserver =
    std::function<void(std::size_t, const ModularVector&, double)>;

/// Conditional gradient on sum_v log(1 + e^{-s_v}) over B(F) with the
/// open-loop step 2 / (k + 2), starting from the identity greedy vertex.
/// `gap` in the report is the Frank-Wolfe gap at the final iterate.
SolverReport frank_wolfe_lfield(const SubmodularOracle& f, std::size_t iterations,
                                const FrankWolfeObserver& observer = {});

}  // namespace subvar

#endif  // SUBVAR_SOLVERS_HPP_
