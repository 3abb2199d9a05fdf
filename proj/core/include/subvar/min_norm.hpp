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

#ifndef SUBVAR_MIN_NORM_HPP_
#define SUBVAR_MIN_NORM_HPP_

#include <cstddef>
#include <functional>
#include <vector>

#include "subvar/modular.hpp"
#include "subvar/set_function.hpp"

namespace subvar {

struct SolverReport {
  ModularVector solution;
  double objective = 0.0;
  /// Solver-specific certificate: Wolfe duality gap for the min-norm solver,
  /// Frank-Wolfe gap for the conditional-gradient solver.
  double gap = 0.0;
  std::size_t iterations = 0;
  double milliseconds = 0.0;
  bool converged = false;
};

struct WolfeOptions {
  /// Stop once ||x||^2 - <x, q> <= tol * max(1, max_j ||s_j||^2) where q is
  /// the linear minimizer at x and s_j range over the active vertices.
  double tol = 1e-10;
  /// 0 selects 10 * n.
  std::size_t max_major_cycles = 0;
  /// New vertices this close (inf-norm) to an active vertex are not added.
  double duplicate_tol = 1e-12;
};

/// Explicit solver state; x is always the convex combination sum_j lambda_j s_j.
struct WolfeState {
  std::vector<ModularVector> active;
  std::vector<double> lambda;
  ModularVector x;
  std::size_t major_cycles = 0;
  std::size_t minor_cycles = 0;
  double gap = 0.0;
};

/// c -> argmin over the polytope of <c, s>.
using LinearOracle = std::function<ModularVector(const ModularVector& cost)>;

/// Fujishige-Wolfe minimum-norm point over the convex hull reachable through
/// a linear minimization oracle.
class MinNormPointSolver {
 public:
  enum class Status { kRunning, kConverged, kStalled, kCycleLimit };

  MinNormPointSolver(LinearOracle oracle, std::size_t dimension, WolfeOptions options = {});
  /// Minimum-norm point of B(F).
  explicit MinNormPointSolver(const SubmodularOracle& f, WolfeOptions options = {});

  /// One major cycle (with its minor cycles). Returns false once the solver
  /// has stopped; the state is left intact so it can be inspected.
  bool step();
  /// Runs to termination.
  SolverReport solve();

  const WolfeState& state() const { return state_; }
  Status status() const { return status_; }

 private:
  double gap_threshold() const;
  void minor_cycles();
  void recompute_point();

  LinearOracle oracle_;
  WolfeOptions options_;
  std::size_t max_major_ = 0;
  WolfeState state_;
  Status status_ = Status::kRunning;
};

/// argmin over B(F) of ||s||^2. On hitting the cycle limit the best point is
/// returned with converged = false and its gap.
SolverReport min_norm_point(const SubmodularOracle& f, WolfeOptions options = {});

}  // namespace subvar

#endif  // SUBVAR_MIN_NORM_HPP_
