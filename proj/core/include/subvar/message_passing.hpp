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

#ifndef SUBVAR_MESSAGE_PASSING_HPP_
#define SUBVAR_MESSAGE_PASSING_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "subvar/factor_graph.hpp"
#include "subvar/inference.hpp"
#include "subvar/modular.hpp"

namespace subvar {

/// Messages of one iteration. mu_{F_i -> v} is factor_states[i] at v's local
/// index, so it is not stored twice.
struct MessageState {
  /// q_i ∈ B(F_i), one per factor, over the factor's support.
  std::vector<ModularVector> factor_states;
  /// mu_{v -> F_i}, laid out like factor_states.
  std::vector<std::vector<double>> to_factor;
  /// q_v = sum over delta(v) of mu_{F_i -> v}, ascending factor order.
  ModularVector aggregate;
  std::size_t iteration = 0;
};

/// Factor states at their identity-order greedy vertices, zero
/// variable-to-factor messages, aggregate filled in.
MessageState initial_message_state(const FactorGraph& graph);

/// sum over delta(v) of factor_states[i][v], ascending factor index.
ModularVector aggregate_messages(const FactorGraph& graph,
                                 const std::vector<ModularVector>& factor_states);

/// mu_{v -> F_i} = (1 / |delta(v)|) sum_j mu_{F_j -> v}, read from the frozen
/// factor states of the current iteration.
void variable_to_factor_round(MessageState& state, const FactorGraph& graph);

/// argmin over B(F_i) of ||q - (q_i - m_i)||^2_{G*}. Modular factors return
/// their single point, single-edge cuts use the clamped closed form,
/// concave-cardinality factors use divide-and-conquer with cardinality_sfm,
/// everything else the weighted Wolfe projection.
ModularVector factor_update(const FactorGraph& graph, std::size_t factor_index,
                            const ModularVector& factor_state,
                            const std::vector<double>& incoming);

struct TraceEntry {
  std::size_t iteration = 0;
  /// sum_v q_v^2 for the aggregate q.
  double primal_objective = 0.0;
  /// ||q^t - q^{t-1}||_inf (0 at t = 0).
  double delta_inf = 0.0;
  /// ||q^t - q_ref||_2 when a reference is supplied.
  std::optional<double> error_to_reference;
};

struct ConvergenceTrace {
  std::vector<TraceEntry> entries;
  /// Aggregate at t = 0.
  ModularVector initial;
};

struct MessagePassingOptions {
  double tol = 1e-7;
  std::size_t max_iterations = 10000;
  /// 0 = automatic, capped by SUBVAR_THREADS.
  std::size_t workers = 0;
  /// Optional q* for error_to_reference.
  std::optional<ModularVector> reference;
};

struct MessagePassingResult {
  InferenceResult inference;
  ConvergenceTrace trace;
};

/// Two-phase rounds: variable-to-factor messages from the frozen iteration-t
/// states, then all factor projections at once. Stops when the aggregate
/// moves by at most tol in inf-norm. Results are identical for any worker count.
MessagePassingResult run_parallel_mp(const FactorGraph& graph,
                                     const MessagePassingOptions& options = {});

/// Block coordinate descent over factors in index order; factor i is
/// replaced by the projection of -r onto B(F_i) with r the sum of the other
/// factors. One trace entry per sweep; `block_objectives` (if given) receives
/// the primal objective after every single block step.
MessagePassingResult run_sequential_ep(const FactorGraph& graph,
                                       const MessagePassingOptions& options = {},
                                       std::vector<double>* block_objectives = nullptr);

struct LinearRateCheck {
  bool holds = false;
  /// First trace index violating the bound, if any.
  std::optional<std::size_t> first_violation;
  /// (1 - 1 / (|V|^2 Delta^2)), the rate in the displayed bound.
  double bound_rate = 0.0;
  /// (1 - 1 / (|V| Delta))^2, the rate stated alongside it.
  double stated_rate = 0.0;
  /// exp(slope) of the least-squares fit of log ||q^t - q*|| against t.
  double fitted_rate = 0.0;
  double fitted_slope = 0.0;
};

/// Checks ||q^t - q*|| <= 2 ||q^0 - q*||_inf sqrt(Delta E) (1 - 1/(|V|^2 Delta^2))^t
/// for every entry that carries error_to_reference. Throws
/// std::invalid_argument for a non-regular graph.
LinearRateCheck check_linear_rate(const ConvergenceTrace& trace, const FactorGraph& graph,
                                  const ModularVector& q_star, const ModularVector& q_zero);

/// Slope of the least-squares line through (t, log e_t), skipping e_t <= floor.
double fit_log_error_slope(const ConvergenceTrace& trace, double floor = 1e-13);

}  // namespace subvar

#endif  // SUBVAR_MESSAGE_PASSING_HPP_
