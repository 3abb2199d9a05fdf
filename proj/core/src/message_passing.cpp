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

#include "subvar/message_passing.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "subvar/base_polytope.hpp"
#include "subvar/parallel.hpp"
#include "subvar/solvers.hpp"

namespace subvar {

namespace {

constexpr double kProjectionTol = 1e-12;

// argmin over B(F) of sum_k w_k (q_k - y_k)^2.
ModularVector project(const SubmodularOracle& f, const ModularVector& y,
                      const std::vector<double>& weights) {
  if (const auto* modular = f.get_if<ModularTerm>()) return modular->weights;
  if (const auto* cut = f.get_if<CutTerm>();
      cut != nullptr && f.size() == 2 && cut->edges.size() == 1 && cut->edges[0].u != cut->edges[0].v) {
    // B(F) = {(x, -x) : |x| <= w} in (u, v) coordinates.
    const auto& edge = cut->edges[0];
    const double du = weights[edge.u];
    const double dv = weights[edge.v];
    const double x = std::clamp((du * y[edge.u] - dv * y[edge.v]) / (du + dv), -edge.weight,
                                edge.weight);
    ModularVector q(2);
    q[edge.u] = x;
    q[edge.v] = -x;
    return q;
  }
  if (f.kind() == OracleKind::kConcaveCardinality) {
    DivideAndConquerOptions options;
    options.tol = kProjectionTol;
    return divide_and_conquer(f, QuadraticObjective(y, weights), options).solution;
  }
  return weighted_min_norm(f, y, weights, kProjectionTol);
}

std::vector<double> support_degrees(const FactorGraph& graph, std::size_t i) {
  const auto& support = graph.factor(i).support;
  std::vector<double> degrees(support.size());
  for (std::size_t k = 0; k < support.size(); ++k) {
    degrees[k] = static_cast<double>(graph.degree(support[k]));
  }
  return degrees;
}

double inf_distance(const ModularVector& a, const ModularVector& b) { return linf_distance(a, b); }

double l2_distance(const ModularVector& a, const ModularVector& b) {
  double sum = 0.0;
  for (std::size_t v = 0; v < a.size(); ++v) sum += (a[v] - b[v]) * (a[v] - b[v]);
  return std::sqrt(sum);
}

TraceEntry make_entry(std::size_t iteration, const ModularVector& q, double delta,
                      const MessagePassingOptions& options) {
  TraceEntry entry;
  entry.iteration = iteration;
  entry.primal_objective = q.squared_norm();
  entry.delta_inf = delta;
  if (options.reference) entry.error_to_reference = l2_distance(q, *options.reference);
  return entry;
}

MessagePassingResult finish(ModularVector q, ConvergenceTrace trace, std::size_t iterations,
                            bool converged, double last_delta,
                            std::chrono::steady_clock::time_point start) {
  SolverReport report;
  report.solution = q;
  report.objective = q.squared_norm();
  report.gap = last_delta;
  report.iterations = iterations;
  report.converged = converged;
  report.milliseconds =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return MessagePassingResult{make_inference_result(std::move(q), std::move(report)),
                              std::move(trace)};
}

}  // namespace

MessageState initial_message_state(const FactorGraph& graph) {
  MessageState state;
  state.factor_states.reserve(graph.num_factors());
  state.to_factor.reserve(graph.num_factors());
  for (const auto& factor : graph.factors()) {
    state.factor_states.push_back(
        greedy_vertex(factor.oracle, Ordering::identity(factor.support.size())));
    state.to_factor.emplace_back(factor.support.size(), 0.0);
  }
  state.aggregate = aggregate_messages(graph, state.factor_states);
  return state;
}

ModularVector aggregate_messages(const FactorGraph& graph,
                                 const std::vector<ModularVector>& factor_states) {
  if (factor_states.size() != graph.num_factors()) {
    throw std::invalid_argument("aggregate_messages: one state per factor expected");
  }
  ModularVector q(graph.num_variables());
  for (std::size_t v = 0; v < graph.num_variables(); ++v) {
    const auto factors = graph.factors_of(v);
    const auto positions = graph.local_positions_of(v);
    double sum = 0.0;
    for (std::size_t j = 0; j < factors.size(); ++j) sum += factor_states[factors[j]][positions[j]];
    q[v] = sum;
  }
  return q;
}

void variable_to_factor_round(MessageState& state, const FactorGraph& graph) {
  const ModularVector sums = aggregate_messages(graph, state.factor_states);
  for (std::size_t v = 0; v < graph.num_variables(); ++v) {
    const auto factors = graph.factors_of(v);
    const auto positions = graph.local_positions_of(v);
    const double mean = sums[v] / static_cast<double>(factors.size());
    for (std::size_t j = 0; j < factors.size(); ++j) state.to_factor[factors[j]][positions[j]] = mean;
  }
}

ModularVector factor_update(const FactorGraph& graph, std::size_t factor_index,
                            const ModularVector& factor_state,
                            const std::vector<double>& incoming) {
  const Factor& factor = graph.factor(factor_index);
  const std::size_t m = factor.support.size();
  if (factor_state.size() != m || incoming.size() != m) {
    throw std::invalid_argument("factor_update: state or messages do not match the support");
  }
  ModularVector target(m);
  for (std::size_t k = 0; k < m; ++k) target[k] = factor_state[k] - incoming[k];
  return project(factor.oracle, target, support_degrees(graph, factor_index));
}

MessagePassingResult run_parallel_mp(const FactorGraph& graph,
                                     const MessagePassingOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  WorkerPool pool(resolve_worker_count(options.workers));
  MessageState state = initial_message_state(graph);
  ConvergenceTrace trace;
  trace.initial = state.aggregate;
  trace.entries.push_back(make_entry(0, state.aggregate, 0.0, options));

  std::vector<ModularVector> next(graph.num_factors());
  bool converged = false;
  double delta = std::numeric_limits<double>::infinity();
  while (state.iteration < options.max_iterations) {
    variable_to_factor_round(state, graph);
    pool.parallel_for(graph.num_factors(), [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        next[i] = factor_update(graph, i, state.factor_states[i], state.to_factor[i]);
      }
    });
    state.factor_states.swap(next);
    ModularVector aggregate = aggregate_messages(graph, state.factor_states);
    delta = inf_distance(aggregate, state.aggregate);
    state.aggregate = std::move(aggregate);
    ++state.iteration;
    trace.entries.push_back(make_entry(state.iteration, state.aggregate, delta, options));
    if (delta <= options.tol) {
      converged = true;
      break;
    }
  }
  return finish(std::move(state.aggregate), std::move(trace), state.iteration, converged, delta,
                start);
}

MessagePassingResult run_sequential_ep(const FactorGraph& graph,
                                       const MessagePassingOptions& options,
                                       std::vector<double>* block_objectives) {
  const auto start = std::chrono::steady_clock::now();
  MessageState state = initial_message_state(graph);
  ConvergenceTrace trace;
  trace.initial = state.aggregate;
  trace.entries.push_back(make_entry(0, state.aggregate, 0.0, options));
  if (block_objectives != nullptr) block_objectives->clear();

  ModularVector q = state.aggregate;
  bool converged = false;
  double delta = std::numeric_limits<double>::infinity();
  std::size_t sweep = 0;
  while (sweep < options.max_iterations) {
    for (std::size_t i = 0; i < graph.num_factors(); ++i) {
      const Factor& factor = graph.factor(i);
      const std::size_t m = factor.support.size();
      ModularVector& qi = state.factor_states[i];
      ModularVector target(m);
      for (std::size_t k = 0; k < m; ++k) target[k] = -(q[factor.support[k]] - qi[k]);
      ModularVector updated = project(factor.oracle, target, std::vector<double>(m, 1.0));
      for (std::size_t k = 0; k < m; ++k) q[factor.support[k]] += updated[k] - qi[k];
      qi = std::move(updated);
      if (block_objectives != nullptr) block_objectives->push_back(q.squared_norm());
    }
    // Re-sum in the fixed order so rounding drift does not accumulate.
    q = aggregate_messages(graph, state.factor_states);
    ++sweep;
    delta = inf_distance(q, state.aggregate);
    state.aggregate = q;
    trace.entries.push_back(make_entry(sweep, q, delta, options));
    if (delta <= options.tol) {
      converged = true;
      break;
    }
  }
  return finish(std::move(q), std::move(trace), sweep, converged, delta, start);
}

double fit_log_error_slope(const ConvergenceTrace& trace, double floor) {
  double n = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& entry : trace.entries) {
    if (!entry.error_to_reference || *entry.error_to_reference <= floor) continue;
    const auto x = static_cast<double>(entry.iteration);
    const double y = std::log(*entry.error_to_reference);
    n += 1.0;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  if (n < 2.0 || denom == 0.0) return 0.0;
  return (n * sxy - sx * sy) / denom;
}

LinearRateCheck check_linear_rate(const ConvergenceTrace& trace, const FactorGraph& graph,
                                  const ModularVector& q_star, const ModularVector& q_zero) {
  if (!graph.is_regular()) throw std::invalid_argument("linear rate check needs a regular graph");
  const auto n = static_cast<double>(graph.num_variables());
  const auto delta = static_cast<double>(graph.max_degree());
  const auto edges = static_cast<double>(graph.num_edges());
  LinearRateCheck check;
  check.bound_rate = 1.0 - 1.0 / (n * n * delta * delta);
  check.stated_rate = std::pow(1.0 - 1.0 / (n * delta), 2.0);
  const double scale = 2.0 * linf_distance(q_zero, q_star) * std::sqrt(delta * edges);
  check.holds = true;
  for (std::size_t k = 0; k < trace.entries.size(); ++k) {
    const auto& entry = trace.entries[k];
    if (!entry.error_to_reference) continue;
    const double bound = scale * std::pow(check.bound_rate, static_cast<double>(entry.iteration));
    if (*entry.error_to_reference > bound * (1.0 + 1e-9) + 1e-12) {
      check.holds = false;
      check.first_violation = k;
      break;
    }
  }
  check.fitted_slope = fit_log_error_slope(trace);
  check.fitted_rate = std::exp(check.fitted_slope);
  return check;
}

}  // namespace subvar
