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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status if
// any criterion fails. Every instance family is drawn from fixed seeds.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "random_models.hpp"
#include "subvar/base_polytope.hpp"
#include "subvar/divergence.hpp"
#include "subvar/evaluation.hpp"
#include "subvar/inference.hpp"
#include "subvar/message_passing.hpp"
#include "subvar/model_io.hpp"
#include "subvar/segmentation.hpp"
#include "subvar/separable.hpp"
#include "subvar/solvers.hpp"

namespace {

using namespace subvar;
using subvar::testing::Rng;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Duality gaps of every L-Field solution computed in criteria 1-4.
std::vector<double> g_duality_gaps;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format(const char* fmt, double a) {
  char buffer[128];
  std::snprintf(buffer, sizeof buffer, fmt, a);
  return buffer;
}

void record_gap(const SubmodularOracle& f, const ModularVector& s) {
  g_duality_gaps.push_back(duality_gap(f, s, marginals_from_potentials(s)));
}

std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// 200 random cut + hop + modular models, n in [4, 10]: the minimum-norm point
// minimizes the logistic objective at least as well as divide-and-conquer and
// 2000 Frank-Wolfe steps, and all three solutions agree within 1e-4.
Outcome solver_agreement() {
  constexpr double kObjectiveSlack = 1e-9;
  constexpr double kAgreement = 1e-4;
  const auto start = Clock::now();
  Rng rng(101);
  std::size_t objective_failures = 0;
  double max_dc = 0.0;
  double max_fw = 0.0;
  std::size_t fw_outside = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = model_oracle(subvar::testing::random_model(rng, uniform_size(rng, 4, 10)));
    const auto wolfe = lfield_infer(f, {LFieldMethod::kMinNorm});
    const auto dc = lfield_infer(f, {LFieldMethod::kDivideAndConquer});
    const auto fw = lfield_infer(f, {LFieldMethod::kFrankWolfe});
    record_gap(f, wolfe.s_star);
    if (wolfe.log_z_upper > dc.log_z_upper + kObjectiveSlack ||
        wolfe.log_z_upper > fw.log_z_upper + kObjectiveSlack) {
      ++objective_failures;
    }
    max_dc = std::max(max_dc, linf_distance(wolfe.s_star, dc.s_star));
    const double fw_distance = linf_distance(wolfe.s_star, fw.s_star);
    if (fw_distance > kAgreement) ++fw_outside;
    max_fw = std::max(max_fw, fw_distance);
  }
  const double elapsed = seconds_since(start);
  Outcome out;
  out.pass = objective_failures == 0 && max_dc <= kAgreement && max_fw <= kAgreement &&
             elapsed < 60.0;
  std::ostringstream detail;
  detail << "objective violations " << objective_failures << "/200, max |wolfe-dc| "
         << max_dc << ", max |wolfe-fw| " << max_fw << " (limit " << kAgreement << ", " << fw_outside << "/200 outside), "
         << format("%.1f s", elapsed);
  out.detail = detail.str();
  return out;
}

// Thresholding the L-Field marginals at 1/2 recovers the minimal and maximal
// minimizers of F exactly; 200 instances, n <= 12.
Outcome mode_thresholding() {
  const auto start = Clock::now();
  Rng rng(202);
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = model_oracle(subvar::testing::random_model(rng, uniform_size(rng, 2, 12)));
    const auto result = lfield_infer(f);
    record_gap(f, result.s_star);
    const auto truth = subvar::testing::brute_minimizers(f);
    if (!(result.map_minimal == truth.minimal) || !(result.map_maximal == truth.maximal)) {
      ++mismatches;
    }
  }
  const double elapsed = seconds_since(start);
  return {mismatches == 0 && elapsed < 30.0,
          "mismatches " + std::to_string(mismatches) + "/200, " + format("%.1f s", elapsed)};
}

// The L-Field bound never falls below the exact log-partition function and is
// tight on modular models.
Outcome partition_bound() {
  const auto start = Clock::now();
  Rng rng(303);
  double worst_slack = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = model_oracle(subvar::testing::random_model(rng, uniform_size(rng, 2, 15)));
    const auto result = lfield_infer(f);
    record_gap(f, result.s_star);
    worst_slack = std::min(worst_slack, result.log_z_upper - subvar::testing::brute_log_partition(f));
  }
  double worst_modular = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto f =
        model_oracle(subvar::testing::random_modular_model(rng, uniform_size(rng, 1, 15)));
    const auto result = lfield_infer(f);
    record_gap(f, result.s_star);
    worst_modular = std::max(worst_modular,
                             std::abs(result.log_z_upper - subvar::testing::brute_log_partition(f)));
  }
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << "min(bound - logZ) " << worst_slack << " (>= -1e-9), modular max |bound - logZ| "
         << worst_modular << " (<= 1e-9), " << format("%.1f s", elapsed);
  return {worst_slack >= -1e-9 && worst_modular <= 1e-9 && elapsed < 60.0, detail.str()};
}

// s* minimizes the infinite-order Renyi divergence: 10^4 random perturbations
// never do better, and s* is a global modular lower bound of F.
Outcome divergence_optimality() {
  constexpr double kTol = 1e-8;
  const auto start = Clock::now();
  Rng rng(404);
  std::size_t better = 0;
  double worst_violation = -std::numeric_limits<double>::infinity();
  const double scales[] = {1.0, 1e-2, 1e-4};
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = model_oracle(subvar::testing::random_model(rng, uniform_size(rng, 2, 8)));
    const auto result = lfield_infer(f);
    record_gap(f, result.s_star);
    const DivergenceEvaluator evaluator(f);
    const double base = evaluator.evaluate(result.s_star).d_infty;
    worst_violation = std::max(worst_violation, subvar::testing::brute_max_violation(f, result.s_star));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int k = 0; k < 10000; ++k) {
      const double scale = scales[k % 3];
      ModularVector q = result.s_star;
      for (std::size_t v = 0; v < q.size(); ++v) q[v] += scale * unit(rng);
      if (evaluator.evaluate(q).d_infty < base - kTol) ++better;
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << "improving perturbations " << better << "/500000, max_A s*(A)-F(A) "
         << worst_violation << " (<= 1e-8), " << format("%.1f s", elapsed);
  return {better == 0 && worst_violation <= kTol, detail.str()};
}

// Non-submodular F(0)=0, F({1})=-20, F({2})=-8, F({1,2})=-16: a positive slack
// beats every lower-bounding modular q.
Outcome counterexample() {
  const auto f = SubmodularOracle::explicit_table(2, {0.0, -20.0, -8.0, -16.0});
  const double candidate = dinfty_objective(f, ModularVector{-19.0, -7.0});
  const double candidate_slack = DivergenceEvaluator(f).slack(ModularVector{-19.0, -7.0});
  const auto free = dinfty_bruteforce_min(f);
  const auto bounded = dinfty_bruteforce_min_lower_bounds(f);
  std::ostringstream detail;
  detail << "objective at (-19,-7) " << candidate << " with slack " << candidate_slack
         << ", free grid optimum " << free.objective << ", lower-bound optimum "
         << bounded.objective << " (>= 27.99)";
  return {candidate < 27.1 && std::abs(candidate_slack - 1.0) < 1e-12 && free.objective < 27.1 &&
              bounded.objective >= 28.0 - 0.01,
          detail.str()};
}

Outcome duality_certificate() {
  const double worst = *std::max_element(g_duality_gaps.begin(), g_duality_gaps.end());
  const double least = *std::min_element(g_duality_gaps.begin(), g_duality_gaps.end());
  std::ostringstream detail;
  detail << g_duality_gaps.size() << " solutions, gap range [" << least << ", " << worst
         << "] (<= 1e-6)";
  return {worst <= 1e-6 && least >= -1e-9, detail.str()};
}

// Parallel message passing and sequential block coordinate descent on grid
// models reach the monolithic minimum-norm point.
Outcome decomposed_consistency() {
  const auto start = Clock::now();
  Rng rng(707);
  const std::size_t sides[][3] = {{3, 3, 2}, {4, 4, 2}, {5, 4, 3}, {6, 6, 3}, {8, 8, 4},
                                  {10, 10, 3}, {7, 5, 2}, {9, 11, 3}, {10, 10, 5}, {4, 12, 2}};
  double max_parallel = 0.0;
  double max_sequential = 0.0;
  double worst_increase = 0.0;
  std::size_t largest = 0;
  std::size_t unconverged = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto& side = sides[trial % 10];
    const auto spec = subvar::testing::random_grid_model(rng, side[0], side[1], side[2]);
    largest = std::max(largest, spec.n);
    // Reference solve: some grid instances need a little over 10n major cycles.
    WolfeOptions reference;
    reference.max_major_cycles = 100 * spec.n;
    const auto monolithic = min_norm_point(model_oracle(spec), reference);
    const auto graph = model_factor_graph(spec);
    MessagePassingOptions options;
    options.tol = 1e-9;
    options.max_iterations = 20000;
    const auto parallel = run_parallel_mp(graph, options);
    std::vector<double> block_objectives;
    const auto sequential = run_sequential_ep(graph, options, &block_objectives);
    if (!monolithic.converged || !parallel.inference.report.converged ||
        !sequential.inference.report.converged) {
      ++unconverged;
    }
    max_parallel = std::max(max_parallel, linf_distance(parallel.inference.s_star, monolithic.solution));
    max_sequential =
        std::max(max_sequential, linf_distance(sequential.inference.s_star, monolithic.solution));
    double previous = std::numeric_limits<double>::infinity();
    for (double value : block_objectives) {
      if (value > previous) worst_increase = std::max(worst_increase, (value - previous) / std::max(1.0, previous));
      previous = value;
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << "n up to " << largest << ", max |parallel-monolithic| " << max_parallel
         << ", max |sequential-monolithic| " << max_sequential << ", worst relative increase "
         << worst_increase << ", unconverged " << unconverged << ", "
         << format("%.1f s", elapsed);
  return {max_parallel <= 1e-4 && max_sequential <= 1e-4 && worst_increase <= 1e-12 &&
              unconverged == 0,
          detail.str()};
}

FactorGraph cycle_graph(bool matching, bool unary) {
  std::vector<Factor> factors;
  if (unary) factors.push_back({SubmodularOracle::modular(ModularVector{-1.5, 0.5, 1.0, -0.25}), {0, 1, 2, 3}});
  const double weights[] = {1.0, 0.7, 1.3, 0.9};
  for (std::size_t v = 0; v < 4; ++v) {
    factors.push_back({SubmodularOracle::cut(2, {{0, 1, weights[v]}}), {v, (v + 1) % 4}});
  }
  if (matching) {
    factors.push_back({SubmodularOracle::cut(2, {{0, 1, 0.8}}), {0, 2}});
    factors.push_back({SubmodularOracle::cut(2, {{0, 1, 1.1}}), {1, 3}});
  }
  return FactorGraph(4, std::move(factors));
}

// Linear convergence bound of parallel message passing on regular graphs.
Outcome linear_rate() {
  struct Case {
    const char* name;
    bool matching;
    bool unary;
  };
  const Case cases[] = {{"4-cycle", false, false},
                        {"4-cycle+matching", true, false},
                        {"4-cycle+unary", false, true}};
  bool all = true;
  std::ostringstream detail;
  for (const auto& c : cases) {
    const auto graph = cycle_graph(c.matching, c.unary);
    const auto q_star = subvar::testing::decomposition_min_norm(graph.as_oracle());
    MessagePassingOptions options;
    options.tol = 1e-13;
    options.max_iterations = 5000;
    options.reference = q_star;
    const auto run = run_parallel_mp(graph, options);
    const auto check = check_linear_rate(run.trace, graph, q_star, run.trace.initial);
    const bool ok = check.holds && check.fitted_slope < 0.0;
    all = all && ok;
    detail << c.name << " (Delta " << graph.max_degree() << ") " << (ok ? "ok" : "violated")
           << " fitted rate " << check.fitted_rate << " vs bound rate " << check.bound_rate
           << "; ";
  }
  return {all, detail.str()};
}

// argmin sum w (s - y)^2 and argmin sum (1/w) log(e^{-w s} + e^{-w y}) over
// B(F) coincide.
Outcome weighted_equivalence() {
  Rng rng(909);
  double worst = 0.0;
  double worst_reference = 0.0;
  DivideAndConquerOptions options;
  options.sfm = [](const SubmodularOracle& g, const ModularVector& z) {
    return sfm_brute_force(g, z);
  };
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = uniform_size(rng, 1, 8);
    const auto f = model_oracle(subvar::testing::random_model(rng, n));
    const auto y = subvar::testing::random_vector(rng, n, 2.0);
    const auto w = subvar::testing::random_weights(rng, n, 0.2, 5.0);
    const auto quadratic = divide_and_conquer(f, QuadraticObjective(y, w), options).solution;
    const auto log_sum_exp =
        divide_and_conquer(f, WeightedLogSumExpObjective(y, w), options).solution;
    worst = std::max(worst, linf_distance(quadratic, log_sum_exp));
    worst_reference = std::max(
        worst_reference,
        linf_distance(quadratic, subvar::testing::decomposition_projection(f, y, w)));
  }
  std::ostringstream detail;
  detail << "max |quadratic - logsumexp| " << worst << ", max |quadratic - exact| "
         << worst_reference << " (<= 1e-4)";
  return {worst <= 1e-4 && worst_reference <= 1e-4, detail.str()};
}

// 48x48 disk image, channel means 0.1 apart under N(0, 0.1) noise. Pairwise
// AUC >= 0.95, and adding superpixel factors does not lower the mean trimap
// AUC.
Outcome segmentation_smoke() {
  const auto start = Clock::now();
  Rng rng(1010);
  const auto synthetic = subvar::testing::two_region_image(rng, 48, 48, 0.1);
  // Scribble seeds: a small square in the foreground and the image border.
  Seeds seeds;
  for (std::size_t y = 0; y < 48; ++y) {
    for (std::size_t x = 0; x < 48; ++x) {
      const std::size_t p = y * 48 + x;
      if (x >= 18 && x < 25 && y >= 23 && y < 30) seeds.foreground.push_back(p);
      if (x < 2 || y < 2 || x >= 46 || y >= 46) seeds.background.push_back(p);
    }
  }
  const auto unaries = compute_unaries(synthetic.image, seeds);
  auto regions = grid_superpixels(48, 48, 4);
  const auto coarse = grid_superpixels(48, 48, 8);
  regions.insert(regions.end(), coarse.begin(), coarse.end());
  SegmentationParams params;
  params.alpha = 1.0;
  params.beta = 1.0;
  params.gamma = 1.0;
  params.theta = 10.0;
  const auto model = build_segmentation_model(synthetic.image, unaries, regions, params);
  MessagePassingOptions options;
  options.tol = 1e-6;
  options.max_iterations = 5000;
  // Same alpha, beta, theta; gamma = 0 versus gamma > 0.
  const auto pairwise = segment(model, SegmentationMode::kPairwise, options);
  const auto combined = segment(model, SegmentationMode::kBoth, options);
  const auto pairwise_eval = evaluate_segmentation(pairwise.marginals, synthetic.truth.values, 48, 48);
  const auto combined_eval = evaluate_segmentation(combined.marginals, synthetic.truth.values, 48, 48);
  const double elapsed = seconds_since(start);
  // Superpixel factors alone, reported but not gated.
  const auto hop_only = segment(model, SegmentationMode::kHop, options);
  const auto hop_only_eval = evaluate_segmentation(hop_only.marginals, synthetic.truth.values, 48, 48);
  const double auc = pairwise_eval.auc.value_or(0.0);
  const double pairwise_trimap = pairwise_eval.mean_trimap_auc.value_or(0.0);
  const double combined_trimap = combined_eval.mean_trimap_auc.value_or(0.0);
  std::ostringstream detail;
  detail << "pairwise AUC " << auc << " (>= 0.95), mean trimap AUC with superpixels "
         << combined_trimap << " vs pairwise " << pairwise_trimap << " (superpixels alone "
         << hop_only_eval.mean_trimap_auc.value_or(0.0) << "), iterations "
         << pairwise.inference.report.iterations << "/" << combined.inference.report.iterations
         << ", " << format("%.1f s", elapsed);
  return {auc >= 0.95 && combined_trimap >= pairwise_trimap && elapsed < 60.0, detail.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "solver agreement", solver_agreement},
      {2, "mode thresholding", mode_thresholding},
      {3, "log-partition bound", partition_bound},
      {4, "divergence optimality", divergence_optimality},
      {5, "non-submodular counterexample", counterexample},
      {6, "duality certificate", duality_certificate},
      {7, "decomposed consistency", decomposed_consistency},
      {8, "linear rate bound", linear_rate},
      {9, "weighted objective equivalence", weighted_equivalence},
      {10, "segmentation smoke benchmark", segmentation_smoke},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("%s %2d %s: %s\n", outcome.pass ? "PASS" : "FAIL", c.id, c.name,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
