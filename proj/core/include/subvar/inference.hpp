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

#ifndef SUBVAR_INFERENCE_HPP_
#define SUBVAR_INFERENCE_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "subvar/min_norm.hpp"
#include "subvar/modular.hpp"
#include "subvar/set_function.hpp"
#include "subvar/subset.hpp"

namespace subvar {

/// Variational approximation of P(A) ∝ exp(-F(A)) by the factorized
/// distribution with parameters s*. All log quantities are in nats.
struct InferenceResult {
  ModularVector s_star;
  /// p_v = sigma(-s*_v).
  std::vector<double> marginals;
  /// sum_v log(1 + e^{-s*_v}) >= log Z.
  double log_z_upper = 0.0;
  SubsetMask map_minimal;
  SubsetMask map_maximal;
  SolverReport report;
};

enum class LFieldMethod { kMinNorm, kDivideAndConquer, kFrankWolfe };

LFieldMethod parse_lfield_method(const std::string& name);
std::string to_string(LFieldMethod method);

struct LFieldOptions {
  LFieldMethod method = LFieldMethod::kMinNorm;
  WolfeOptions wolfe;
  std::size_t frank_wolfe_iterations = 2000;
};

/// Solves min over B(F) of sum_v log(1 + e^{-s_v}) and fills marginals,
/// bound and MAP sets. Throws SolverError if the divide-and-conquer route
/// fails; a min-norm run that hits its cycle limit is returned with
/// report.converged = false.
InferenceResult lfield_infer(const SubmodularOracle& f, const LFieldOptions& options = {});

/// Fills marginals, bound and MAP sets of `result` from s.
InferenceResult make_inference_result(ModularVector s, SolverReport report);

/// sum_v log(1 + e^{-s_v}); an upper bound on log Z whenever s ∈ P(F).
double logpartition_upper_bound(const ModularVector& s);

std::vector<double> marginals_from_potentials(const ModularVector& s);

/// (minimal, maximal) = ({p_v > 1/2 + band}, {p_v >= 1/2 - band}).
std::pair<SubsetMask, SubsetMask> map_from_marginals(const std::vector<double>& p,
                                                     double band = 1e-8);

/// log sum_A e^{-F(A)} by enumeration. Throws std::length_error for n > 20.
double exact_partition(const SubmodularOracle& f);
double exact_partition_from_table(const std::vector<double>& table);

/// P(v ∈ A) under P(A) ∝ e^{-F(A)} by enumeration. n <= 20.
std::vector<double> exact_marginals(const SubmodularOracle& f);

/// sum_v log(1 + e^{-s_v}) - (H[p] - f(p)) with H the independent-Bernoulli
/// entropy and f the Lovász extension. Nonnegative for s ∈ B(F) and any p.
/// Throws std::invalid_argument if some p_v lies outside [0, 1].
double duality_gap(const SubmodularOracle& f, const ModularVector& s,
                   const std::vector<double>& p);

}  // namespace subvar

#endif  // SUBVAR_INFERENCE_HPP_
