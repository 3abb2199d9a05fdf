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

#ifndef SUBVAR_REPORT_IO_HPP_
#define SUBVAR_REPORT_IO_HPP_

#include <iosfwd>
#include <vector>

#include <nlohmann/json.hpp>

#include "subvar/divergence.hpp"
#include "subvar/evaluation.hpp"
#include "subvar/inference.hpp"
#include "subvar/message_passing.hpp"
#include "subvar/min_norm.hpp"

namespace subvar {

nlohmann::json to_json(const SolverReport& report);
nlohmann::json to_json(const InferenceResult& result);
nlohmann::json to_json(const DivergenceReport& report);
nlohmann::json to_json(const EvaluationReport& report);

/// "element_index,probability" header, one row per element, 17 significant
/// digits so the values read back bit-exactly.
void write_marginals_csv(std::ostream& out, const std::vector<double>& p);
/// Throws std::runtime_error on malformed rows or a non-dense index column.
std::vector<double> read_marginals_csv(std::istream& in);

/// "iteration,primal_objective,delta_inf,error_to_reference"; the last
/// column is empty when no reference was tracked.
void write_trace_csv(std::ostream& out, const ConvergenceTrace& trace);

}  // namespace subvar

#endif  // SUBVAR_REPORT_IO_HPP_
