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

#include "subvar/report_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace subvar {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& value) {
  return value ? json(*value) : json(nullptr);
}

// strtod rather than stod: stod rejects subnormals (ERANGE), and marginals
// near 0 or 1 legitimately underflow that far.
bool parse_double(const std::string& text, double& value) {
  if (text.empty() || std::isspace(static_cast<unsigned char>(text.front()))) return false;
  char* end = nullptr;
  value = std::strtod(text.c_str(), &end);
  return end == text.c_str() + text.size() && std::isfinite(value);
}

}  // namespace

json to_json(const SolverReport& report) {
  return json{{"solution", report.solution.vector()},
              {"objective", report.objective},
              {"gap", report.gap},
              {"iterations", report.iterations},
              {"milliseconds", report.milliseconds},
              {"converged", report.converged}};
}

json to_json(const InferenceResult& result) {
  return json{{"s_star", result.s_star.vector()},
              {"marginals", result.marginals},
              {"log_z_upper", result.log_z_upper},
              {"map_minimal", result.map_minimal.indices()},
              {"map_maximal", result.map_maximal.indices()},
              {"report", to_json(result.report)}};
}

json to_json(const DivergenceReport& report) {
  return json{{"d_infty", report.d_infty},
              {"log_z_q", report.log_z_q},
              {"log_z_p", report.log_z_p},
              {"slack", report.slack}};
}

json to_json(const EvaluationReport& report) {
  json roc = json::array();
  for (const auto& point : report.roc) {
    roc.push_back({point.false_positive_rate, point.true_positive_rate});
  }
  json bands = json::array();
  for (const auto& auc : report.trimap_auc) bands.push_back(optional_number(auc));
  return json{{"auc", optional_number(report.auc)},
              {"trimap_auc", bands},
              {"mean_trimap_auc", optional_number(report.mean_trimap_auc)},
              {"roc", roc}};
}

void write_marginals_csv(std::ostream& out, const std::vector<double>& p) {
  out << "element_index,probability\n";
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t v = 0; v < p.size(); ++v) out << v << ',' << p[v] << '\n';
}

std::vector<double> read_marginals_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("marginals CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "element_index,probability") {
    throw std::runtime_error("marginals CSV must start with 'element_index,probability'");
  }
  std::vector<double> p;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("malformed CSV row: " + line);
    std::size_t index = 0;
    double value = 0.0;
    try {
      std::size_t used = 0;
      index = std::stoul(line.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("index");
      if (!parse_double(line.substr(comma + 1), value)) throw std::invalid_argument("value");
    } catch (const std::exception&) {
      throw std::runtime_error("malformed CSV row: " + line);
    }
    if (index != row) throw std::runtime_error("CSV element indices must be 0, 1, 2, ...");
    p.push_back(value);
    ++row;
  }
  return p;
}

void write_trace_csv(std::ostream& out, const ConvergenceTrace& trace) {
  out << "iteration,primal_objective,delta_inf,error_to_reference\n";
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& e : trace.entries) {
    out << e.iteration << ',' << e.primal_objective << ',' << e.delta_inf << ',';
    if (e.error_to_reference) out << *e.error_to_reference;
    out << '\n';
  }
}

}  // namespace subvar
