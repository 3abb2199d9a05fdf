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

#include "subvar/factor_graph.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace subvar {

FactorGraph::FactorGraph(std::size_t num_variables, std::vector<Factor> factors)
    : num_variables_(num_variables), factors_(std::move(factors)) {
  std::vector<std::size_t> degree(num_variables_, 0);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Factor& factor = factors_[i];
    if (factor.oracle.size() != factor.support.size()) {
      throw std::invalid_argument("factor " + std::to_string(i) +
                                  ": oracle size differs from its support");
    }
    std::vector<bool> seen(num_variables_, false);
    for (std::size_t v : factor.support) {
      if (v >= num_variables_) {
        throw std::invalid_argument("factor " + std::to_string(i) + ": variable out of range");
      }
      if (seen[v]) throw std::invalid_argument("factor " + std::to_string(i) + ": repeated variable");
      seen[v] = true;
      ++degree[v];
    }
    num_edges_ += factor.support.size();
  }
  offsets_.assign(num_variables_ + 1, 0);
  for (std::size_t v = 0; v < num_variables_; ++v) {
    if (degree[v] == 0) {
      throw std::invalid_argument("variable " + std::to_string(v) + " belongs to no factor");
    }
    offsets_[v + 1] = offsets_[v] + degree[v];
    max_degree_ = std::max(max_degree_, degree[v]);
  }
  adjacency_.resize(num_edges_);
  positions_.resize(num_edges_);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& support = factors_[i].support;
    for (std::size_t k = 0; k < support.size(); ++k) {
      const std::size_t slot = cursor[support[k]]++;
      adjacency_[slot] = i;
      positions_[slot] = k;
    }
  }
}

std::span<const std::size_t> FactorGraph::factors_of(std::size_t v) const {
  return std::span<const std::size_t>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::span<const std::size_t> FactorGraph::local_positions_of(std::size_t v) const {
  return std::span<const std::size_t>(positions_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::size_t FactorGraph::degree(std::size_t v) const { return offsets_[v + 1] - offsets_[v]; }

bool FactorGraph::is_regular() const {
  for (std::size_t v = 0; v < num_variables_; ++v) {
    if (degree(v) != max_degree_) return false;
  }
  return true;
}

SubmodularOracle FactorGraph::as_oracle() const {
  std::vector<SumTerm> terms;
  terms.reserve(factors_.size());
  for (const auto& factor : factors_) terms.push_back(SumTerm{factor.oracle, factor.support});
  return SubmodularOracle::sum(num_variables_, std::move(terms));
}

FactorGraph build_factor_graph(std::size_t num_variables, std::vector<Factor> factors) {
  return FactorGraph(num_variables, std::move(factors));
}

namespace {

template <bool Dual>
double weighted_square_sum(std::span<const double> x, std::span<const std::size_t> support,
                           const FactorGraph& graph) {
  if (x.size() != support.size()) throw std::invalid_argument("norm: size mismatch");
  double sum = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (support[k] >= graph.num_variables()) throw std::invalid_argument("norm: variable out of range");
    const auto d = static_cast<double>(graph.degree(support[k]));
    if (d == 0.0) throw std::invalid_argument("norm: zero-degree variable");
    sum += Dual ? d * x[k] * x[k] : x[k] * x[k] / d;
  }
  return sum;
}

std::vector<std::size_t> all_variables(const FactorGraph& graph) {
  std::vector<std::size_t> all(graph.num_variables());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
  return all;
}

}  // namespace

double norm_g(std::span<const double> x, std::span<const std::size_t> support,
              const FactorGraph& graph) {
  return std::sqrt(weighted_square_sum<false>(x, support, graph));
}

double norm_g_star(std::span<const double> x, std::span<const std::size_t> support,
                   const FactorGraph& graph) {
  return std::sqrt(weighted_square_sum<true>(x, support, graph));
}

double norm_g(const ModularVector& x, const FactorGraph& graph) {
  return norm_g(x.values(), all_variables(graph), graph);
}

double norm_g_star(const ModularVector& x, const FactorGraph& graph) {
  return norm_g_star(x.values(), all_variables(graph), graph);
}

}  // namespace subvar
