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

#ifndef SUBVAR_FACTOR_GRAPH_HPP_
#define SUBVAR_FACTOR_GRAPH_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "subvar/modular.hpp"
#include "subvar/set_function.hpp"

namespace subvar {

/// F_i on its own ground set; local index k stands for variable support[k].
struct Factor {
  SubmodularOracle oracle;
  std::vector<std::size_t> support;
};

/// Bipartite variable/factor graph of F(S) = sum_i F_i(S ∩ V_i). Immutable
/// once built.
class FactorGraph {
 public:
  /// Throws std::invalid_argument when a variable belongs to no factor, a
  /// support index is out of range or repeated, or an oracle's size differs
  /// from its support.
  FactorGraph(std::size_t num_variables, std::vector<Factor> factors);

  std::size_t num_variables() const { return num_variables_; }
  std::size_t num_factors() const { return factors_.size(); }
  const Factor& factor(std::size_t i) const { return factors_[i]; }
  const std::vector<Factor>& factors() const { return factors_; }

  /// delta(v): factors containing v, ascending.
  std::span<const std::size_t> factors_of(std::size_t v) const;
  /// Local index of v inside the j-th factor of delta(v).
  std::span<const std::size_t> local_positions_of(std::size_t v) const;
  std::size_t degree(std::size_t v) const;
  /// Delta_V = max_v |delta(v)|.
  std::size_t max_degree() const { return max_degree_; }
  /// E = sum_i |V_i|.
  std::size_t num_edges() const { return num_edges_; }
  /// Every variable has degree Delta_V.
  bool is_regular() const;

  /// The monolithic Sum oracle of all factors.
  SubmodularOracle as_oracle() const;

 private:
  std::size_t num_variables_;
  std::vector<Factor> factors_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> adjacency_;
  std::vector<std::size_t> positions_;
  std::size_t max_degree_ = 0;
  std::size_t num_edges_ = 0;
};

FactorGraph build_factor_graph(std::size_t num_variables, std::vector<Factor> factors);

/// ||x||_G with ||x||_G^2 = sum_v x_v^2 / |delta(v)| over the variables in
/// `support` (x[k] belongs to support[k]). Throws std::invalid_argument on a zero
/// degree.
double norm_g(std::span<const double> x, std::span<const std::size_t> support,
              const FactorGraph& graph);
/// ||x||_{G*} with ||x||_{G*}^2 = sum_v |delta(v)| x_v^2.
double norm_g_star(std::span<const double> x, std::span<const std::size_t> support,
                   const FactorGraph& graph);
/// Full-length vectors over all of V.
double norm_g(const ModularVector& x, const FactorGraph& graph);
double norm_g_star(const ModularVector& x, const FactorGraph& graph);

}  // namespace subvar

#endif  // SUBVAR_FACTOR_GRAPH_HPP_
