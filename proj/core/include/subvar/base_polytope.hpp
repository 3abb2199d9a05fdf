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

#ifndef SUBVAR_BASE_POLYTOPE_HPP_
#define SUBVAR_BASE_POLYTOPE_HPP_

#include <cstddef>

#include "subvar/modular.hpp"
#include "subvar/set_function.hpp"
#include "subvar/subset.hpp"

namespace subvar {

/// Greedy vertex of B(F): s_{j_k} = F({j_1..j_k}) - F({j_1..j_{k-1}}).
ModularVector greedy_vertex(const SubmodularOracle& f, const Ordering& order);

/// Same vertex computed from 2n plain evaluations of F on the prefix chain.
/// Slow; used to cross-check the structured fast paths.
ModularVector greedy_vertex_by_evaluation(const SubmodularOracle& f, const Ordering& order);

/// argmin over B(F) of <c, s>: greedy vertex for c sorted ascending, ties by
/// ascending index. c = 0 yields the identity-order vertex.
ModularVector linear_minimize_over_base(const SubmodularOracle& f, const ModularVector& cost);

/// Lovász extension f(w) = max over B(F) of <w, s>.
double lovasz_extension(const SubmodularOracle& f, const ModularVector& w);

inline constexpr std::size_t kMaxPolytopeCheckElements = 15;

/// s(A) <= F(A) + tol for all A and |s(V) - F(V)| <= tol. Exhaustive over
/// 2^n subsets; throws std::length_error when n > 15.
bool in_base_polytope(const SubmodularOracle& f, const ModularVector& s, double tol = 1e-9);

/// s(A) <= F(A) + tol for all A.
bool in_submodular_polyhedron(const SubmodularOracle& f, const ModularVector& s,
                              double tol = 1e-9);

/// max over A of s(A) - F(A) (>= 0, attained at the empty set at worst).
double max_violation(const SubmodularOracle& f, const ModularVector& s);

}  // namespace subvar

#endif  // SUBVAR_BASE_POLYTOPE_HPP_
