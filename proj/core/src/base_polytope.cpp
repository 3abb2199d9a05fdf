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

#include "subvar/base_polytope.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace subvar {

namespace {

// Writes the greedy gains of `data` along `order` (a permutation of the
// oracle's local ground set) into out[element].
void greedy_gains(const OracleData& data, std::size_t n, std::span<const std::size_t> order,
                  std::span<double> out);

void gains_of(const ModularTerm& term, std::size_t, std::span<const std::size_t>,
              std::span<double> out) {
  for (std::size_t i = 0; i < term.weights.size(); ++i) out[i] = term.weights[i];
}

void gains_of(const CutTerm& term, std::size_t n, std::span<const std::size_t> order,
              std::span<double> out) {
  std::vector<std::size_t> offsets(n + 1, 0);
  for (const auto& e : term.edges) {
    ++offsets[e.u + 1];
    ++offsets[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  std::vector<std::pair<std::size_t, double>> incident(offsets[n]);
  for (const auto& e : term.edges) {
    incident[fill[e.u]++] = {e.v, e.weight};
    incident[fill[e.v]++] = {e.u, e.weight};
  }
  std::vector<std::uint8_t> in_set(n, 0);
  for (std::size_t j : order) {
    double gain = 0.0;
    for (std::size_t k = offsets[j]; k < offsets[j + 1]; ++k) {
      const auto& [other, w] = incident[k];
      gain += in_set[other] ? -w : w;
    }
    out[j] = gain;
    in_set[j] = 1;
  }
}

void gains_of(const ConcaveCardinalityTerm& term, std::size_t n,
              std::span<const std::size_t> order, std::span<double> out) {
  std::vector<std::uint8_t> in_region(n, 0);
  for (std::size_t i : term.region) in_region[i] = 1;
  std::size_t k = 0;
  double previous = term.value_at(0);
  for (std::size_t j : order) {
    if (!in_region[j]) {
      out[j] = 0.0;
      continue;
    }
    ++k;
    const double current = term.value_at(k);
    out[j] = current - previous;
    previous = current;
  }
}

void gains_of(const SumOfTerms& term, std::size_t n, std::span<const std::size_t> order,
              std::span<double> out) {
  std::vector<std::size_t> rank(n);
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;
  std::fill(out.begin(), out.end(), 0.0);
  std::vector<std::size_t> local_order;
  std::vector<double> local_out;
  for (const auto& t : term.terms) {
    const std::size_t m = t.support.size();
    local_order.resize(m);
    for (std::size_t k = 0; k < m; ++k) local_order[k] = k;
    std::sort(local_order.begin(), local_order.end(), [&](std::size_t a, std::size_t b) {
      return rank[t.support[a]] < rank[t.support[b]];
    });
    local_out.assign(m, 0.0);
    greedy_gains(t.oracle.data(), m, local_order, local_out);
    for (std::size_t k = 0; k < m; ++k) out[t.support[k]] += local_out[k];
  }
}

void gains_of(const ExplicitTerm& term, std::size_t, std::span<const std::size_t> order,
              std::span<double> out) {
  std::uint64_t bits = 0;
  for (std::size_t j : order) {
    const std::uint64_t next = bits | (std::uint64_t{1} << j);
    out[j] = term.table[next] - term.table[bits];
    bits = next;
  }
}

void greedy_gains(const OracleData& data, std::size_t n, std::span<const std::size_t> order,
                  std::span<double> out) {
  std::visit([&](const auto& term) { gains_of(term, n, order, out); }, data.term);
}

// F on the prefix chain of `order`, prefix[k] = F({j_1..j_k}).
std::vector<double> prefix_values(const SubmodularOracle& f, const Ordering& order) {
  const std::size_t n = f.size();
  std::vector<double> prefix(n + 1, 0.0);
  SubsetMask mask(n);
  for (std::size_t k = 0; k < n; ++k) {
    mask.insert(order[k]);
    prefix[k + 1] = f.evaluate(mask);
  }
  return prefix;
}

void check_dimension(const SubmodularOracle& f, std::size_t size) {
  if (size != f.size()) throw std::invalid_argument("vector and oracle sizes differ");
}

}  // namespace

ModularVector greedy_vertex(const SubmodularOracle& f, const Ordering& order) {
  check_dimension(f, order.size());
  ModularVector s(f.size());
  greedy_gains(f.data(), f.size(), order.elements(), s.values());
  return s;
}

ModularVector greedy_vertex_by_evaluation(const SubmodularOracle& f, const Ordering& order) {
  check_dimension(f, order.size());
  const auto prefix = prefix_values(f, order);
  ModularVector s(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) s[order[k]] = prefix[k + 1] - prefix[k];
  return s;
}

ModularVector linear_minimize_over_base(const SubmodularOracle& f, const ModularVector& cost) {
  check_dimension(f, cost.size());
  return greedy_vertex(f, Ordering::ascending(cost.values()));
}

double lovasz_extension(const SubmodularOracle& f, const ModularVector& w) {
  check_dimension(f, w.size());
  const std::size_t n = f.size();
  if (n == 0) return 0.0;
  const Ordering order = Ordering::descending(w.values());
  const auto prefix = prefix_values(f, order);
  // Level-set form: sum_k (w_{j_k} - w_{j_{k+1}}) F(P_k), w_{j_{n+1}} = 0.
  double value = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double next = k + 1 < n ? w[order[k + 1]] : 0.0;
    const double step = w[order[k]] - next;
    if (step != 0.0) value += step * prefix[k + 1];
  }
  return value;
}

double max_violation(const SubmodularOracle& f, const ModularVector& s) {
  check_dimension(f, s.size());
  const std::size_t n = f.size();
  if (n > kMaxPolytopeCheckElements) {
    throw std::length_error("polytope membership check supports at most 15 elements");
  }
  const auto table = tabulate(f, kMaxPolytopeCheckElements);
  std::vector<double> modular(table.size(), 0.0);
  double worst = 0.0;
  for (std::uint64_t bits = 1; bits < table.size(); ++bits) {
    const std::uint64_t low = bits & (~bits + 1);
    const auto i = static_cast<std::size_t>(std::countr_zero(low));
    modular[bits] = modular[bits ^ low] + s[i];
    worst = std::max(worst, modular[bits] - table[bits]);
  }
  return worst;
}

bool in_submodular_polyhedron(const SubmodularOracle& f, const ModularVector& s, double tol) {
  return max_violation(f, s) <= tol;
}

bool in_base_polytope(const SubmodularOracle& f, const ModularVector& s, double tol) {
  if (!in_submodular_polyhedron(f, s, tol)) return false;
  return std::abs(s.total() - f.total()) <= tol;
}

}  // namespace subvar
