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

#include "brute_force.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace subvar::testing {

std::vector<double> evaluate_all(const SubmodularOracle& f) {
  const std::size_t n = f.size();
  if (n > 20) throw std::length_error("evaluate_all: n too large");
  std::vector<double> values(std::size_t{1} << n);
  for (std::uint64_t bits = 0; bits < values.size(); ++bits) {
    values[bits] = f.evaluate(SubsetMask::from_bits(n, bits));
  }
  return values;
}

namespace {

double modular_sum(const ModularVector& z, std::uint64_t bits) {
  double sum = 0.0;
  for (std::size_t v = 0; v < z.size(); ++v) {
    if ((bits >> v) & 1U) sum += z[v];
  }
  return sum;
}

}  // namespace

BruteMinimizers brute_minimizers(const SubmodularOracle& f, const ModularVector& z, double tol) {
  const std::size_t n = f.size();
  const auto values = evaluate_all(f);
  std::vector<double> shifted(values.size());
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t bits = 0; bits < values.size(); ++bits) {
    shifted[bits] = values[bits] - modular_sum(z, bits);
    best = std::min(best, shifted[bits]);
  }
  std::uint64_t lower = values.size() - 1;
  std::uint64_t upper = 0;
  for (std::uint64_t bits = 0; bits < values.size(); ++bits) {
    if (shifted[bits] <= best + tol) {
      lower &= bits;
      upper |= bits;
    }
  }
  return {best, SubsetMask::from_bits(n, lower), SubsetMask::from_bits(n, upper)};
}

BruteMinimizers brute_minimizers(const SubmodularOracle& f, double tol) {
  return brute_minimizers(f, ModularVector(f.size()), tol);
}

double brute_log_partition(const SubmodularOracle& f) {
  const auto values = evaluate_all(f);
  const double lowest = *std::min_element(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += std::exp(-(v - lowest));
  return -lowest + std::log(sum);
}

std::vector<double> brute_marginals(const SubmodularOracle& f) {
  const auto values = evaluate_all(f);
  const double lowest = *std::min_element(values.begin(), values.end());
  std::vector<double> inclusion(f.size(), 0.0);
  double total = 0.0;
  for (std::uint64_t bits = 0; bits < values.size(); ++bits) {
    const double w = std::exp(-(values[bits] - lowest));
    total += w;
    for (std::size_t v = 0; v < f.size(); ++v) {
      if ((bits >> v) & 1U) inclusion[v] += w;
    }
  }
  for (double& p : inclusion) p /= total;
  return inclusion;
}

ModularVector greedy_by_prefix(const SubmodularOracle& f, const std::vector<std::size_t>& order) {
  ModularVector s(f.size());
  SubsetMask prefix(f.size());
  double previous = 0.0;
  for (std::size_t v : order) {
    prefix.insert(v);
    const double value = f.evaluate(prefix);
    s[v] = value - previous;
    previous = value;
  }
  return s;
}

std::vector<ModularVector> all_greedy_vertices(const SubmodularOracle& f) {
  if (f.size() > 8) throw std::length_error("all_greedy_vertices: n too large");
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<ModularVector> vertices;
  do {
    vertices.push_back(greedy_by_prefix(f, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return vertices;
}

double brute_linear_min_value(const SubmodularOracle& f, const ModularVector& c) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : all_greedy_vertices(f)) best = std::min(best, c.dot(s));
  return best;
}

double brute_lovasz(const SubmodularOracle& f, const ModularVector& w) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& s : all_greedy_vertices(f)) best = std::max(best, w.dot(s));
  return best;
}

double brute_max_violation(const SubmodularOracle& f, const ModularVector& s) {
  const auto values = evaluate_all(f);
  double best = -std::numeric_limits<double>::infinity();
  for (std::uint64_t bits = 0; bits < values.size(); ++bits) {
    best = std::max(best, modular_sum(s, bits) - values[bits]);
  }
  return best;
}

ModularVector decomposition_projection(const SubmodularOracle& f, const ModularVector& y,
                                       const std::vector<double>& w) {
  const std::size_t n = f.size();
  if (n > 14) throw std::length_error("decomposition_projection: n too large");
  const auto values = evaluate_all(f);
  std::vector<double> g(values.size());
  std::vector<double> inverse_weight(values.size(), 0.0);
  double scale = 1.0;
  for (std::uint64_t bits = 0; bits < values.size(); ++bits) {
    g[bits] = values[bits] - modular_sum(y, bits);
    for (std::size_t v = 0; v < n; ++v) {
      if ((bits >> v) & 1U) inverse_weight[bits] += 1.0 / w[v];
    }
    scale = std::max(scale, std::abs(g[bits]));
  }
  const double tol = 1e-11 * scale;
  const std::uint64_t full = values.size() - 1;
  ModularVector s = y;
  std::uint64_t tight = 0;
  while (tight != full) {
    double level = std::numeric_limits<double>::infinity();
    for (std::uint64_t bits = 0; bits <= full; ++bits) {
      if ((bits & tight) != tight || bits == tight) continue;
      level = std::min(level, (g[bits] - g[tight]) / (inverse_weight[bits] - inverse_weight[tight]));
    }
    std::uint64_t next = tight;
    for (std::uint64_t bits = 0; bits <= full; ++bits) {
      if ((bits & tight) != tight || bits == tight) continue;
      const double gap = (g[bits] - g[tight]) - level * (inverse_weight[bits] - inverse_weight[tight]);
      if (gap <= tol) next |= bits;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (((next & ~tight) >> v) & 1U) s[v] = y[v] + level / w[v];
    }
    tight = next;
  }
  return s;
}

ModularVector decomposition_min_norm(const SubmodularOracle& f) {
  return decomposition_projection(f, ModularVector(f.size()), std::vector<double>(f.size(), 1.0));
}

}  // namespace subvar::testing
