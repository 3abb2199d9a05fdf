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

#include "subvar/set_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace subvar {

namespace {

constexpr double kNormalizationTol = 1e-12;

template <typename Member>
double evaluate_with(const OracleData& data, const Member& member);

// Membership read from a dense 0/1 buffer. Nested Sum terms always recurse
// through this type so template instantiation stays finite.
struct BufferMember {
  const std::uint8_t* bits;
  bool operator()(std::size_t k) const { return bits[k] != 0; }
};

template <typename Member>
double evaluate_term(const ModularTerm& term, const Member& member) {
  double sum = 0.0;
  for (std::size_t i = 0; i < term.weights.size(); ++i) {
    if (member(i)) sum += term.weights[i];
  }
  return sum;
}

template <typename Member>
double evaluate_term(const CutTerm& term, const Member& member) {
  double sum = 0.0;
  for (const auto& e : term.edges) {
    if (member(e.u) != member(e.v)) sum += e.weight;
  }
  return sum;
}

template <typename Member>
double evaluate_term(const ConcaveCardinalityTerm& term, const Member& member) {
  std::size_t k = 0;
  for (std::size_t i : term.region) k += member(i) ? 1 : 0;
  return term.value_at(k);
}

template <typename Member>
double evaluate_term(const SumOfTerms& term, const Member& member) {
  double sum = 0.0;
  std::vector<std::uint8_t> local;
  for (const auto& t : term.terms) {
    local.resize(t.support.size());
    for (std::size_t k = 0; k < local.size(); ++k) local[k] = member(t.support[k]) ? 1 : 0;
    sum += evaluate_with(t.oracle.data(), BufferMember{local.data()});
  }
  return sum;
}

template <typename Member>
double evaluate_term(const ExplicitTerm& term, const Member& member) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; (std::size_t{1} << i) < term.table.size(); ++i) {
    if (member(i)) bits |= std::uint64_t{1} << i;
  }
  return term.table[bits];
}

template <typename Member>
double evaluate_with(const OracleData& data, const Member& member) {
  return std::visit([&](const auto& term) { return evaluate_term(term, member); }, data.term);
}

void check_index(std::size_t i, std::size_t n, const char* what) {
  if (i >= n) throw std::invalid_argument(std::string(what) + " index out of range");
}

void check_distinct(const std::vector<std::size_t>& indices, std::size_t n, const char* what) {
  std::vector<std::uint8_t> seen(n, 0);
  for (std::size_t i : indices) {
    check_index(i, n, what);
    if (seen[i]) throw std::invalid_argument(std::string(what) + " index repeated");
    seen[i] = 1;
  }
}

}  // namespace

ConcaveFunction::ConcaveFunction(std::string tag, Fn fn, bool concave)
    : tag_(std::move(tag)), fn_(std::move(fn)), concave_(concave) {
  if (!fn_) throw std::invalid_argument("concave function must be callable");
  if (std::abs(fn_(0.0)) > kNormalizationTol) {
    throw std::invalid_argument("concave function must satisfy phi(0) = 0");
  }
}

ConcaveFunction ConcaveFunction::parabola() {
  return ConcaveFunction("z(1-z)", [](double z) { return z * (1.0 - z); });
}

ConcaveFunction ConcaveFunction::from_tag(const std::string& tag) {
  if (tag == "z(1-z)") return parabola();
  throw std::invalid_argument("unknown concave function tag: " + tag);
}

double ConcaveCardinalityTerm::value_at(std::size_t k) const {
  if (denominator == 0) return 0.0;
  const double d = static_cast<double>(denominator);
  return scale * (phi(static_cast<double>(offset + k) / d) - phi(static_cast<double>(offset) / d));
}

SubmodularOracle::SubmodularOracle(std::size_t n, std::shared_ptr<const OracleData> data)
    : n_(n), data_(std::move(data)) {}

SubmodularOracle SubmodularOracle::modular(ModularVector weights) {
  for (double w : weights.values()) {
    if (!std::isfinite(w)) throw std::invalid_argument("modular weight is not finite");
  }
  const std::size_t n = weights.size();
  return SubmodularOracle(n, std::make_shared<OracleData>(OracleData{ModularTerm{std::move(weights)}}));
}

SubmodularOracle SubmodularOracle::cut(std::size_t n, std::vector<WeightedEdge> edges) {
  for (const auto& e : edges) {
    check_index(e.u, n, "cut edge");
    check_index(e.v, n, "cut edge");
    if (e.u == e.v) throw std::invalid_argument("cut edge is a self loop");
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
      throw std::invalid_argument("cut weights must be finite and nonnegative");
    }
  }
  return SubmodularOracle(n, std::make_shared<OracleData>(OracleData{CutTerm{std::move(edges)}}));
}

SubmodularOracle SubmodularOracle::concave_cardinality(std::size_t n,
                                                       std::vector<std::size_t> region,
                                                       double scale, ConcaveFunction phi) {
  ConcaveCardinalityTerm term;
  term.denominator = region.size();
  term.region = std::move(region);
  term.scale = scale;
  term.phi = std::move(phi);
  return concave_cardinality(n, std::move(term));
}

SubmodularOracle SubmodularOracle::concave_cardinality(std::size_t n, ConcaveCardinalityTerm term) {
  check_distinct(term.region, n, "region");
  if (!(term.scale >= 0.0) || !std::isfinite(term.scale)) {
    throw std::invalid_argument("concave-cardinality scale must be finite and nonnegative");
  }
  if (term.offset + term.region.size() > term.denominator) {
    throw std::invalid_argument("concave-cardinality region exceeds its denominator");
  }
  return SubmodularOracle(n, std::make_shared<OracleData>(OracleData{std::move(term)}));
}

SubmodularOracle SubmodularOracle::sum(std::size_t n, std::vector<SumTerm> terms) {
  for (const auto& t : terms) {
    if (t.oracle.size() != t.support.size()) {
      throw std::invalid_argument("sum term oracle size differs from its support");
    }
    check_distinct(t.support, n, "sum support");
  }
  return SubmodularOracle(n, std::make_shared<OracleData>(OracleData{SumOfTerms{std::move(terms)}}));
}

SubmodularOracle SubmodularOracle::sum(std::vector<SubmodularOracle> terms) {
  if (terms.empty()) throw std::invalid_argument("sum of no oracles has no ground set");
  const std::size_t n = terms.front().size();
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  std::vector<SumTerm> wrapped;
  wrapped.reserve(terms.size());
  for (auto& t : terms) {
    if (t.size() != n) throw std::invalid_argument("sum terms over different ground sets");
    wrapped.push_back(SumTerm{std::move(t), all});
  }
  return sum(n, std::move(wrapped));
}

SubmodularOracle SubmodularOracle::explicit_table(std::size_t n, std::vector<double> table) {
  if (n > kMaxTabulatedElements) throw std::length_error("explicit table ground set too large");
  if (table.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("explicit table must hold 2^n values");
  }
  if (table[0] != 0.0) throw std::invalid_argument("set function must satisfy F(empty) = 0");
  return SubmodularOracle(n, std::make_shared<OracleData>(OracleData{ExplicitTerm{std::move(table)}}));
}

OracleKind SubmodularOracle::kind() const {
  switch (data_->term.index()) {
    case 0: return OracleKind::kModular;
    case 1: return OracleKind::kCut;
    case 2: return OracleKind::kConcaveCardinality;
    case 3: return OracleKind::kSum;
    default: return OracleKind::kExplicit;
  }
}

double SubmodularOracle::evaluate(const SubsetMask& subset) const {
  if (subset.ground_size() != n_) throw std::invalid_argument("subset over a different ground set");
  return evaluate_with(*data_, [&](std::size_t i) { return subset.contains(i); });
}

double SubmodularOracle::evaluate_bits(std::uint64_t bits) const {
  if (n_ > kMaxBitmaskElements) throw std::length_error("ground set too large for a bitmask");
  return evaluate_with(*data_, [bits](std::size_t i) { return ((bits >> i) & 1U) != 0; });
}

double SubmodularOracle::total() const {
  return evaluate_with(*data_, [](std::size_t) { return true; });
}

double marginal_gain(const SubmodularOracle& f, const SubsetMask& subset, std::size_t x) {
  if (x >= f.size()) throw std::invalid_argument("element out of range");
  if (subset.contains(x)) throw std::invalid_argument("element already in the subset");
  SubsetMask larger = subset;
  larger.insert(x);
  return f.evaluate(larger) - f.evaluate(subset);
}

std::vector<double> tabulate(const SubmodularOracle& f, std::size_t max_elements) {
  const std::size_t n = f.size();
  if (n > max_elements || n > kMaxBitmaskElements) {
    throw std::length_error("ground set of " + std::to_string(n) + " elements is too large to enumerate");
  }
  if (const auto* ex = f.get_if<ExplicitTerm>()) return ex->table;
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint64_t bits = 0; bits < table.size(); ++bits) table[bits] = f.evaluate_bits(bits);
  return table;
}

namespace {

SubmodularOracle minor_impl(const SubmodularOracle& f, std::span<const std::size_t> keep,
                            const SubsetMask& contracted);

SubmodularOracle minor_of(const ModularTerm& term, std::span<const std::size_t> keep,
                          const SubsetMask&) {
  ModularVector w(keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k) w[k] = term.weights[keep[k]];
  return SubmodularOracle::modular(std::move(w));
}

SubmodularOracle minor_of(const CutTerm& term, std::span<const std::size_t> keep,
                          const SubsetMask& contracted, std::size_t n) {
  std::vector<long> local(n, -1);
  for (std::size_t k = 0; k < keep.size(); ++k) local[keep[k]] = static_cast<long>(k);
  std::vector<WeightedEdge> edges;
  ModularVector shift(keep.size());
  bool has_shift = false;
  for (const auto& e : term.edges) {
    const long lu = local[e.u];
    const long lv = local[e.v];
    if (lu >= 0 && lv >= 0) {
      edges.push_back({static_cast<std::size_t>(lu), static_cast<std::size_t>(lv), e.weight});
    } else if (lu >= 0 || lv >= 0) {
      const std::size_t inside = static_cast<std::size_t>(lu >= 0 ? lu : lv);
      const std::size_t outside = lu >= 0 ? e.v : e.u;
      shift[inside] += contracted.contains(outside) ? -e.weight : e.weight;
      has_shift = true;
    }
  }
  auto cut = SubmodularOracle::cut(keep.size(), std::move(edges));
  if (!has_shift) return cut;
  return SubmodularOracle::sum({std::move(cut), SubmodularOracle::modular(std::move(shift))});
}

SubmodularOracle minor_of(const ConcaveCardinalityTerm& term, std::span<const std::size_t> keep,
                          const SubsetMask& contracted, std::size_t n) {
  std::vector<long> local(n, -1);
  for (std::size_t k = 0; k < keep.size(); ++k) local[keep[k]] = static_cast<long>(k);
  ConcaveCardinalityTerm out;
  out.scale = term.scale;
  out.phi = term.phi;
  out.denominator = term.denominator;
  out.offset = term.offset;
  for (std::size_t i : term.region) {
    if (local[i] >= 0) {
      out.region.push_back(static_cast<std::size_t>(local[i]));
    } else if (contracted.contains(i)) {
      ++out.offset;
    }
  }
  return SubmodularOracle::concave_cardinality(keep.size(), std::move(out));
}

SubmodularOracle minor_of(const SumOfTerms& term, std::span<const std::size_t> keep,
                          const SubsetMask& contracted, std::size_t n) {
  std::vector<long> local(n, -1);
  for (std::size_t k = 0; k < keep.size(); ++k) local[keep[k]] = static_cast<long>(k);
  std::vector<SumTerm> terms;
  for (const auto& t : term.terms) {
    std::vector<std::size_t> term_keep;
    std::vector<std::size_t> support;
    SubsetMask term_contracted(t.support.size());
    for (std::size_t k = 0; k < t.support.size(); ++k) {
      const std::size_t g = t.support[k];
      if (local[g] >= 0) {
        term_keep.push_back(k);
        support.push_back(static_cast<std::size_t>(local[g]));
      } else if (contracted.contains(g)) {
        term_contracted.insert(k);
      }
    }
    if (term_keep.empty()) continue;
    terms.push_back(SumTerm{minor_impl(t.oracle, term_keep, term_contracted), std::move(support)});
  }
  return SubmodularOracle::sum(keep.size(), std::move(terms));
}

SubmodularOracle minor_of(const ExplicitTerm& term, std::span<const std::size_t> keep,
                          const SubsetMask& contracted) {
  const std::uint64_t base = contracted.to_bits();
  const double offset = term.table[base];
  std::vector<double> table(std::size_t{1} << keep.size());
  for (std::uint64_t bits = 0; bits < table.size(); ++bits) {
    std::uint64_t global = base;
    for (std::size_t k = 0; k < keep.size(); ++k) {
      if ((bits >> k) & 1U) global |= std::uint64_t{1} << keep[k];
    }
    table[bits] = term.table[global] - offset;
  }
  table[0] = 0.0;
  return SubmodularOracle::explicit_table(keep.size(), std::move(table));
}

SubmodularOracle minor_impl(const SubmodularOracle& f, std::span<const std::size_t> keep,
                            const SubsetMask& contracted) {
  const std::size_t n = f.size();
  return std::visit(
      [&](const auto& term) -> SubmodularOracle {
        using T = std::decay_t<decltype(term)>;
        if constexpr (std::is_same_v<T, ModularTerm> || std::is_same_v<T, ExplicitTerm>) {
          return minor_of(term, keep, contracted);
        } else {
          return minor_of(term, keep, contracted, n);
        }
      },
      f.data().term);
}

}  // namespace

SubmodularOracle minor(const SubmodularOracle& f, std::span<const std::size_t> keep,
                       const SubsetMask& contracted) {
  if (contracted.ground_size() != f.size()) {
    throw std::invalid_argument("contracted set over a different ground set");
  }
  std::vector<std::size_t> keep_vec(keep.begin(), keep.end());
  check_distinct(keep_vec, f.size(), "minor");
  for (std::size_t i : keep) {
    if (contracted.contains(i)) throw std::invalid_argument("kept element is also contracted");
  }
  return minor_impl(f, keep, contracted);
}

SubmodularOracle restrict_to(const SubmodularOracle& f, std::span<const std::size_t> keep) {
  return minor(f, keep, SubsetMask(f.size()));
}

SubmodularityCheck check_submodular(const SubmodularOracle& f, double tol) {
  const std::size_t n = f.size();
  if (n > kMaxSubmodularityCheckElements) {
    throw std::length_error("check_submodular supports at most 12 elements");
  }
  const auto table = tabulate(f, kMaxSubmodularityCheckElements);
  double scale = 1.0;
  for (double v : table) scale = std::max(scale, std::abs(v));
  tol *= scale;
  for (std::uint64_t a = 0; a < table.size(); ++a) {
    for (std::size_t x = 0; x < n; ++x) {
      const std::uint64_t xb = std::uint64_t{1} << x;
      if (a & xb) continue;
      const double gain_small = table[a | xb] - table[a];
      for (std::size_t y = 0; y < n; ++y) {
        const std::uint64_t yb = std::uint64_t{1} << y;
        if (y == x || (a & yb)) continue;
        const double gain_large = table[a | yb | xb] - table[a | yb];
        if (gain_small < gain_large - tol) {
          SubmodularityViolation v{SubsetMask::from_bits(n, a), SubsetMask::from_bits(n, a | yb), x,
                                   gain_small, gain_large};
          return {false, std::move(v)};
        }
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace subvar
