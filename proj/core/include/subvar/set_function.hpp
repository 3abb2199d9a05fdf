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

#ifndef SUBVAR_SET_FUNCTION_HPP_
#define SUBVAR_SET_FUNCTION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "subvar/modular.hpp"
#include "subvar/subset.hpp"

namespace subvar {

/// Largest ground set accepted by exhaustive tabulation.
inline constexpr std::size_t kMaxTabulatedElements = 20;

/// A concave phi: [0,1] -> R with phi(0) = 0, tagged by name so that models
/// can be written to and read from files.
class ConcaveFunction {
 public:
  using Fn = std::function<double(double)>;

  /// `concave` is the caller's assertion; check_submodular is the runtime
  /// guard on small instances.
  ConcaveFunction(std::string tag, Fn fn, bool concave = true);

  /// phi(z) = z (1 - z), tag "z(1-z)".
  static ConcaveFunction parabola();
  /// Resolves a tag written in a model file. Throws std::invalid_argument.
  static ConcaveFunction from_tag(const std::string& tag);

  double operator()(double z) const { return fn_(z); }
  const std::string& tag() const { return tag_; }
  bool asserted_concave() const { return concave_; }

 private:
  std::string tag_;
  Fn fn_;
  bool concave_;
};

struct WeightedEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  double weight = 0.0;
};

class SubmodularOracle;
struct OracleData;

/// One summand of a Sum oracle: `oracle` lives on |support| local elements,
/// local index k standing for global element support[k].
struct SumTerm;

struct ModularTerm {
  ModularVector weights;
};

struct CutTerm {
  std::vector<WeightedEdge> edges;
};

/// F(A) = scale * (phi((offset + |A ∩ region|) / denominator) - phi(offset / denominator)).
/// A freshly built term has offset 0 and denominator |region|; contraction
/// (see minor()) moves region elements into the offset.
struct ConcaveCardinalityTerm {
  std::vector<std::size_t> region;
  double scale = 0.0;
  ConcaveFunction phi = ConcaveFunction::parabola();
  std::size_t denominator = 0;
  std::size_t offset = 0;

  double value_at(std::size_t k) const;
};

struct SumOfTerms {
  std::vector<SumTerm> terms;
};

/// Dense table F(A) indexed by bitmask. Small ground sets only.
struct ExplicitTerm {
  std::vector<double> table;
};

enum class OracleKind { kModular, kCut, kConcaveCardinality, kSum, kExplicit };

/// An immutable, normalized set function F: 2^V -> R. Copies share state, so
/// oracles are cheap to pass around and safe to read concurrently.
class SubmodularOracle {
 public:
  static SubmodularOracle modular(ModularVector weights);
  static SubmodularOracle cut(std::size_t n, std::vector<WeightedEdge> edges);
  static SubmodularOracle concave_cardinality(std::size_t n, std::vector<std::size_t> region,
                                              double scale, ConcaveFunction phi);
  static SubmodularOracle sum(std::size_t n, std::vector<SumTerm> terms);
  /// Sum of oracles that all live on the full ground set.
  static SubmodularOracle sum(std::vector<SubmodularOracle> terms);
  /// Table of 2^n values with table[0] == 0. Need not be submodular.
  static SubmodularOracle explicit_table(std::size_t n, std::vector<double> table);
  /// Internal: contracted concave-cardinality term.
  static SubmodularOracle concave_cardinality(std::size_t n, ConcaveCardinalityTerm term);

  std::size_t size() const { return n_; }
  OracleKind kind() const;

  template <typename T>
  const T* get_if() const;

  /// F(A). Throws std::invalid_argument on ground-set mismatch.
  double evaluate(const SubsetMask& subset) const;
  /// F(A) for A given as a bitmask (bit i = element i). Requires n <= 63.
  double evaluate_bits(std::uint64_t bits) const;
  /// F(V).
  double total() const;

  const OracleData& data() const { return *data_; }

 private:
  SubmodularOracle(std::size_t n, std::shared_ptr<const OracleData> data);

  std::size_t n_ = 0;
  std::shared_ptr<const OracleData> data_;
};

struct SumTerm {
  SubmodularOracle oracle;
  std::vector<std::size_t> support;
};

struct OracleData {
  std::variant<ModularTerm, CutTerm, ConcaveCardinalityTerm, SumOfTerms, ExplicitTerm> term;
};

template <typename T>
const T* SubmodularOracle::get_if() const {
  return std::get_if<T>(&data_->term);
}

/// F(A ∪ {x}) - F(A). Throws std::invalid_argument if x ∈ A.
double marginal_gain(const SubmodularOracle& f, const SubsetMask& subset, std::size_t x);

/// All 2^n values of F, indexed by bitmask. Throws std::length_error when
/// n > max_elements.
std::vector<double> tabulate(const SubmodularOracle& f,
                             std::size_t max_elements = kMaxTabulatedElements);

/// G(B) = F(B' ∪ C) - F(C) where B' maps local index k of B to keep[k] and C
/// is `contracted`. `keep` must be disjoint from `contracted`.
SubmodularOracle minor(const SubmodularOracle& f, std::span<const std::size_t> keep,
                       const SubsetMask& contracted);

/// Restriction to `keep` (no contraction).
SubmodularOracle restrict_to(const SubmodularOracle& f, std::span<const std::size_t> keep);

struct SubmodularityViolation {
  SubsetMask smaller;  // A
  SubsetMask larger;   // B = A ∪ {other}
  std::size_t element = 0;
  double gain_smaller = 0.0;  // F(A ∪ {x}) - F(A)
  double gain_larger = 0.0;   // F(B ∪ {x}) - F(B)
};

struct SubmodularityCheck {
  bool submodular = true;
  std::optional<SubmodularityViolation> violation;
};

inline constexpr std::size_t kMaxSubmodularityCheckElements = 12;

/// Exhaustive diminishing-returns check using the equivalent local form
/// F(A+x) - F(A) >= F(A+y+x) - F(A+y). Returns the first violation in
/// (A as bitmask, x, y) order. Throws std::length_error for n > 12.
SubmodularityCheck check_submodular(const SubmodularOracle& f, double tol = 1e-12);

}  // namespace subvar

#endif  // SUBVAR_SET_FUNCTION_HPP_
