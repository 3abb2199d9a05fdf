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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "random_models.hpp"
#include "subvar/base_polytope.hpp"
#include "subvar/model_io.hpp"
#include "subvar/modular.hpp"
#include "subvar/numeric.hpp"
#include "subvar/set_function.hpp"
#include "subvar/subset.hpp"

namespace subvar {
namespace {

using testing::Rng;

SubmodularOracle single_edge() { return SubmodularOracle::cut(2, {{0, 1, 1.0}}); }

SubmodularOracle counterexample() {
  return SubmodularOracle::explicit_table(2, {0.0, -20.0, -8.0, -16.0});
}

// Small random families used across the property tests.
std::vector<SubmodularOracle> random_family(Rng& rng, std::size_t count, std::size_t lo,
                                            std::size_t hi) {
  std::uniform_int_distribution<std::size_t> size(lo, hi);
  std::vector<SubmodularOracle> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(model_oracle(testing::random_model(rng, size(rng))));
  return out;
}

std::vector<std::size_t> shuffled(Rng& rng, std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

TEST(SubsetMask, BitsRoundTripAndAlgebra) {
  const SubsetMask a(5, {0, 3});
  EXPECT_EQ(a.to_bits(), 0b01001u);
  EXPECT_EQ(SubsetMask::from_bits(5, 0b01001u), a);
  EXPECT_EQ(a.count(), 2u);
  EXPECT_EQ(a.complement(), SubsetMask(5, {1, 2, 4}));
  EXPECT_EQ(a | SubsetMask(5, {1}), SubsetMask(5, {0, 1, 3}));
  EXPECT_EQ(a & SubsetMask(5, {3, 4}), SubsetMask(5, {3}));
  EXPECT_TRUE(a.is_subset_of(SubsetMask::full(5)));
  EXPECT_EQ(a.to_string(), "{0,3}");
  EXPECT_THROW((void)(a | SubsetMask(4)), std::invalid_argument);
}

TEST(Ordering, SortsWithIndexTieBreak) {
  const std::vector<double> values{1.0, 3.0, 1.0, 2.0};
  const auto down = Ordering::descending(values);
  EXPECT_EQ(std::vector<std::size_t>(down.elements().begin(), down.elements().end()),
            (std::vector<std::size_t>{1, 3, 0, 2}));
  const auto up = Ordering::ascending(values);
  EXPECT_EQ(std::vector<std::size_t>(up.elements().begin(), up.elements().end()),
            (std::vector<std::size_t>{0, 2, 3, 1}));
  EXPECT_THROW(Ordering({0, 0, 1}), std::invalid_argument);
}

TEST(ModularVector, ArithmeticAndEvaluation) {
  const ModularVector s{1.0, -2.0, 4.0};
  EXPECT_DOUBLE_EQ(s.evaluate(SubsetMask(3, {0, 2})), 5.0);
  EXPECT_DOUBLE_EQ(s.total(), 3.0);
  EXPECT_DOUBLE_EQ(s.squared_norm(), 21.0);
  EXPECT_DOUBLE_EQ(s.max_abs(), 4.0);
  EXPECT_DOUBLE_EQ(linf_distance(s, 2.0 * s), 4.0);
  EXPECT_EQ(s + s - s, s);
}

TEST(Numeric, StableLogisticHelpers) {
  EXPECT_DOUBLE_EQ(sigmoid(0.0), 0.5);
  EXPECT_NEAR(sigmoid(-800.0), 0.0, 1e-300);
  EXPECT_DOUBLE_EQ(sigmoid(800.0), 1.0);
  EXPECT_DOUBLE_EQ(softplus(800.0), 800.0);
  EXPECT_NEAR(softplus(0.0), std::log(2.0), 1e-15);
  EXPECT_DOUBLE_EQ(binary_entropy(0.0), 0.0);
  const std::vector<double> big{1000.0, 1000.0};
  EXPECT_NEAR(log_sum_exp(big), 1000.0 + std::log(2.0), 1e-12);
}

TEST(Oracle, EvaluateExamples) {
  EXPECT_DOUBLE_EQ(single_edge().evaluate(SubsetMask(2, {0})), 1.0);
  const auto hop = SubmodularOracle::concave_cardinality(3, {0, 1, 2}, 1.0, ConcaveFunction::parabola());
  EXPECT_NEAR(hop.evaluate(SubsetMask(3, {0})), 2.0 / 9.0, 1e-15);
  const auto both = SubmodularOracle::sum(
      {SubmodularOracle::cut(3, {{0, 1, 1.0}}), hop});
  EXPECT_NEAR(both.evaluate(SubsetMask(3, {0})), 1.0 + 2.0 / 9.0, 1e-15);
  EXPECT_DOUBLE_EQ(both.evaluate(SubsetMask(3)), 0.0);
  EXPECT_THROW((void)both.evaluate(SubsetMask(2)), std::invalid_argument);
}

TEST(Oracle, MarginalGainExamples) {
  const auto s = SubmodularOracle::modular({0.5, -1.5, 2.0});
  EXPECT_DOUBLE_EQ(marginal_gain(s, SubsetMask(3, {2}), 1), -1.5);
  EXPECT_DOUBLE_EQ(marginal_gain(single_edge(), SubsetMask(2), 0), 1.0);
  EXPECT_DOUBLE_EQ(marginal_gain(single_edge(), SubsetMask(2, {1}), 0), -1.0);
  EXPECT_THROW((void)marginal_gain(single_edge(), SubsetMask(2, {0}), 0), std::invalid_argument);
}

TEST(Oracle, SubmodularityCheck) {
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    auto spec = testing::random_model(rng, 6);
    spec.hops.clear();
    spec.modular.clear();
    EXPECT_TRUE(check_submodular(model_oracle(spec)).submodular);
  }
  EXPECT_TRUE(check_submodular(SubmodularOracle::modular({1.0, -3.0, 2.0})).submodular);

  const auto result = check_submodular(counterexample());
  ASSERT_FALSE(result.submodular);
  ASSERT_TRUE(result.violation.has_value());
  EXPECT_EQ(result.violation->element, 0u);
  EXPECT_EQ(result.violation->smaller, SubsetMask(2));
  EXPECT_EQ(result.violation->larger, SubsetMask(2, {1}));
  EXPECT_DOUBLE_EQ(result.violation->gain_smaller, -20.0);
  EXPECT_DOUBLE_EQ(result.violation->gain_larger, -8.0);
}

TEST(Oracle, RandomModelsAreSubmodular) {
  Rng rng(12);
  for (const auto& f : random_family(rng, 40, 2, 9)) EXPECT_TRUE(check_submodular(f).submodular);
}

TEST(Oracle, SumIsAdditiveOverSupports) {
  Rng rng(13);
  std::uniform_real_distribution<double> weight(0.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 7;
    std::vector<SumTerm> terms;
    std::vector<SubmodularOracle> locals;
    std::vector<std::vector<std::size_t>> supports;
    for (int r = 0; r < 3; ++r) {
      auto support = shuffled(rng, n);
      support.resize(3 + r);
      std::vector<WeightedEdge> edges;
      for (std::size_t k = 0; k + 1 < support.size(); ++k) edges.push_back({k, k + 1, weight(rng)});
      auto local = r == 1 ? SubmodularOracle::concave_cardinality(
                                support.size(), shuffled(rng, support.size()), 2.0,
                                ConcaveFunction::parabola())
                          : SubmodularOracle::cut(support.size(), edges);
      terms.push_back({local, support});
      locals.push_back(local);
      supports.push_back(support);
    }
    const auto f = SubmodularOracle::sum(n, terms);
    for (std::uint64_t bits = 0; bits < (1u << n); ++bits) {
      double expected = 0.0;
      for (std::size_t r = 0; r < locals.size(); ++r) {
        SubsetMask local(supports[r].size());
        for (std::size_t k = 0; k < supports[r].size(); ++k) {
          if ((bits >> supports[r][k]) & 1U) local.insert(k);
        }
        expected += locals[r].evaluate(local);
      }
      EXPECT_EQ(f.evaluate_bits(bits), expected);
    }
  }
}

TEST(Oracle, MinorMatchesDefinition) {
  Rng rng(14);
  for (const auto& f : random_family(rng, 15, 5, 8)) {
    const std::size_t n = f.size();
    const auto order = shuffled(rng, n);
    const std::vector<std::size_t> keep(order.begin(), order.begin() + 3);
    SubsetMask contracted(n);
    contracted.insert(order[3]);
    if (n > 5) contracted.insert(order[5]);
    const auto g = minor(f, keep, contracted);
    const auto r = restrict_to(f, keep);
    for (std::uint64_t bits = 0; bits < 8; ++bits) {
      SubsetMask lifted = contracted;
      SubsetMask plain(n);
      for (std::size_t k = 0; k < 3; ++k) {
        if ((bits >> k) & 1U) {
          lifted.insert(keep[k]);
          plain.insert(keep[k]);
        }
      }
      EXPECT_NEAR(g.evaluate_bits(bits), f.evaluate(lifted) - f.evaluate(contracted), 1e-12);
      EXPECT_NEAR(r.evaluate_bits(bits), f.evaluate(plain), 1e-12);
    }
  }
}

TEST(Oracle, TabulateAgreesWithEvaluate) {
  Rng rng(15);
  for (const auto& f : random_family(rng, 10, 1, 10)) {
    const auto table = tabulate(f);
    const auto oracle = testing::evaluate_all(f);
    ASSERT_EQ(table.size(), oracle.size());
    for (std::size_t i = 0; i < table.size(); ++i) EXPECT_NEAR(table[i], oracle[i], 1e-12);
  }
  EXPECT_THROW((void)tabulate(SubmodularOracle::modular(ModularVector(21))), std::length_error);
}

TEST(Oracle, ExplicitTableValidation) {
  EXPECT_THROW((void)SubmodularOracle::explicit_table(2, {1.0, 0.0, 0.0, 0.0}), std::invalid_argument);
  EXPECT_THROW((void)SubmodularOracle::explicit_table(2, {0.0, 0.0}), std::invalid_argument);
}

TEST(Greedy, VertexExamples) {
  EXPECT_EQ(greedy_vertex(single_edge(), Ordering::identity(2)), (ModularVector{1.0, -1.0}));
  const ModularVector s{3.0, -1.0, 0.5};
  EXPECT_EQ(greedy_vertex(SubmodularOracle::modular(s), Ordering({2, 0, 1})), s);
  const auto hop = SubmodularOracle::concave_cardinality(2, {0, 1}, 1.0, ConcaveFunction::parabola());
  const auto v = greedy_vertex(hop, Ordering::identity(2));
  EXPECT_NEAR(v[0], 0.25, 1e-15);
  EXPECT_NEAR(v[1], -0.25, 1e-15);
}

TEST(Greedy, FastPathsMatchPrefixEvaluation) {
  Rng rng(16);
  for (const auto& f : random_family(rng, 40, 1, 10)) {
    const auto order = shuffled(rng, f.size());
    const auto fast = greedy_vertex(f, Ordering(order));
    const auto oracle = testing::greedy_by_prefix(f, order);
    EXPECT_LE(linf_distance(fast, oracle), 1e-12);
    EXPECT_LE(linf_distance(fast, greedy_vertex_by_evaluation(f, Ordering(order))), 1e-12);
  }
}

TEST(Greedy, VerticesAreFeasible) {
  Rng rng(17);
  for (const auto& f : random_family(rng, 30, 1, 8)) {
    for (const auto& vertex : testing::all_greedy_vertices(f)) {
      ASSERT_TRUE(in_base_polytope(f, vertex, 1e-9));
    }
  }
}

TEST(LinearMinimize, Examples) {
  // The minimizer of <(1, 0), s> over {(1, -1), (-1, 1)} is (-1, 1).
  const auto s = linear_minimize_over_base(single_edge(), {1.0, 0.0});
  EXPECT_EQ(s, (ModularVector{-1.0, 1.0}));
  EXPECT_DOUBLE_EQ(s.dot({1.0, 0.0}), -1.0);
  EXPECT_EQ(linear_minimize_over_base(single_edge(), {0.0, 0.0}), (ModularVector{1.0, -1.0}));
  const ModularVector m{2.0, -5.0};
  EXPECT_EQ(linear_minimize_over_base(SubmodularOracle::modular(m), {4.0, -1.0}), m);
}

TEST(LinearMinimize, MatchesEnumerationOverAllVertices) {
  Rng rng(18);
  for (const auto& f : random_family(rng, 60, 1, 7)) {
    const auto c = testing::random_vector(rng, f.size(), 1.0);
    const double value = linear_minimize_over_base(f, c).dot(c);
    EXPECT_NEAR(value, testing::brute_linear_min_value(f, c), 1e-9);
  }
}

TEST(Lovasz, Examples) {
  EXPECT_NEAR(lovasz_extension(single_edge(), {0.5, 0.5}), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(lovasz_extension(single_edge(), {0.0, 0.0}), 0.0);
  EXPECT_DOUBLE_EQ(lovasz_extension(single_edge(), {1.0, 0.0}), 1.0);
}

TEST(Lovasz, ExtendsSetFunctionExactly) {
  Rng rng(19);
  for (const auto& f : random_family(rng, 20, 1, 12)) {
    const std::size_t n = f.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); bits += 1 + bits % 7) {
      const auto a = SubsetMask::from_bits(n, bits);
      ModularVector w(n);
      for (std::size_t i : a.indices()) w[i] = 1.0;
      EXPECT_EQ(lovasz_extension(f, w), f.evaluate(a));
    }
  }
}

TEST(Lovasz, HomogeneousAndSupportFunction) {
  Rng rng(20);
  std::uniform_real_distribution<double> scale(0.0, 5.0);
  for (const auto& f : random_family(rng, 40, 1, 7)) {
    const auto w = testing::random_vector(rng, f.size(), 1.0);
    const double a = scale(rng);
    const double base = lovasz_extension(f, w);
    EXPECT_NEAR(lovasz_extension(f, a * w), a * base, 1e-12 * std::max(1.0, std::abs(a * base)));
    EXPECT_NEAR(base, testing::brute_lovasz(f, w), 1e-9);
  }
}

TEST(BasePolytope, MembershipExamples) {
  EXPECT_TRUE(in_base_polytope(single_edge(), {0.0, 0.0}));
  EXPECT_FALSE(in_base_polytope(single_edge(), {2.0, -2.0}));
  EXPECT_FALSE(in_base_polytope(single_edge(), {0.0, -0.5}));
  EXPECT_TRUE(in_submodular_polyhedron(single_edge(), {0.0, -0.5}));
  EXPECT_DOUBLE_EQ(max_violation(single_edge(), {2.0, -2.0}), 1.0);
  EXPECT_THROW((void)in_base_polytope(SubmodularOracle::modular(ModularVector(16)), ModularVector(16)),
               std::length_error);
}

TEST(BasePolytope, MaxViolationMatchesEnumeration) {
  Rng rng(21);
  for (const auto& f : random_family(rng, 40, 1, 10)) {
    const auto s = testing::random_vector(rng, f.size(), 2.0);
    EXPECT_NEAR(max_violation(f, s), testing::brute_max_violation(f, s), 1e-12);
  }
}

TEST(ModelIo, ParseSerializeRoundTrip) {
  Rng rng(22);
  for (int i = 0; i < 10; ++i) {
    const auto spec = testing::random_model(rng, 6);
    const auto again = parse_model(serialize_model(spec));
    const auto f = model_oracle(spec);
    const auto g = model_oracle(again);
    for (std::uint64_t bits = 0; bits < 64; ++bits) EXPECT_EQ(f.evaluate_bits(bits), g.evaluate_bits(bits));
  }
}

TEST(ModelIo, RejectsMalformedModels) {
  EXPECT_THROW((void)parse_model("not json"), ModelFormatError);
  EXPECT_THROW((void)parse_model(R"({"n": 2, "extra": 1})"), ModelFormatError);
  EXPECT_THROW((void)parse_model(R"({"n": 2, "modular": [1]})"), ModelFormatError);
  EXPECT_THROW((void)parse_model(R"({"n": 2, "edges": [[0, 0, 1]]})"), ModelFormatError);
  EXPECT_THROW((void)parse_model(R"({"n": 2, "edges": [[0, 1, -1]]})"), ModelFormatError);
  EXPECT_THROW((void)parse_model(R"({"n": 2, "edges": [[0, 2, 1]]})"), ModelFormatError);
  EXPECT_THROW((void)parse_model(R"({"n": 2, "hops": [{"elements": [0, 1], "scale": -1}]})"),
               ModelFormatError);
  EXPECT_THROW((void)parse_model(R"({"n": 2, "hops": [{"elements": [0, 1], "phi": "cosh"}]})"),
               std::exception);
  const auto ok = parse_model(R"({"n": 3, "hops": [{"elements": [0, 2]}]})");
  ASSERT_EQ(ok.hops.size(), 1u);
  EXPECT_DOUBLE_EQ(ok.hops[0].scale, 1.0);
}

TEST(ModelIo, FactorGraphMatchesOracle) {
  Rng rng(23);
  for (int i = 0; i < 10; ++i) {
    const auto spec = testing::random_model(rng, 7);
    const auto f = model_oracle(spec);
    const auto g = model_factor_graph(spec).as_oracle();
    for (std::uint64_t bits = 0; bits < 128; ++bits) {
      EXPECT_NEAR(f.evaluate_bits(bits), g.evaluate_bits(bits), 1e-12);
    }
  }
}

}  // namespace
}  // namespace subvar
