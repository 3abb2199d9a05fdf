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

// Random model generators shared by the unit and acceptance tests.

#ifndef SUBVAR_TESTS_RANDOM_MODELS_HPP_
#define SUBVAR_TESTS_RANDOM_MODELS_HPP_

#include <cstddef>
#include <random>

#include "subvar/factor_graph.hpp"
#include "subvar/image.hpp"
#include "subvar/model_io.hpp"
#include "subvar/modular.hpp"
#include "subvar/set_function.hpp"

namespace subvar::testing {

using Rng = std::mt19937_64;

struct RandomModelOptions {
  double modular_scale = 2.0;
  double edge_probability = 0.4;
  double max_edge_weight = 2.0;
  std::size_t max_hops = 2;
  double max_hop_scale = 3.0;
  bool include_modular = true;
  bool include_edges = true;
  bool include_hops = true;
};

/// Unaries ~ N(0, modular_scale), Erdos-Renyi edges with U(0, max) weights and
/// up to max_hops random z(1-z) terms over random subsets.
ModelSpec random_model(Rng& rng, std::size_t n, const RandomModelOptions& options = {});

/// Purely modular model with N(0, scale) weights.
ModelSpec random_modular_model(Rng& rng, std::size_t n, double scale = 3.0);

/// width x height grid: N(0, 1) unaries, 4-neighbour cut edges with U(0.1, 1.5)
/// weights, and hops over block x block tiles with U(0.5, 2) scales.
ModelSpec random_grid_model(Rng& rng, std::size_t width, std::size_t height, std::size_t block);

ModularVector random_vector(Rng& rng, std::size_t n, double scale);
std::vector<double> random_weights(Rng& rng, std::size_t n, double lo, double hi);

/// Disk of colour (0.5 + c, 0.5, 0.5 - c) on (0.5 - c, 0.5, 0.5 + c), with
/// N(0, sigma) noise per channel, clamped to [0, 1]. Truth is 255 inside.
struct SyntheticImage {
  ImageGrid image;
  GrayImage truth;
};
SyntheticImage two_region_image(Rng& rng, std::size_t width, std::size_t height, double sigma,
                                double contrast = 0.05);

}  // namespace subvar::testing

#endif  // SUBVAR_TESTS_RANDOM_MODELS_HPP_
