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

#ifndef SUBVAR_BENCHMARKS_GRID_MODEL_HPP_
#define SUBVAR_BENCHMARKS_GRID_MODEL_HPP_

#include <algorithm>
#include <cstddef>
#include <random>

#include "subvar/model_io.hpp"

namespace subvar::bench {

// side x side grid: N(0, 1) unaries, unit-range cut edges, hops over
// block x block tiles.
inline ModelSpec grid_model(std::size_t side, std::size_t block, unsigned seed = 7) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> unary(0.0, 1.0);
  std::uniform_real_distribution<double> weight(0.1, 1.5);
  ModelSpec spec;
  spec.n = side * side;
  for (std::size_t v = 0; v < spec.n; ++v) spec.modular.push_back(unary(rng));
  for (std::size_t y = 0; y < side; ++y) {
    for (std::size_t x = 0; x < side; ++x) {
      const std::size_t v = y * side + x;
      if (x + 1 < side) spec.edges.push_back({v, v + 1, weight(rng)});
      if (y + 1 < side) spec.edges.push_back({v, v + side, weight(rng)});
    }
  }
  for (std::size_t y0 = 0; y0 < side; y0 += block) {
    for (std::size_t x0 = 0; x0 < side; x0 += block) {
      ModelSpec::Hop hop;
      hop.scale = weight(rng);
      for (std::size_t y = y0; y < std::min(side, y0 + block); ++y) {
        for (std::size_t x = x0; x < std::min(side, x0 + block); ++x) hop.elements.push_back(y * side + x);
      }
      spec.hops.push_back(std::move(hop));
    }
  }
  return spec;
}

}  // namespace subvar::bench

#endif  // SUBVAR_BENCHMARKS_GRID_MODEL_HPP_
