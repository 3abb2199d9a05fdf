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

#include "random_models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace subvar::testing {

ModularVector random_vector(Rng& rng, std::size_t n, double scale) {
  std::normal_distribution<double> normal(0.0, scale);
  ModularVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = normal(rng);
  return v;
}

std::vector<double> random_weights(Rng& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> uniform(lo, hi);
  std::vector<double> w(n);
  for (auto& x : w) x = uniform(rng);
  return w;
}

ModelSpec random_model(Rng& rng, std::size_t n, const RandomModelOptions& options) {
  ModelSpec model;
  model.n = n;
  if (options.include_modular) model.modular = random_vector(rng, n, options.modular_scale).vector();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (options.include_edges) {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (unit(rng) < options.edge_probability) {
          model.edges.push_back({u, v, options.max_edge_weight * unit(rng)});
        }
      }
    }
  }
  if (options.include_hops && options.max_hops > 0 && n >= 2) {
    std::uniform_int_distribution<std::size_t> hop_count(1, options.max_hops);
    std::uniform_int_distribution<std::size_t> hop_size(2, n);
    const std::size_t hops = hop_count(rng);
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    for (std::size_t h = 0; h < hops; ++h) {
      std::shuffle(all.begin(), all.end(), rng);
      ModelSpec::Hop hop;
      hop.elements.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(hop_size(rng)));
      std::sort(hop.elements.begin(), hop.elements.end());
      hop.scale = options.max_hop_scale * unit(rng);
      model.hops.push_back(std::move(hop));
    }
  }
  return model;
}

ModelSpec random_modular_model(Rng& rng, std::size_t n, double scale) {
  ModelSpec model;
  model.n = n;
  model.modular = random_vector(rng, n, scale).vector();
  return model;
}

ModelSpec random_grid_model(Rng& rng, std::size_t width, std::size_t height, std::size_t block) {
  ModelSpec model;
  model.n = width * height;
  model.modular = random_vector(rng, model.n, 1.0).vector();
  std::uniform_real_distribution<double> edge_weight(0.1, 1.5);
  std::uniform_real_distribution<double> hop_scale(0.5, 2.0);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const std::size_t p = y * width + x;
      if (x + 1 < width) model.edges.push_back({p, p + 1, edge_weight(rng)});
      if (y + 1 < height) model.edges.push_back({p, p + width, edge_weight(rng)});
    }
  }
  for (std::size_t by = 0; by < height; by += block) {
    for (std::size_t bx = 0; bx < width; bx += block) {
      ModelSpec::Hop hop;
      for (std::size_t y = by; y < std::min(height, by + block); ++y) {
        for (std::size_t x = bx; x < std::min(width, bx + block); ++x) {
          hop.elements.push_back(y * width + x);
        }
      }
      hop.scale = hop_scale(rng);
      if (hop.elements.size() >= 2) model.hops.push_back(std::move(hop));
    }
  }
  return model;
}

SyntheticImage two_region_image(Rng& rng, std::size_t width, std::size_t height, double sigma,
                                double contrast) {
  SyntheticImage out{ImageGrid(width, height), GrayImage(width, height)};
  std::normal_distribution<double> noise(0.0, sigma);
  const Rgb foreground{0.5 + contrast, 0.5, 0.5 - contrast};
  const Rgb background{0.5 - contrast, 0.5, 0.5 + contrast};
  const double cx = 0.45 * static_cast<double>(width);
  const double cy = 0.55 * static_cast<double>(height);
  const double radius = 0.3 * static_cast<double>(std::min(width, height));
  auto clamp01 = [](double v) { return std::clamp(v, 0.0, 1.0); };
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const double dx = static_cast<double>(x) + 0.5 - cx;
      const double dy = static_cast<double>(y) + 0.5 - cy;
      const bool inside = dx * dx + dy * dy <= radius * radius;
      const Rgb& base = inside ? foreground : background;
      out.image.at(x, y) =
          Rgb{clamp01(base.r + noise(rng)), clamp01(base.g + noise(rng)), clamp01(base.b + noise(rng))};
      out.truth.values[out.image.index(x, y)] = inside ? 255 : 0;
    }
  }
  return out;
}

}  // namespace subvar::testing
