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

#include "subvar/segmentation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace subvar {

SegmentationMode parse_segmentation_mode(const std::string& name) {
  if (name == "pairwise") return SegmentationMode::kPairwise;
  if (name == "hop") return SegmentationMode::kHop;
  if (name == "both") return SegmentationMode::kBoth;
  throw std::invalid_argument("unknown segmentation mode '" + name + "'");
}

std::string to_string(SegmentationMode mode) {
  switch (mode) {
    case SegmentationMode::kPairwise: return "pairwise";
    case SegmentationMode::kHop: return "hop";
    case SegmentationMode::kBoth: return "both";
  }
  return "unknown";
}

namespace {

double squared_distance(const Rgb& a, const Rgb& b) {
  const double dr = a.r - b.r;
  const double dg = a.g - b.g;
  const double db = a.b - b.b;
  return dr * dr + dg * dg + db * db;
}

std::array<double, 3> channels(const Rgb& c) { return {c.r, c.g, c.b}; }

struct DiagonalGaussian {
  std::array<double, 3> mean{};
  std::array<double, 3> variance{};

  static DiagonalGaussian fit(const ImageGrid& image, const std::vector<std::size_t>& pixels) {
    if (pixels.empty()) throw std::invalid_argument("seed set is empty");
    DiagonalGaussian g;
    const auto count = static_cast<double>(pixels.size());
    for (std::size_t p : pixels) {
      if (p >= image.pixel_count()) throw std::invalid_argument("seed pixel out of range");
      const auto x = channels(image[p]);
      for (int c = 0; c < 3; ++c) g.mean[c] += x[c] / count;
    }
    for (std::size_t p : pixels) {
      const auto x = channels(image[p]);
      for (int c = 0; c < 3; ++c) g.variance[c] += (x[c] - g.mean[c]) * (x[c] - g.mean[c]) / count;
    }
    for (double& v : g.variance) v = std::max(v, kUnaryVarianceFloor);
    return g;
  }

  double log_likelihood(const Rgb& color) const {
    const auto x = channels(color);
    double sum = 0.0;
    for (int c = 0; c < 3; ++c) {
      const double d = x[c] - mean[c];
      sum -= 0.5 * std::log(2.0 * std::numbers::pi * variance[c]) + d * d / (2.0 * variance[c]);
    }
    return sum;
  }
};

}  // namespace

std::vector<WeightedEdge> build_pairwise_weights(const ImageGrid& image, double theta) {
  if (theta < 0.0) throw std::invalid_argument("theta must be nonnegative");
  std::vector<WeightedEdge> edges;
  const std::size_t w = image.width();
  const std::size_t h = image.height();
  edges.reserve((w - 1) * h + w * (h - 1));
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x + 1 < w; ++x) {
      const std::size_t a = image.index(x, y);
      const std::size_t b = image.index(x + 1, y);
      edges.push_back({a, b, std::exp(-theta * squared_distance(image[a], image[b]))});
    }
  }
  for (std::size_t y = 0; y + 1 < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const std::size_t a = image.index(x, y);
      const std::size_t b = image.index(x, y + 1);
      edges.push_back({a, b, std::exp(-theta * squared_distance(image[a], image[b]))});
    }
  }
  return edges;
}

Seeds seeds_from_mask(const GrayImage& mask) {
  Seeds seeds;
  for (std::size_t i = 0; i < mask.values.size(); ++i) {
    if (mask.values[i] == 255) seeds.foreground.push_back(i);
    if (mask.values[i] == 0) seeds.background.push_back(i);
  }
  return seeds;
}

ModularVector compute_unaries(const ImageGrid& image, const Seeds& seeds) {
  const auto fg = DiagonalGaussian::fit(image, seeds.foreground);
  const auto bg = DiagonalGaussian::fit(image, seeds.background);
  ModularVector m(image.pixel_count());
  for (std::size_t p = 0; p < image.pixel_count(); ++p) {
    m[p] = bg.log_likelihood(image[p]) - fg.log_likelihood(image[p]);
  }
  return m;
}

std::vector<Region> grid_superpixels(std::size_t width, std::size_t height, std::size_t block) {
  if (block < 2) throw std::invalid_argument("superpixel block must be at least 2");
  std::vector<Region> regions;
  for (std::size_t by = 0; by < height; by += block) {
    for (std::size_t bx = 0; bx < width; bx += block) {
      Region region;
      for (std::size_t y = by; y < std::min(height, by + block); ++y) {
        for (std::size_t x = bx; x < std::min(width, bx + block); ++x) region.push_back(y * width + x);
      }
      regions.push_back(std::move(region));
    }
  }
  return regions;
}

std::vector<Region> load_superpixels(const std::vector<long>& labels, std::size_t width,
                                     std::size_t height) {
  if (labels.size() != width * height) {
    throw std::invalid_argument("label map size does not match the image");
  }
  std::map<long, Region> by_label;
  for (std::size_t p = 0; p < labels.size(); ++p) by_label[labels[p]].push_back(p);
  std::vector<Region> regions;
  regions.reserve(by_label.size());
  for (auto& [label, region] : by_label) regions.push_back(std::move(region));
  return regions;
}

std::vector<Region> load_superpixels(const GrayImage& labels, std::size_t width,
                                     std::size_t height) {
  if (labels.width != width || labels.height != height) {
    throw std::invalid_argument("label map size does not match the image");
  }
  return load_superpixels(std::vector<long>(labels.values.begin(), labels.values.end()), width,
                          height);
}

SegmentationModel build_segmentation_model(const ImageGrid& image, const ModularVector& unaries,
                                           std::vector<Region> regions,
                                           const SegmentationParams& params) {
  if (params.alpha < 0.0 || params.beta < 0.0 || params.gamma < 0.0 || params.theta < 0.0) {
    throw std::invalid_argument("segmentation parameters must be nonnegative");
  }
  if (unaries.size() != image.pixel_count()) {
    throw std::invalid_argument("unaries do not match the image size");
  }
  for (const auto& region : regions) {
    for (std::size_t p : region) {
      if (p >= image.pixel_count()) throw std::invalid_argument("region pixel out of range");
    }
  }
  SegmentationModel model;
  model.width = image.width();
  model.height = image.height();
  model.params = params;
  model.unaries = unaries;
  model.edges = build_pairwise_weights(image, params.theta);
  model.regions = std::move(regions);
  return model;
}

FactorGraph segmentation_factor_graph(const SegmentationModel& model, SegmentationMode mode) {
  const std::size_t n = model.width * model.height;
  const auto& params = model.params;
  std::vector<Factor> factors;
  std::vector<std::size_t> all(n);
  for (std::size_t p = 0; p < n; ++p) all[p] = p;
  ModularVector scaled = model.unaries;
  scaled *= params.alpha;
  factors.push_back(Factor{SubmodularOracle::modular(std::move(scaled)), std::move(all)});
  if (mode != SegmentationMode::kHop && params.beta > 0.0) {
    for (const auto& edge : model.edges) {
      factors.push_back(Factor{SubmodularOracle::cut(2, {{0, 1, params.beta * edge.weight}}),
                               {edge.u, edge.v}});
    }
  }
  if (mode != SegmentationMode::kPairwise && params.gamma > 0.0) {
    for (const auto& region : model.regions) {
      if (region.size() < 2) continue;
      std::vector<std::size_t> local(region.size());
      for (std::size_t k = 0; k < local.size(); ++k) local[k] = k;
      factors.push_back(Factor{SubmodularOracle::concave_cardinality(
                                   region.size(), std::move(local), params.gamma,
                                   ConcaveFunction::parabola()),
                               region});
    }
  }
  return FactorGraph(n, std::move(factors));
}

GrayImage quantize_marginals(const std::vector<double>& p, std::size_t width,
                             std::size_t height) {
  if (p.size() != width * height) throw std::invalid_argument("marginals do not match the image");
  GrayImage image(width, height);
  for (std::size_t i = 0; i < p.size(); ++i) {
    image.values[i] = static_cast<std::uint8_t>(std::lround(255.0 * std::clamp(p[i], 0.0, 1.0)));
  }
  return image;
}

SegmentationResult segment(const SegmentationModel& model, SegmentationMode mode,
                           const MessagePassingOptions& options) {
  const FactorGraph graph = segmentation_factor_graph(model, mode);
  auto solved = run_parallel_mp(graph, options);
  SegmentationResult result;
  result.marginals = solved.inference.marginals;
  result.marginal_image = quantize_marginals(result.marginals, model.width, model.height);
  result.map_mask = GrayImage(model.width, model.height);
  for (std::size_t p : solved.inference.map_minimal.indices()) result.map_mask.values[p] = 255;
  result.inference = std::move(solved.inference);
  result.trace = std::move(solved.trace);
  return result;
}

}  // namespace subvar
