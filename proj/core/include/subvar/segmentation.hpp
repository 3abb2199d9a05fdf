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

#ifndef SUBVAR_SEGMENTATION_HPP_
#define SUBVAR_SEGMENTATION_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "subvar/factor_graph.hpp"
#include "subvar/image.hpp"
#include "subvar/inference.hpp"
#include "subvar/message_passing.hpp"
#include "subvar/modular.hpp"
#include "subvar/set_function.hpp"

namespace subvar {

/// F(A) = alpha m(A) + beta F_cut(A) + gamma sum_i phi(|A ∩ P_i| / |P_i|),
/// phi(z) = z (1 - z), cut weights exp(-theta ||x - x'||^2).
struct SegmentationParams {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  double theta = 0.1;
};

enum class SegmentationMode { kPairwise, kHop, kBoth };

SegmentationMode parse_segmentation_mode(const std::string& name);
std::string to_string(SegmentationMode mode);

/// One edge per 4-neighbour pair, w = exp(-theta ||x - x'||^2) on RGB.
/// Horizontal edges first, then vertical, each in row-major order.
std::vector<WeightedEdge> build_pairwise_weights(const ImageGrid& image, double theta);

struct Seeds {
  std::vector<std::size_t> foreground;
  std::vector<std::size_t> background;
};

/// 255 marks a foreground seed, 0 a background seed, anything else is
/// unlabelled.
Seeds seeds_from_mask(const GrayImage& mask);

inline constexpr double kUnaryVarianceFloor = 1e-4;

/// m_p = log l_bg(x_p) - log l_fg(x_p) under diagonal Gaussian colour models
/// fitted to the seeds (variance floored at 1e-4); negative favours
/// foreground. Throws std::invalid_argument on an empty seed set.
ModularVector compute_unaries(const ImageGrid& image, const Seeds& seeds);

using Region = std::vector<std::size_t>;

/// Axis-aligned block x block tiles (partial tiles at the right/bottom
/// border). Throws std::invalid_argument for block < 2.
std::vector<Region> grid_superpixels(std::size_t width, std::size_t height, std::size_t block);
/// One region per distinct label, ordered by label value.
std::vector<Region> load_superpixels(const GrayImage& labels, std::size_t width,
                                     std::size_t height);
/// Same from a row-major integer label list (CSV label maps).
std::vector<Region> load_superpixels(const std::vector<long>& labels, std::size_t width,
                                     std::size_t height);

struct SegmentationModel {
  std::size_t width = 0;
  std::size_t height = 0;
  SegmentationParams params;
  /// Unscaled unaries m; alpha is applied when building factors.
  ModularVector unaries;
  std::vector<WeightedEdge> edges;
  std::vector<Region> regions;
};

SegmentationModel build_segmentation_model(const ImageGrid& image, const ModularVector& unaries,
                                           std::vector<Region> regions,
                                           const SegmentationParams& params);

/// Unaries as one modular factor, each grid edge as a cut factor (skipped in
/// kHop mode or when beta = 0), each region as a concave-cardinality factor
/// (skipped in kPairwise mode or when gamma = 0).
FactorGraph segmentation_factor_graph(const SegmentationModel& model, SegmentationMode mode);

struct SegmentationResult {
  std::vector<double> marginals;
  GrayImage marginal_image;
  GrayImage map_mask;
  InferenceResult inference;
  ConvergenceTrace trace;
};

/// Runs parallel message passing on the model and renders marginals as
/// round(255 p) and the minimal MAP set as a 0/255 mask.
SegmentationResult segment(const SegmentationModel& model, SegmentationMode mode,
                           const MessagePassingOptions& options = {});

GrayImage quantize_marginals(const std::vector<double>& p, std::size_t width,
                             std::size_t height);

}  // namespace subvar

#endif  // SUBVAR_SEGMENTATION_HPP_
