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

#ifndef SUBVAR_EVALUATION_HPP_
#define SUBVAR_EVALUATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace subvar {

struct RocPoint {
  double false_positive_rate = 0.0;
  double true_positive_rate = 0.0;
};

/// ROC curve from (0,0) to (1,1), one point per distinct score, thresholds
/// descending; a pixel is called positive when its score >= threshold.
std::vector<RocPoint> roc_curve(const std::vector<double>& scores,
                                const std::vector<std::uint8_t>& labels);

/// Trapezoidal area under roc_curve. Empty when labels hold a single class.
std::optional<double> area_under_roc(const std::vector<double>& scores,
                                     const std::vector<std::uint8_t>& labels);

/// Pixels adjacent (4-neighbourhood) to a pixel of the other class.
std::vector<std::size_t> boundary_pixels(const std::vector<std::uint8_t>& truth,
                                         std::size_t width, std::size_t height);

/// Band r (r = 1..count) holds every pixel within Chebyshev distance r of a
/// boundary pixel, i.e. the boundary dilated by a (2r+1)^2 square.
std::vector<std::vector<std::size_t>> trimap_bands(const std::vector<std::uint8_t>& truth,
                                                   std::size_t width, std::size_t height,
                                                   std::size_t count = 10);

struct EvaluationReport {
  std::vector<RocPoint> roc;
  std::optional<double> auc;
  std::vector<std::optional<double>> trimap_auc;
  /// Mean over the bands with a defined AUC.
  std::optional<double> mean_trimap_auc;
};

/// `truth` is binary (nonzero = foreground). Throws std::invalid_argument on
/// a size mismatch.
EvaluationReport evaluate_segmentation(const std::vector<double>& marginals,
                                       const std::vector<std::uint8_t>& truth,
                                       std::size_t width, std::size_t height,
                                       std::size_t bands = 10);

}  // namespace subvar

#endif  // SUBVAR_EVALUATION_HPP_
