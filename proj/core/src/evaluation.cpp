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

#include "subvar/evaluation.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace subvar {

std::vector<RocPoint> roc_curve(const std::vector<double>& scores,
                                const std::vector<std::uint8_t>& labels) {
  if (scores.size() != labels.size()) throw std::invalid_argument("roc: size mismatch");
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  double positives = 0.0;
  for (auto l : labels) positives += l != 0 ? 1.0 : 0.0;
  const double negatives = static_cast<double>(labels.size()) - positives;
  auto rate = [](double count, double total) { return total > 0.0 ? count / total : 0.0; };

  std::vector<RocPoint> curve{{0.0, 0.0}};
  double tp = 0.0;
  double fp = 0.0;
  for (std::size_t k = 0; k < order.size();) {
    const double threshold = scores[order[k]];
    // Tied scores cross the threshold together.
    while (k < order.size() && scores[order[k]] == threshold) {
      (labels[order[k]] != 0 ? tp : fp) += 1.0;
      ++k;
    }
    curve.push_back({rate(fp, negatives), rate(tp, positives)});
  }
  return curve;
}

std::optional<double> area_under_roc(const std::vector<double>& scores,
                                     const std::vector<std::uint8_t>& labels) {
  const auto positives = std::count_if(labels.begin(), labels.end(), [](auto l) { return l != 0; });
  if (positives == 0 || positives == static_cast<std::ptrdiff_t>(labels.size())) return std::nullopt;
  const auto curve = roc_curve(scores, labels);
  double area = 0.0;
  for (std::size_t k = 1; k < curve.size(); ++k) {
    area += (curve[k].false_positive_rate - curve[k - 1].false_positive_rate) *
            (curve[k].true_positive_rate + curve[k - 1].true_positive_rate) / 2.0;
  }
  return area;
}

std::vector<std::size_t> boundary_pixels(const std::vector<std::uint8_t>& truth,
                                         std::size_t width, std::size_t height) {
  if (truth.size() != width * height) throw std::invalid_argument("truth does not match dimensions");
  std::vector<std::size_t> boundary;
  auto label = [&](std::size_t x, std::size_t y) { return truth[y * width + x] != 0; };
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const bool here = label(x, y);
      const bool differs = (x > 0 && label(x - 1, y) != here) ||
                           (x + 1 < width && label(x + 1, y) != here) ||
                           (y > 0 && label(x, y - 1) != here) ||
                           (y + 1 < height && label(x, y + 1) != here);
      if (differs) boundary.push_back(y * width + x);
    }
  }
  return boundary;
}

std::vector<std::vector<std::size_t>> trimap_bands(const std::vector<std::uint8_t>& truth,
                                                   std::size_t width, std::size_t height,
                                                   std::size_t count) {
  const auto boundary = boundary_pixels(truth, width, height);
  // Chebyshev distance to the boundary by 8-connected breadth-first search.
  constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> distance(width * height, kFar);
  std::deque<std::size_t> queue;
  for (std::size_t p : boundary) {
    distance[p] = 0;
    queue.push_back(p);
  }
  while (!queue.empty()) {
    const std::size_t p = queue.front();
    queue.pop_front();
    if (distance[p] >= count) continue;
    const auto x = static_cast<long>(p % width);
    const auto y = static_cast<long>(p / width);
    for (long dy = -1; dy <= 1; ++dy) {
      for (long dx = -1; dx <= 1; ++dx) {
        const long nx = x + dx;
        const long ny = y + dy;
        if (nx < 0 || ny < 0 || nx >= static_cast<long>(width) || ny >= static_cast<long>(height)) {
          continue;
        }
        const auto q = static_cast<std::size_t>(ny) * width + static_cast<std::size_t>(nx);
        if (distance[q] == kFar) {
          distance[q] = distance[p] + 1;
          queue.push_back(q);
        }
      }
    }
  }
  std::vector<std::vector<std::size_t>> bands(count);
  for (std::size_t p = 0; p < distance.size(); ++p) {
    if (distance[p] == kFar) continue;
    for (std::size_t r = std::max<std::size_t>(distance[p], 1); r <= count; ++r) {
      bands[r - 1].push_back(p);
    }
  }
  return bands;
}

EvaluationReport evaluate_segmentation(const std::vector<double>& marginals,
                                       const std::vector<std::uint8_t>& truth,
                                       std::size_t width, std::size_t height,
                                       std::size_t bands) {
  if (marginals.size() != width * height || truth.size() != width * height) {
    throw std::invalid_argument("marginals and truth must match the image dimensions");
  }
  std::vector<std::uint8_t> labels(truth.size());
  for (std::size_t p = 0; p < truth.size(); ++p) labels[p] = truth[p] != 0 ? 1 : 0;
  EvaluationReport report;
  report.roc = roc_curve(marginals, labels);
  report.auc = area_under_roc(marginals, labels);
  double sum = 0.0;
  std::size_t defined = 0;
  for (const auto& band : trimap_bands(labels, width, height, bands)) {
    std::vector<double> band_scores;
    std::vector<std::uint8_t> band_labels;
    band_scores.reserve(band.size());
    band_labels.reserve(band.size());
    for (std::size_t p : band) {
      band_scores.push_back(marginals[p]);
      band_labels.push_back(labels[p]);
    }
    const auto auc = area_under_roc(band_scores, band_labels);
    report.trimap_auc.push_back(auc);
    if (auc) {
      sum += *auc;
      ++defined;
    }
  }
  if (defined > 0) report.mean_trimap_auc = sum / static_cast<double>(defined);
  return report;
}

}  // namespace subvar
