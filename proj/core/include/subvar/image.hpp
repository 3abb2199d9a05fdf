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

#ifndef SUBVAR_IMAGE_HPP_
#define SUBVAR_IMAGE_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace subvar {

class ImageFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Rgb {
  double r = 0.0;
  double g = 0.0;
  double b = 0.0;
};

/// Row-major RGB image with channels in [0, 1]; pixel (x, y) has index
/// y * width + x.
class ImageGrid {
 public:
  ImageGrid(std::size_t width, std::size_t height);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t pixel_count() const { return pixels_.size(); }
  std::size_t index(std::size_t x, std::size_t y) const { return y * width_ + x; }

  const Rgb& at(std::size_t x, std::size_t y) const { return pixels_[index(x, y)]; }
  Rgb& at(std::size_t x, std::size_t y) { return pixels_[index(x, y)]; }
  const Rgb& operator[](std::size_t i) const { return pixels_[i]; }
  Rgb& operator[](std::size_t i) { return pixels_[i]; }

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<Rgb> pixels_;
};

/// 8-bit single-channel image.
struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> values;

  GrayImage() = default;
  GrayImage(std::size_t w, std::size_t h, std::uint8_t fill = 0)
      : width(w), height(h), values(w * h, fill) {}
};

/// Plain (P3) or binary (P6) PPM. Throws ImageFormatError.
ImageGrid read_ppm(std::istream& in);
ImageGrid read_ppm_file(const std::string& path);
/// Binary P6 with maxval 255.
void write_ppm(std::ostream& out, const ImageGrid& image);
void write_ppm_file(const std::string& path, const ImageGrid& image);

/// Plain (P2) or binary (P5) PGM, maxval <= 255. Throws ImageFormatError.
GrayImage read_pgm(std::istream& in);
GrayImage read_pgm_file(const std::string& path);
/// Binary P5 with maxval 255.
void write_pgm(std::ostream& out, const GrayImage& image);
void write_pgm_file(const std::string& path, const GrayImage& image);

}  // namespace subvar

#endif  // SUBVAR_IMAGE_HPP_
