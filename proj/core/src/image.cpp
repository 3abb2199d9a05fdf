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

#include "subvar/image.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

namespace subvar {

namespace {

void skip_space_and_comments(std::istream& in) {
  for (;;) {
    const int c = in.peek();
    if (c == '#') {
      std::string ignored;
      std::getline(in, ignored);
    } else if (c != EOF && std::isspace(c)) {
      in.get();
    } else {
      return;
    }
  }
}

std::size_t read_header_number(std::istream& in, const char* what) {
  skip_space_and_comments(in);
  long value = -1;
  if (!(in >> value) || value < 0) throw ImageFormatError(std::string("bad ") + what + " in header");
  return static_cast<std::size_t>(value);
}

struct Header {
  char kind = 0;
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t maxval = 0;
};

Header read_header(std::istream& in, char plain, char binary) {
  char magic[2] = {0, 0};
  if (!in.read(magic, 2) || magic[0] != 'P' || (magic[1] != plain && magic[1] != binary)) {
    throw ImageFormatError(std::string("expected P") + plain + " or P" + binary + " magic");
  }
  Header h;
  h.kind = magic[1];
  h.width = read_header_number(in, "width");
  h.height = read_header_number(in, "height");
  h.maxval = read_header_number(in, "maxval");
  if (h.width == 0 || h.height == 0) throw ImageFormatError("image dimensions must be positive");
  if (h.maxval == 0 || h.maxval > 255) throw ImageFormatError("maxval must be in 1..255");
  if (h.kind == binary) {
    // Exactly one whitespace byte separates the header from binary data.
    if (!std::isspace(in.get())) throw ImageFormatError("missing separator after header");
  }
  return h;
}

std::vector<std::size_t> read_samples(std::istream& in, const Header& h, char plain,
                                      std::size_t count) {
  std::vector<std::size_t> samples(count);
  if (h.kind == plain) {
    for (auto& s : samples) {
      skip_space_and_comments(in);
      long value = -1;
      if (!(in >> value)) throw ImageFormatError("truncated pixel data");
      if (value < 0 || static_cast<std::size_t>(value) > h.maxval) {
        throw ImageFormatError("sample exceeds maxval");
      }
      s = static_cast<std::size_t>(value);
    }
  } else {
    std::vector<char> bytes(count);
    if (!in.read(bytes.data(), static_cast<std::streamsize>(count))) {
      throw ImageFormatError("truncated pixel data");
    }
    for (std::size_t i = 0; i < count; ++i) {
      samples[i] = static_cast<unsigned char>(bytes[i]);
      if (samples[i] > h.maxval) throw ImageFormatError("sample exceeds maxval");
    }
  }
  return samples;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ImageFormatError("cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ImageFormatError("cannot write " + path);
  return out;
}

std::uint8_t to_byte(double channel) {
  const double clamped = std::min(1.0, std::max(0.0, channel));
  return static_cast<std::uint8_t>(clamped * 255.0 + 0.5);
}

}  // namespace

ImageGrid::ImageGrid(std::size_t width, std::size_t height)
    : width_(width), height_(height), pixels_(width * height) {
  if (width == 0 || height == 0) throw std::invalid_argument("image dimensions must be positive");
}

ImageGrid read_ppm(std::istream& in) {
  const Header h = read_header(in, '3', '6');
  const auto samples = read_samples(in, h, '3', 3 * h.width * h.height);
  ImageGrid image(h.width, h.height);
  const auto scale = static_cast<double>(h.maxval);
  for (std::size_t i = 0; i < image.pixel_count(); ++i) {
    image[i] = Rgb{static_cast<double>(samples[3 * i]) / scale,
                   static_cast<double>(samples[3 * i + 1]) / scale,
                   static_cast<double>(samples[3 * i + 2]) / scale};
  }
  return image;
}

ImageGrid read_ppm_file(const std::string& path) {
  auto in = open_input(path);
  return read_ppm(in);
}

void write_ppm(std::ostream& out, const ImageGrid& image) {
  out << "P6\n" << image.width() << ' ' << image.height() << "\n255\n";
  for (std::size_t i = 0; i < image.pixel_count(); ++i) {
    const char bytes[3] = {static_cast<char>(to_byte(image[i].r)),
                           static_cast<char>(to_byte(image[i].g)),
                           static_cast<char>(to_byte(image[i].b))};
    out.write(bytes, 3);
  }
}

void write_ppm_file(const std::string& path, const ImageGrid& image) {
  auto out = open_output(path);
  write_ppm(out, image);
}

GrayImage read_pgm(std::istream& in) {
  const Header h = read_header(in, '2', '5');
  const auto samples = read_samples(in, h, '2', h.width * h.height);
  GrayImage image(h.width, h.height);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    // Rescale to the 0..255 range so masks with maxval 1 read as 0/255.
    image.values[i] = static_cast<std::uint8_t>((samples[i] * 255 + h.maxval / 2) / h.maxval);
  }
  return image;
}

GrayImage read_pgm_file(const std::string& path) {
  auto in = open_input(path);
  return read_pgm(in);
}

void write_pgm(std::ostream& out, const GrayImage& image) {
  if (image.values.size() != image.width * image.height) {
    throw std::invalid_argument("gray image size does not match its dimensions");
  }
  out << "P5\n" << image.width << ' ' << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.values.data()),
            static_cast<std::streamsize>(image.values.size()));
}

void write_pgm_file(const std::string& path, const GrayImage& image) {
  auto out = open_output(path);
  write_pgm(out, image);
}

}  // namespace subvar
