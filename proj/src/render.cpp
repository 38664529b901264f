/**
 * Copyright 2026 The filteraug Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <png.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>

#include "filteraug/io.hpp"

namespace filteraug {

namespace {

// Nine evenly spaced samples of matplotlib's viridis.
constexpr std::array<std::array<std::uint8_t, 3>, 9> kViridis = {{
    {68, 1, 84},
    {71, 44, 122},
    {59, 81, 139},
    {44, 113, 142},
    {33, 144, 141},
    {39, 173, 129},
    {92, 200, 99},
    {170, 220, 50},
    {253, 231, 37},
}};

std::uint8_t to_byte(double unit) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(unit, 0.0, 1.0) * 255.0));
}

std::array<std::uint8_t, 3> viridis(double unit) {
  const double pos = std::clamp(unit, 0.0, 1.0) * static_cast<double>(kViridis.size() - 1);
  const auto i = std::min(static_cast<std::size_t>(pos), kViridis.size() - 2);
  const double frac = pos - static_cast<double>(i);
  std::array<std::uint8_t, 3> rgb{};
  for (std::size_t c = 0; c < 3; ++c) {
    const double a = kViridis[i][c];
    const double b = kViridis[i + 1][c];
    rgb[c] = static_cast<std::uint8_t>(std::lround(a + (b - a) * frac));
  }
  return rgb;
}

double curve_half_range(const CurvePlot& plot, std::span<const double> weights_db) {
  if (plot.half_range_db > 0.0) {
    return plot.half_range_db;
  }
  double peak = 1.0;
  for (double w : weights_db) {
    peak = std::max(peak, std::abs(w));
  }
  return 1.1 * peak;
}

}  // namespace

void RenderSpec::validate() const {
  if (!(lo_db < hi_db)) {
    throw std::invalid_argument("display range requires lo < hi");
  }
}

Image rasterize_spectrogram(const LogMelSpectrogram& spec, const RenderSpec& render) {
  render.validate();
  Image img;
  img.width = static_cast<int>(spec.n_frames());
  img.height = static_cast<int>(spec.n_mels());
  img.channels = render.colormap == Colormap::kGrayscale ? 1 : 3;
  img.pixels.resize(static_cast<std::size_t>(img.width) * img.height * img.channels);

  const double span = render.hi_db - render.lo_db;
  for (int y = 0; y < img.height; ++y) {
    const auto mel = static_cast<std::size_t>(img.height - 1 - y);
    for (int x = 0; x < img.width; ++x) {
      const double unit = (spec.values(static_cast<std::size_t>(x), mel) - render.lo_db) / span;
      std::uint8_t* px =
          img.pixels.data() + (static_cast<std::size_t>(y) * img.width + x) * img.channels;
      if (render.colormap == Colormap::kGrayscale) {
        px[0] = to_byte(unit);
      } else {
        const auto rgb = viridis(unit);
        std::copy(rgb.begin(), rgb.end(), px);
      }
    }
  }
  return img;
}

int curve_row(double weight_db, const CurvePlot& plot, std::span<const double> weights_db) {
  const double half = curve_half_range(plot, weights_db);
  const double unit = (half - weight_db) / (2.0 * half);
  const long row = std::lround(unit * static_cast<double>(plot.height - 1));
  return static_cast<int>(std::clamp<long>(row, 0, plot.height - 1));
}

Image rasterize_curve(std::span<const double> weights_db, const CurvePlot& plot) {
  if (weights_db.empty()) {
    throw std::invalid_argument("cannot render an empty curve");
  }
  if (plot.height < 2) {
    throw std::invalid_argument("curve plot height must be at least 2");
  }
  Image img;
  img.width = static_cast<int>(weights_db.size());
  img.height = plot.height;
  img.channels = 1;
  img.pixels.assign(static_cast<std::size_t>(img.width) * img.height, kCurveBackground);

  auto put = [&](int x, int y, std::uint8_t v) {
    img.pixels[static_cast<std::size_t>(y) * img.width + x] = v;
  };

  const int axis = curve_row(0.0, plot, weights_db);
  for (int x = 0; x < img.width; ++x) put(x, axis, kCurveAxis);

  int prev = curve_row(weights_db[0], plot, weights_db);
  for (int x = 0; x < img.width; ++x) {
    const int row = curve_row(weights_db[static_cast<std::size_t>(x)], plot, weights_db);
    const int top = x == 0 ? row : std::min(prev, row);
    const int bottom = x == 0 ? row : std::max(prev, row);
    for (int y = top; y <= bottom; ++y) put(x, y, kCurveInk);
    prev = row;
  }
  return img;
}

void write_png(const Image& image, const std::filesystem::path& path) {
  if (image.channels != 1 && image.channels != 3) {
    throw std::invalid_argument("png: only 1 or 3 channel images are supported");
  }
  png_image png;
  std::memset(&png, 0, sizeof png);
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(image.width);
  png.height = static_cast<png_uint_32>(image.height);
  png.format = image.channels == 1 ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;
  const std::string file = path.string();
  if (!png_image_write_to_file(&png, file.c_str(), 0, image.pixels.data(), 0, nullptr)) {
    const std::string msg = png.message;
    png_image_free(&png);
    throw std::runtime_error("png: cannot write " + file + ": " + msg);
  }
}

Image read_png(const std::filesystem::path& path) {
  png_image png;
  std::memset(&png, 0, sizeof png);
  png.version = PNG_IMAGE_VERSION;
  const std::string file = path.string();
  if (!png_image_begin_read_from_file(&png, file.c_str())) {
    throw std::runtime_error("png: cannot read " + file + ": " + png.message);
  }
  const bool gray = (png.format & PNG_FORMAT_FLAG_COLOR) == 0;
  png.format = gray ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;

  Image img;
  img.width = static_cast<int>(png.width);
  img.height = static_cast<int>(png.height);
  img.channels = gray ? 1 : 3;
  img.pixels.resize(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, img.pixels.data(), 0, nullptr)) {
    const std::string msg = png.message;
    png_image_free(&png);
    throw std::runtime_error("png: cannot decode " + file + ": " + msg);
  }
  return img;
}

void render_spectrogram(const LogMelSpectrogram& spec, const RenderSpec& render,
                        const std::filesystem::path& path) {
  write_png(rasterize_spectrogram(spec, render), path);
}

void render_curve(std::span<const double> weights_db, const std::filesystem::path& path,
                  const CurvePlot& plot) {
  write_png(rasterize_curve(weights_db, plot), path);
}

}  // namespace filteraug
