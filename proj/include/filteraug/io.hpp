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

#ifndef FILTERAUG_IO_HPP_
#define FILTERAUG_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "filteraug/spectro.hpp"

namespace filteraug {

// -- WAV --------------------------------------------------------------------

class WavError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads RIFF/WAVE with PCM 16/24/32-bit integer or 32-bit float samples
/// (WAVE_FORMAT_EXTENSIBLE with those sub-formats is accepted too). Integer
/// samples are divided by 2^(bits - 1). Multi-channel input is downmixed to
/// mono by averaging channels. A data chunk of length zero yields an empty
/// waveform rather than an error.
Waveform read_wav(const std::filesystem::path& path);
Waveform parse_wav(std::span<const std::uint8_t> bytes);

// -- LMSP spectrogram files -------------------------------------------------
//
// Little-endian layout:
//   offset 0   char[4]  "LMSP"
//   offset 4   u16      version (= 1)
//   offset 6   u32      n_frames
//   offset 10  u32      n_mels
//   offset 14  u32      sample_rate
//   offset 18  u32      hop_length
//   offset 22  f32[n_frames * n_mels], frame-major
//
// Values are stored as f32, so writing narrows each double to float. Any
// spectrogram whose values are already representable as float (in particular
// anything read back from an LMSP file) round-trips bit-exactly.

inline constexpr std::uint16_t kLmspVersion = 1;
inline constexpr std::size_t kLmspHeaderBytes = 22;

enum class LmspErrorCode { kOpenFailed, kBadMagic, kVersionMismatch, kTruncated, kTrailingData,
                           kWriteFailed };

class LmspError : public std::runtime_error {
 public:
  LmspError(LmspErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  LmspErrorCode code() const { return code_; }

 private:
  LmspErrorCode code_;
};

std::vector<std::uint8_t> encode_spectrogram(const LogMelSpectrogram& spec);
LogMelSpectrogram decode_spectrogram(std::span<const std::uint8_t> bytes);
void write_spectrogram(const LogMelSpectrogram& spec, const std::filesystem::path& path);
LogMelSpectrogram read_spectrogram(const std::filesystem::path& path);

/// True when the file starts with the LMSP magic.
bool is_spectrogram_file(const std::filesystem::path& path);

// -- curve CSV --------------------------------------------------------------

/// Header `bin,weight_db`, then one `index,value` row per mel bin with the
/// value printed to 9 significant digits.
std::string format_curve_csv(std::span<const double> weights_db);
std::vector<double> parse_curve_csv(const std::string& text);
void write_curve_csv(std::span<const double> weights_db, const std::filesystem::path& path);
std::vector<double> read_curve_csv(const std::filesystem::path& path);

// -- rendering --------------------------------------------------------------

enum class Colormap { kGrayscale, kViridis };

struct RenderSpec {
  Colormap colormap = Colormap::kGrayscale;
  double lo_db = -80.0;
  double hi_db = 0.0;

  void validate() const;
};

/// 8-bit image, rows top to bottom, `channels` interleaved samples per pixel.
struct Image {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<std::uint8_t> pixels;

  std::uint8_t at(int x, int y, int c = 0) const {
    return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  bool operator==(const Image&) const = default;
};

/// One pixel per cell: x = frame, y = n_mels - 1 - mel bin (low frequencies at
/// the bottom). Intensity is clamp((value - lo) / (hi - lo), 0, 1), mapped to
/// 0..255 for grayscale or through a fixed viridis-like table.
Image rasterize_spectrogram(const LogMelSpectrogram& spec, const RenderSpec& render);

struct CurvePlot {
  int height = 200;
  /// Vertical axis spans [-half_range, half_range] dB; 0 picks
  /// 1.1 * max(1, max |weight|).
  double half_range_db = 0.0;
};

inline constexpr std::uint8_t kCurveInk = 0;
inline constexpr std::uint8_t kCurveAxis = 160;
inline constexpr std::uint8_t kCurveBackground = 255;

/// Grayscale line plot, one column per mel bin. Column x is inked from the
/// previous bin's row to bin x's row, so a jump between bins x - 1 and x shows
/// up as a vertical run in column x. The 0 dB axis is drawn in light gray.
Image rasterize_curve(std::span<const double> weights_db, const CurvePlot& plot = {});

/// Row (0 = top) where a weight lands in rasterize_curve's output.
int curve_row(double weight_db, const CurvePlot& plot, std::span<const double> weights_db);

void write_png(const Image& image, const std::filesystem::path& path);
Image read_png(const std::filesystem::path& path);

void render_spectrogram(const LogMelSpectrogram& spec, const RenderSpec& render,
                        const std::filesystem::path& path);
void render_curve(std::span<const double> weights_db, const std::filesystem::path& path,
                  const CurvePlot& plot = {});

}  // namespace filteraug

#endif  // FILTERAUG_IO_HPP_
