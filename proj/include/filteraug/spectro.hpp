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

// Waveform -> power STFT -> mel filterbank -> dB.
//
// Framing has no centering or padding: frame t covers samples
// [t * hop, t * hop + win_length), so the frame count is
// 1 + (num_samples - win_length) / hop_length.

#ifndef FILTERAUG_SPECTRO_HPP_
#define FILTERAUG_SPECTRO_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "filteraug/matrix.hpp"

namespace filteraug {

struct Waveform {
  std::vector<double> samples;
  std::uint32_t sample_rate = 16000;
};

/// Time x mel matrix of band power in dB.
struct LogMelSpectrogram {
  Matrix values;  // n_frames rows, n_mels columns
  std::uint32_t sample_rate = 0;
  std::uint32_t hop_length = 0;

  std::size_t n_frames() const { return values.rows(); }
  std::size_t n_mels() const { return values.cols(); }

  bool operator==(const LogMelSpectrogram&) const = default;
};

struct MelFilterbank {
  Matrix weights;  // n_mels rows, n_fft / 2 + 1 columns
  std::vector<double> center_hz;
  double f_min = 0.0;
  double f_max = 0.0;
  std::uint32_t sample_rate = 0;
  std::size_t n_fft = 0;

  std::size_t n_mels() const { return weights.rows(); }
};

enum class WindowKind { kHann, kRectangular };

struct StftConfig {
  std::size_t n_fft = 2048;
  std::size_t hop_length = 256;
  std::size_t win_length = 2048;
  WindowKind window = WindowKind::kHann;
};

struct FeatureConfig {
  StftConfig stft;
  std::size_t n_mels = 128;
  double f_min = 0.0;
  double f_max = 8000.0;
  double db_floor = -100.0;
};

inline constexpr double kDefaultDbFloor = -100.0;

/// HTK mel scale: 2595 * log10(1 + hz / 700).
double hz_to_mel(double hz);
double mel_to_hz(double mel);

/// Number of frames produced for `num_samples` samples; throws
/// std::invalid_argument("input too short") when no full window fits.
std::size_t frame_count(std::size_t num_samples, const StftConfig& cfg);

/// Divides by the absolute peak. An all-zero signal is returned unchanged.
Waveform normalize_peak(Waveform w);

/// Periodic Hann (or all-ones) window of `length` samples.
std::vector<double> make_window(std::size_t length, WindowKind kind);

/// |DFT|^2 of each windowed, zero-padded frame. Result is T x (n_fft/2 + 1).
/// Frames are processed in parallel; every frame is computed independently so
/// the result does not depend on the thread count.
Matrix stft_power(const Waveform& w, const StftConfig& cfg);

/// Triangular filters with centers equally spaced on the mel scale, peak
/// value 1 at the center, no area normalization.
MelFilterbank mel_filterbank(std::uint32_t sample_rate, std::size_t n_fft, std::size_t n_mels,
                             double f_min, double f_max);

/// values[t, f] = max(10 log10(sum_k fb[f, k] power[t, k]), db_floor).
/// The returned spectrogram carries fb.sample_rate and hop_length 0; callers
/// that know the hop set it.
LogMelSpectrogram log_mel(const Matrix& power, const MelFilterbank& fb,
                          double db_floor = kDefaultDbFloor);

/// Full pipeline without normalization: stft_power -> mel_filterbank -> log_mel.
LogMelSpectrogram compute_log_mel(const Waveform& w, const FeatureConfig& cfg = {});

}  // namespace filteraug

#endif  // FILTERAUG_SPECTRO_HPP_
