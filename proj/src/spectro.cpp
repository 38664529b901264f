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

#include "filteraug/spectro.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace filteraug {

namespace {

// FFTW's planner is not reentrant; execution with the new-array interface is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

template <typename T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

template <typename T>
FftwBuffer<T> fftw_buffer(std::size_t n) {
  auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * n));
  if (p == nullptr) {
    throw std::bad_alloc();
  }
  return FftwBuffer<T>(p);
}

class RealFftPlan {
 public:
  explicit RealFftPlan(std::size_t n_fft) : n_fft_(n_fft) {
    auto in = fftw_buffer<double>(n_fft);
    auto out = fftw_buffer<fftw_complex>(n_fft / 2 + 1);
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(n_fft), in.get(), out.get(), FFTW_ESTIMATE);
    if (plan_ == nullptr) {
      throw std::runtime_error("fftw: failed to create plan for n_fft=" + std::to_string(n_fft));
    }
  }
  ~RealFftPlan() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  RealFftPlan(const RealFftPlan&) = delete;
  RealFftPlan& operator=(const RealFftPlan&) = delete;

  // Buffers must come from fftw_malloc so their alignment matches the plan's.
  void execute(double* in, fftw_complex* out) const { fftw_execute_dft_r2c(plan_, in, out); }

 private:
  std::size_t n_fft_;
  fftw_plan plan_ = nullptr;
};

void validate_stft(const StftConfig& cfg) {
  if (cfg.hop_length < 1 || cfg.win_length < cfg.hop_length || cfg.n_fft < cfg.win_length) {
    throw std::invalid_argument("stft requires n_fft >= win_length >= hop_length >= 1");
  }
}

}  // namespace

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double mel_to_hz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

std::size_t frame_count(std::size_t num_samples, const StftConfig& cfg) {
  validate_stft(cfg);
  if (num_samples < cfg.win_length) {
    throw std::invalid_argument("input too short");
  }
  return 1 + (num_samples - cfg.win_length) / cfg.hop_length;
}

Waveform normalize_peak(Waveform w) {
  double peak = 0.0;
  for (double s : w.samples) {
    peak = std::max(peak, std::abs(s));
  }
  if (peak == 0.0) {
    return w;
  }
  for (double& s : w.samples) {
    s /= peak;
  }
  return w;
}

std::vector<double> make_window(std::size_t length, WindowKind kind) {
  std::vector<double> win(length, 1.0);
  if (kind == WindowKind::kHann) {
    const double step = 2.0 * std::numbers::pi / static_cast<double>(length);
    for (std::size_t n = 0; n < length; ++n) {
      win[n] = 0.5 - 0.5 * std::cos(step * static_cast<double>(n));
    }
  }
  return win;
}

Matrix stft_power(const Waveform& w, const StftConfig& cfg) {
  const std::size_t n_frames = frame_count(w.samples.size(), cfg);
  const std::size_t n_bins = cfg.n_fft / 2 + 1;
  const std::vector<double> window = make_window(cfg.win_length, cfg.window);
  const RealFftPlan plan(cfg.n_fft);

  Matrix power(n_frames, n_bins);
  const auto frames = static_cast<std::int64_t>(n_frames);

#pragma omp parallel
  {
    auto in = fftw_buffer<double>(cfg.n_fft);
    auto out = fftw_buffer<fftw_complex>(n_bins);
    std::fill(in.get(), in.get() + cfg.n_fft, 0.0);

#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < frames; ++t) {
      const double* frame = w.samples.data() + static_cast<std::size_t>(t) * cfg.hop_length;
      for (std::size_t n = 0; n < cfg.win_length; ++n) {
        in[n] = frame[n] * window[n];
      }
      plan.execute(in.get(), out.get());
      auto row = power.row(static_cast<std::size_t>(t));
      for (std::size_t k = 0; k < n_bins; ++k) {
        row[k] = out[k][0] * out[k][0] + out[k][1] * out[k][1];
      }
    }
  }
  return power;
}

MelFilterbank mel_filterbank(std::uint32_t sample_rate, std::size_t n_fft, std::size_t n_mels,
                             double f_min, double f_max) {
  if (sample_rate == 0 || n_fft == 0) {
    throw std::invalid_argument("mel filterbank needs a positive sample rate and n_fft");
  }
  if (n_mels < 1) {
    throw std::invalid_argument("n_mels must be at least 1");
  }
  if (!(f_min >= 0.0 && f_min < f_max && f_max <= sample_rate / 2.0)) {
    throw std::invalid_argument("mel filterbank requires 0 <= f_min < f_max <= sample_rate / 2");
  }

  const std::size_t n_bins = n_fft / 2 + 1;
  const double mel_lo = hz_to_mel(f_min);
  const double mel_hi = hz_to_mel(f_max);

  // n_mels + 2 edge points; filter m spans [edges[m], edges[m + 2]].
  std::vector<double> edges(n_mels + 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const double mel =
        mel_lo + (mel_hi - mel_lo) * static_cast<double>(i) / static_cast<double>(n_mels + 1);
    edges[i] = mel_to_hz(mel);
  }
  edges.front() = f_min;
  edges.back() = f_max;

  MelFilterbank fb;
  fb.weights = Matrix(n_mels, n_bins);
  fb.center_hz.resize(n_mels);
  fb.f_min = f_min;
  fb.f_max = f_max;
  fb.sample_rate = sample_rate;
  fb.n_fft = n_fft;

  const double bin_hz = static_cast<double>(sample_rate) / static_cast<double>(n_fft);
  for (std::size_t m = 0; m < n_mels; ++m) {
    const double lo = edges[m];
    const double center = edges[m + 1];
    const double hi = edges[m + 2];
    fb.center_hz[m] = center;
    bool any = false;
    for (std::size_t k = 0; k < n_bins; ++k) {
      const double f = bin_hz * static_cast<double>(k);
      const double rising = (f - lo) / (center - lo);
      const double falling = (hi - f) / (hi - center);
      const double weight = std::max(0.0, std::min(rising, falling));
      fb.weights(m, k) = weight;
      any = any || weight > 0.0;
    }
    if (!any) {
      throw std::invalid_argument("n_mels=" + std::to_string(n_mels) +
                                  " is too large for n_fft=" + std::to_string(n_fft) +
                                  ": mel filter " + std::to_string(m) + " covers no FFT bin");
    }
  }
  return fb;
}

LogMelSpectrogram log_mel(const Matrix& power, const MelFilterbank& fb, double db_floor) {
  if (power.cols() != fb.weights.cols()) {
    throw std::invalid_argument("power spectrum has " + std::to_string(power.cols()) +
                                " bins but the filterbank expects " +
                                std::to_string(fb.weights.cols()));
  }
  const std::size_t n_frames = power.rows();
  const std::size_t n_mels = fb.n_mels();
  const std::size_t n_bins = power.cols();

  LogMelSpectrogram out;
  out.values = Matrix(n_frames, n_mels);
  out.sample_rate = fb.sample_rate;
  const auto frames = static_cast<std::int64_t>(n_frames);

  // Nonzero support [first, last) of each triangle.
  std::vector<std::pair<std::size_t, std::size_t>> support(n_mels, {0, 0});
  for (std::size_t m = 0; m < n_mels; ++m) {
    const auto wrow = fb.weights.row(m);
    std::size_t first = 0;
    while (first < n_bins && wrow[first] == 0.0) ++first;
    std::size_t last = n_bins;
    while (last > first && wrow[last - 1] == 0.0) --last;
    support[m] = {first, last};
  }

#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < frames; ++t) {
    const auto p = power.row(static_cast<std::size_t>(t));
    auto dst = out.values.row(static_cast<std::size_t>(t));
    for (std::size_t m = 0; m < n_mels; ++m) {
      const auto wrow = fb.weights.row(m);
      double acc = 0.0;
      for (std::size_t k = support[m].first; k < support[m].second; ++k) {
        acc += wrow[k] * p[k];
      }
      // log10(0) is -inf, which the floor absorbs.
      dst[m] = std::max(10.0 * std::log10(acc), db_floor);
    }
  }
  return out;
}

LogMelSpectrogram compute_log_mel(const Waveform& w, const FeatureConfig& cfg) {
  const Matrix power = stft_power(w, cfg.stft);
  const MelFilterbank fb = mel_filterbank(w.sample_rate, cfg.stft.n_fft, cfg.n_mels, cfg.f_min,
                                          cfg.f_max);
  LogMelSpectrogram spec = log_mel(power, fb, cfg.db_floor);
  spec.hop_length = static_cast<std::uint32_t>(cfg.stft.hop_length);
  return spec;
}

}  // namespace filteraug
