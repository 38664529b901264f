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

#include "reference/reference.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace filteraug::reference {

Matrix stft_power(const Waveform& w, const StftConfig& cfg) {
  if (w.samples.size() < cfg.win_length) {
    throw std::invalid_argument("input too short");
  }
  const std::size_t n = cfg.n_fft;
  const std::size_t n_frames = 1 + (w.samples.size() - cfg.win_length) / cfg.hop_length;
  const std::size_t n_bins = n / 2 + 1;

  std::vector<double> window(cfg.win_length, 1.0);
  if (cfg.window == WindowKind::kHann) {
    for (std::size_t i = 0; i < cfg.win_length; ++i) {
      window[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                        static_cast<double>(cfg.win_length));
    }
  }

  // Twiddles indexed by (i * k) mod n keep the angle exact for large i * k.
  std::vector<double> cos_table(n);
  std::vector<double> sin_table(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    cos_table[i] = std::cos(angle);
    sin_table[i] = std::sin(angle);
  }

  Matrix power(n_frames, n_bins);
  std::vector<double> frame(n, 0.0);
  for (std::size_t t = 0; t < n_frames; ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      frame[i] = i < cfg.win_length ? w.samples[t * cfg.hop_length + i] * window[i] : 0.0;
    }
    for (std::size_t k = 0; k < n_bins; ++k) {
      double re = 0.0;
      double im = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t idx = (i * k) % n;
        re += frame[i] * cos_table[idx];
        im -= frame[i] * sin_table[idx];
      }
      power(t, k) = re * re + im * im;
    }
  }
  return power;
}

LogMelSpectrogram log_mel(const Matrix& power, const Matrix& fb_weights, double db_floor) {
  LogMelSpectrogram out;
  out.values = Matrix(power.rows(), fb_weights.rows());
  for (std::size_t t = 0; t < power.rows(); ++t) {
    for (std::size_t m = 0; m < fb_weights.rows(); ++m) {
      double acc = 0.0;
      for (std::size_t k = 0; k < power.cols(); ++k) {
        acc += fb_weights(m, k) * power(t, k);
      }
      double db = db_floor;
      if (acc > 0.0) {
        db = 10.0 * std::log10(acc);
        if (db < db_floor) db = db_floor;
      }
      out.values(t, m) = db;
    }
  }
  return out;
}

std::vector<double> step_curve(const std::vector<int>& boundaries,
                               const std::vector<double>& weights, int n_mels) {
  std::vector<double> curve(static_cast<std::size_t>(n_mels));
  for (int f = 0; f < n_mels; ++f) {
    std::size_t band = 0;
    while (!(boundaries[band] <= f && f < boundaries[band + 1])) ++band;
    curve[static_cast<std::size_t>(f)] = weights[band];
  }
  return curve;
}

std::vector<double> linear_curve(const std::vector<int>& boundaries,
                                 const std::vector<double>& weights, int n_mels) {
  std::vector<double> curve(static_cast<std::size_t>(n_mels));
  for (int f = 0; f < n_mels; ++f) {
    std::size_t seg = 0;
    while (!(boundaries[seg] <= f && f < boundaries[seg + 1])) ++seg;
    const double t = static_cast<double>(f - boundaries[seg]) /
                     static_cast<double>(boundaries[seg + 1] - boundaries[seg]);
    curve[static_cast<std::size_t>(f)] = (1.0 - t) * weights[seg] + t * weights[seg + 1];
  }
  return curve;
}

LogMelSpectrogram apply_curve(const LogMelSpectrogram& spec, const std::vector<double>& curve) {
  LogMelSpectrogram out = spec;
  for (std::size_t t = 0; t < spec.n_frames(); ++t) {
    for (std::size_t f = 0; f < spec.n_mels(); ++f) {
      out.values(t, f) = spec.values(t, f) + curve[f];
    }
  }
  return out;
}

NaiveAugmentResult filter_augment(const LogMelSpectrogram& spec, const AugmentConfig& cfg,
                                  RandomStream& rng) {
  const int n_mels = static_cast<int>(spec.n_mels());

  bool use_step = cfg.filter_type == FilterType::kStep;
  if (cfg.filter_type == FilterType::kMixed) {
    use_step = rng.uniform01() < cfg.mix_ratio;
  }
  const FilterParams& p = use_step ? cfg.step : cfg.linear;

  int hi = p.band_range.max_bands;
  if (n_mels / p.min_bandwidth < hi) hi = n_mels / p.min_bandwidth;
  int lo = p.band_range.min_bands;
  if (lo > hi) lo = hi;
  const int n = static_cast<int>(rng.uniform_int(lo, hi));

  // Interior offsets, insertion-sorted as they arrive.
  std::vector<int> offsets;
  for (int i = 0; i < n - 1; ++i) {
    const int u = static_cast<int>(rng.uniform_int(0, n_mels - n * p.min_bandwidth));
    auto pos = offsets.begin();
    while (pos != offsets.end() && *pos <= u) ++pos;
    offsets.insert(pos, u);
  }
  std::vector<int> boundaries{0};
  for (int i = 0; i < n - 1; ++i) {
    boundaries.push_back(offsets[static_cast<std::size_t>(i)] + (i + 1) * p.min_bandwidth);
  }
  boundaries.push_back(n_mels);

  std::vector<double> weights;
  const int count = use_step ? n : n + 1;
  for (int i = 0; i < count; ++i) {
    weights.push_back(rng.uniform_real(p.db_range.min_db, p.db_range.max_db));
  }

  NaiveAugmentResult result;
  result.used_step = use_step;
  result.curve = use_step ? step_curve(boundaries, weights, n_mels)
                          : linear_curve(boundaries, weights, n_mels);
  result.spec = apply_curve(spec, result.curve);
  return result;
}

}  // namespace filteraug::reference
