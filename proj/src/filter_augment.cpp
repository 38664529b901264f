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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "filteraug/augment.hpp"

namespace filteraug {

namespace {

void check_boundaries(std::span<const int> boundaries, int n_mels) {
  if (boundaries.size() < 2) {
    throw std::invalid_argument("a curve needs at least two boundaries");
  }
  if (boundaries.front() != 0 || boundaries.back() != n_mels) {
    throw std::invalid_argument("boundaries must start at 0 and end at " +
                                std::to_string(n_mels));
  }
  for (std::size_t i = 1; i < boundaries.size(); ++i) {
    if (boundaries[i] <= boundaries[i - 1]) {
      throw std::invalid_argument("boundaries must be strictly increasing");
    }
  }
}

}  // namespace

std::string_view to_string(FilterType type) {
  switch (type) {
    case FilterType::kStep:
      return "step";
    case FilterType::kLinear:
      return "linear";
    case FilterType::kMixed:
      return "mixed";
  }
  return "unknown";
}

FilterType parse_filter_type(std::string_view name) {
  if (name == "step") return FilterType::kStep;
  if (name == "linear") return FilterType::kLinear;
  if (name == "mixed") return FilterType::kMixed;
  throw std::invalid_argument("unknown filter type '" + std::string(name) +
                              "' (expected step, linear or mixed)");
}

void FilterParams::validate() const {
  if (!std::isfinite(db_range.min_db) || !std::isfinite(db_range.max_db) ||
      db_range.min_db > db_range.max_db) {
    throw std::invalid_argument("dB range must be finite with min <= max");
  }
  if (band_range.min_bands < 1 || band_range.min_bands > band_range.max_bands) {
    throw std::invalid_argument("band number range must satisfy 1 <= min <= max");
  }
  if (min_bandwidth < 1) {
    throw std::invalid_argument("minimum bandwidth must be at least 1");
  }
}

void AugmentConfig::validate() const {
  if (!(mix_ratio >= 0.0 && mix_ratio <= 1.0)) {
    throw std::invalid_argument("mix ratio must lie in [0, 1]");
  }
  if (filter_type != FilterType::kLinear) step.validate();
  if (filter_type != FilterType::kStep) linear.validate();
}

const FilterParams& AugmentConfig::active() const {
  return filter_type == FilterType::kStep ? step : linear;
}

int sample_band_count(const FilterParams& params, int n_mels, RandomStream& rng) {
  params.validate();
  if (n_mels < 1) {
    throw std::invalid_argument("spectrogram has no mel bins");
  }
  const int cap = n_mels / params.min_bandwidth;
  if (cap < 1) {
    throw std::invalid_argument("spectrogram too narrow: " + std::to_string(n_mels) +
                                " mel bins < minimum bandwidth " +
                                std::to_string(params.min_bandwidth));
  }
  const int hi = std::min(params.band_range.max_bands, cap);
  const int lo = std::min(params.band_range.min_bands, hi);
  return static_cast<int>(rng.uniform_int(lo, hi));
}

std::vector<int> sample_boundaries(int n_bands, int n_mels, int min_bandwidth, RandomStream& rng) {
  if (n_bands < 1 || min_bandwidth < 1) {
    throw std::invalid_argument("band count and minimum bandwidth must be positive");
  }
  if (static_cast<std::int64_t>(n_bands) * min_bandwidth > n_mels) {
    throw std::invalid_argument("infeasible boundaries: " + std::to_string(n_bands) +
                                " bands of at least " + std::to_string(min_bandwidth) +
                                " bins do not fit in " + std::to_string(n_mels));
  }
  const int slack = n_mels - n_bands * min_bandwidth;
  std::vector<int> interior(static_cast<std::size_t>(n_bands - 1));
  for (int& u : interior) {
    u = static_cast<int>(rng.uniform_int(0, slack));
  }
  std::sort(interior.begin(), interior.end());

  std::vector<int> boundaries;
  boundaries.reserve(static_cast<std::size_t>(n_bands) + 1);
  boundaries.push_back(0);
  for (int i = 0; i < n_bands - 1; ++i) {
    boundaries.push_back(interior[static_cast<std::size_t>(i)] + (i + 1) * min_bandwidth);
  }
  boundaries.push_back(n_mels);
  return boundaries;
}

std::vector<double> sample_weights(int count, DbRange range, RandomStream& rng) {
  if (count < 1) {
    throw std::invalid_argument("weight count must be positive");
  }
  std::vector<double> weights(static_cast<std::size_t>(count));
  for (double& w : weights) {
    w = rng.uniform_real(range.min_db, range.max_db);
  }
  return weights;
}

FilterCurve build_step_curve(std::span<const int> boundaries, std::span<const double> weights,
                             int n_mels) {
  check_boundaries(boundaries, n_mels);
  if (weights.size() + 1 != boundaries.size()) {
    throw std::invalid_argument("step curve needs one weight per band");
  }
  FilterCurve curve;
  curve.kind = FilterType::kStep;
  curve.boundaries.assign(boundaries.begin(), boundaries.end());
  curve.boundary_weights.assign(weights.begin(), weights.end());
  curve.weights_db.resize(static_cast<std::size_t>(n_mels));
  for (std::size_t band = 0; band < weights.size(); ++band) {
    std::fill(curve.weights_db.begin() + boundaries[band],
              curve.weights_db.begin() + boundaries[band + 1], weights[band]);
  }
  return curve;
}

FilterCurve build_linear_curve(std::span<const int> boundaries, std::span<const double> weights,
                               int n_mels) {
  check_boundaries(boundaries, n_mels);
  if (weights.size() != boundaries.size()) {
    throw std::invalid_argument("linear curve needs one weight per boundary");
  }
  FilterCurve curve;
  curve.kind = FilterType::kLinear;
  curve.boundaries.assign(boundaries.begin(), boundaries.end());
  curve.boundary_weights.assign(weights.begin(), weights.end());
  curve.weights_db.resize(static_cast<std::size_t>(n_mels));
  for (std::size_t seg = 0; seg + 1 < boundaries.size(); ++seg) {
    const int start = boundaries[seg];
    const int end = boundaries[seg + 1];
    const double w0 = weights[seg];
    const double w1 = weights[seg + 1];
    const double lo = std::min(w0, w1);
    const double hi = std::max(w0, w1);
    const double slope = (w1 - w0) / static_cast<double>(end - start);
    for (int f = start; f < end; ++f) {
      // Clamp keeps rounding from stepping outside the knot values.
      curve.weights_db[static_cast<std::size_t>(f)] =
          std::clamp(w0 + slope * static_cast<double>(f - start), lo, hi);
    }
  }
  return curve;
}

LogMelSpectrogram apply_curve(const LogMelSpectrogram& spec, std::span<const double> weights_db) {
  if (weights_db.size() != spec.n_mels()) {
    throw std::invalid_argument("curve has " + std::to_string(weights_db.size()) +
                                " bins but the spectrogram has " +
                                std::to_string(spec.n_mels()));
  }
  LogMelSpectrogram out = spec;
  const auto frames = static_cast<std::int64_t>(spec.n_frames());
  const std::size_t n_mels = spec.n_mels();

#pragma omp parallel for schedule(static) if (frames * static_cast<std::int64_t>(n_mels) > 65536)
  for (std::int64_t t = 0; t < frames; ++t) {
    auto row = out.values.row(static_cast<std::size_t>(t));
    for (std::size_t f = 0; f < n_mels; ++f) {
      row[f] += weights_db[f];
    }
  }
  return out;
}

LogMelSpectrogram apply_curve(const LogMelSpectrogram& spec, const FilterCurve& curve) {
  return apply_curve(spec, curve.weights_db);
}

FilterCurve sample_curve(const AugmentConfig& cfg, int n_mels, RandomStream& rng) {
  cfg.validate();
  FilterType type = cfg.filter_type;
  if (type == FilterType::kMixed) {
    type = rng.bernoulli(cfg.mix_ratio) ? FilterType::kStep : FilterType::kLinear;
  }
  const FilterParams& params = type == FilterType::kStep ? cfg.step : cfg.linear;

  const int n = sample_band_count(params, n_mels, rng);
  const std::vector<int> boundaries = sample_boundaries(n, n_mels, params.min_bandwidth, rng);
  if (type == FilterType::kStep) {
    const std::vector<double> weights = sample_weights(n, params.db_range, rng);
    return build_step_curve(boundaries, weights, n_mels);
  }
  const std::vector<double> weights = sample_weights(n + 1, params.db_range, rng);
  return build_linear_curve(boundaries, weights, n_mels);
}

std::pair<LogMelSpectrogram, FilterCurve> filter_augment(const LogMelSpectrogram& spec,
                                                         const AugmentConfig& cfg,
                                                         RandomStream& rng) {
  FilterCurve curve = sample_curve(cfg, static_cast<int>(spec.n_mels()), rng);
  LogMelSpectrogram out = apply_curve(spec, curve);
  return {std::move(out), std::move(curve)};
}

}  // namespace filteraug
