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
#include <numeric>
#include <stdexcept>

#include "filteraug/augment.hpp"

namespace filteraug {

void MaskConfig::validate() const {
  if (!(max_mask_ratio >= 0.0 && max_mask_ratio <= 1.0)) {
    throw std::invalid_argument("maximum masking ratio must lie in [0, 1]");
  }
  if (time_mask_min < 0 || time_mask_min > time_mask_max) {
    throw std::invalid_argument("time mask range must satisfy 0 <= min <= max");
  }
  if (fill.mode == MaskFill::Mode::kConstant && !std::isfinite(fill.constant_db)) {
    throw std::invalid_argument("constant mask fill must be finite");
  }
}

double mask_fill_value(const LogMelSpectrogram& spec, const MaskFill& fill) {
  if (fill.mode == MaskFill::Mode::kConstant) {
    return fill.constant_db;
  }
  const auto values = spec.values.flat();
  if (values.empty()) {
    return 0.0;
  }
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

LogMelSpectrogram frequency_mask(const LogMelSpectrogram& spec, const MaskConfig& cfg,
                                 RandomStream& rng, MaskRegion* region) {
  cfg.validate();
  const int n_mels = static_cast<int>(spec.n_mels());
  const int max_width = static_cast<int>(std::floor(n_mels * cfg.max_mask_ratio));
  const int width = static_cast<int>(rng.uniform_int(0, max_width));
  const int start = static_cast<int>(rng.uniform_int(0, n_mels - width));
  if (region != nullptr) {
    *region = {start, width};
  }

  LogMelSpectrogram out = spec;
  if (width == 0) {
    return out;
  }
  const double fill = mask_fill_value(spec, cfg.fill);
  for (std::size_t t = 0; t < out.n_frames(); ++t) {
    auto row = out.values.row(t);
    std::fill(row.begin() + start, row.begin() + start + width, fill);
  }
  return out;
}

LogMelSpectrogram time_mask(const LogMelSpectrogram& spec, const MaskConfig& cfg,
                            RandomStream& rng, MaskRegion* region) {
  cfg.validate();
  const int n_frames = static_cast<int>(spec.n_frames());
  const int hi = std::min(cfg.time_mask_max, n_frames);
  const int lo = std::min(cfg.time_mask_min, hi);
  const int width = static_cast<int>(rng.uniform_int(lo, hi));
  const int start = static_cast<int>(rng.uniform_int(0, n_frames - width));
  if (region != nullptr) {
    *region = {start, width};
  }

  LogMelSpectrogram out = spec;
  if (width == 0) {
    return out;
  }
  const double fill = mask_fill_value(spec, cfg.fill);
  for (int t = start; t < start + width; ++t) {
    auto row = out.values.row(static_cast<std::size_t>(t));
    std::fill(row.begin(), row.end(), fill);
  }
  return out;
}

}  // namespace filteraug
