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

// FilterAugment: add a random per-mel-bin dB curve to a log-mel spectrogram.
//
// A curve is built from n bands whose n + 1 boundaries b_0 = 0 < ... < b_n = F
// are at least `min_bandwidth` bins apart. The step type draws one weight per
// band and holds it constant over [b_i, b_{i+1}); the linear type draws one
// weight per boundary and interpolates between them. The mixed type picks step
// with probability `mix_ratio` on each call, otherwise linear.
//
// Every sampling function draws from the RandomStream it is given in a fixed
// order, so a seed fully determines the result:
//   filter_augment: [mixed: bernoulli] -> band count -> n - 1 boundary draws
//                   -> weights (n for step, n + 1 for linear)
//   frequency_mask: width -> start
//   time_mask:      width -> start

#ifndef FILTERAUG_AUGMENT_HPP_
#define FILTERAUG_AUGMENT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "filteraug/random.hpp"
#include "filteraug/spectro.hpp"

namespace filteraug {

enum class FilterType { kStep, kLinear, kMixed };

std::string_view to_string(FilterType type);
/// Parses "step", "linear" or "mixed"; throws std::invalid_argument otherwise.
FilterType parse_filter_type(std::string_view name);

struct DbRange {
  double min_db = 0.0;
  double max_db = 0.0;
  bool operator==(const DbRange&) const = default;
};

struct BandRange {
  int min_bands = 1;
  int max_bands = 1;
  bool operator==(const BandRange&) const = default;
};

/// Hyperparameters of one curve family (step or linear).
struct FilterParams {
  DbRange db_range;
  BandRange band_range;
  int min_bandwidth = 1;  // mel bins

  void validate() const;
  bool operator==(const FilterParams&) const = default;
};

/// `step` is used by the step type and the step branch of mixed; `linear` by
/// the linear type and the linear branch of mixed.
struct AugmentConfig {
  FilterType filter_type = FilterType::kLinear;
  FilterParams step;
  FilterParams linear;
  double mix_ratio = 0.5;  // probability of the step branch (mixed only)

  void validate() const;
  /// Params used when `filter_type` is not mixed.
  const FilterParams& active() const;
  bool operator==(const AugmentConfig&) const = default;
};

struct FilterCurve {
  FilterType kind = FilterType::kStep;  // kStep or kLinear, never kMixed
  std::vector<double> weights_db;       // one entry per mel bin
  std::vector<int> boundaries;          // b_0 .. b_n
  std::vector<double> boundary_weights; // n (step) or n + 1 (linear) values

  std::size_t n_bands() const { return boundaries.empty() ? 0 : boundaries.size() - 1; }
};

// -- sampling ---------------------------------------------------------------

/// Uniform over [lo, hi] with hi = min(max_bands, F / min_bandwidth) and
/// lo = min(min_bands, hi). Throws when F < min_bandwidth.
int sample_band_count(const FilterParams& params, int n_mels, RandomStream& rng);

/// n - 1 draws u_i uniform over [0, F - n * min_bw], sorted, then
/// b_i = u_i + i * min_bw. Every gap is >= min_bw by construction.
std::vector<int> sample_boundaries(int n_bands, int n_mels, int min_bandwidth, RandomStream& rng);

/// `count` independent uniform draws over the closed dB range.
std::vector<double> sample_weights(int count, DbRange range, RandomStream& rng);

// -- curves -----------------------------------------------------------------

/// weights_db[f] = weights[i] for f in [b_i, b_{i+1}).
FilterCurve build_step_curve(std::span<const int> boundaries, std::span<const double> weights,
                             int n_mels);

/// weights_db[f] interpolates (b_i, weights[i]) at integer positions
/// f = 0 .. F - 1. The last knot b_n = F lies one past the final bin.
FilterCurve build_linear_curve(std::span<const int> boundaries, std::span<const double> weights,
                               int n_mels);

/// out[t, f] = spec[t, f] + weights_db[f]. No flooring afterwards.
LogMelSpectrogram apply_curve(const LogMelSpectrogram& spec, std::span<const double> weights_db);
LogMelSpectrogram apply_curve(const LogMelSpectrogram& spec, const FilterCurve& curve);

/// Draws a curve for an F-bin spectrogram without applying it.
FilterCurve sample_curve(const AugmentConfig& cfg, int n_mels, RandomStream& rng);

/// Samples a curve, applies it, and returns both.
std::pair<LogMelSpectrogram, FilterCurve> filter_augment(const LogMelSpectrogram& spec,
                                                         const AugmentConfig& cfg,
                                                         RandomStream& rng);

// -- masking baselines ------------------------------------------------------

struct MaskFill {
  enum class Mode { kSpectrogramMean, kConstant };
  Mode mode = Mode::kSpectrogramMean;
  double constant_db = 0.0;

  static MaskFill mean() { return {}; }
  static MaskFill constant(double db) { return {Mode::kConstant, db}; }
  bool operator==(const MaskFill&) const = default;
};

struct MaskConfig {
  double max_mask_ratio = 0.0;
  int time_mask_min = 0;
  int time_mask_max = 0;
  MaskFill fill;

  void validate() const;
  bool operator==(const MaskConfig&) const = default;
};

/// Where a mask landed: [start, start + width) along the masked axis.
struct MaskRegion {
  int start = 0;
  int width = 0;
};

/// Value written into masked cells for `spec` (global mean or the constant).
double mask_fill_value(const LogMelSpectrogram& spec, const MaskFill& fill);

/// Width uniform over [0, floor(F * max_mask_ratio)], start uniform over
/// [0, F - width]; mel bins [start, start + width) set to the fill value.
LogMelSpectrogram frequency_mask(const LogMelSpectrogram& spec, const MaskConfig& cfg,
                                 RandomStream& rng, MaskRegion* region = nullptr);

/// Width uniform over [t_min, t_max] (both capped at T), start uniform over
/// [0, T - width]; frames [start, start + width) set to the fill value.
LogMelSpectrogram time_mask(const LogMelSpectrogram& spec, const MaskConfig& cfg,
                            RandomStream& rng, MaskRegion* region = nullptr);

// -- recipes ----------------------------------------------------------------

/// What the CLI and batch runner apply to one spectrogram, in this order:
/// FilterAugment, frequency mask, time mask. Each stage is optional and all
/// stages draw from the same stream.
struct AugmentRecipe {
  std::optional<AugmentConfig> filter;
  std::optional<double> freq_mask_ratio;
  std::optional<std::pair<int, int>> time_mask_range;
  MaskFill fill;

  void validate() const;
  bool operator==(const AugmentRecipe&) const = default;
};

struct RecipeResult {
  LogMelSpectrogram spec;
  std::optional<FilterCurve> curve;
};

RecipeResult run_recipe(const LogMelSpectrogram& spec, const AugmentRecipe& recipe,
                        RandomStream& rng);

}  // namespace filteraug

#endif  // FILTERAUG_AUGMENT_HPP_
