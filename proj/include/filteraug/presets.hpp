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

// Tuned hyperparameter sets.
//
//   sed-step    step,   dB (-6, 6),     bands (2, 5), min bandwidth 4
//   sed-linear  linear, dB (-6, 6),     bands (3, 6), min bandwidth 6
//   sed-mixed   mixed of the two above, mix ratio 0.9
//   sv-linear   sed-linear with dB (-1.5, 1.5)
//   freq-mask   frequency masking only, max ratio 1/16

#ifndef FILTERAUG_PRESETS_HPP_
#define FILTERAUG_PRESETS_HPP_

#include <array>
#include <string_view>

#include "filteraug/augment.hpp"

namespace filteraug {

enum class Preset { kSedStep, kSedLinear, kSedMixed, kSvLinear, kFreqMask };

inline constexpr std::array<Preset, 5> kAllPresets = {
    Preset::kSedStep, Preset::kSedLinear, Preset::kSedMixed, Preset::kSvLinear,
    Preset::kFreqMask};

inline constexpr double kSedMixRatio = 0.9;
inline constexpr double kFreqMaskRatio = 1.0 / 16.0;

std::string_view to_string(Preset preset);
/// Throws std::invalid_argument for unknown names.
Preset parse_preset(std::string_view name);

FilterParams sed_step_params();
FilterParams sed_linear_params();
FilterParams sv_linear_params();

/// Fully resolved recipe for a preset. Filter presets carry both the step and
/// linear sub-configs so that switching the filter type keeps tuned values.
AugmentRecipe preset_recipe(Preset preset);

}  // namespace filteraug

#endif  // FILTERAUG_PRESETS_HPP_
