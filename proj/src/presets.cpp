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

#include "filteraug/presets.hpp"

#include <stdexcept>
#include <string>

namespace filteraug {

std::string_view to_string(Preset preset) {
  switch (preset) {
    case Preset::kSedStep:
      return "sed-step";
    case Preset::kSedLinear:
      return "sed-linear";
    case Preset::kSedMixed:
      return "sed-mixed";
    case Preset::kSvLinear:
      return "sv-linear";
    case Preset::kFreqMask:
      return "freq-mask";
  }
  return "unknown";
}

Preset parse_preset(std::string_view name) {
  for (Preset p : kAllPresets) {
    if (to_string(p) == name) {
      return p;
    }
  }
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

FilterParams sed_step_params() { return {{-6.0, 6.0}, {2, 5}, 4}; }

FilterParams sed_linear_params() { return {{-6.0, 6.0}, {3, 6}, 6}; }

FilterParams sv_linear_params() {
  FilterParams p = sed_linear_params();
  p.db_range = {-1.5, 1.5};
  return p;
}

AugmentRecipe preset_recipe(Preset preset) {
  AugmentRecipe recipe;
  if (preset == Preset::kFreqMask) {
    recipe.freq_mask_ratio = kFreqMaskRatio;
    return recipe;
  }
  AugmentConfig cfg;
  cfg.step = sed_step_params();
  cfg.linear = sed_linear_params();
  cfg.mix_ratio = kSedMixRatio;
  switch (preset) {
    case Preset::kSedStep:
      cfg.filter_type = FilterType::kStep;
      break;
    case Preset::kSedLinear:
      cfg.filter_type = FilterType::kLinear;
      break;
    case Preset::kSedMixed:
      cfg.filter_type = FilterType::kMixed;
      break;
    case Preset::kSvLinear:
      cfg.filter_type = FilterType::kLinear;
      cfg.linear = sv_linear_params();
      break;
    case Preset::kFreqMask:
      break;
  }
  recipe.filter = cfg;
  return recipe;
}

}  // namespace filteraug
