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

#include <utility>

#include "filteraug/augment.hpp"

namespace filteraug {

void AugmentRecipe::validate() const {
  MaskConfig masks;
  masks.fill = fill;
  if (filter) filter->validate();
  if (freq_mask_ratio) masks.max_mask_ratio = *freq_mask_ratio;
  if (time_mask_range) {
    masks.time_mask_min = time_mask_range->first;
    masks.time_mask_max = time_mask_range->second;
  }
  masks.validate();
}

RecipeResult run_recipe(const LogMelSpectrogram& spec, const AugmentRecipe& recipe,
                        RandomStream& rng) {
  recipe.validate();
  RecipeResult result{spec, std::nullopt};
  if (recipe.filter) {
    auto [augmented, curve] = filter_augment(result.spec, *recipe.filter, rng);
    result.spec = std::move(augmented);
    result.curve = std::move(curve);
  }
  if (recipe.freq_mask_ratio) {
    MaskConfig cfg;
    cfg.max_mask_ratio = *recipe.freq_mask_ratio;
    cfg.fill = recipe.fill;
    result.spec = frequency_mask(result.spec, cfg, rng);
  }
  if (recipe.time_mask_range) {
    MaskConfig cfg;
    cfg.time_mask_min = recipe.time_mask_range->first;
    cfg.time_mask_max = recipe.time_mask_range->second;
    cfg.fill = recipe.fill;
    result.spec = time_mask(result.spec, cfg, rng);
  }
  return result;
}

}  // namespace filteraug
