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

#ifndef FILTERAUG_TOOLS_CLI_HPP_
#define FILTERAUG_TOOLS_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "filteraug/augment.hpp"
#include "filteraug/spectro.hpp"

namespace filteraug::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPartialFailure = 1;
inline constexpr int kExitInvalid = 2;

/// Augmentation flags as given on the command line, before resolution.
struct RecipeFlags {
  std::optional<std::string> preset;
  std::optional<std::string> filter_type;  // step | linear | mixed | none
  std::optional<std::pair<double, double>> db_range;
  std::optional<std::pair<int, int>> band_range;
  std::optional<int> min_bandwidth;
  std::optional<double> mix_ratio;
  std::optional<double> freq_mask_ratio;
  std::optional<std::pair<int, int>> time_mask_range;
  std::optional<std::string> mask_fill;  // "mean" or a dB value
};

/// Starts from the preset (sed-linear when none is given), then applies
/// explicit flags. Filter flags touch the sub-config(s) the active filter
/// type uses. Throws std::invalid_argument for unknown names or values that
/// fail validation.
AugmentRecipe resolve_recipe(const RecipeFlags& flags);

/// Stable JSON rendering of a resolved recipe and seed, as --print-config
/// prints it.
std::string describe_recipe(const AugmentRecipe& recipe, std::uint64_t seed);

/// Seed from FILTERAUG_SEED when set, otherwise kDefaultSeed. Throws
/// std::invalid_argument when the variable is not an unsigned integer.
std::uint64_t default_seed();

/// Reads an LMSP file as-is, or a WAV file through peak normalization and the
/// default log-mel front end. The format is detected from the file contents.
LogMelSpectrogram load_spectrogram(const std::filesystem::path& path,
                                   const FeatureConfig& features = {});

struct ManifestEntry {
  std::size_t index = 0;  // 0-based among entries; seeds the item's stream
  std::filesystem::path path;
};

/// One path per line. Blank lines and lines starting with '#' are skipped and
/// do not consume an index. Relative paths resolve against the manifest's
/// directory.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& manifest);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace filteraug::cli

#endif  // FILTERAUG_TOOLS_CLI_HPP_
