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

#include "cli.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "filteraug/io.hpp"
#include "filteraug/presets.hpp"
#include "json.hpp"

namespace filteraug::cli {

namespace {

using nlohmann::ordered_json;

template <typename T>
struct RangeOption {
  std::vector<T> values;
  CLI::Option* option = nullptr;

  bool given() const { return option != nullptr && option->count() > 0; }
};

// CLI11 keeps the storage; these are copied into RecipeFlags after parsing.
struct RecipeOptions {
  std::string preset;
  std::string filter_type;
  RangeOption<double> db_range;
  RangeOption<int> band_range;
  int min_bandwidth = 0;
  double mix_ratio = 0.0;
  double freq_mask_ratio = 0.0;
  RangeOption<int> time_mask_range;
  std::string mask_fill;
  CLI::Option* preset_opt = nullptr;
  CLI::Option* filter_type_opt = nullptr;
  CLI::Option* min_bandwidth_opt = nullptr;
  CLI::Option* mix_ratio_opt = nullptr;
  CLI::Option* freq_mask_opt = nullptr;
  CLI::Option* mask_fill_opt = nullptr;

  void attach(CLI::App* app) {
    preset_opt = app->add_option("--preset", preset,
                                 "sed-step | sed-linear | sed-mixed | sv-linear | freq-mask");
    filter_type_opt =
        app->add_option("--filter-type", filter_type, "step | linear | mixed | none");
    db_range.option = app->add_option("--db-range", db_range.values, "MIN MAX weight range in dB")
                          ->expected(2)
                          ->allow_extra_args(false);
    band_range.option =
        app->add_option("--band-range", band_range.values, "MIN MAX number of bands")
            ->expected(2)
            ->allow_extra_args(false);
    min_bandwidth_opt =
        app->add_option("--min-bandwidth", min_bandwidth, "minimum band width in mel bins");
    mix_ratio_opt =
        app->add_option("--mix-ratio", mix_ratio, "probability of the step type (mixed)");
    freq_mask_opt = app->add_option("--freq-mask-ratio", freq_mask_ratio,
                                    "enable frequency masking with this maximum ratio of bins");
    time_mask_range.option =
        app->add_option("--time-mask-range", time_mask_range.values,
                        "MIN MAX enable time masking with this width range in frames")
            ->expected(2)
            ->allow_extra_args(false);
    mask_fill_opt =
        app->add_option("--mask-fill", mask_fill, "mask fill: 'mean' (default) or a dB value");
  }

  RecipeFlags flags() const {
    RecipeFlags f;
    if (preset_opt->count()) f.preset = preset;
    if (filter_type_opt->count()) f.filter_type = filter_type;
    if (db_range.given()) f.db_range = std::pair{db_range.values[0], db_range.values[1]};
    if (band_range.given()) {
      f.band_range = std::pair{band_range.values[0], band_range.values[1]};
    }
    if (min_bandwidth_opt->count()) f.min_bandwidth = min_bandwidth;
    if (mix_ratio_opt->count()) f.mix_ratio = mix_ratio;
    if (freq_mask_opt->count()) f.freq_mask_ratio = freq_mask_ratio;
    if (time_mask_range.given()) {
      f.time_mask_range = std::pair{time_mask_range.values[0], time_mask_range.values[1]};
    }
    if (mask_fill_opt->count()) f.mask_fill = mask_fill;
    return f;
  }
};

struct FeatureOptions {
  FeatureConfig cfg;

  void attach(CLI::App* app) {
    app->add_option("--n-fft", cfg.stft.n_fft, "FFT size")->capture_default_str();
    app->add_option("--hop-length", cfg.stft.hop_length, "hop in samples")->capture_default_str();
    app->add_option("--win-length", cfg.stft.win_length, "window length in samples")
        ->capture_default_str();
    app->add_option("--n-mels", cfg.n_mels, "number of mel bins")->capture_default_str();
    app->add_option("--f-min", cfg.f_min, "lowest filterbank frequency (Hz)")
        ->capture_default_str();
    app->add_option("--f-max", cfg.f_max, "highest filterbank frequency (Hz)")
        ->capture_default_str();
    app->add_option("--db-floor", cfg.db_floor, "dB floor")->capture_default_str();
  }
};

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (text.empty() || text[0] == '-') throw std::invalid_argument(text);
    v = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid seed '" + text + "'");
  }
  if (used != text.size()) {
    throw std::invalid_argument("invalid seed '" + text + "'");
  }
  return v;
}

void override_params(AugmentConfig& cfg, const RecipeFlags& flags) {
  auto apply = [&](FilterParams& p) {
    if (flags.db_range) p.db_range = {flags.db_range->first, flags.db_range->second};
    if (flags.band_range) p.band_range = {flags.band_range->first, flags.band_range->second};
    if (flags.min_bandwidth) p.min_bandwidth = *flags.min_bandwidth;
  };
  if (cfg.filter_type != FilterType::kLinear) apply(cfg.step);
  if (cfg.filter_type != FilterType::kStep) apply(cfg.linear);
  if (flags.mix_ratio) cfg.mix_ratio = *flags.mix_ratio;
}

ordered_json params_json(const FilterParams& p) {
  ordered_json j;
  j["db_range"] = {p.db_range.min_db, p.db_range.max_db};
  j["band_number_range"] = {p.band_range.min_bands, p.band_range.max_bands};
  j["min_bandwidth"] = p.min_bandwidth;
  return j;
}

struct ItemOutcome {
  bool ok = true;
  std::string message;
};

ItemOutcome augment_one(const std::filesystem::path& in, const std::filesystem::path& out,
                        const AugmentRecipe& recipe, std::uint64_t seed) {
  try {
    const LogMelSpectrogram spec = load_spectrogram(in);
    RandomStream rng(seed);
    const RecipeResult result = run_recipe(spec, recipe, rng);
    write_spectrogram(result.spec, out);
    return {};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

int cmd_spectrogram(const std::string& in, const std::string& out, const FeatureConfig& cfg,
                    std::ostream& err) {
  try {
    const Waveform w = normalize_peak(read_wav(in));
    write_spectrogram(compute_log_mel(w, cfg), out);
  } catch (const std::exception& e) {
    err << "error: " << in << ": " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

struct AugmentArgs {
  std::string input;
  std::string output;
  std::string seed;
  std::string emit_curve;
  std::string render_before;
  std::string render_after;
  bool print_config = false;
};

int cmd_augment(const AugmentArgs& args, const RecipeFlags& flags, std::ostream& out,
                std::ostream& err) {
  AugmentRecipe recipe;
  std::uint64_t seed = 0;
  try {
    recipe = resolve_recipe(flags);
    seed = args.seed.empty() ? default_seed() : parse_seed(args.seed);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  if (args.print_config) {
    out << describe_recipe(recipe, seed) << "\n";
    if (args.input.empty() && args.output.empty()) return kExitOk;
  }
  if (args.input.empty() || args.output.empty()) {
    err << "error: augment needs an input and an output path\n";
    return kExitInvalid;
  }
  if (!args.emit_curve.empty() && !recipe.filter) {
    err << "error: --emit-curve needs a filter type (the recipe only masks)\n";
    return kExitInvalid;
  }

  try {
    const LogMelSpectrogram spec = load_spectrogram(args.input);
    RandomStream rng(seed);
    const RecipeResult result = run_recipe(spec, recipe, rng);
    write_spectrogram(result.spec, args.output);
    if (!args.emit_curve.empty()) write_curve_csv(result.curve->weights_db, args.emit_curve);
    if (!args.render_before.empty()) render_spectrogram(spec, RenderSpec{}, args.render_before);
    if (!args.render_after.empty()) {
      render_spectrogram(result.spec, RenderSpec{}, args.render_after);
    }
  } catch (const std::exception& e) {
    err << "error: " << args.input << ": " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

struct BatchArgs {
  std::string manifest;
  std::string out_dir;
  std::string master_seed;
  int jobs = 1;
};

int cmd_batch(const BatchArgs& args, const RecipeFlags& flags, std::ostream& out,
              std::ostream& err) {
  AugmentRecipe recipe;
  std::uint64_t master = 0;
  std::vector<ManifestEntry> entries;
  try {
    recipe = resolve_recipe(flags);
    master = args.master_seed.empty() ? default_seed() : parse_seed(args.master_seed);
    if (args.jobs < 1) throw std::invalid_argument("--jobs must be at least 1");
    entries = read_manifest(args.manifest);
    std::set<std::string> stems;
    for (const auto& e : entries) {
      if (!stems.insert(e.path.stem().string()).second) {
        throw std::invalid_argument("manifest lists two inputs with the file stem '" +
                                    e.path.stem().string() + "'");
      }
    }
    std::filesystem::create_directories(args.out_dir);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  std::vector<ItemOutcome> outcomes(entries.size());
  const auto n = static_cast<std::int64_t>(entries.size());
#pragma omp parallel for num_threads(args.jobs) schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    const ManifestEntry& e = entries[static_cast<std::size_t>(i)];
    const auto target = std::filesystem::path(args.out_dir) / (e.path.stem().string() + ".lmsp");
    outcomes[static_cast<std::size_t>(i)] =
        augment_one(e.path, target, recipe, split_seed(master, e.index));
  }

  std::size_t failed = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!outcomes[i].ok) {
      ++failed;
      err << "error: " << entries[i].path.string() << ": " << outcomes[i].message << "\n";
    }
  }
  out << "processed " << entries.size() - failed << "/" << entries.size() << " inputs\n";
  return failed == 0 ? kExitOk : kExitPartialFailure;
}

struct RenderArgs {
  std::string input;
  std::string output;
  std::vector<double> display_range{-80.0, 0.0};
  std::string colormap = "gray";
  int curve_height = 200;
  double curve_range = 0.0;
};

int cmd_render(const RenderArgs& args, std::ostream& err) {
  try {
    if (is_spectrogram_file(args.input)) {
      RenderSpec spec;
      spec.lo_db = args.display_range[0];
      spec.hi_db = args.display_range[1];
      if (args.colormap == "gray" || args.colormap == "grayscale") {
        spec.colormap = Colormap::kGrayscale;
      } else if (args.colormap == "viridis") {
        spec.colormap = Colormap::kViridis;
      } else {
        throw std::invalid_argument("unknown colormap '" + args.colormap + "'");
      }
      render_spectrogram(read_spectrogram(args.input), spec, args.output);
    } else {
      CurvePlot plot;
      plot.height = args.curve_height;
      plot.half_range_db = args.curve_range;
      render_curve(read_curve_csv(args.input), args.output, plot);
    }
  } catch (const std::exception& e) {
    err << "error: " << args.input << ": " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace

AugmentRecipe resolve_recipe(const RecipeFlags& flags) {
  AugmentRecipe recipe =
      preset_recipe(flags.preset ? parse_preset(*flags.preset) : Preset::kSedLinear);

  if (flags.filter_type) {
    if (*flags.filter_type == "none") {
      recipe.filter.reset();
    } else {
      const FilterType type = parse_filter_type(*flags.filter_type);
      if (!recipe.filter) {
        recipe.filter = preset_recipe(Preset::kSedMixed).filter;
      }
      recipe.filter->filter_type = type;
    }
  }

  const bool filter_flags = flags.db_range || flags.band_range || flags.min_bandwidth ||
                            flags.mix_ratio;
  if (filter_flags) {
    if (!recipe.filter) {
      throw std::invalid_argument(
          "filter flags (--db-range, --band-range, --min-bandwidth, --mix-ratio) need a "
          "filter type; pass --filter-type");
    }
    override_params(*recipe.filter, flags);
  }

  if (flags.freq_mask_ratio) recipe.freq_mask_ratio = *flags.freq_mask_ratio;
  if (flags.time_mask_range) recipe.time_mask_range = *flags.time_mask_range;
  if (flags.mask_fill) {
    if (*flags.mask_fill == "mean") {
      recipe.fill = MaskFill::mean();
    } else {
      char* end = nullptr;
      const double db = std::strtod(flags.mask_fill->c_str(), &end);
      if (end == flags.mask_fill->c_str() || *end != '\0') {
        throw std::invalid_argument("--mask-fill expects 'mean' or a number");
      }
      recipe.fill = MaskFill::constant(db);
    }
  }

  recipe.validate();
  return recipe;
}

std::string describe_recipe(const AugmentRecipe& recipe, std::uint64_t seed) {
  ordered_json j;
  if (recipe.filter) {
    const AugmentConfig& cfg = *recipe.filter;
    ordered_json f;
    f["type"] = std::string(to_string(cfg.filter_type));
    if (cfg.filter_type != FilterType::kLinear) f["step"] = params_json(cfg.step);
    if (cfg.filter_type != FilterType::kStep) f["linear"] = params_json(cfg.linear);
    if (cfg.filter_type == FilterType::kMixed) f["mix_ratio"] = cfg.mix_ratio;
    j["filter"] = f;
  } else {
    j["filter"] = nullptr;
  }
  j["freq_mask_ratio"] =
      recipe.freq_mask_ratio ? ordered_json(*recipe.freq_mask_ratio) : ordered_json(nullptr);
  j["time_mask_range"] =
      recipe.time_mask_range
          ? ordered_json{recipe.time_mask_range->first, recipe.time_mask_range->second}
          : ordered_json(nullptr);
  j["mask_fill"] = recipe.fill.mode == MaskFill::Mode::kSpectrogramMean
                       ? ordered_json("mean")
                       : ordered_json(recipe.fill.constant_db);
  j["seed"] = seed;
  return j.dump(2);
}

std::uint64_t default_seed() {
  const char* env = std::getenv("FILTERAUG_SEED");
  if (env == nullptr || *env == '\0') {
    return kDefaultSeed;
  }
  try {
    return parse_seed(env);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(std::string("FILTERAUG_SEED is not an unsigned integer: '") +
                                env + "'");
  }
}

LogMelSpectrogram load_spectrogram(const std::filesystem::path& path,
                                   const FeatureConfig& features) {
  if (is_spectrogram_file(path)) {
    return read_spectrogram(path);
  }
  return compute_log_mel(normalize_peak(read_wav(path)), features);
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) {
    throw std::invalid_argument("cannot open manifest " + manifest.string());
  }
  const std::filesystem::path base = manifest.parent_path();
  std::vector<ManifestEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    std::filesystem::path p = line.substr(first, last - first + 1);
    if (p.is_relative()) p = base / p;
    entries.push_back({entries.size(), std::move(p)});
  }
  return entries;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"FilterAugment and masking augmentation for log-mel spectrograms", "filteraug"};
  app.require_subcommand(1);

  auto* spectrogram = app.add_subcommand("spectrogram", "WAV -> peak-normalized log-mel LMSP");
  std::string spec_in;
  std::string spec_out;
  FeatureOptions features;
  spectrogram->add_option("input", spec_in, "input WAV")->required();
  spectrogram->add_option("output", spec_out, "output LMSP")->required();
  features.attach(spectrogram);

  auto* augment = app.add_subcommand("augment", "augment one LMSP or WAV input");
  AugmentArgs aug;
  RecipeOptions aug_recipe;
  augment->add_option("input", aug.input, "input LMSP or WAV");
  augment->add_option("output", aug.output, "output LMSP");
  aug_recipe.attach(augment);
  augment->add_option("--seed", aug.seed, "seed (default: $FILTERAUG_SEED or 42)");
  augment->add_option("--emit-curve", aug.emit_curve, "write the sampled filter curve as CSV");
  augment->add_option("--render-before", aug.render_before, "PNG of the input spectrogram");
  augment->add_option("--render-after", aug.render_after, "PNG of the augmented spectrogram");
  augment->add_flag("--print-config", aug.print_config, "print the resolved configuration");

  auto* batch = app.add_subcommand("batch", "augment every input listed in a manifest");
  BatchArgs bat;
  RecipeOptions bat_recipe;
  batch->add_option("manifest", bat.manifest, "newline-separated input paths")->required();
  batch->add_option("out_dir", bat.out_dir, "output directory")->required();
  batch->add_option("--master-seed,--seed", bat.master_seed,
                    "master seed (default: $FILTERAUG_SEED or 42)");
  batch->add_option("--jobs", bat.jobs, "parallel workers")->capture_default_str();
  bat_recipe.attach(batch);

  auto* render = app.add_subcommand("render", "render an LMSP spectrogram or a curve CSV to PNG");
  RenderArgs ren;
  render->add_option("input", ren.input, "LMSP file or curve CSV")->required();
  render->add_option("output", ren.output, "output PNG")->required();
  render->add_option("--db-display-range", ren.display_range, "LO HI display range in dB")
      ->expected(2)
      ->allow_extra_args(false);
  render->add_option("--colormap", ren.colormap, "gray | viridis")->capture_default_str();
  render->add_option("--curve-height", ren.curve_height, "curve plot height in pixels")
      ->capture_default_str();
  render->add_option("--curve-range", ren.curve_range,
                     "curve plot half range in dB (0 = fit to the curve)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  if (spectrogram->parsed()) return cmd_spectrogram(spec_in, spec_out, features.cfg, err);
  if (augment->parsed()) return cmd_augment(aug, aug_recipe.flags(), out, err);
  if (batch->parsed()) return cmd_batch(bat, bat_recipe.flags(), out, err);
  if (render->parsed()) return cmd_render(ren, err);
  return kExitInvalid;
}

}  // namespace filteraug::cli
