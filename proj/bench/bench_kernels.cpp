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

// Optimized kernels against the serial reference.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "filteraug/augment.hpp"
#include "filteraug/spectro.hpp"
#include "reference/reference.hpp"

namespace filteraug {
namespace {

Waveform noise(std::size_t n) {
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Waveform w;
  w.samples.resize(n);
  for (double& s : w.samples) s = u(gen);
  return w;
}

LogMelSpectrogram random_spec(std::size_t frames, std::size_t mels) {
  std::mt19937_64 gen(2);
  std::uniform_real_distribution<double> u(-100.0, 20.0);
  LogMelSpectrogram s;
  s.values = Matrix(frames, mels);
  for (std::size_t t = 0; t < frames; ++t) {
    for (std::size_t f = 0; f < mels; ++f) s.values(t, f) = u(gen);
  }
  return s;
}

StftConfig small_stft() {
  StftConfig cfg;
  cfg.n_fft = cfg.win_length = 512;
  cfg.hop_length = 256;
  return cfg;
}

void BM_StftPower(benchmark::State& state) {
  const Waveform w = noise(16000);
  for (auto _ : state) benchmark::DoNotOptimize(stft_power(w, small_stft()));
}
BENCHMARK(BM_StftPower);

void BM_StftPowerReference(benchmark::State& state) {
  const Waveform w = noise(16000);
  for (auto _ : state) benchmark::DoNotOptimize(reference::stft_power(w, small_stft()));
}
BENCHMARK(BM_StftPowerReference);

void BM_LogMel(benchmark::State& state) {
  const Matrix power = stft_power(noise(16000 * 10), StftConfig{});
  const MelFilterbank fb = mel_filterbank(16000, 2048, 128, 0.0, 8000.0);
  for (auto _ : state) benchmark::DoNotOptimize(log_mel(power, fb));
}
BENCHMARK(BM_LogMel);

void BM_LogMelReference(benchmark::State& state) {
  const Matrix power = stft_power(noise(16000 * 10), StftConfig{});
  const MelFilterbank fb = mel_filterbank(16000, 2048, 128, 0.0, 8000.0);
  for (auto _ : state) benchmark::DoNotOptimize(reference::log_mel(power, fb.weights, -100.0));
}
BENCHMARK(BM_LogMelReference);

void BM_ApplyCurve(benchmark::State& state) {
  const auto frames = static_cast<std::size_t>(state.range(0));
  const LogMelSpectrogram s = random_spec(frames, 128);
  const FilterCurve c = build_linear_curve(std::vector<int>{0, 40, 90, 128},
                                           std::vector<double>{-3.0, 5.0, 1.0, -6.0}, 128);
  for (auto _ : state) benchmark::DoNotOptimize(apply_curve(s, c));
}
BENCHMARK(BM_ApplyCurve)->Arg(618)->Arg(6180);

void BM_ApplyCurveReference(benchmark::State& state) {
  const auto frames = static_cast<std::size_t>(state.range(0));
  const LogMelSpectrogram s = random_spec(frames, 128);
  const std::vector<double> curve =
      reference::linear_curve({0, 40, 90, 128}, {-3.0, 5.0, 1.0, -6.0}, 128);
  for (auto _ : state) benchmark::DoNotOptimize(reference::apply_curve(s, curve));
}
BENCHMARK(BM_ApplyCurveReference)->Arg(618)->Arg(6180);

void BM_FilterAugment(benchmark::State& state) {
  const LogMelSpectrogram s = random_spec(618, 128);
  AugmentConfig cfg;
  cfg.filter_type = FilterType::kMixed;
  cfg.step = {{-6.0, 6.0}, {2, 5}, 4};
  cfg.linear = {{-6.0, 6.0}, {3, 6}, 6};
  RandomStream rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(filter_augment(s, cfg, rng));
}
BENCHMARK(BM_FilterAugment);

}  // namespace
}  // namespace filteraug

BENCHMARK_MAIN();
