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

// Serial reference kernels for tests and benchmarks.
//
// Everything here is written out as plain loops straight from the defining
// formulas: a direct O(N^2) DFT instead of FFTW, per-bin band lookup instead
// of fills, explicit (1 - t) * a + t * b interpolation. Only the RandomStream
// primitives and the value types are shared with the optimized library.

#ifndef FILTERAUG_REFERENCE_REFERENCE_HPP_
#define FILTERAUG_REFERENCE_REFERENCE_HPP_

#include <utility>
#include <vector>

#include "filteraug/augment.hpp"
#include "filteraug/spectro.hpp"

namespace filteraug::reference {

Matrix stft_power(const Waveform& w, const StftConfig& cfg);

LogMelSpectrogram log_mel(const Matrix& power, const Matrix& fb_weights, double db_floor);

std::vector<double> step_curve(const std::vector<int>& boundaries,
                               const std::vector<double>& weights, int n_mels);

std::vector<double> linear_curve(const std::vector<int>& boundaries,
                                 const std::vector<double>& weights, int n_mels);

LogMelSpectrogram apply_curve(const LogMelSpectrogram& spec, const std::vector<double>& curve);

struct NaiveAugmentResult {
  LogMelSpectrogram spec;
  std::vector<double> curve;
  bool used_step = false;
};

/// Same draw order as filteraug::filter_augment, everything else rebuilt.
NaiveAugmentResult filter_augment(const LogMelSpectrogram& spec, const AugmentConfig& cfg,
                                  RandomStream& rng);

}  // namespace filteraug::reference

#endif  // FILTERAUG_REFERENCE_REFERENCE_HPP_
