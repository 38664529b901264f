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

#ifndef FILTERAUG_RANDOM_HPP_
#define FILTERAUG_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace filteraug {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Deterministic random source threaded through every sampling operation.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard library distributions are not (their algorithms are
/// implementation-defined), so the integer, real and Bernoulli draws below are
/// implemented here on top of raw 64-bit outputs. Together this gives the same
/// draw sequence for a seed on every conforming platform.
///
/// A stream is single-owner: do not share one across threads.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [lo, hi] (inclusive), unbiased (rejection sampling).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  /// Uniform double in [lo, hi]; never leaves the closed interval.
  double uniform_real(double lo, double hi);

  /// True with probability p. p >= 1 is always true, p <= 0 always false.
  bool bernoulli(double p);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed for item `index` of a batch run under `master_seed`:
/// mix64(master_seed + 0x9E3779B97F4A7C15 * (index + 1)). Items get
/// independent streams, so results do not depend on processing order.
std::uint64_t split_seed(std::uint64_t master_seed, std::uint64_t index);

}  // namespace filteraug

#endif  // FILTERAUG_RANDOM_HPP_
