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

#include "filteraug/random.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace filteraug {

std::int64_t RandomStream::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw std::invalid_argument("uniform_int: empty range");
  }
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::int64_t>(next_u64());
  }
  const std::uint64_t range = span + 1;
  // Largest multiple of `range` representable; draws at or above it are
  // rejected so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              (std::numeric_limits<std::uint64_t>::max() % range + 1) % range;
  std::uint64_t x = next_u64();
  while (x > limit) {
    x = next_u64();
  }
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
}

double RandomStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform_real(double lo, double hi) {
  if (lo > hi) {
    throw std::invalid_argument("uniform_real: empty range");
  }
  const double u = uniform01();
  return std::clamp(lo + (hi - lo) * u, lo, hi);
}

bool RandomStream::bernoulli(double p) { return uniform01() < p; }

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t split_seed(std::uint64_t master_seed, std::uint64_t index) {
  return mix64(master_seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

}  // namespace filteraug
