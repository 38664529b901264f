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

#include "test_support.hpp"

#include <unistd.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iterator>
#include <numbers>
#include <stdexcept>

namespace filteraug::testing {

namespace {

void put16(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int s = 0; s < 32; s += 8) out.push_back(static_cast<std::uint8_t>(v >> s));
}

void put_tag(std::vector<std::uint8_t>& out, const char* tag) { out.insert(out.end(), tag, tag + 4); }

}  // namespace

std::vector<std::uint8_t> encode_wav(const std::vector<double>& interleaved, int channels,
                                     std::uint32_t sample_rate, WavEncoding encoding,
                                     bool extensible) {
  const std::uint32_t bits = encoding == WavEncoding::kPcm16   ? 16
                             : encoding == WavEncoding::kPcm24 ? 24
                                                               : 32;
  const std::uint16_t code = encoding == WavEncoding::kFloat32 ? 3 : 1;
  const std::uint32_t block = bits / 8 * static_cast<std::uint32_t>(channels);

  std::vector<std::uint8_t> data;
  for (double s : interleaved) {
    const double c = std::clamp(s, -1.0, 1.0);
    switch (encoding) {
      case WavEncoding::kPcm16:
        put16(data, static_cast<std::uint32_t>(static_cast<std::int32_t>(
                        std::clamp(std::lround(c * 32768.0), -32768L, 32767L))));
        break;
      case WavEncoding::kPcm24: {
        const auto v = static_cast<std::uint32_t>(static_cast<std::int32_t>(
            std::clamp(std::lround(c * 8388608.0), -8388608L, 8388607L)));
        data.push_back(static_cast<std::uint8_t>(v));
        data.push_back(static_cast<std::uint8_t>(v >> 8));
        data.push_back(static_cast<std::uint8_t>(v >> 16));
        break;
      }
      case WavEncoding::kPcm32:
        put32(data, static_cast<std::uint32_t>(static_cast<std::int32_t>(
                        std::clamp(std::llround(c * 2147483648.0), -2147483648LL, 2147483647LL))));
        break;
      case WavEncoding::kFloat32:
        put32(data, std::bit_cast<std::uint32_t>(static_cast<float>(s)));
        break;
    }
  }

  std::vector<std::uint8_t> fmt;
  put16(fmt, extensible ? 0xFFFE : code);
  put16(fmt, static_cast<std::uint32_t>(channels));
  put32(fmt, sample_rate);
  put32(fmt, sample_rate * block);
  put16(fmt, block);
  put16(fmt, bits);
  if (extensible) {
    put16(fmt, 22);
    put16(fmt, bits);
    put32(fmt, 0);
    put16(fmt, code);  // sub-format GUID starts with the format code
    const std::uint8_t guid_tail[14] = {0x00, 0x00, 0x00, 0x00, 0x10, 0x00, 0x80,
                                        0x00, 0x00, 0xAA, 0x00, 0x38, 0x9B, 0x71};
    fmt.insert(fmt.end(), std::begin(guid_tail), std::end(guid_tail));
  }

  std::vector<std::uint8_t> out;
  put_tag(out, "RIFF");
  put32(out, static_cast<std::uint32_t>(4 + 8 + fmt.size() + 8 + data.size()));
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put32(out, static_cast<std::uint32_t>(fmt.size()));
  out.insert(out.end(), fmt.begin(), fmt.end());
  put_tag(out, "data");
  put32(out, static_cast<std::uint32_t>(data.size()));
  out.insert(out.end(), data.begin(), data.end());
  return out;
}

void write_wav(const std::filesystem::path& path, const std::vector<double>& samples,
               std::uint32_t sample_rate, WavEncoding encoding) {
  write_bytes(path, encode_wav(samples, 1, sample_rate, encoding));
}

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

LogMelSpectrogram random_spectrogram(std::size_t frames, std::size_t mels, std::mt19937_64& gen,
                                     double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  LogMelSpectrogram spec;
  spec.values = Matrix(frames, mels);
  for (double& v : spec.values.flat()) v = static_cast<double>(static_cast<float>(dist(gen)));
  spec.sample_rate = 16000;
  spec.hop_length = 256;
  return spec;
}

std::vector<double> sine(double freq_hz, double amplitude, std::size_t n,
                         std::uint32_t sample_rate) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = amplitude * std::sin(2.0 * std::numbers::pi * freq_hz * static_cast<double>(i) /
                                  static_cast<double>(sample_rate));
  }
  return out;
}

std::vector<double> test_clip(std::size_t n, std::uint32_t sample_rate, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> noise(0.0, 0.05);
  std::vector<double> out(n);
  const double sr = static_cast<double>(sample_rate);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / sr;
    double v = 0.0;
    for (int h = 1; h <= 12; ++h) {
      v += std::sin(2.0 * std::numbers::pi * 220.0 * h * t) / h;
    }
    const double env = 0.6 + 0.4 * std::sin(2.0 * std::numbers::pi * 0.5 * t);
    out[i] = 0.2 * env * v + noise(gen);
  }
  return out;
}

TempDir::TempDir(const std::string& tag) {
  static int counter = 0;
  path_ = std::filesystem::temp_directory_path() /
          ("filteraug_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

}  // namespace filteraug::testing
