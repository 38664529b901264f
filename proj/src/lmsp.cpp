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

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>

#include "filteraug/io.hpp"

namespace filteraug {

namespace {

constexpr char kMagic[4] = {'L', 'M', 'S', 'P'};

void put16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int shift = 0; shift < 32; shift += 8) {
    out.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

std::uint16_t get16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t get32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint32_t checked_u32(std::size_t v, const char* what) {
  if (v > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument(std::string("lmsp: ") + what + " does not fit in 32 bits");
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace

std::vector<std::uint8_t> encode_spectrogram(const LogMelSpectrogram& spec) {
  std::vector<std::uint8_t> out;
  out.reserve(kLmspHeaderBytes + spec.values.size() * 4);
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  put16(out, kLmspVersion);
  put32(out, checked_u32(spec.n_frames(), "n_frames"));
  put32(out, checked_u32(spec.n_mels(), "n_mels"));
  put32(out, spec.sample_rate);
  put32(out, spec.hop_length);
  for (double v : spec.values.flat()) {
    put32(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
  }
  return out;
}

LogMelSpectrogram decode_spectrogram(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw LmspError(LmspErrorCode::kBadMagic, "bad magic");
  }
  if (bytes.size() < kLmspHeaderBytes) {
    throw LmspError(LmspErrorCode::kTruncated, "truncated header");
  }
  const std::uint8_t* p = bytes.data();
  const std::uint16_t version = get16(p + 4);
  if (version != kLmspVersion) {
    throw LmspError(LmspErrorCode::kVersionMismatch,
                    "version mismatch: file has " + std::to_string(version) + ", expected " +
                        std::to_string(kLmspVersion));
  }
  const std::uint32_t n_frames = get32(p + 6);
  const std::uint32_t n_mels = get32(p + 10);
  const std::uint64_t cells = static_cast<std::uint64_t>(n_frames) * n_mels;
  const std::uint64_t payload_bytes = bytes.size() - kLmspHeaderBytes;
  if (cells > payload_bytes / 4) {
    throw LmspError(LmspErrorCode::kTruncated,
                    "truncated payload: header declares " + std::to_string(n_frames) + "x" +
                        std::to_string(n_mels) + " values, file holds " +
                        std::to_string(payload_bytes) + " payload bytes");
  }
  if (payload_bytes != cells * 4) {
    throw LmspError(LmspErrorCode::kTrailingData,
                    "trailing data: " + std::to_string(payload_bytes - cells * 4) +
                        " bytes after the payload");
  }

  std::vector<double> values(static_cast<std::size_t>(cells));
  const std::uint8_t* payload = p + kLmspHeaderBytes;
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = static_cast<double>(std::bit_cast<float>(get32(payload + 4 * i)));
  }

  LogMelSpectrogram spec;
  spec.values = Matrix(n_frames, n_mels, std::move(values));
  spec.sample_rate = get32(p + 14);
  spec.hop_length = get32(p + 18);
  return spec;
}

void write_spectrogram(const LogMelSpectrogram& spec, const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = encode_spectrogram(spec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw LmspError(LmspErrorCode::kOpenFailed, "cannot open " + path.string() + " for writing");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw LmspError(LmspErrorCode::kWriteFailed, "write failed: " + path.string());
  }
}

LogMelSpectrogram read_spectrogram(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw LmspError(LmspErrorCode::kOpenFailed, "cannot open " + path.string());
  }
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
  return decode_spectrogram(bytes);
}

bool is_spectrogram_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  char magic[4] = {};
  return in.read(magic, 4) && std::memcmp(magic, kMagic, 4) == 0;
}

}  // namespace filteraug
