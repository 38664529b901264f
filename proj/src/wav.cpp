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

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iterator>
#include <optional>
#include <string>

#include "filteraug/io.hpp"

namespace filteraug {

namespace {

constexpr std::uint16_t kFormatPcm = 0x0001;
constexpr std::uint16_t kFormatFloat = 0x0003;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t le16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t le32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

struct FormatChunk {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t block_align = 0;
  std::uint16_t bits = 0;
};

FormatChunk parse_fmt(const std::uint8_t* p, std::uint32_t size) {
  if (size < 16) {
    throw WavError("wav: fmt chunk too small");
  }
  FormatChunk fmt;
  fmt.format = le16(p);
  fmt.channels = le16(p + 2);
  fmt.sample_rate = le32(p + 4);
  fmt.block_align = le16(p + 12);
  fmt.bits = le16(p + 14);
  if (fmt.format == kFormatExtensible) {
    if (size < 40) {
      throw WavError("wav: truncated WAVE_FORMAT_EXTENSIBLE header");
    }
    // First two bytes of the sub-format GUID carry the actual format code.
    fmt.format = le16(p + 24);
  }
  return fmt;
}

double decode_sample(const std::uint8_t* p, const FormatChunk& fmt) {
  if (fmt.format == kFormatFloat) {
    float f;
    std::uint32_t bits = le32(p);
    std::memcpy(&f, &bits, sizeof f);
    return static_cast<double>(f);
  }
  switch (fmt.bits) {
    case 16:
      return static_cast<double>(static_cast<std::int16_t>(le16(p))) / 32768.0;
    case 24: {
      std::int32_t v = static_cast<std::int32_t>(p[0] | (p[1] << 8) | (p[2] << 16));
      if (v & 0x800000) v -= 0x1000000;
      return static_cast<double>(v) / 8388608.0;
    }
    case 32:
      return static_cast<double>(static_cast<std::int32_t>(le32(p))) / 2147483648.0;
    default:
      break;
  }
  throw WavError("wav: unsupported bit depth");
}

}  // namespace

Waveform parse_wav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw WavError("wav: not a RIFF/WAVE file");
  }

  std::optional<FormatChunk> fmt;
  const std::uint8_t* data = nullptr;
  std::size_t data_size = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint8_t* chunk = bytes.data() + pos;
    const std::uint32_t size = le32(chunk + 4);
    const std::size_t available = bytes.size() - pos - 8;
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size > available) throw WavError("wav: truncated fmt chunk");
      fmt = parse_fmt(chunk + 8, size);
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      // Streaming writers sometimes leave the size unset; take what is there.
      data = chunk + 8;
      data_size = std::min<std::size_t>(size, available);
      break;
    }
    pos += 8 + static_cast<std::size_t>(size) + (size & 1u);
  }

  if (!fmt) throw WavError("wav: missing fmt chunk");
  if (data == nullptr) throw WavError("wav: missing data chunk");
  if (fmt->channels == 0) throw WavError("wav: zero channels");
  if (fmt->sample_rate == 0) throw WavError("wav: zero sample rate");

  const bool int_ok = fmt->format == kFormatPcm &&
                      (fmt->bits == 16 || fmt->bits == 24 || fmt->bits == 32);
  const bool float_ok = fmt->format == kFormatFloat && fmt->bits == 32;
  if (!int_ok && !float_ok) {
    throw WavError("wav: unsupported sample format (format " + std::to_string(fmt->format) +
                   ", " + std::to_string(fmt->bits) + " bits)");
  }

  const std::size_t bytes_per_sample = fmt->bits / 8u;
  const std::size_t frame_bytes = bytes_per_sample * fmt->channels;
  const std::size_t n_frames = data_size / frame_bytes;

  Waveform w;
  w.sample_rate = fmt->sample_rate;
  w.samples.resize(n_frames);
  for (std::size_t i = 0; i < n_frames; ++i) {
    const std::uint8_t* frame = data + i * frame_bytes;
    double acc = 0.0;
    for (std::size_t c = 0; c < fmt->channels; ++c) {
      acc += decode_sample(frame + c * bytes_per_sample, *fmt);
    }
    w.samples[i] = fmt->channels == 1 ? acc : acc / fmt->channels;
  }
  return w;
}

Waveform read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw WavError("wav: cannot open " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return parse_wav(bytes);
}

}  // namespace filteraug
