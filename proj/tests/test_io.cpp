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

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "filteraug/augment.hpp"
#include "filteraug/io.hpp"
#include "support/test_support.hpp"

namespace filteraug {
namespace {

using testing::encode_wav;
using testing::TempDir;
using testing::WavEncoding;

// -- WAV ----------------------------------------------------------------------

TEST(Wav, DecodesEveryIntegerDepthAndFloat) {
  const std::vector<double> samples{0.0, 0.5, -0.5, -1.0, 0.25};
  for (WavEncoding enc :
       {WavEncoding::kPcm16, WavEncoding::kPcm24, WavEncoding::kPcm32, WavEncoding::kFloat32}) {
    const Waveform w = parse_wav(encode_wav(samples, 1, 22050, enc));
    EXPECT_EQ(w.sample_rate, 22050u);
    ASSERT_EQ(w.samples.size(), samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
      EXPECT_EQ(w.samples[i], samples[i]) << "encoding " << static_cast<int>(enc);
    }
  }
}

TEST(Wav, IntegerScaleIsPowerOfTwo) {
  std::vector<std::uint8_t> bytes = encode_wav({0.0}, 1, 16000, WavEncoding::kPcm16);
  // Overwrite the one sample with 0x7FFF.
  bytes[bytes.size() - 2] = 0xFF;
  bytes[bytes.size() - 1] = 0x7F;
  EXPECT_EQ(parse_wav(bytes).samples[0], 32767.0 / 32768.0);
}

TEST(Wav, StereoIsDownmixedByMean) {
  const std::vector<double> interleaved{0.5, -0.25, 1.0, 0.0, -0.5, -0.5};
  const Waveform w = parse_wav(encode_wav(interleaved, 2, 16000, WavEncoding::kFloat32));
  EXPECT_EQ(w.samples, (std::vector<double>{0.125, 0.5, -0.5}));
}

TEST(Wav, ExtensibleHeader) {
  const Waveform w = parse_wav(encode_wav({0.25, -0.75}, 1, 48000, WavEncoding::kPcm24, true));
  EXPECT_EQ(w.samples, (std::vector<double>{0.25, -0.75}));
  EXPECT_EQ(w.sample_rate, 48000u);
}

TEST(Wav, SkipsUnknownChunks) {
  std::vector<std::uint8_t> bytes = encode_wav({0.5}, 1, 16000, WavEncoding::kPcm16);
  // Insert an odd-sized LIST chunk (with pad byte) before fmt.
  const std::vector<std::uint8_t> list{'L', 'I', 'S', 'T', 3, 0, 0, 0, 'a', 'b', 'c', 0};
  bytes.insert(bytes.begin() + 12, list.begin(), list.end());
  EXPECT_EQ(parse_wav(bytes).samples, (std::vector<double>{0.5}));
}

TEST(Wav, ZeroLengthDataIsEmptyNotAnError) {
  const Waveform w = parse_wav(encode_wav({}, 1, 16000, WavEncoding::kPcm16));
  EXPECT_TRUE(w.samples.empty());
}

TEST(Wav, RejectsMalformedInput) {
  std::vector<std::uint8_t> junk(64, 0);
  EXPECT_THROW(parse_wav(junk), WavError);
  std::vector<std::uint8_t> bytes = encode_wav({0.5}, 1, 16000, WavEncoding::kPcm16);
  bytes[34] = 8;  // bits per sample -> 8
  EXPECT_THROW(parse_wav(bytes), WavError);
  EXPECT_THROW(read_wav("/nonexistent/file.wav"), WavError);
}

TEST(Wav, ReadsFromDisk) {
  TempDir dir("wav");
  testing::write_wav(dir / "a.wav", {0.5, -0.5}, 8000, WavEncoding::kPcm16);
  EXPECT_EQ(read_wav(dir / "a.wav").samples, (std::vector<double>{0.5, -0.5}));
}

// -- LMSP ---------------------------------------------------------------------

TEST(Lmsp, SingleCellLayout) {
  LogMelSpectrogram s;
  s.values = Matrix(1, 1, -3.5);
  s.sample_rate = 16000;
  s.hop_length = 256;
  const auto bytes = encode_spectrogram(s);
  ASSERT_EQ(bytes.size(), kLmspHeaderBytes + 4);
  EXPECT_EQ(std::memcmp(bytes.data(), "LMSP", 4), 0);
  EXPECT_EQ(bytes[4], 1);  // version, little-endian
  EXPECT_EQ(bytes[5], 0);
  EXPECT_EQ(bytes[6], 1);  // n_frames
  EXPECT_EQ(bytes[10], 1);  // n_mels
  EXPECT_EQ(bytes[14] | (bytes[15] << 8), 16000);
  EXPECT_EQ(bytes[18] | (bytes[19] << 8), 256);
  const float payload = -3.5f;
  std::uint8_t expected[4];
  std::memcpy(expected, &payload, 4);  // host is little-endian here
  EXPECT_EQ(std::memcmp(bytes.data() + 22, expected, 4), 0);
  EXPECT_TRUE(decode_spectrogram(bytes) == s);
}

TEST(Lmsp, RandomRoundTripIsBitExact) {
  std::mt19937_64 gen(1);
  TempDir dir("lmsp");
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t frames = std::uniform_int_distribution<std::size_t>(1, 120)(gen);
    const std::size_t mels = std::uniform_int_distribution<std::size_t>(1, 140)(gen);
    const LogMelSpectrogram s = testing::random_spectrogram(frames, mels, gen);
    write_spectrogram(s, dir / "x.lmsp");
    const LogMelSpectrogram back = read_spectrogram(dir / "x.lmsp");
    ASSERT_TRUE(back == s);
    ASSERT_EQ(encode_spectrogram(back), encode_spectrogram(s));
  }
}

LmspErrorCode decode_error(const std::vector<std::uint8_t>& bytes) {
  try {
    decode_spectrogram(bytes);
  } catch (const LmspError& e) {
    return e.code();
  }
  ADD_FAILURE() << "decode succeeded";
  return LmspErrorCode::kOpenFailed;
}

TEST(Lmsp, DistinctErrors) {
  LogMelSpectrogram s;
  s.values = Matrix(3, 4, 1.0);
  const auto good = encode_spectrogram(s);

  auto bad_magic = good;
  std::memcpy(bad_magic.data(), "XXXX", 4);
  EXPECT_EQ(decode_error(bad_magic), LmspErrorCode::kBadMagic);
  try {
    decode_spectrogram(bad_magic);
  } catch (const LmspError& e) {
    EXPECT_STREQ(e.what(), "bad magic");
  }

  auto bad_version = good;
  bad_version[4] = 2;
  EXPECT_EQ(decode_error(bad_version), LmspErrorCode::kVersionMismatch);

  auto truncated = good;
  truncated.pop_back();
  EXPECT_EQ(decode_error(truncated), LmspErrorCode::kTruncated);
  EXPECT_EQ(decode_error({good.begin(), good.begin() + 10}), LmspErrorCode::kTruncated);

  auto trailing = good;
  trailing.push_back(0);
  EXPECT_EQ(decode_error(trailing), LmspErrorCode::kTrailingData);

  // Dimensions whose byte count overflows 64 bits must not wrap around.
  auto huge = good;
  for (int i = 6; i < 14; ++i) huge[static_cast<std::size_t>(i)] = 0xFF;
  EXPECT_EQ(decode_error(huge), LmspErrorCode::kTruncated);

  try {
    read_spectrogram("/nonexistent/x.lmsp");
    FAIL();
  } catch (const LmspError& e) {
    EXPECT_EQ(e.code(), LmspErrorCode::kOpenFailed);
  }
}

// -- curve CSV ------------------------------------------------------------------

TEST(CurveCsv, HeaderAndNineSignificantDigits) {
  const std::string text = format_curve_csv(std::vector<double>{1.0 / 3.0, -6.0, 0.0});
  EXPECT_EQ(text, "bin,weight_db\n0,0.333333333\n1,-6\n2,0\n");
}

TEST(CurveCsv, ReparseWithinTolerance) {
  std::mt19937_64 gen(2);
  RandomStream rng(2);
  TempDir dir("csv");
  for (int trial = 0; trial < 100; ++trial) {
    AugmentConfig cfg;
    cfg.filter_type = trial % 2 ? FilterType::kStep : FilterType::kLinear;
    cfg.step = cfg.linear = {{-6.0, 6.0}, {2, 6}, 4};
    const FilterCurve c = sample_curve(cfg, 128, rng);
    write_curve_csv(c.weights_db, dir / "c.csv");
    const std::vector<double> back = read_curve_csv(dir / "c.csv");
    ASSERT_EQ(back.size(), c.weights_db.size());
    for (std::size_t i = 0; i < back.size(); ++i) ASSERT_NEAR(back[i], c.weights_db[i], 1e-7);
  }
}

TEST(CurveCsv, RejectsMalformedText) {
  EXPECT_THROW(parse_curve_csv("bin,weight\n0,1\n"), std::runtime_error);
  EXPECT_THROW(parse_curve_csv("bin,weight_db\n1,1\n"), std::runtime_error);
  EXPECT_THROW(parse_curve_csv("bin,weight_db\n0,abc\n"), std::runtime_error);
  EXPECT_EQ(parse_curve_csv("bin,weight_db\r\n0,1.5\r\n"), std::vector<double>{1.5});
}

// -- rendering ------------------------------------------------------------------

LogMelSpectrogram constant_spec(std::size_t frames, std::size_t mels, double v) {
  LogMelSpectrogram s;
  s.values = Matrix(frames, mels, v);
  return s;
}

TEST(Render, ConstantAtLowIsDarkest) {
  const Image img = rasterize_spectrogram(constant_spec(7, 5, -80.0), RenderSpec{});
  EXPECT_EQ(img.width, 7);
  EXPECT_EQ(img.height, 5);
  for (auto p : img.pixels) EXPECT_EQ(p, 0);
}

TEST(Render, ConstantAtHighIsBrightest) {
  const Image img = rasterize_spectrogram(constant_spec(7, 5, 0.0), RenderSpec{});
  for (auto p : img.pixels) EXPECT_EQ(p, 255);
}

TEST(Render, LowFrequenciesAtTheBottom) {
  LogMelSpectrogram s = constant_spec(3, 4, -80.0);
  s.values(1, 0) = 0.0;   // frame 1, lowest mel bin
  s.values(2, 3) = -40.0; // frame 2, highest mel bin
  const Image img = rasterize_spectrogram(s, RenderSpec{});
  EXPECT_EQ(img.at(1, 3), 255);
  EXPECT_EQ(img.at(2, 0), 128);
  EXPECT_EQ(img.at(0, 0), 0);
}

TEST(Render, ViridisEndpoints) {
  RenderSpec spec;
  spec.colormap = Colormap::kViridis;
  const Image lo = rasterize_spectrogram(constant_spec(1, 1, -200.0), spec);
  const Image hi = rasterize_spectrogram(constant_spec(1, 1, 50.0), spec);
  ASSERT_EQ(lo.channels, 3);
  EXPECT_EQ(std::vector<std::uint8_t>(lo.pixels), (std::vector<std::uint8_t>{68, 1, 84}));
  EXPECT_EQ(std::vector<std::uint8_t>(hi.pixels), (std::vector<std::uint8_t>{253, 231, 37}));
}

TEST(Render, RejectsEmptyDisplayRange) {
  RenderSpec spec;
  spec.lo_db = spec.hi_db = -10.0;
  EXPECT_THROW(rasterize_spectrogram(constant_spec(1, 1, 0.0), spec), std::invalid_argument);
}

TEST(Render, PngRoundTripAndDeterminism) {
  std::mt19937_64 gen(3);
  TempDir dir("png");
  const LogMelSpectrogram s = testing::random_spectrogram(40, 64, gen, -90.0, 10.0);
  for (Colormap cm : {Colormap::kGrayscale, Colormap::kViridis}) {
    RenderSpec spec;
    spec.colormap = cm;
    render_spectrogram(s, spec, dir / "a.png");
    render_spectrogram(s, spec, dir / "b.png");
    EXPECT_EQ(testing::read_bytes(dir / "a.png"), testing::read_bytes(dir / "b.png"));
    EXPECT_TRUE(read_png(dir / "a.png") == rasterize_spectrogram(s, spec));
  }
}

TEST(Render, StepCurveJumpIsOneVerticalRun) {
  const FilterCurve c =
      build_step_curve(std::vector<int>{0, 64, 128}, std::vector<double>{-6.0, 6.0}, 128);
  TempDir dir("curve");
  render_curve(c.weights_db, dir / "curve.png");
  const Image img = read_png(dir / "curve.png");
  ASSERT_EQ(img.width, 128);
  const CurvePlot plot;
  const int low_row = curve_row(-6.0, plot, c.weights_db);
  const int high_row = curve_row(6.0, plot, c.weights_db);
  ASSERT_GT(low_row, high_row);
  for (int x = 0; x < img.width; ++x) {
    int ink = 0;
    for (int y = 0; y < img.height; ++y) ink += img.at(x, y) == kCurveInk;
    if (x == 64) {
      EXPECT_EQ(ink, low_row - high_row + 1);
    } else {
      EXPECT_EQ(ink, 1) << "column " << x;
      EXPECT_EQ(img.at(x, x < 64 ? low_row : high_row), kCurveInk);
    }
  }
}

}  // namespace
}  // namespace filteraug
