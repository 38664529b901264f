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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "filteraug/io.hpp"

namespace filteraug {

namespace {

constexpr const char* kCsvHeader = "bin,weight_db";

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

std::string format_curve_csv(std::span<const double> weights_db) {
  std::string out = kCsvHeader;
  out += '\n';
  char buf[64];
  for (std::size_t i = 0; i < weights_db.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.9g\n", i, weights_db[i]);
    out += buf;
  }
  return out;
}

std::vector<double> parse_curve_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != kCsvHeader) {
    throw std::runtime_error("curve csv: expected header 'bin,weight_db'");
  }
  std::vector<double> weights;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("curve csv: line " + std::to_string(line_no) + " has no comma");
    }
    char* end = nullptr;
    const std::string bin_text = line.substr(0, comma);
    const unsigned long long bin = std::strtoull(bin_text.c_str(), &end, 10);
    if (end == bin_text.c_str() || *end != '\0' || bin != weights.size()) {
      throw std::runtime_error("curve csv: line " + std::to_string(line_no) +
                               " has bin '" + bin_text + "', expected " +
                               std::to_string(weights.size()));
    }
    const std::string value_text = line.substr(comma + 1);
    const double value = std::strtod(value_text.c_str(), &end);
    if (end == value_text.c_str() || *end != '\0') {
      throw std::runtime_error("curve csv: line " + std::to_string(line_no) +
                               " has an unparsable weight '" + value_text + "'");
    }
    weights.push_back(value);
  }
  return weights;
}

void write_curve_csv(std::span<const double> weights_db, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << format_curve_csv(weights_db);
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

std::vector<double> read_curve_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_curve_csv(text.str());
}

}  // namespace filteraug
