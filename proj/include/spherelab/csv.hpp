// Copyright (c) 2026 sphere-lab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace spherelab {

/// Shortest decimal representation that round-trips the exact double; this is
/// what makes emitted CSVs byte-stable and loss-free across platforms.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc{}) throw std::runtime_error("format_double: to_chars failed");
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw std::runtime_error("parse_double: bad numeric field '" + std::string(s) + "'");
  }
  return v;
}

/// Minimal CSV writer: one header row, then rows of round-trip-formatted
/// numbers or verbatim strings.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) : out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("CsvWriter: cannot open " + path);
  }

  void header(const std::vector<std::string>& names) { write_row_strings(names); }

  void row(const std::vector<double>& values) {
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) line += ',';
      line += format_double(values[i]);
    }
    line += '\n';
    out_ << line;
  }

  void write_row_strings(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) line += ',';
      line += fields[i];
    }
    line += '\n';
    out_ << line;
  }

  void close() {
    out_.close();
    if (!out_) throw std::runtime_error("CsvWriter: write failed on close");
  }

 private:
  std::ofstream out_;
};

/// Reads a numeric CSV produced by CsvWriter: returns the header names and
/// fills `rows` with parsed doubles.
inline std::vector<std::string> read_numeric_csv(const std::string& path,
                                                 std::vector<std::vector<double>>& rows) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_numeric_csv: cannot open " + path);
  std::string line;
  std::vector<std::string> names;
  auto split = [](const std::string& s) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t pos = s.find(',', start);
      if (pos == std::string::npos) {
        fields.push_back(s.substr(start));
        return fields;
      }
      fields.push_back(s.substr(start, pos - start));
      start = pos + 1;
    }
  };
  if (!std::getline(in, line)) throw std::runtime_error("read_numeric_csv: empty file " + path);
  names = split(line);
  rows.clear();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line);
    std::vector<double> r;
    r.reserve(fields.size());
    for (const auto& f : fields) r.push_back(parse_double(f));
    rows.push_back(std::move(r));
  }
  return names;
}

}  // namespace spherelab
