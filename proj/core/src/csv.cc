// Copyright 2026 The taxelsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "taxelsim/csv.h"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "taxelsim/types.h"

namespace taxelsim {
namespace {

std::vector<std::string_view> Split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    cells.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::optional<int> CsvTable::Column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

int CsvTable::RequireColumn(std::string_view name) const {
  if (auto c = Column(name)) return *c;
  throw SchemaError("missing required column '" + std::string(name) + "'", 1);
}

CsvTable ReadCsv(std::istream& is) {
  CsvTable t;
  std::string line;
  long lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty()) continue;
    if (t.header.empty()) {
      for (auto cell : Split(trimmed)) t.header.emplace_back(Trim(cell));
      continue;
    }
    const auto cells = Split(trimmed);
    if (cells.size() != t.header.size()) {
      throw SchemaError("expected " + std::to_string(t.header.size()) + " columns, got " +
                            std::to_string(cells.size()),
                        lineno);
    }
    std::vector<double> row(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::string_view cell = Trim(cells[i]);
      const char* end = cell.data() + cell.size();
      auto [ptr, ec] = std::from_chars(cell.data(), end, row[i]);
      if (ec != std::errc() || ptr != end) {
        throw SchemaError("non-numeric value '" + std::string(cell) + "' in column '" +
                              t.header[i] + "'",
                          lineno);
      }
    }
    t.rows.push_back(std::move(row));
    t.line_numbers.push_back(lineno);
  }
  if (t.header.empty()) throw SchemaError("empty CSV: header row required");
  return t;
}

CsvTable ReadCsvFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  return ReadCsv(in);
}

std::string FormatDouble(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  (void)ec;
  return std::string(buf.data(), ptr);
}

CsvWriter::CsvWriter(std::ostream& os, const std::vector<std::string>& header)
    : os_(os), width_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) os_ << ',';
    os_ << header[i];
  }
  os_ << '\n';
}

void CsvWriter::Row(std::span<const double> values) { Row(values, {}); }

void CsvWriter::Row(std::span<const double> values, std::span<const std::string> text) {
  if (values.size() + text.size() != width_) {
    throw ContractViolation("CSV row width does not match header");
  }
  std::string line;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) line += ',';
    line += FormatDouble(values[i]);
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i || !values.empty()) line += ',';
    line += text[i];
  }
  line += '\n';
  os_ << line;
}

}  // namespace taxelsim
