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

#ifndef TAXELSIM_CSV_H_
#define TAXELSIM_CSV_H_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace taxelsim {

// Numeric CSV with a mandatory header row.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<long> line_numbers;  // 1-based source line of each row

  std::optional<int> Column(std::string_view name) const;
  // Throws SchemaError naming the missing column.
  int RequireColumn(std::string_view name) const;
};

// Throws SchemaError (with line number) on ragged rows or non-numeric cells.
CsvTable ReadCsv(std::istream& is);
CsvTable ReadCsvFile(const std::string& path);

// Shortest representation that parses back to the same double.
std::string FormatDouble(double v);

class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const std::vector<std::string>& header);

  void Row(std::span<const double> values);
  // Mixed rows: numeric cells followed by trailing text cells.
  void Row(std::span<const double> values, std::span<const std::string> text);

 private:
  std::ostream& os_;
  std::size_t width_;
};

}  // namespace taxelsim

#endif  // TAXELSIM_CSV_H_
