// Copyright 2026 The hpck Authors
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

// Minimal reader for the numeric CSV files shipped with the library. No
// quoting; fields are split on ','.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hpck::detail {

struct CsvTable {
  std::filesystem::path path;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  // 1-based, parallel to rows
};

// Throws MissingData if the file cannot be opened, MalformedData on ragged rows.
CsvTable read_csv(const std::filesystem::path& path);

std::vector<std::string> split(std::string_view line, char sep);

// Full-field parse; nullopt on any trailing junk or non-finite value.
std::optional<double> parse_double(std::string_view s);

// Parses a number from a table cell, MalformedData with file:line context.
double cell_number(const CsvTable& t, std::size_t row, std::size_t col);

}  // namespace hpck::detail
