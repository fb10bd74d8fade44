// Copyright 2026 The qdiadd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qdiadd {

enum class OutputFormat { Text, Csv, Json };

/// Parses "text", "csv" or "json"; throws ConfigError otherwise.
OutputFormat parse_output_format(std::string_view name);

// Column table shared by verify and metrics outputs.
struct ReportTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row);
  std::string to_text() const;  // aligned columns
  std::string to_csv() const;
  std::string to_json() const;  // array of objects keyed by column
  std::string render(OutputFormat format) const;
};

// Tables plus header metadata (design, seed, ...) and free-form notes.
struct Document {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<ReportTable> tables;
  std::vector<std::string> notes;

  std::string render(OutputFormat format) const;
};

/// Fixed-point formatting with `digits` decimals.
std::string fixed(double value, int digits);

}  // namespace qdiadd
