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

#include "qdiadd/report.hpp"

#include <algorithm>
#include <cstdio>
#include "json.hpp"
#include <sstream>

#include "qdiadd/error.hpp"

namespace qdiadd {

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json" || name == "structured") return OutputFormat::Json;
  throw ConfigError("unknown output format '" + std::string(name) + "'");
}

void ReportTable::add(std::vector<std::string> row) {
  row.resize(columns.size());
  rows.push_back(std::move(row));
}

std::string ReportTable::to_text() const {
  std::vector<std::size_t> width(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    width[c] = columns[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream out;
  if (!title.empty()) out << title << "\n";
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      s += cells[c];
      if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << "\n";
  };
  line(columns);
  for (const auto& r : rows) line(r);
  return out.str();
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

}  // namespace

std::string ReportTable::to_csv() const {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out << ",";
      out << csv_cell(cells[c]);
    }
    out << "\n";
  };
  line(columns);
  for (const auto& r : rows) line(r);
  return out.str();
}

std::string ReportTable::to_json() const {
  nlohmann::ordered_json doc;
  doc["title"] = title;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < columns.size(); ++c) obj[columns[c]] = r[c];
    doc["rows"].push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

std::string ReportTable::render(OutputFormat format) const {
  switch (format) {
    case OutputFormat::Text: return to_text();
    case OutputFormat::Csv: return to_csv();
    case OutputFormat::Json: return to_json();
  }
  return to_text();
}

std::string Document::render(OutputFormat format) const {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Text:
      for (const auto& [k, v] : meta) out << "# " << k << ": " << v << "\n";
      for (const auto& t : tables) out << "\n" << t.to_text();
      if (!notes.empty()) out << "\n";
      for (const auto& n : notes) out << n << "\n";
      break;
    case OutputFormat::Csv:
      for (const auto& [k, v] : meta) out << "# " << k << "=" << v << "\n";
      for (const auto& t : tables) {
        out << "# " << t.title << "\n" << t.to_csv();
      }
      for (const auto& n : notes) out << "# " << n << "\n";
      break;
    case OutputFormat::Json: {
      nlohmann::ordered_json doc;
      doc["meta"] = nlohmann::ordered_json::object();
      for (const auto& [k, v] : meta) doc["meta"][k] = v;
      doc["tables"] = nlohmann::ordered_json::array();
      for (const auto& t : tables) {
        doc["tables"].push_back(nlohmann::ordered_json::parse(t.to_json()));
      }
      doc["notes"] = notes;
      out << doc.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

}  // namespace qdiadd
