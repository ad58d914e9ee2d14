// Copyright 2026 The relstate-logic Authors
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

#include "rql/cli/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace rql::cli {

namespace {

using nlohmann::ordered_json;

void require_finite(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c); d && !std::isfinite(*d)) {
    throw std::invalid_argument("write_report: non-finite value");
  }
}

ordered_json to_json(const Cell& c) {
  require_finite(c);
  return std::visit([](const auto& v) { return ordered_json(v); }, c);
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::string to_csv(const Cell& c) {
  require_finite(c);
  struct Visitor {
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return csv_field(v); }
  };
  return std::visit(Visitor{}, c);
}

}  // namespace

void Report::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::invalid_argument("Report: row width does not match columns");
  if (!std::holds_alternative<bool>(row.back())) throw std::invalid_argument("Report: last cell must be the row check");
  rows.push_back(std::move(row));
}

bool Report::rows_pass() const {
  for (const auto& r : rows) {
    if (!std::get<bool>(r.back())) return false;
  }
  return true;
}

void write_report(const Report& report, Format format, std::ostream& out) {
  for (const auto& r : report.rows) {
    if (r.size() != report.columns.size()) throw std::invalid_argument("write_report: ragged row");
  }
  if (format == Format::Json) {
    ordered_json j;
    j["experiment"] = report.experiment;
    ordered_json inputs = ordered_json::object();
    for (const auto& [k, v] : report.inputs) inputs[k] = to_json(v);
    j["inputs"] = inputs;
    ordered_json rows = ordered_json::array();
    for (const auto& r : report.rows) {
      ordered_json row = ordered_json::object();
      for (std::size_t c = 0; c < r.size(); ++c) row[report.columns[c]] = to_json(r[c]);
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["pass"] = report.pass;
    out << j.dump(2) << '\n';
  } else {
    for (std::size_t c = 0; c < report.columns.size(); ++c) {
      out << (c ? "," : "") << csv_field(report.columns[c]);
    }
    out << '\n';
    for (const auto& r : report.rows) {
      for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << to_csv(r[c]);
      out << '\n';
    }
  }
  if (!out) throw std::runtime_error("write_report: output stream failure");
}

}  // namespace rql::cli
