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

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace rql::cli {

using Cell = std::variant<std::int64_t, double, bool, std::string>;

enum class Format { Json, Csv };

/**
 * Result table of one experiment. Every row has one cell per column, and the
 * last column of every row is the boolean row check named "ok".
 */
struct Report {
  std::string experiment;
  std::vector<std::pair<std::string, Cell>> inputs;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  bool pass = true;

  void add_row(std::vector<Cell> row);
  /// Conjunction of the row checks; true for an empty table.
  bool rows_pass() const;
};

/**
 * JSON: {"experiment", "inputs", "rows", "pass"} with rows as objects keyed by
 * column. CSV: header then one line per row; numbers use the shortest
 * round-trip form with '.' as the decimal separator regardless of locale.
 *
 * Throws std::invalid_argument on a non-finite number or a ragged row.
 */
void write_report(const Report& report, Format format, std::ostream& out);

}  // namespace rql::cli
