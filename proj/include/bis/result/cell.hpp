// Copyright 2026 The bis-eval Authors
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
#include <string>
#include <variant>

namespace bis::result {

/// Text tagged as a timestamp by the column's declared type. Compared like
/// text; the tag only survives for reporting.
struct TimestampText {
  std::string text;
  friend bool operator==(const TimestampText&, const TimestampText&) = default;
};

enum class CellType { kNull, kInteger, kReal, kText, kTimestamp };

class Cell {
 public:
  Cell() = default;
  static Cell null() { return Cell(); }
  static Cell integer(std::int64_t v) { return Cell(Storage(std::in_place_index<1>, v)); }
  static Cell real(double v) { return Cell(Storage(std::in_place_index<2>, v)); }
  static Cell text(std::string v) { return Cell(Storage(std::in_place_index<3>, std::move(v))); }
  static Cell timestamp(std::string v) {
    return Cell(Storage(std::in_place_index<4>, TimestampText{std::move(v)}));
  }

  CellType type() const noexcept { return static_cast<CellType>(value_.index()); }
  bool is_null() const noexcept { return type() == CellType::kNull; }
  bool is_numeric() const noexcept { return type() == CellType::kInteger || type() == CellType::kReal; }
  bool is_textual() const noexcept { return type() == CellType::kText || type() == CellType::kTimestamp; }

  std::int64_t as_integer() const { return std::get<1>(value_); }
  double as_real() const { return std::get<2>(value_); }
  /// Numeric value of an integer or real cell.
  double as_number() const;
  /// Text of a text or timestamp cell.
  const std::string& as_text() const;

  /// Display form: NULL, integer digits, shortest round-trip real, raw text.
  std::string to_string() const;

 private:
  using Storage = std::variant<std::monostate, std::int64_t, double, std::string, TimestampText>;
  explicit Cell(Storage v) : value_(std::move(v)) {}
  Storage value_;
};

/// How two cells are judged equal when comparing result columns.
struct CellEqualityPolicy {
  /// Integers and reals compare numerically: |a - b| <= tol * max(|a|, |b|).
  double relative_tolerance = 1e-9;
  /// Text and timestamps compare exactly after stripping trailing whitespace.
  bool trim_trailing_whitespace = true;
};

/// null equals null; numbers compare numerically within tolerance; text and
/// timestamps compare as strings. Cells of different classes never match.
bool cells_equal(const Cell& a, const Cell& b, const CellEqualityPolicy& policy = {});

/// Strict weak order (null < numbers < text) used to sort a column's values
/// for order-insensitive comparison.
bool cell_less(const Cell& a, const Cell& b, const CellEqualityPolicy& policy = {});

}  // namespace bis::result
