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

#include "bis/result/cell.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string_view>

#include "bis/result/result_table.hpp"

namespace bis::result {

double Cell::as_number() const {
  if (type() == CellType::kInteger) return static_cast<double>(as_integer());
  return as_real();
}

const std::string& Cell::as_text() const {
  if (type() == CellType::kTimestamp) return std::get<4>(value_).text;
  return std::get<3>(value_);
}

std::string Cell::to_string() const {
  switch (type()) {
    case CellType::kNull: return "NULL";
    case CellType::kInteger: return std::to_string(as_integer());
    case CellType::kReal: {
      char buf[64];
      auto res = std::to_chars(buf, buf + sizeof buf, as_real());
      return std::string(buf, res.ptr);
    }
    case CellType::kText:
    case CellType::kTimestamp:
      return as_text();
  }
  return {};
}

namespace {

std::string_view comparable_text(const Cell& c, const CellEqualityPolicy& policy) {
  std::string_view s = c.as_text();
  if (policy.trim_trailing_whitespace) {
    const auto end = s.find_last_not_of(" \t\r\n\f\v");
    s = end == std::string_view::npos ? std::string_view{} : s.substr(0, end + 1);
  }
  return s;
}

bool numbers_equal(const Cell& a, const Cell& b, double tolerance) {
  if (a.type() == CellType::kInteger && b.type() == CellType::kInteger) {
    return a.as_integer() == b.as_integer();
  }
  const double x = a.as_number();
  const double y = b.as_number();
  if (x == y) return true;
  if (std::isnan(x) || std::isnan(y)) return false;
  return std::fabs(x - y) <= tolerance * std::max(std::fabs(x), std::fabs(y));
}

int rank(const Cell& c) {
  if (c.is_null()) return 0;
  if (c.is_numeric()) return 1;
  return 2;
}

}  // namespace

bool cells_equal(const Cell& a, const Cell& b, const CellEqualityPolicy& policy) {
  if (a.is_null() || b.is_null()) return a.is_null() && b.is_null();
  if (a.is_numeric() && b.is_numeric()) return numbers_equal(a, b, policy.relative_tolerance);
  if (a.is_textual() && b.is_textual()) return comparable_text(a, policy) == comparable_text(b, policy);
  return false;
}

bool cell_less(const Cell& a, const Cell& b, const CellEqualityPolicy& policy) {
  const int ra = rank(a), rb = rank(b);
  if (ra != rb) return ra < rb;
  if (ra == 1) return a.as_number() < b.as_number();
  if (ra == 2) return comparable_text(a, policy) < comparable_text(b, policy);
  return false;
}

ResultTable::ResultTable(std::vector<Column> columns) : columns_(std::move(columns)) {
  if (!columns_.empty()) row_count_ = columns_.front().values.size();
  for (const auto& c : columns_) {
    if (c.values.size() != row_count_) {
      throw std::invalid_argument("result columns have different lengths");
    }
  }
}

ResultTable ResultTable::empty_with_labels(std::vector<std::string> labels) {
  std::vector<Column> columns;
  columns.reserve(labels.size());
  for (auto& l : labels) columns.push_back(Column{std::move(l), {}});
  return ResultTable(std::move(columns));
}

}  // namespace bis::result
