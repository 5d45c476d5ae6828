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

#include <cstddef>
#include <string>
#include <vector>

#include "bis/result/cell.hpp"

namespace bis::result {

struct Column {
  std::string label;
  std::vector<Cell> values;
};

/// Fully materialized query output in column-major form. Every column holds
/// exactly row_count() values; labels may repeat.
class ResultTable {
 public:
  ResultTable() = default;
  /// Throws std::invalid_argument when the columns have unequal lengths.
  explicit ResultTable(std::vector<Column> columns);
  /// Zero-row table with the given labels.
  static ResultTable empty_with_labels(std::vector<std::string> labels);

  std::size_t column_count() const noexcept { return columns_.size(); }
  std::size_t row_count() const noexcept { return row_count_; }
  const std::vector<Column>& columns() const noexcept { return columns_; }
  const Column& column(std::size_t i) const { return columns_.at(i); }

 private:
  std::vector<Column> columns_;
  std::size_t row_count_ = 0;
};

}  // namespace bis::result
