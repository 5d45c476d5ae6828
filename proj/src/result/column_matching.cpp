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

#include "bis/result/column_matching.hpp"

#include <algorithm>

namespace bis::result {

namespace {

std::vector<Cell> sorted_values(const Column& column, const CellEqualityPolicy& policy) {
  std::vector<Cell> values = column.values;
  std::stable_sort(values.begin(), values.end(),
                   [&](const Cell& a, const Cell& b) { return cell_less(a, b, policy); });
  return values;
}

bool sequences_equal(const std::vector<Cell>& a, const std::vector<Cell>& b, const CellEqualityPolicy& policy) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(),
                    [&](const Cell& x, const Cell& y) { return cells_equal(x, y, policy); });
}

bool try_augment(std::size_t left, const std::vector<std::vector<bool>>& compatible,
                 std::vector<bool>& visited, std::vector<int>& match_right) {
  for (std::size_t r = 0; r < visited.size(); ++r) {
    if (!compatible[left][r] || visited[r]) continue;
    visited[r] = true;
    if (match_right[r] < 0 ||
        try_augment(static_cast<std::size_t>(match_right[r]), compatible, visited, match_right)) {
      match_right[r] = static_cast<int>(left);
      return true;
    }
  }
  return false;
}

}  // namespace

bool columns_compatible(const Column& a, const Column& b, const MatchOptions& options) {
  if (a.values.size() != b.values.size()) return false;
  if (options.order_sensitive) return sequences_equal(a.values, b.values, options.equality);
  return sequences_equal(sorted_values(a, options.equality), sorted_values(b, options.equality),
                         options.equality);
}

std::vector<std::vector<bool>> compatibility_matrix(const ResultTable& predicted, const ResultTable& truth,
                                                    const MatchOptions& options) {
  std::vector<std::vector<bool>> matrix(predicted.column_count(),
                                        std::vector<bool>(truth.column_count(), false));
  if (predicted.row_count() != truth.row_count()) return matrix;

  if (options.order_sensitive) {
    for (std::size_t i = 0; i < predicted.column_count(); ++i) {
      for (std::size_t j = 0; j < truth.column_count(); ++j) {
        matrix[i][j] = sequences_equal(predicted.column(i).values, truth.column(j).values, options.equality);
      }
    }
    return matrix;
  }
  std::vector<std::vector<Cell>> sorted_truth;
  for (const auto& c : truth.columns()) sorted_truth.push_back(sorted_values(c, options.equality));
  for (std::size_t i = 0; i < predicted.column_count(); ++i) {
    const auto sorted = sorted_values(predicted.column(i), options.equality);
    for (std::size_t j = 0; j < truth.column_count(); ++j) {
      matrix[i][j] = sequences_equal(sorted, sorted_truth[j], options.equality);
    }
  }
  return matrix;
}

std::vector<ColumnPair> maximum_matching(const std::vector<std::vector<bool>>& compatible, std::size_t right_size) {
  std::vector<int> match_right(right_size, -1);
  for (std::size_t left = 0; left < compatible.size(); ++left) {
    std::vector<bool> visited(right_size, false);
    try_augment(left, compatible, visited, match_right);
  }
  std::vector<ColumnPair> pairs;
  for (std::size_t r = 0; r < right_size; ++r) {
    if (match_right[r] >= 0) pairs.emplace_back(static_cast<std::size_t>(match_right[r]), r);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<ColumnPair> match_columns(const ResultTable& predicted, const ResultTable& truth,
                                      const MatchOptions& options) {
  return maximum_matching(compatibility_matrix(predicted, truth, options), truth.column_count());
}

}  // namespace bis::result
