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
#include <utility>
#include <vector>

#include "bis/result/cell.hpp"
#include "bis/result/result_table.hpp"

namespace bis::result {

struct MatchOptions {
  /// When false, each column's values are sorted before comparison.
  bool order_sensitive = true;
  CellEqualityPolicy equality;
};

/// (predicted column index, truth column index)
using ColumnPair = std::pair<std::size_t, std::size_t>;

/// Whether two columns hold the same value sequence. Labels are ignored.
bool columns_compatible(const Column& a, const Column& b, const MatchOptions& options = {});

/// M x N compatibility matrix, indexed [predicted][truth]. Tables with
/// different row counts have no compatible pairs.
std::vector<std::vector<bool>> compatibility_matrix(const ResultTable& predicted, const ResultTable& truth,
                                                    const MatchOptions& options = {});

/// Maximum-cardinality one-to-one matching of predicted to truth columns over
/// compatible pairs, sorted by predicted index.
std::vector<ColumnPair> match_columns(const ResultTable& predicted, const ResultTable& truth,
                                      const MatchOptions& options = {});

/// Maximum bipartite matching on an explicit adjacency matrix (augmenting paths).
std::vector<ColumnPair> maximum_matching(const std::vector<std::vector<bool>>& compatible, std::size_t right_size);

}  // namespace bis::result
