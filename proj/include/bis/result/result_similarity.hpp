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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bis/result/column_matching.hpp"
#include "bis/result/result_table.hpp"

namespace bis::result {

enum class ResultVerdict { kScored, kExecutionError, kInvalidPrediction };

std::string_view to_string(ResultVerdict verdict);

struct ResultScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::vector<ColumnPair> matched_pairs;
  ResultVerdict verdict = ResultVerdict::kScored;
  std::optional<std::string> error;

  /// Zero score carrying a non-scored verdict.
  static ResultScore failed(ResultVerdict verdict, std::string message);
};

/// Harmonic mean; 0 when either input is 0.
double harmonic_f1(double precision, double recall);

/// Column-matching precision |m|/|A|, recall |m|/|B| and their F1, where A
/// holds the predicted columns and B the truth columns.
ResultScore score_result_pair(const ResultTable& predicted, const ResultTable& truth,
                              const MatchOptions& options = {});

}  // namespace bis::result
