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

#include "bis/result/result_similarity.hpp"

namespace bis::result {

std::string_view to_string(ResultVerdict verdict) {
  switch (verdict) {
    case ResultVerdict::kScored: return "scored";
    case ResultVerdict::kExecutionError: return "execution_error";
    case ResultVerdict::kInvalidPrediction: return "invalid_prediction";
  }
  return "?";
}

ResultScore ResultScore::failed(ResultVerdict verdict, std::string message) {
  ResultScore score;
  score.verdict = verdict;
  score.error = std::move(message);
  return score;
}

double harmonic_f1(double precision, double recall) {
  if (precision <= 0.0 || recall <= 0.0) return 0.0;
  return 2.0 / (1.0 / precision + 1.0 / recall);
}

ResultScore score_result_pair(const ResultTable& predicted, const ResultTable& truth, const MatchOptions& options) {
  ResultScore score;
  const std::size_t a = predicted.column_count();
  const std::size_t b = truth.column_count();
  if (a == 0 && b == 0) {
    score.precision = score.recall = score.f1 = 1.0;
    return score;
  }
  if (a == 0 || b == 0) return score;

  score.matched_pairs = match_columns(predicted, truth, options);
  const auto m = static_cast<double>(score.matched_pairs.size());
  score.precision = m / static_cast<double>(a);
  score.recall = m / static_cast<double>(b);
  score.f1 = harmonic_f1(score.precision, score.recall);
  return score;
}

}  // namespace bis::result
