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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bis/diff/ast_diff.hpp"
#include "bis/sql/dialect.hpp"
#include "bis/sql/parser.hpp"

namespace bis::semantic {

enum class Verdict { kScored, kInvalidPrediction };
enum class Rule { kNormal, kTableMismatch };

std::string_view to_string(Verdict verdict);
std::string_view to_string(Rule rule);

struct Breakdown {
  std::size_t keeps = 0;
  std::size_t moves = 0;
  std::size_t updates = 0;
  std::size_t inserts = 0;
  std::size_t deletes = 0;
  std::size_t ignored_alias_edits = 0;
  std::size_t size_union = 0;
  std::size_t diff_count = 0;
  /// min(diff_count, size_union) / size_union, the distance the score complements.
  double raw_ratio = 0.0;
  Rule rule = Rule::kNormal;
};

struct SemanticScore {
  double value = 0.0;
  Verdict verdict = Verdict::kScored;
  Breakdown breakdown;
  std::optional<sql::ParseError> prediction_error;
};

/// The ground-truth query failed to parse; this is a defect of the corpus,
/// not of the model being evaluated.
class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scores an edit script with class-weighted edits.
///
/// keep and move cost nothing. insert/delete/update of alias nodes (column
/// and table aliases, CTE references, CTE renames) cost nothing. Any
/// insert/delete/update of a table reference sets the change count to the
/// script length, so the score drops to 0. Every other edit costs 1. The
/// score is 1 - min(changes, length) / length.
SemanticScore score_edit_script(const diff::EditScript& script);

/// Semantic similarity of a predicted query to the ground truth, in [0, 1].
/// An unparseable prediction scores 0 with verdict kInvalidPrediction.
/// Throws CorpusError when `query_true` does not parse.
SemanticScore semantic_similarity(std::string_view query_true, std::string_view query_predicted,
                                  sql::Dialect dialect);

}  // namespace bis::semantic
