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

#include "bis/semantic/semantic_similarity.hpp"

#include <algorithm>

namespace bis::semantic {

using diff::EditKind;
using sql::NodeKind;

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kScored: return "scored";
    case Verdict::kInvalidPrediction: return "invalid_prediction";
  }
  return "?";
}

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::kNormal: return "normal";
    case Rule::kTableMismatch: return "table-mismatch";
  }
  return "?";
}

namespace {

bool is_alias_edit(const diff::EditOp& op) {
  if (op.node_kind == NodeKind::kAlias || op.node_kind == NodeKind::kCteRef) return true;
  // Renaming a CTE keeps its body, so only the binding name changed.
  return op.kind == EditKind::kUpdate && op.node_kind == NodeKind::kCte;
}

bool touches_table(const diff::EditOp& op) {
  const bool truth_table = op.truth && op.truth->kind == NodeKind::kTableRef;
  const bool predicted_table = op.predicted && op.predicted->kind == NodeKind::kTableRef;
  return truth_table || predicted_table;
}

}  // namespace

SemanticScore score_edit_script(const diff::EditScript& script) {
  SemanticScore score;
  Breakdown& b = score.breakdown;
  b.size_union = script.size_union();
  b.keeps = script.count(EditKind::kKeep);
  b.moves = script.count(EditKind::kMove);
  b.updates = script.count(EditKind::kUpdate);
  b.inserts = script.count(EditKind::kInsert);
  b.deletes = script.count(EditKind::kDelete);

  for (const auto& op : script.ops) {
    if (op.kind == EditKind::kKeep || op.kind == EditKind::kMove) continue;
    if (touches_table(op)) {
      b.diff_count = b.size_union;
      b.rule = Rule::kTableMismatch;
      break;
    }
    if (is_alias_edit(op)) {
      ++b.ignored_alias_edits;
      continue;
    }
    ++b.diff_count;
  }

  if (b.size_union == 0) {
    score.value = 1.0;
    return score;
  }
  const auto clamped = std::min(b.diff_count, b.size_union);
  b.raw_ratio = static_cast<double>(clamped) / static_cast<double>(b.size_union);
  score.value = 1.0 - b.raw_ratio;
  return score;
}

SemanticScore semantic_similarity(std::string_view query_true, std::string_view query_predicted,
                                  sql::Dialect dialect) {
  auto truth = sql::parse(query_true, dialect);
  if (!truth) {
    throw CorpusError("ground-truth query does not parse: " + truth.error().message + " at offset " +
                      std::to_string(truth.error().position));
  }
  auto predicted = sql::parse(query_predicted, dialect);
  if (!predicted) {
    SemanticScore score;
    score.value = 0.0;
    score.verdict = Verdict::kInvalidPrediction;
    score.breakdown.raw_ratio = 1.0;
    score.prediction_error = predicted.error();
    return score;
  }
  return score_edit_script(diff::diff(*truth, *predicted));
}

}  // namespace bis::semantic
