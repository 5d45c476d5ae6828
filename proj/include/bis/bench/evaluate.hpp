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
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "bis/bench/adapter.hpp"
#include "bis/bench/question.hpp"
#include "bis/result/column_matching.hpp"
#include "bis/result/executor.hpp"
#include "bis/result/result_similarity.hpp"
#include "bis/semantic/semantic_similarity.hpp"
#include "bis/sql/timestamp.hpp"

namespace bis::bench {

struct EvalOptions {
  sql::Timestamp anchor = sql::default_anchor();
  result::MatchOptions match;
  result::ExecutionOptions execution;
  unsigned workers = 1;
};

struct InstanceRecord {
  std::string id;
  std::size_t index = 0;
  std::string db_id;
  Category case_type = Category::kFiltering;
  std::string language;
  std::string predicted_sql;
  /// Truth query failed to parse or execute; the instance is in no mean.
  bool excluded = false;
  std::string exclusion_reason;
  semantic::SemanticScore semantic;
  result::ResultScore result;
};

struct MetricMeans {
  std::size_t count = 0;
  double semantic = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct EvalReport {
  std::string anchor;  // ISO-8601
  bool order_sensitive = true;
  std::vector<InstanceRecord> instances;  // question order
  MetricMeans overall;
  std::map<std::string, MetricMeans> by_category;
  std::map<std::string, MetricMeans> by_language;
  std::vector<std::string> warnings;
  std::size_t excluded = 0;
};

/// Scores every question against its prediction with both metrics. Workers
/// each hold their own database connections; records are merged in question
/// order, so the report does not depend on scheduling. Throws ConfigError
/// when a database is missing or predictions do not line up with questions.
EvalReport evaluate(const std::vector<BenchmarkQuestion>& questions, const std::vector<Prediction>& predictions,
                    const std::filesystem::path& db_dir, const EvalOptions& options = {});

/// Recomputes overall, per-category and per-language means from the
/// non-excluded instance records.
void aggregate(EvalReport& report);

}  // namespace bis::bench
