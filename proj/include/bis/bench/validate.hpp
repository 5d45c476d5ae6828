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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bis/bench/question.hpp"
#include "bis/sql/timestamp.hpp"

namespace bis::bench {

struct CorpusWarning {
  enum class Kind { kParse, kExecution, kEmptyResult, kDegenerate, kTimeWindow };
  Kind kind = Kind::kParse;
  std::string question_id;
  std::string message;
};

std::string_view to_string(CorpusWarning::Kind kind);

/// `[kind] question <id>: message`
std::string format_warning(const CorpusWarning& warning);

/// Health checks on ground-truth data:
///   - truth query fails to parse or execute;
///   - truth result has zero rows;
///   - two distinct queries over the same database and table set produce
///     identical results;
///   - a query relative to the current time reads a timestamped table whose
///     data does not cover the window from its earliest bound up to the day
///     before the anchor.
/// Throws ConfigError when a database file is missing.
std::vector<CorpusWarning> validate_corpus(const std::vector<BenchmarkQuestion>& questions,
                                           const std::filesystem::path& db_dir,
                                           const sql::Timestamp& anchor = sql::default_anchor());

}  // namespace bis::bench
