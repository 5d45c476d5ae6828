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

#include <chrono>
#include <cstddef>
#include <string>
#include <string_view>

#include "bis/common/expected.hpp"
#include "bis/result/database.hpp"
#include "bis/result/result_table.hpp"
#include "bis/sql/dialect.hpp"
#include "bis/sql/timestamp.hpp"

namespace bis::result {

struct ExecutionOptions {
  std::chrono::milliseconds timeout{10'000};
  std::size_t row_cap = 100'000;
  sql::Dialect dialect = sql::Dialect::kSqlite;
};

struct ExecutionError {
  enum class Kind { kParse, kEngine, kTimeout, kRowCap };
  Kind kind = Kind::kEngine;
  std::string message;
};

std::string_view to_string(ExecutionError::Kind kind);

/// Parses `query`, pins current-time references to `anchor`, renders it and
/// runs it on `db`, materializing every row. Parse failures, engine errors,
/// timeouts and row-cap breaches come back as ExecutionError.
Expected<ResultTable, ExecutionError> execute(std::string_view query, const Database& db,
                                              const sql::Timestamp& anchor,
                                              const ExecutionOptions& options = {});

/// Runs already-final SQL text without parsing or rewriting it.
Expected<ResultTable, ExecutionError> execute_raw(const std::string& sql_text, const Database& db,
                                                  const ExecutionOptions& options = {});

}  // namespace bis::result
