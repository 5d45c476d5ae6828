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

#include "bis/result/executor.hpp"

#include <sqlite3.h>

#include <cctype>
#include <memory>

#include "bis/sql/parser.hpp"
#include "bis/sql/render.hpp"
#include "bis/sql/time_anchor.hpp"

namespace bis::result {

std::string_view to_string(ExecutionError::Kind kind) {
  switch (kind) {
    case ExecutionError::Kind::kParse: return "parse";
    case ExecutionError::Kind::kEngine: return "engine";
    case ExecutionError::Kind::kTimeout: return "timeout";
    case ExecutionError::Kind::kRowCap: return "row-cap";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

int on_progress(void* deadline) {
  return Clock::now() > *static_cast<Clock::time_point*>(deadline) ? 1 : 0;
}

struct StatementDeleter {
  void operator()(sqlite3_stmt* s) const { sqlite3_finalize(s); }
};

// Clears the progress handler when the statement scope ends.
struct ProgressGuard {
  explicit ProgressGuard(sqlite3* db, Clock::time_point* deadline) : db(db) {
    sqlite3_progress_handler(db, 1000, &on_progress, deadline);
  }
  ~ProgressGuard() { sqlite3_progress_handler(db, 0, nullptr, nullptr); }
  sqlite3* db;
};

bool declared_temporal(const char* decltype_text) {
  if (!decltype_text) return false;
  std::string upper(decltype_text);
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return upper.find("DATE") != std::string::npos || upper.find("TIME") != std::string::npos;
}

Cell read_cell(sqlite3_stmt* stmt, int col) {
  switch (sqlite3_column_type(stmt, col)) {
    case SQLITE_NULL:
      return Cell::null();
    case SQLITE_INTEGER:
      return Cell::integer(sqlite3_column_int64(stmt, col));
    case SQLITE_FLOAT:
      return Cell::real(sqlite3_column_double(stmt, col));
    default: {
      const auto* bytes = static_cast<const char*>(sqlite3_column_blob(stmt, col));
      std::string text(bytes ? bytes : "", static_cast<std::size_t>(sqlite3_column_bytes(stmt, col)));
      if (declared_temporal(sqlite3_column_decltype(stmt, col))) return Cell::timestamp(std::move(text));
      return Cell::text(std::move(text));
    }
  }
}

}  // namespace

Expected<ResultTable, ExecutionError> execute_raw(const std::string& sql_text, const Database& db,
                                                  const ExecutionOptions& options) {
  sqlite3* handle = db.handle();
  sqlite3_stmt* raw = nullptr;
  const char* tail = nullptr;
  if (sqlite3_prepare_v2(handle, sql_text.c_str(), static_cast<int>(sql_text.size()), &raw, &tail) != SQLITE_OK) {
    return ExecutionError{ExecutionError::Kind::kEngine, sqlite3_errmsg(handle)};
  }
  std::unique_ptr<sqlite3_stmt, StatementDeleter> stmt(raw);
  if (!stmt) return ExecutionError{ExecutionError::Kind::kEngine, "empty statement"};
  if (!sqlite3_stmt_readonly(stmt.get())) {
    return ExecutionError{ExecutionError::Kind::kEngine, "statement is not read-only"};
  }

  const int ncols = sqlite3_column_count(stmt.get());
  std::vector<Column> columns(static_cast<std::size_t>(ncols));
  for (int c = 0; c < ncols; ++c) {
    const char* name = sqlite3_column_name(stmt.get(), c);
    columns[static_cast<std::size_t>(c)].label = name ? name : "";
  }

  Clock::time_point deadline = Clock::now() + options.timeout;
  ProgressGuard guard(handle, &deadline);
  std::size_t rows = 0;
  while (true) {
    const int rc = sqlite3_step(stmt.get());
    if (rc == SQLITE_DONE) break;
    if (rc == SQLITE_ROW) {
      if (++rows > options.row_cap) {
        return ExecutionError{ExecutionError::Kind::kRowCap,
                              "result exceeds row cap of " + std::to_string(options.row_cap)};
      }
      for (int c = 0; c < ncols; ++c) columns[static_cast<std::size_t>(c)].values.push_back(read_cell(stmt.get(), c));
      continue;
    }
    if (rc == SQLITE_INTERRUPT) {
      return ExecutionError{ExecutionError::Kind::kTimeout,
                            "query exceeded timeout of " + std::to_string(options.timeout.count()) + " ms"};
    }
    return ExecutionError{ExecutionError::Kind::kEngine, sqlite3_errmsg(handle)};
  }
  return ResultTable(std::move(columns));
}

Expected<ResultTable, ExecutionError> execute(std::string_view query, const Database& db,
                                              const sql::Timestamp& anchor, const ExecutionOptions& options) {
  auto ast = sql::parse(query, options.dialect);
  if (!ast) {
    return ExecutionError{ExecutionError::Kind::kParse,
                          ast.error().message + " at offset " + std::to_string(ast.error().position)};
  }
  const sql::SqlAst anchored = sql::rewrite_time_anchor(*ast, anchor);
  return execute_raw(sql::render(anchored, sql::Dialect::kSqlite), db, options);
}

}  // namespace bis::result
