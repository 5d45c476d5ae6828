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

#include "bis/bench/validate.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "bis/bench/corpus.hpp"
#include "bis/result/column_matching.hpp"
#include "bis/result/database.hpp"
#include "bis/result/executor.hpp"
#include "bis/sql/parser.hpp"
#include "bis/sql/render.hpp"
#include "bis/sql/time_anchor.hpp"

namespace bis::bench {

using sql::Node;
using sql::NodeKind;

std::string_view to_string(CorpusWarning::Kind kind) {
  switch (kind) {
    case CorpusWarning::Kind::kParse: return "parse";
    case CorpusWarning::Kind::kExecution: return "execution";
    case CorpusWarning::Kind::kEmptyResult: return "empty-result";
    case CorpusWarning::Kind::kDegenerate: return "degenerate";
    case CorpusWarning::Kind::kTimeWindow: return "time-window";
  }
  return "?";
}

std::string format_warning(const CorpusWarning& w) {
  return "[" + std::string(to_string(w.kind)) + "] question " + w.question_id + ": " + w.message;
}

namespace {

struct Executed {
  std::size_t position;
  std::string canonical;
  std::set<std::string> tables;
  result::ResultTable table;
};

std::string quote(std::string_view text, char q) {
  std::string out(1, q);
  for (char c : text) {
    if (c == q) out += q;
    out += c;
  }
  out += q;
  return out;
}

std::set<std::string> table_names(const Node& root) {
  std::set<std::string> names;
  sql::visit(root, [&](const Node& n, int) {
    if (n.kind == NodeKind::kTableRef) names.insert(n.text);
  });
  return names;
}

std::optional<std::string> scalar_text(const std::string& query, const result::Database& db) {
  auto r = result::execute_raw(query, db);
  if (!r || r->row_count() != 1 || r->column_count() != 1) return std::nullopt;
  const auto& cell = r->column(0).values[0];
  if (!cell.is_textual()) return std::nullopt;
  return cell.as_text();
}

std::optional<long long> scalar_integer(const std::string& query, const result::Database& db) {
  auto r = result::execute_raw(query, db);
  if (!r || r->row_count() != 1 || r->column_count() != 1) return std::nullopt;
  const auto& cell = r->column(0).values[0];
  if (cell.type() != result::CellType::kInteger) return std::nullopt;
  return cell.as_integer();
}

// Earliest instant a time-relative query can look at: the smallest value among
// date/datetime calls over literal arguments and timestamp-shaped literals.
std::optional<std::string> window_start(const Node& anchored, const result::Database& db) {
  std::optional<std::string> earliest;
  auto consider = [&](const std::string& value) {
    if (!sql::Timestamp::parse(value)) return;
    const std::string normalized = sql::Timestamp::parse(value)->sql_datetime();
    if (!earliest || normalized < *earliest) earliest = normalized;
  };
  sql::visit(anchored, [&](const Node& n, int) {
    if (n.kind == NodeKind::kLiteral && n.text.size() >= 2 && n.text.front() == '\'') {
      consider(n.text.substr(1, n.text.size() - 2));
      return;
    }
    if (n.kind != NodeKind::kFunctionCall || (n.text != "date" && n.text != "datetime") || n.children.empty()) return;
    const bool constant = std::all_of(n.children.begin(), n.children.end(),
                                      [](const Node& c) { return c.kind == NodeKind::kLiteral; });
    if (!constant) return;
    const Node stmt(NodeKind::kStatement, "",
                    {Node(NodeKind::kSelect, "", {Node(NodeKind::kSelectList, "", {n})})});
    if (auto v = scalar_text(sql::render(sql::SqlAst(stmt, sql::Dialect::kSqlite)), db)) consider(*v);
  });
  return earliest;
}

void check_time_window(const BenchmarkQuestion& q, const sql::SqlAst& ast, const result::Database& db,
                       const sql::Timestamp& anchor, std::vector<CorpusWarning>& out) {
  if (!sql::references_current_time(ast)) return;
  const sql::SqlAst anchored = sql::rewrite_time_anchor(ast, anchor);
  const auto start = window_start(anchored.root(), db);
  if (!start) return;
  const std::string end_expr = "datetime(" + quote(anchor.sql_datetime(), '\'') + ", '-1 day')";

  for (const auto& table : table_names(anchored.root())) {
    auto columns = result::execute_raw("SELECT name, type FROM pragma_table_info(" + quote(table, '\'') + ")", db);
    if (!columns) continue;
    for (std::size_t row = 0; row < columns->row_count(); ++row) {
      const std::string name = columns->column(0).values[row].as_text();
      const auto& type_cell = columns->column(1).values[row];
      std::string type = type_cell.is_textual() ? type_cell.as_text() : "";
      std::transform(type.begin(), type.end(), type.begin(), [](unsigned char c) { return std::toupper(c); });
      if (type.find("DATE") == std::string::npos && type.find("TIME") == std::string::npos) continue;

      const std::string col = quote(name, '"');
      const std::string probe = "SELECT coalesce(datetime(min(" + col + ")) <= datetime(" + quote(*start, '\'') +
                                ") AND datetime(max(" + col + ")) >= " + end_expr + ", 0) FROM " +
                                quote(table, '"');
      const auto covered = scalar_integer(probe, db);
      if (covered && *covered == 1) continue;
      out.push_back({CorpusWarning::Kind::kTimeWindow, q.id,
                     "data in " + table + "." + name + " does not cover " + *start + " .. " +
                         anchor.sql_datetime() + " minus one day"});
    }
  }
}

bool identical(const result::ResultTable& a, const result::ResultTable& b) {
  if (a.column_count() != b.column_count() || a.row_count() != b.row_count()) return false;
  for (std::size_t i = 0; i < a.column_count(); ++i) {
    if (!result::columns_compatible(a.column(i), b.column(i))) return false;
  }
  return true;
}

}  // namespace

std::vector<CorpusWarning> validate_corpus(const std::vector<BenchmarkQuestion>& questions,
                                           const std::filesystem::path& db_dir, const sql::Timestamp& anchor) {
  std::map<std::string, result::Database> dbs;
  for (const auto& q : questions) {
    if (!dbs.count(q.db_id)) dbs.emplace(q.db_id, result::Database::open_read_only(resolve_database(db_dir, q.db_id)));
  }

  std::vector<std::pair<std::size_t, CorpusWarning>> found;
  auto emit = [&](std::size_t position, std::vector<CorpusWarning>& ws) {
    for (auto& w : ws) found.emplace_back(position, std::move(w));
    ws.clear();
  };
  std::map<std::string, std::vector<Executed>> by_db;
  std::vector<CorpusWarning> local;

  for (std::size_t i = 0; i < questions.size(); ++i) {
    const auto& q = questions[i];
    auto ast = sql::parse(q.query, sql::Dialect::kSqlite);
    if (!ast) {
      local.push_back({CorpusWarning::Kind::kParse, q.id,
                       ast.error().message + " at offset " + std::to_string(ast.error().position)});
      emit(i, local);
      continue;
    }
    const result::Database& db = dbs.at(q.db_id);
    auto table = result::execute(q.query, db, anchor);
    if (!table) {
      local.push_back({CorpusWarning::Kind::kExecution, q.id,
                       std::string(result::to_string(table.error().kind)) + ": " + table.error().message});
      emit(i, local);
      continue;
    }
    if (table->row_count() == 0) local.push_back({CorpusWarning::Kind::kEmptyResult, q.id, "result has zero rows"});
    check_time_window(q, *ast, db, anchor, local);
    emit(i, local);
    by_db[q.db_id].push_back(Executed{i, sql::render(*ast), table_names(ast->root()), std::move(*table)});
  }

  for (const auto& [db_id, runs] : by_db) {
    for (std::size_t b = 1; b < runs.size(); ++b) {
      for (std::size_t a = 0; a < b; ++a) {
        if (runs[a].tables != runs[b].tables || runs[a].canonical == runs[b].canonical) continue;
        if (!identical(runs[a].table, runs[b].table)) continue;
        found.emplace_back(runs[b].position,
                           CorpusWarning{CorpusWarning::Kind::kDegenerate, questions[runs[b].position].id,
                                         "result is identical to question " + questions[runs[a].position].id +
                                             " although the queries differ"});
      }
    }
  }

  std::stable_sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<CorpusWarning> out;
  out.reserve(found.size());
  for (auto& [_, w] : found) out.push_back(std::move(w));
  return out;
}

}  // namespace bis::bench
