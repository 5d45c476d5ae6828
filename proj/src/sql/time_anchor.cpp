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

#include "bis/sql/time_anchor.hpp"

#include <algorithm>
#include <array>
#include <string_view>

#include "identifiers.hpp"

namespace bis::sql {

namespace {

enum class Granularity { kNone, kDateTime, kDate, kTime };

constexpr std::array<std::string_view, 6> kSqliteTimeFunctions = {
    "date", "datetime", "julianday", "strftime", "time", "unixepoch"};

Granularity niladic_granularity(const Node& node) {
  if (node.kind == NodeKind::kLiteral) {
    if (node.text == "CURRENT_TIMESTAMP" || node.text == "LOCALTIMESTAMP") return Granularity::kDateTime;
    if (node.text == "CURRENT_DATE") return Granularity::kDate;
    if (node.text == "CURRENT_TIME") return Granularity::kTime;
    return Granularity::kNone;
  }
  if (node.kind == NodeKind::kFunctionCall && node.children.empty()) {
    const std::string& f = node.text;
    if (f == "now" || f == "current_timestamp" || f == "localtimestamp" || f == "getdate" ||
        f == "sysdate") {
      return Granularity::kDateTime;
    }
    if (f == "current_date" || f == "curdate" || f == "today") return Granularity::kDate;
    if (f == "current_time" || f == "curtime") return Granularity::kTime;
  }
  return Granularity::kNone;
}

bool is_sqlite_time_function(const Node& node) {
  return node.kind == NodeKind::kFunctionCall &&
         std::find(kSqliteTimeFunctions.begin(), kSqliteTimeFunctions.end(),
                   std::string_view(node.text)) != kSqliteTimeFunctions.end();
}

bool is_now_string(const Node& node) {
  return node.kind == NodeKind::kLiteral && detail::to_lower(node.text) == "'now'";
}

class Rewriter {
 public:
  Rewriter(const Timestamp& anchor, bool sqlite) : anchor_(anchor), sqlite_(sqlite) {}

  Node rewrite(const Node& node) const {
    switch (niladic_granularity(node)) {
      case Granularity::kDateTime: return literal(anchor_.sql_datetime());
      case Granularity::kDate: return literal(anchor_.sql_date());
      case Granularity::kTime: return literal(anchor_.sql_time());
      case Granularity::kNone: break;
    }
    Node out(node.kind, node.text);
    out.children.reserve(node.children.size());
    const bool time_function = sqlite_ && is_sqlite_time_function(node);
    for (const auto& c : node.children) {
      if (time_function && is_now_string(c)) {
        out.children.push_back(literal(anchor_.sql_datetime()));
      } else {
        out.children.push_back(rewrite(c));
      }
    }
    return out;
  }

 private:
  static Node literal(const std::string& value) {
    return Node(NodeKind::kLiteral, detail::quote_string(value));
  }

  const Timestamp& anchor_;
  bool sqlite_;
};

bool contains_time_reference(const Node& node, bool sqlite) {
  if (niladic_granularity(node) != Granularity::kNone) return true;
  const bool time_function = sqlite && is_sqlite_time_function(node);
  return std::any_of(node.children.begin(), node.children.end(), [&](const Node& c) {
    return (time_function && is_now_string(c)) || contains_time_reference(c, sqlite);
  });
}

}  // namespace

SqlAst rewrite_time_anchor(const SqlAst& ast, const Timestamp& anchor) {
  const bool sqlite = ast.dialect() == Dialect::kSqlite;
  if (!contains_time_reference(ast.root(), sqlite)) return ast;
  return SqlAst(Rewriter(anchor, sqlite).rewrite(ast.root()), ast.dialect());
}

bool references_current_time(const SqlAst& ast) {
  return contains_time_reference(ast.root(), ast.dialect() == Dialect::kSqlite);
}

}  // namespace bis::sql
