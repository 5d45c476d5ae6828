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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bis/sql/dialect.hpp"

namespace bis::sql {

enum class NodeKind {
  kStatement,    // top-level query container; text "RECURSIVE" when WITH RECURSIVE
  kSubquery,     // nested query container, same layout as kStatement
  kCte,          // text = CTE name; children: [kColumnList], body
  kColumnList,   // CTE column names (kColumnRef children)
  kSelect,       // text "" or "DISTINCT"
  kSetOperation, // text "UNION", "UNION ALL", "INTERSECT", "EXCEPT"
  kSelectList,
  kStar,         // text "*" or "t.*"
  kAlias,        // text = alias name; single child = aliased expression/table
  kFrom,
  kJoin,         // text = join keyword(s) or ","; children: table factor, [kOn|kUsing]
  kOn,
  kUsing,
  kTableRef,     // text = (schema-qualified) table name
  kCteRef,       // table reference bound to a CTE in scope
  kWhere,
  kGroupBy,
  kHaving,
  kOrderBy,
  kOrderKey,     // text "" (ascending) or "DESC", optionally with " NULLS FIRST/LAST"
  kLimit,
  kOffset,
  kColumnRef,    // text = dotted column path
  kLiteral,      // text = canonical literal spelling
  kFunctionCall, // text = lower-case name, with " DISTINCT" suffix for set quantifier
  kWindow,       // OVER (...) clause of a function call
  kPartitionBy,
  kOperator,     // text = operator spelling; unary when it has one child
  kCase,         // text "" (searched) or "SIMPLE" (first child is the operand)
  kWhen,
  kElse,
  kCast,         // text = upper-case type name
};

std::string_view to_string(NodeKind kind);

struct Node {
  NodeKind kind = NodeKind::kStatement;
  std::string text;
  std::vector<Node> children;

  Node() = default;
  Node(NodeKind k, std::string t = {}, std::vector<Node> c = {})
      : kind(k), text(std::move(t)), children(std::move(c)) {}

  std::size_t subtree_size() const;

  friend bool operator==(const Node&, const Node&) = default;
};

/// Normalized syntax tree of one SQL statement.
///
/// Values are immutable after construction and compare equal when their trees
/// are identical, which after normalization means the statements differ only
/// in formatting noise.
class SqlAst {
 public:
  SqlAst(Node root, Dialect dialect) : root_(std::move(root)), dialect_(dialect) {}

  const Node& root() const noexcept { return root_; }
  Dialect dialect() const noexcept { return dialect_; }
  std::size_t node_count() const { return root_.subtree_size(); }

  friend bool operator==(const SqlAst& a, const SqlAst& b) { return a.root_ == b.root_; }

 private:
  Node root_;
  Dialect dialect_;
};

/// Pre-order visit of every node; the callback receives the node and its depth.
void visit(const Node& root, const std::function<void(const Node&, int)>& fn);

/// Indented single-node-per-line dump, used by tests and `bis-eval parse`.
std::string debug_string(const Node& root);

}  // namespace bis::sql
