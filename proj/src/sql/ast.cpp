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

#include "bis/sql/ast.hpp"

#include <sstream>

namespace bis::sql {

std::string_view to_string(Dialect dialect) {
  switch (dialect) {
    case Dialect::kSqlite: return "sqlite";
    case Dialect::kGeneric: return "generic";
  }
  return "?";
}

std::optional<Dialect> dialect_from_string(std::string_view name) {
  if (name == "sqlite") return Dialect::kSqlite;
  if (name == "generic" || name == "ansi") return Dialect::kGeneric;
  return std::nullopt;
}

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::kStatement: return "statement";
    case NodeKind::kSubquery: return "subquery";
    case NodeKind::kCte: return "cte";
    case NodeKind::kColumnList: return "column-list";
    case NodeKind::kSelect: return "select";
    case NodeKind::kSetOperation: return "set-operation";
    case NodeKind::kSelectList: return "select-list";
    case NodeKind::kStar: return "star";
    case NodeKind::kAlias: return "alias";
    case NodeKind::kFrom: return "from";
    case NodeKind::kJoin: return "join";
    case NodeKind::kOn: return "on";
    case NodeKind::kUsing: return "using";
    case NodeKind::kTableRef: return "table-ref";
    case NodeKind::kCteRef: return "cte-ref";
    case NodeKind::kWhere: return "where";
    case NodeKind::kGroupBy: return "group-by";
    case NodeKind::kHaving: return "having";
    case NodeKind::kOrderBy: return "order-by";
    case NodeKind::kOrderKey: return "order-key";
    case NodeKind::kLimit: return "limit";
    case NodeKind::kOffset: return "offset";
    case NodeKind::kColumnRef: return "column-ref";
    case NodeKind::kLiteral: return "literal";
    case NodeKind::kFunctionCall: return "function-call";
    case NodeKind::kWindow: return "window";
    case NodeKind::kPartitionBy: return "partition-by";
    case NodeKind::kOperator: return "operator";
    case NodeKind::kCase: return "case";
    case NodeKind::kWhen: return "when";
    case NodeKind::kElse: return "else";
    case NodeKind::kCast: return "cast";
  }
  return "?";
}

std::size_t Node::subtree_size() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.subtree_size();
  return n;
}

namespace {

void visit_impl(const Node& node, int depth,
                const std::function<void(const Node&, int)>& fn) {
  fn(node, depth);
  for (const auto& c : node.children) visit_impl(c, depth + 1, fn);
}

}  // namespace

void visit(const Node& root, const std::function<void(const Node&, int)>& fn) {
  visit_impl(root, 0, fn);
}

std::string debug_string(const Node& root) {
  std::ostringstream out;
  visit(root, [&](const Node& n, int depth) {
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << to_string(n.kind);
    if (!n.text.empty()) out << ' ' << n.text;
    out << '\n';
  });
  return out.str();
}

}  // namespace bis::sql
