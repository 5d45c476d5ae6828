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

#include "bis/sql/render.hpp"

#include <string>

namespace bis::sql {

namespace {

// Binding strength of expression nodes; higher binds tighter.
enum Level : int {
  kAny = 0,
  kOr = 1,
  kAnd = 2,
  kNot = 3,
  kComparison = 4,
  kAdditive = 5,
  kMultiplicative = 6,
  kConcat = 7,
  kUnary = 8,
  kPrimary = 9,
};

bool is_comparison(const std::string& op) {
  return op == "=" || op == "<>" || op == "<" || op == "<=" || op == ">" || op == ">=" ||
         op == "IS" || op == "IS NOT" || op == "IN" || op == "NOT IN" || op == "LIKE" ||
         op == "NOT LIKE" || op == "GLOB" || op == "NOT GLOB" || op == "BETWEEN" ||
         op == "NOT BETWEEN";
}

int level_of(const Node& node) {
  if (node.kind != NodeKind::kOperator) return kPrimary;
  const std::string& op = node.text;
  if (op == "OR") return kOr;
  if (op == "AND") return kAnd;
  if (op == "NOT") return kNot;
  if (op == "EXISTS" || op == "NOT EXISTS") return kPrimary;
  if (is_comparison(op)) return kComparison;
  if (op == "-" && node.children.size() == 1) return kUnary;
  if (op == "+" || op == "-") return kAdditive;
  if (op == "*" || op == "/" || op == "%") return kMultiplicative;
  if (op == "||") return kConcat;
  return kPrimary;
}

class Renderer {
 public:
  std::string query(const Node& container) {
    std::string out;
    std::size_t i = 0;
    if (i < container.children.size() && container.children[i].kind == NodeKind::kCte) {
      out += "WITH ";
      if (container.text == "RECURSIVE") out += "RECURSIVE ";
      bool first = true;
      for (; i < container.children.size() && container.children[i].kind == NodeKind::kCte; ++i) {
        if (!first) out += ", ";
        first = false;
        out += cte(container.children[i]);
      }
      out += ' ';
    }
    for (; i < container.children.size(); ++i) out += body(container.children[i]);
    return out;
  }

 private:
  std::string cte(const Node& node) {
    std::string out = node.text;
    for (const auto& c : node.children) {
      if (c.kind == NodeKind::kColumnList) {
        out += " (" + join(c.children, ", ", kAny) + ")";
      } else {
        out += " AS (" + body(c) + ")";
      }
    }
    return out;
  }

  std::string body(const Node& node) {
    std::string out;
    if (node.kind == NodeKind::kSetOperation) {
      out = body(node.children[0]) + ' ' + node.text + ' ' + body(node.children[1]);
      for (std::size_t i = 2; i < node.children.size(); ++i) out += clause(node.children[i]);
      return out;
    }
    out = "SELECT ";
    if (!node.text.empty()) out += node.text + ' ';
    for (const auto& c : node.children) out += clause(c);
    return out;
  }

  std::string clause(const Node& node) {
    switch (node.kind) {
      case NodeKind::kSelectList: {
        std::string out;
        for (std::size_t i = 0; i < node.children.size(); ++i) {
          if (i) out += ", ";
          out += select_item(node.children[i]);
        }
        return out;
      }
      case NodeKind::kFrom: return " FROM " + from(node);
      case NodeKind::kWhere: return " WHERE " + expr(node.children[0], kAny);
      case NodeKind::kGroupBy: return " GROUP BY " + join(node.children, ", ", kAny);
      case NodeKind::kHaving: return " HAVING " + expr(node.children[0], kAny);
      case NodeKind::kOrderBy: return " ORDER BY " + order_keys(node);
      case NodeKind::kLimit: return " LIMIT " + expr(node.children[0], kAny);
      case NodeKind::kOffset: return " OFFSET " + expr(node.children[0], kAny);
      default: return ' ' + expr(node, kAny);
    }
  }

  std::string select_item(const Node& node) {
    if (node.kind == NodeKind::kAlias) return expr(node.children[0], kAny) + " AS " + node.text;
    return expr(node, kAny);
  }

  std::string from(const Node& node) {
    std::string out;
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      const Node& c = node.children[i];
      if (c.kind != NodeKind::kJoin) {
        out += factor(c);
        continue;
      }
      out += c.text == "," ? ", " : ' ' + c.text + ' ';
      out += factor(c.children[0]);
      if (c.children.size() > 1) {
        const Node& cond = c.children[1];
        if (cond.kind == NodeKind::kOn) {
          out += " ON " + expr(cond.children[0], kAny);
        } else {
          out += " USING (" + join(cond.children, ", ", kAny) + ")";
        }
      }
    }
    return out;
  }

  std::string factor(const Node& node) {
    switch (node.kind) {
      case NodeKind::kAlias: return factor(node.children[0]) + " AS " + node.text;
      case NodeKind::kSubquery: return "(" + query(node) + ")";
      default: return node.text;
    }
  }

  std::string order_keys(const Node& node) {
    std::string out;
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      const Node& key = node.children[i];
      if (i) out += ", ";
      out += expr(key.children[0], kAny);
      if (!key.text.empty()) out += ' ' + key.text;
    }
    return out;
  }

  std::string join(const std::vector<Node>& nodes, std::string_view sep, int min_level) {
    std::string out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (i) out += sep;
      out += expr(nodes[i], min_level);
    }
    return out;
  }

  std::string expr(const Node& node, int min_level) {
    std::string s = bare_expr(node);
    if (level_of(node) < min_level) return "(" + s + ")";
    return s;
  }

  std::string bare_expr(const Node& node) {
    switch (node.kind) {
      case NodeKind::kLiteral:
      case NodeKind::kColumnRef:
      case NodeKind::kStar:
        return node.text;
      case NodeKind::kSubquery:
        return "(" + query(node) + ")";
      case NodeKind::kFunctionCall:
        return function_call(node);
      case NodeKind::kCase:
        return case_expr(node);
      case NodeKind::kCast:
        return "CAST(" + expr(node.children[0], kAny) + " AS " + node.text + ")";
      case NodeKind::kOperator:
        return operator_expr(node);
      default:
        return clause(node);
    }
  }

  std::string function_call(const Node& node) {
    std::string name = node.text;
    std::string quantifier;
    if (auto pos = name.find(' '); pos != std::string::npos) {
      quantifier = name.substr(pos + 1) + ' ';
      name.resize(pos);
    }
    std::string args;
    std::string window;
    bool first = true;
    for (const auto& c : node.children) {
      if (c.kind == NodeKind::kWindow) {
        window = " OVER (" + window_spec(c) + ")";
        continue;
      }
      if (!first) args += ", ";
      first = false;
      args += expr(c, kAny);
    }
    return name + "(" + quantifier + args + ")" + window;
  }

  std::string window_spec(const Node& node) {
    std::string out;
    for (const auto& c : node.children) {
      if (!out.empty()) out += ' ';
      if (c.kind == NodeKind::kPartitionBy) {
        out += "PARTITION BY " + join(c.children, ", ", kAny);
      } else {
        out += "ORDER BY " + order_keys(c);
      }
    }
    return out;
  }

  std::string case_expr(const Node& node) {
    std::string out = "CASE";
    for (const auto& c : node.children) {
      if (c.kind == NodeKind::kWhen) {
        out += " WHEN " + expr(c.children[0], kAny) + " THEN " + expr(c.children[1], kAny);
      } else if (c.kind == NodeKind::kElse) {
        out += " ELSE " + expr(c.children[0], kAny);
      } else {
        out += ' ' + expr(c, kAny);
      }
    }
    return out + " END";
  }

  std::string operator_expr(const Node& node) {
    const std::string& op = node.text;
    const int level = level_of(node);
    if (op == "OR" || op == "AND") return join(node.children, " " + op + " ", level + 1);
    if (op == "NOT") return "NOT " + expr(node.children[0], kNot);
    if (op == "EXISTS" || op == "NOT EXISTS") return op + " " + bare_expr(node.children[0]);
    if (node.children.size() == 1) {
      std::string inner = expr(node.children[0], kUnary);
      return op + (inner.starts_with('-') ? " " : "") + inner;
    }
    if (op == "IN" || op == "NOT IN") {
      std::string out = expr(node.children[0], kComparison) + ' ' + op + ' ';
      if (node.children.size() == 2 && node.children[1].kind == NodeKind::kSubquery) {
        return out + bare_expr(node.children[1]);
      }
      std::vector<Node> items(node.children.begin() + 1, node.children.end());
      return out + "(" + join(items, ", ", kAny) + ")";
    }
    if (op == "BETWEEN" || op == "NOT BETWEEN") {
      return expr(node.children[0], kComparison) + ' ' + op + ' ' +
             expr(node.children[1], kAdditive) + " AND " + expr(node.children[2], kAdditive);
    }
    // Left-associative binary operator.
    return expr(node.children[0], level) + ' ' + op + ' ' + expr(node.children[1], level + 1);
  }
};

}  // namespace

std::string render(const SqlAst& ast, [[maybe_unused]] Dialect dialect) {
  return Renderer().query(ast.root());
}

std::string render(const SqlAst& ast) { return render(ast, ast.dialect()); }

}  // namespace bis::sql
