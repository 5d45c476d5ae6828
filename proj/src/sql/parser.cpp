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

#include "bis/sql/parser.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "identifiers.hpp"
#include "lexer.hpp"

namespace bis::sql {

namespace {

using detail::Token;
using detail::TokenType;

struct ParseFailure {
  ParseError error;
};

constexpr int kMaxNesting = 200;

class Parser {
 public:
  Parser(std::vector<Token> tokens, Dialect dialect)
      : tokens_(std::move(tokens)), dialect_(dialect) {}

  Node parse_statement() {
    Node root = parse_query(NodeKind::kStatement);
    if (is_symbol(";")) advance();
    if (peek().type != TokenType::kEnd) {
      if (is_keyword("SELECT") || is_keyword("WITH")) {
        fail("multiple statements are not supported");
      }
      fail("unexpected token after end of statement");
    }
    return root;
  }

 private:
  // --- token helpers -------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(std::string message) const { fail_at(peek().pos, std::move(message)); }
  [[noreturn]] void fail_at(std::size_t pos, std::string message) const {
    throw ParseFailure{ParseError{std::move(message), pos}};
  }

  bool is_keyword(std::string_view kw, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.type == TokenType::kIdentifier && detail::to_upper(t.text) == kw;
  }
  bool is_any_keyword(std::initializer_list<std::string_view> kws) const {
    return std::any_of(kws.begin(), kws.end(), [&](std::string_view k) { return is_keyword(k); });
  }
  bool accept_keyword(std::string_view kw) {
    if (!is_keyword(kw)) return false;
    advance();
    return true;
  }
  void expect_keyword(std::string_view kw) {
    if (!accept_keyword(kw)) fail("expected " + std::string(kw));
  }
  bool is_symbol(std::string_view sym, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.type == TokenType::kSymbol && t.text == sym;
  }
  bool accept_symbol(std::string_view sym) {
    if (!is_symbol(sym)) return false;
    advance();
    return true;
  }
  void expect_symbol(std::string_view sym) {
    if (!accept_symbol(sym)) fail("expected '" + std::string(sym) + "'");
  }

  bool is_name_token(std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.type == TokenType::kQuotedIdentifier ||
           (t.type == TokenType::kIdentifier && !detail::is_reserved(t.text));
  }
  std::string parse_name_part() {
    const Token& t = peek();
    if (t.type == TokenType::kQuotedIdentifier) {
      advance();
      return detail::canonical_identifier(t.text, true);
    }
    if (t.type == TokenType::kIdentifier) {
      if (detail::is_reserved(t.text)) fail("unexpected keyword " + detail::to_upper(t.text));
      advance();
      return detail::canonical_identifier(t.text, false);
    }
    fail("expected identifier");
  }
  std::string parse_qualified_name() {
    std::string name = parse_name_part();
    while (is_symbol(".") && is_name_token(1)) {
      advance();
      name += '.';
      name += parse_name_part();
    }
    return name;
  }

  // Optional alias after a select item or table factor.
  std::optional<std::string> parse_alias() {
    if (accept_keyword("AS")) return parse_name_part();
    if (is_name_token()) return parse_name_part();
    return std::nullopt;
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxNesting) parser.fail("statement nested too deeply");
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  // --- queries -------------------------------------------------------------

  Node parse_query(NodeKind container) {
    DepthGuard guard(*this);
    Node query(container);
    cte_scopes_.emplace_back();
    if (accept_keyword("WITH")) {
      const bool recursive = accept_keyword("RECURSIVE");
      if (recursive) query.text = "RECURSIVE";
      do {
        query.children.push_back(parse_cte(recursive));
      } while (accept_symbol(","));
    }
    query.children.push_back(parse_query_body());
    cte_scopes_.pop_back();
    return query;
  }

  Node parse_cte(bool recursive) {
    std::string name = parse_name_part();
    Node cte(NodeKind::kCte, name);
    if (accept_symbol("(")) {
      Node columns(NodeKind::kColumnList);
      do {
        columns.children.emplace_back(NodeKind::kColumnRef, parse_name_part());
      } while (accept_symbol(","));
      expect_symbol(")");
      cte.children.push_back(std::move(columns));
    }
    expect_keyword("AS");
    expect_symbol("(");
    if (recursive) cte_scopes_.back().push_back(name);
    cte.children.push_back(parse_query_body());
    expect_symbol(")");
    if (!recursive) cte_scopes_.back().push_back(name);
    return cte;
  }

  Node parse_query_body() {
    Node body = parse_select_core();
    while (is_any_keyword({"UNION", "INTERSECT", "EXCEPT"})) {
      std::string op = detail::to_upper(advance().text);
      if (op == "UNION") {
        if (accept_keyword("ALL")) {
          op = "UNION ALL";
        } else {
          accept_keyword("DISTINCT");
        }
      }
      Node rhs = parse_select_core();
      body = Node(NodeKind::kSetOperation, std::move(op), {std::move(body), std::move(rhs)});
    }
    if (is_keyword("ORDER")) {
      advance();
      expect_keyword("BY");
      body.children.push_back(parse_order_keys());
    }
    if (accept_keyword("LIMIT")) {
      Node first = parse_expr();
      if (accept_keyword("OFFSET")) {
        body.children.emplace_back(NodeKind::kLimit, "", std::vector<Node>{std::move(first)});
        body.children.emplace_back(NodeKind::kOffset, "", std::vector<Node>{parse_expr()});
      } else if (accept_symbol(",")) {
        // LIMIT <offset>, <count>
        Node count = parse_expr();
        body.children.emplace_back(NodeKind::kLimit, "", std::vector<Node>{std::move(count)});
        body.children.emplace_back(NodeKind::kOffset, "", std::vector<Node>{std::move(first)});
      } else {
        body.children.emplace_back(NodeKind::kLimit, "", std::vector<Node>{std::move(first)});
      }
    }
    return body;
  }

  Node parse_select_core() {
    if (!is_keyword("SELECT")) fail("expected SELECT");
    advance();
    Node select(NodeKind::kSelect);
    if (accept_keyword("DISTINCT")) {
      select.text = "DISTINCT";
    } else {
      accept_keyword("ALL");
    }

    Node list(NodeKind::kSelectList);
    do {
      list.children.push_back(parse_select_item());
    } while (accept_symbol(","));
    select.children.push_back(std::move(list));

    if (accept_keyword("FROM")) select.children.push_back(parse_from());
    if (accept_keyword("WHERE")) {
      select.children.emplace_back(NodeKind::kWhere, "", std::vector<Node>{parse_expr()});
    }
    if (is_keyword("GROUP")) {
      advance();
      expect_keyword("BY");
      Node group(NodeKind::kGroupBy);
      do {
        group.children.push_back(parse_expr());
      } while (accept_symbol(","));
      select.children.push_back(std::move(group));
    }
    if (accept_keyword("HAVING")) {
      select.children.emplace_back(NodeKind::kHaving, "", std::vector<Node>{parse_expr()});
    }
    return select;
  }

  Node parse_select_item() {
    if (accept_symbol("*")) return Node(NodeKind::kStar, "*");
    if (is_name_token() && is_symbol(".", 1) && is_symbol("*", 2)) {
      std::string qualifier = parse_name_part();
      advance();
      advance();
      return Node(NodeKind::kStar, qualifier + ".*");
    }
    Node expr = parse_expr();
    if (auto alias = parse_alias()) {
      return Node(NodeKind::kAlias, std::move(*alias), {std::move(expr)});
    }
    return expr;
  }

  Node parse_from() {
    Node from(NodeKind::kFrom);
    from.children.push_back(parse_table_factor());
    while (true) {
      if (accept_symbol(",")) {
        from.children.emplace_back(NodeKind::kJoin, ",", std::vector<Node>{parse_table_factor()});
        continue;
      }
      std::string join;
      if (accept_keyword("NATURAL")) join = "NATURAL ";
      if (accept_keyword("LEFT")) {
        accept_keyword("OUTER");
        join += "LEFT ";
      } else if (accept_keyword("RIGHT")) {
        accept_keyword("OUTER");
        join += "RIGHT ";
      } else if (accept_keyword("FULL")) {
        accept_keyword("OUTER");
        join += "FULL ";
      } else if (accept_keyword("CROSS")) {
        join += "CROSS ";
      } else {
        accept_keyword("INNER");
      }
      if (!accept_keyword("JOIN")) {
        if (!join.empty()) fail("expected JOIN");
        break;
      }
      join += "JOIN";
      Node node(NodeKind::kJoin, std::move(join), {parse_table_factor()});
      if (accept_keyword("ON")) {
        node.children.emplace_back(NodeKind::kOn, "", std::vector<Node>{parse_expr()});
      } else if (accept_keyword("USING")) {
        expect_symbol("(");
        Node using_cols(NodeKind::kUsing);
        do {
          using_cols.children.emplace_back(NodeKind::kColumnRef, parse_name_part());
        } while (accept_symbol(","));
        expect_symbol(")");
        node.children.push_back(std::move(using_cols));
      }
      from.children.push_back(std::move(node));
    }
    return from;
  }

  Node parse_table_factor() {
    Node factor;
    if (is_symbol("(")) {
      if (!is_keyword("SELECT", 1) && !is_keyword("WITH", 1)) {
        fail_at(peek(1).pos, "parenthesized join expressions are not supported");
      }
      advance();
      factor = parse_query(NodeKind::kSubquery);
      expect_symbol(")");
    } else {
      std::string name = parse_qualified_name();
      const NodeKind kind = is_cte(name) ? NodeKind::kCteRef : NodeKind::kTableRef;
      factor = Node(kind, std::move(name));
    }
    if (auto alias = parse_alias()) {
      return Node(NodeKind::kAlias, std::move(*alias), {std::move(factor)});
    }
    return factor;
  }

  bool is_cte(const std::string& name) const {
    for (const auto& scope : cte_scopes_) {
      if (std::find(scope.begin(), scope.end(), name) != scope.end()) return true;
    }
    return false;
  }

  Node parse_order_keys() {
    Node order(NodeKind::kOrderBy);
    do {
      Node expr = parse_expr();
      std::string direction;
      if (accept_keyword("DESC")) {
        direction = "DESC";
      } else {
        accept_keyword("ASC");
      }
      if (is_keyword("NULLS") && (is_keyword("FIRST", 1) || is_keyword("LAST", 1))) {
        advance();
        if (!direction.empty()) direction += ' ';
        direction += "NULLS " + detail::to_upper(advance().text);
      }
      order.children.emplace_back(NodeKind::kOrderKey, std::move(direction),
                                  std::vector<Node>{std::move(expr)});
    } while (accept_symbol(","));
    return order;
  }

  // --- expressions ---------------------------------------------------------

  Node parse_expr() {
    DepthGuard guard(*this);
    return parse_logical("OR", &Parser::parse_and);
  }

  Node parse_and() { return parse_logical("AND", &Parser::parse_not); }

  // AND/OR chains flatten into one n-ary node, absorbing same-operator
  // operands that were parenthesized in the source.
  Node parse_logical(std::string_view op, Node (Parser::*operand)()) {
    Node first = (this->*operand)();
    if (!is_keyword(op)) return first;
    Node chain(NodeKind::kOperator, std::string(op));
    auto absorb = [&](Node n) {
      if (n.kind == NodeKind::kOperator && n.text == op) {
        for (auto& c : n.children) chain.children.push_back(std::move(c));
      } else {
        chain.children.push_back(std::move(n));
      }
    };
    absorb(std::move(first));
    while (accept_keyword(op)) absorb((this->*operand)());
    return chain;
  }

  Node parse_not() {
    if (is_keyword("NOT") && !is_keyword("EXISTS", 1)) {
      advance();
      DepthGuard guard(*this);
      return Node(NodeKind::kOperator, "NOT", {parse_not()});
    }
    return parse_comparison();
  }

  Node parse_comparison() {
    Node left = parse_additive();
    while (true) {
      const Token& t = peek();
      if (t.type == TokenType::kSymbol) {
        std::string op = t.text;
        if (op == "==") op = "=";
        if (op == "!=") op = "<>";
        if (op == "=" || op == "<>" || op == "<" || op == "<=" || op == ">" || op == ">=") {
          advance();
          left = Node(NodeKind::kOperator, std::move(op), {std::move(left), parse_additive()});
          continue;
        }
        break;
      }
      if (accept_keyword("IS")) {
        std::string op = accept_keyword("NOT") ? "IS NOT" : "IS";
        left = Node(NodeKind::kOperator, std::move(op), {std::move(left), parse_additive()});
        continue;
      }
      bool negated = false;
      if (is_keyword("NOT") && (is_keyword("IN", 1) || is_keyword("LIKE", 1) ||
                                is_keyword("GLOB", 1) || is_keyword("BETWEEN", 1))) {
        advance();
        negated = true;
      }
      const std::string prefix = negated ? "NOT " : "";
      if (accept_keyword("IN")) {
        Node in(NodeKind::kOperator, prefix + "IN", {std::move(left)});
        expect_symbol("(");
        if (is_keyword("SELECT") || is_keyword("WITH")) {
          in.children.push_back(parse_query(NodeKind::kSubquery));
        } else {
          if (is_symbol(")")) fail("empty IN list");
          do {
            in.children.push_back(parse_expr());
          } while (accept_symbol(","));
        }
        expect_symbol(")");
        left = std::move(in);
        continue;
      }
      if (accept_keyword("LIKE")) {
        left = Node(NodeKind::kOperator, prefix + "LIKE", {std::move(left), parse_additive()});
        continue;
      }
      if (is_keyword("GLOB")) {
        if (dialect_ != Dialect::kSqlite) fail("GLOB is not supported in the generic dialect");
        advance();
        left = Node(NodeKind::kOperator, prefix + "GLOB", {std::move(left), parse_additive()});
        continue;
      }
      if (accept_keyword("BETWEEN")) {
        Node low = parse_additive();
        expect_keyword("AND");
        Node high = parse_additive();
        left = Node(NodeKind::kOperator, prefix + "BETWEEN",
                    {std::move(left), std::move(low), std::move(high)});
        continue;
      }
      if (negated) fail("unexpected NOT");
      break;
    }
    return left;
  }

  Node parse_binary_level(std::initializer_list<std::string_view> ops, Node (Parser::*operand)()) {
    Node left = (this->*operand)();
    while (true) {
      const Token& t = peek();
      if (t.type != TokenType::kSymbol ||
          std::find(ops.begin(), ops.end(), std::string_view(t.text)) == ops.end()) {
        return left;
      }
      std::string op = advance().text;
      left = Node(NodeKind::kOperator, std::move(op), {std::move(left), (this->*operand)()});
    }
  }

  Node parse_additive() { return parse_binary_level({"+", "-"}, &Parser::parse_multiplicative); }
  Node parse_multiplicative() { return parse_binary_level({"*", "/", "%"}, &Parser::parse_concat); }
  Node parse_concat() { return parse_binary_level({"||"}, &Parser::parse_unary); }

  Node parse_unary() {
    if (accept_symbol("-")) {
      DepthGuard guard(*this);
      return Node(NodeKind::kOperator, "-", {parse_unary()});
    }
    if (accept_symbol("+")) {
      DepthGuard guard(*this);
      return parse_unary();
    }
    return parse_primary();
  }

  Node parse_primary() {
    const Token& t = peek();
    switch (t.type) {
      case TokenType::kNumber:
        advance();
        return Node(NodeKind::kLiteral, t.text);
      case TokenType::kString:
        advance();
        return Node(NodeKind::kLiteral, detail::quote_string(t.text));
      case TokenType::kSymbol:
        if (accept_symbol("(")) {
          if (is_keyword("SELECT") || is_keyword("WITH")) {
            Node sub = parse_query(NodeKind::kSubquery);
            expect_symbol(")");
            return sub;
          }
          Node inner = parse_expr();
          if (is_symbol(",")) fail("row values are not supported");
          expect_symbol(")");
          return inner;
        }
        fail("unexpected '" + t.text + "'");
      case TokenType::kEnd:
        fail("unexpected end of input");
      case TokenType::kQuotedIdentifier:
        return parse_column_ref();
      case TokenType::kIdentifier:
        break;
    }

    const std::string upper = detail::to_upper(t.text);
    if (upper == "NULL" || upper == "TRUE" || upper == "FALSE" || upper == "CURRENT_TIMESTAMP" ||
        upper == "CURRENT_DATE" || upper == "CURRENT_TIME" || upper == "LOCALTIMESTAMP") {
      advance();
      return Node(NodeKind::kLiteral, upper);
    }
    if (upper == "CASE") return parse_case();
    if (upper == "CAST") return parse_cast();
    if (upper == "EXISTS" || (upper == "NOT" && is_keyword("EXISTS", 1))) {
      std::string op = upper == "NOT" ? "NOT EXISTS" : "EXISTS";
      if (upper == "NOT") advance();
      advance();
      expect_symbol("(");
      if (!is_keyword("SELECT") && !is_keyword("WITH")) fail("expected subquery after EXISTS");
      Node sub = parse_query(NodeKind::kSubquery);
      expect_symbol(")");
      return Node(NodeKind::kOperator, std::move(op), {std::move(sub)});
    }
    if (detail::is_reserved(t.text)) fail("unexpected keyword " + upper);
    if (is_symbol("(", 1)) return parse_function_call();
    return parse_column_ref();
  }

  Node parse_column_ref() {
    std::string name = parse_name_part();
    while (is_symbol(".")) {
      advance();
      name += '.';
      name += parse_name_part();
    }
    return Node(NodeKind::kColumnRef, std::move(name));
  }

  Node parse_function_call() {
    std::string name = detail::to_lower(advance().text);
    expect_symbol("(");
    Node call(NodeKind::kFunctionCall, name);
    if (accept_symbol("*")) {
      call.children.emplace_back(NodeKind::kStar, "*");
    } else if (!is_symbol(")")) {
      if (accept_keyword("DISTINCT")) {
        call.text += " DISTINCT";
      } else {
        accept_keyword("ALL");
      }
      do {
        call.children.push_back(parse_expr());
      } while (accept_symbol(","));
    }
    expect_symbol(")");
    if (accept_keyword("OVER")) call.children.push_back(parse_window());
    return call;
  }

  Node parse_window() {
    expect_symbol("(");
    Node window(NodeKind::kWindow);
    if (is_keyword("PARTITION")) {
      advance();
      expect_keyword("BY");
      Node partition(NodeKind::kPartitionBy);
      do {
        partition.children.push_back(parse_expr());
      } while (accept_symbol(","));
      window.children.push_back(std::move(partition));
    }
    if (is_keyword("ORDER")) {
      advance();
      expect_keyword("BY");
      window.children.push_back(parse_order_keys());
    }
    if (!is_symbol(")")) fail("unsupported window specification");
    advance();
    return window;
  }

  Node parse_case() {
    advance();
    Node node(NodeKind::kCase);
    if (!is_keyword("WHEN")) {
      node.text = "SIMPLE";
      node.children.push_back(parse_expr());
    }
    if (!is_keyword("WHEN")) fail("expected WHEN");
    while (accept_keyword("WHEN")) {
      Node cond = parse_expr();
      expect_keyword("THEN");
      node.children.emplace_back(NodeKind::kWhen, "", std::vector<Node>{std::move(cond), parse_expr()});
    }
    if (accept_keyword("ELSE")) {
      node.children.emplace_back(NodeKind::kElse, "", std::vector<Node>{parse_expr()});
    }
    expect_keyword("END");
    return node;
  }

  Node parse_cast() {
    advance();
    expect_symbol("(");
    Node expr = parse_expr();
    expect_keyword("AS");
    std::string type;
    if (peek().type != TokenType::kIdentifier) fail("expected type name");
    while (peek().type == TokenType::kIdentifier) {
      if (!type.empty()) type += ' ';
      type += detail::to_upper(advance().text);
    }
    if (accept_symbol("(")) {
      type += '(';
      do {
        if (peek().type != TokenType::kNumber) fail("expected type length");
        type += advance().text;
        if (is_symbol(",")) type += ',';
      } while (accept_symbol(","));
      expect_symbol(")");
      type += ')';
    }
    expect_symbol(")");
    return Node(NodeKind::kCast, std::move(type), {std::move(expr)});
  }

  std::vector<Token> tokens_;
  Dialect dialect_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  std::vector<std::vector<std::string>> cte_scopes_;
};

}  // namespace

Expected<SqlAst, ParseError> parse(std::string_view sql, Dialect dialect) {
  auto tokens = detail::tokenize(sql, dialect);
  if (!tokens) return tokens.error();
  if (tokens->size() == 1) return ParseError{"empty statement", 0};
  try {
    Parser parser(std::move(tokens).value(), dialect);
    return SqlAst(parser.parse_statement(), dialect);
  } catch (const ParseFailure& failure) {
    return failure.error;
  }
}

}  // namespace bis::sql
