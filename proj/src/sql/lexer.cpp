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

#include "lexer.hpp"

#include <cctype>

namespace bis::sql::detail {

namespace {

bool is_ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool is_ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '$' || c >= 0x80; }

ParseError error_at(std::size_t pos, std::string message) { return ParseError{std::move(message), pos}; }

}  // namespace

Expected<std::vector<Token>, ParseError> tokenize(std::string_view sql, Dialect dialect) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = sql.size();
  const bool sqlite = dialect == Dialect::kSqlite;

  while (i < n) {
    const auto c = static_cast<unsigned char>(sql[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < n && sql[i + 1] == '-') {
      while (i < n && sql[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && sql[i + 1] == '*') {
      const auto end = sql.find("*/", i + 2);
      if (end == std::string_view::npos) return error_at(i, "unterminated comment");
      i = end + 2;
      continue;
    }

    const std::size_t start = i;
    if (is_ident_start(c)) {
      while (i < n && is_ident_char(static_cast<unsigned char>(sql[i]))) ++i;
      tokens.push_back({TokenType::kIdentifier, std::string(sql.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(c) || (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(sql[i + 1])))) {
      while (i < n && std::isdigit(static_cast<unsigned char>(sql[i]))) ++i;
      if (i < n && sql[i] == '.') {
        ++i;
        while (i < n && std::isdigit(static_cast<unsigned char>(sql[i]))) ++i;
      }
      if (i < n && (sql[i] == 'e' || sql[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < n && (sql[j] == '+' || sql[j] == '-')) ++j;
        if (j < n && std::isdigit(static_cast<unsigned char>(sql[j]))) {
          i = j;
          while (i < n && std::isdigit(static_cast<unsigned char>(sql[i]))) ++i;
        }
      }
      if (i < n && is_ident_start(static_cast<unsigned char>(sql[i]))) {
        return error_at(i, "malformed number");
      }
      std::string text(sql.substr(start, i - start));
      for (auto& ch : text) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      tokens.push_back({TokenType::kNumber, std::move(text), start});
      continue;
    }
    if (c == '\'' || c == '"' || (sqlite && (c == '`' || c == '['))) {
      const char close = c == '[' ? ']' : static_cast<char>(c);
      std::string content;
      ++i;
      bool closed = false;
      while (i < n) {
        if (sql[i] == close) {
          if (close != ']' && i + 1 < n && sql[i + 1] == close) {
            content.push_back(close);
            i += 2;
            continue;
          }
          ++i;
          closed = true;
          break;
        }
        content.push_back(sql[i++]);
      }
      if (!closed) {
        return error_at(start, c == '\'' ? "unterminated string literal" : "unterminated quoted identifier");
      }
      if (c != '\'' && content.empty()) return error_at(start, "empty quoted identifier");
      tokens.push_back({c == '\'' ? TokenType::kString : TokenType::kQuotedIdentifier, std::move(content), start});
      continue;
    }

    auto two = sql.substr(i, 2);
    if (two == "<=" || two == ">=" || two == "<>" || two == "!=" || two == "||" ||
        (two == "==" && sqlite)) {
      tokens.push_back({TokenType::kSymbol, std::string(two), start});
      i += 2;
      continue;
    }
    switch (c) {
      case '(': case ')': case ',': case '.': case ';': case '*': case '+':
      case '-': case '/': case '%': case '=': case '<': case '>':
        tokens.push_back({TokenType::kSymbol, std::string(1, static_cast<char>(c)), start});
        ++i;
        continue;
      default:
        return error_at(start, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  tokens.push_back({TokenType::kEnd, {}, n});
  return tokens;
}

}  // namespace bis::sql::detail
