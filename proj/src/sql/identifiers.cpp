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

#include "identifiers.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace bis::sql::detail {

namespace {

// Sorted for binary search.
constexpr std::array<std::string_view, 61> kReserved = {
    "ALL", "ALTER", "AND", "AS", "ASC",
    "BETWEEN", "BY", "CASE", "CAST", "CREATE",
    "CROSS", "CURRENT_DATE", "CURRENT_TIME", "CURRENT_TIMESTAMP", "DELETE",
    "DESC", "DISTINCT", "DROP", "ELSE", "END",
    "EXCEPT", "EXISTS", "FALSE", "FROM", "FULL",
    "GLOB", "GROUP", "HAVING", "IN", "INNER",
    "INSERT", "INTERSECT", "INTO", "IS", "JOIN",
    "LEFT", "LIKE", "LIMIT", "LOCALTIMESTAMP", "NATURAL",
    "NOT", "NULL", "OFFSET", "ON", "OR",
    "ORDER", "OUTER", "OVER", "RIGHT", "SELECT",
    "SET", "TABLE", "THEN", "TRUE", "UNION",
    "UPDATE", "USING", "VALUES", "WHEN", "WHERE",
    "WITH",
};

}  // namespace

std::string to_upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_reserved(std::string_view word) {
  const std::string upper = to_upper(word);
  return std::binary_search(kReserved.begin(), kReserved.end(), std::string_view(upper));
}

std::string canonical_identifier(std::string_view content, bool quoted) {
  if (!quoted) return to_lower(content);
  const bool bare_ok =
      !content.empty() &&
      (std::islower(static_cast<unsigned char>(content[0])) || content[0] == '_') &&
      std::all_of(content.begin(), content.end(), [](char c) {
        const auto u = static_cast<unsigned char>(c);
        return std::islower(u) || std::isdigit(u) || c == '_';
      }) &&
      !is_reserved(content);
  if (bare_ok) return std::string(content);
  std::string out = "\"";
  for (char c : content) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string quote_string(std::string_view content) {
  std::string out = "'";
  for (char c : content) {
    if (c == '\'') out.push_back('\'');
    out.push_back(c);
  }
  out.push_back('\'');
  return out;
}

}  // namespace bis::sql::detail
