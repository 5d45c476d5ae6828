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
#include <string>
#include <string_view>
#include <vector>

#include "bis/common/expected.hpp"
#include "bis/sql/dialect.hpp"
#include "bis/sql/parser.hpp"

namespace bis::sql::detail {

enum class TokenType { kIdentifier, kQuotedIdentifier, kString, kNumber, kSymbol, kEnd };

struct Token {
  TokenType type = TokenType::kEnd;
  std::string text;  // unescaped content for quoted tokens, lower-cased for numbers
  std::size_t pos = 0;
};

/// Splits SQL into tokens, dropping whitespace and comments.
Expected<std::vector<Token>, ParseError> tokenize(std::string_view sql, Dialect dialect);

}  // namespace bis::sql::detail
