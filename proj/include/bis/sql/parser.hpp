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

#include "bis/common/expected.hpp"
#include "bis/sql/ast.hpp"
#include "bis/sql/dialect.hpp"

namespace bis::sql {

struct ParseError {
  std::string message;
  std::size_t position = 0;  // byte offset into the source text
};

/// Parses one SELECT statement (optionally preceded by WITH and followed by a
/// single `;`) into a normalized tree.
///
/// Normalization case-folds keywords and unquoted identifiers, strips
/// comments and whitespace, drops parentheses (the tree encodes grouping),
/// flattens AND/OR chains and canonicalizes operator spellings. Clause item
/// order is preserved as written. Anything outside the supported surface,
/// including multiple statements, is reported as a ParseError.
Expected<SqlAst, ParseError> parse(std::string_view sql, Dialect dialect);

}  // namespace bis::sql
