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

#include <string>

#include "bis/sql/ast.hpp"
#include "bis/sql/dialect.hpp"

namespace bis::sql {

/// Emits canonical SQL text: upper-case keywords, single spaces, and only the
/// parentheses operator precedence requires. `parse(render(ast))` yields `ast`.
std::string render(const SqlAst& ast, Dialect dialect);
std::string render(const SqlAst& ast);

}  // namespace bis::sql
