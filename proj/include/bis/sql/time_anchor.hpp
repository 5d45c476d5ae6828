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

#include "bis/sql/ast.hpp"
#include "bis/sql/timestamp.hpp"

namespace bis::sql {

/// Replaces every current-time reference with a literal derived from `anchor`.
///
/// Covered: `now()`, `current_timestamp`/`localtimestamp`/`getdate()`
/// (datetime literal), `current_date`/`curdate()`/`today()` (date literal),
/// `current_time`/`curtime()` (time literal) and, for SQLite trees, a `'now'`
/// time-value argument of date/time/datetime/julianday/strftime/unixepoch.
/// The result contains no current-time reference, so the rewrite is idempotent.
SqlAst rewrite_time_anchor(const SqlAst& ast, const Timestamp& anchor);

/// True when the tree contains any reference rewrite_time_anchor would replace.
bool references_current_time(const SqlAst& ast);

}  // namespace bis::sql
