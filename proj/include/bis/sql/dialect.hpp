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

#include <optional>
#include <string>
#include <string_view>

namespace bis::sql {

/// SQL dialect a statement is parsed in and rendered to.
///
/// `kSqlite` is the embedded execution dialect of the fixture databases. It
/// accepts backtick and bracket identifier quoting, `==`, `GLOB`, and treats a
/// `'now'` argument of the date/time functions as a current-time reference.
/// `kGeneric` is a plain ANSI-flavoured mode without those extensions.
enum class Dialect { kSqlite, kGeneric };

std::string_view to_string(Dialect dialect);
std::optional<Dialect> dialect_from_string(std::string_view name);

}  // namespace bis::sql
