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
#include <string_view>

namespace bis::sql::detail {

std::string to_upper(std::string_view s);
std::string to_lower(std::string_view s);

/// Reserved words cannot appear as bare identifiers or implicit aliases.
bool is_reserved(std::string_view word);

/// Canonical spelling of one identifier part. Unquoted names fold to lower
/// case; quoted names keep their case and stay quoted unless the content is
/// already a valid lower-case, non-reserved bare identifier.
std::string canonical_identifier(std::string_view content, bool quoted);

/// Single-quoted SQL string literal with embedded quotes doubled.
std::string quote_string(std::string_view content);

}  // namespace bis::sql::detail
