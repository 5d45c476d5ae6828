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

#include <filesystem>
#include <string_view>
#include <vector>

#include "bis/bench/question.hpp"

namespace bis::bench {

/// Parses a question file: a JSON array of objects with keys db_id, query,
/// question, language, case_type and an optional id. Extra keys are ignored.
/// Throws ConfigError naming the offending instance index.
std::vector<BenchmarkQuestion> parse_corpus(std::string_view json_text);

std::vector<BenchmarkQuestion> load_corpus(const std::filesystem::path& path);

/// Database file for `db_id` inside `db_dir`: `<id>.sqlite`, `<id>.db` or
/// `<id>/<id>.sqlite`, whichever exists first. Throws ConfigError otherwise.
std::filesystem::path resolve_database(const std::filesystem::path& db_dir, std::string_view db_id);

}  // namespace bis::bench
