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
#include <vector>

namespace bis::bench {

/// Runs a SQL seed script into a fresh database file, replacing any existing
/// file at `database`. Throws ConfigError on a script error.
void build_database(const std::filesystem::path& seed_script, const std::filesystem::path& database);

/// Builds `<out_dir>/<stem>.sqlite` for every `*.sql` in `seed_dir`, in name
/// order, and returns the written paths.
std::vector<std::filesystem::path> build_fixture_databases(const std::filesystem::path& seed_dir,
                                                           const std::filesystem::path& out_dir);

}  // namespace bis::bench
