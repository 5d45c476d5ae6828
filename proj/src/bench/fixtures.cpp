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

#include "bis/bench/fixtures.hpp"

#include <sqlite3.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bis/bench/question.hpp"

namespace bis::bench {

void build_database(const std::filesystem::path& seed_script, const std::filesystem::path& database) {
  std::ifstream in(seed_script, std::ios::binary);
  if (!in) throw ConfigError("cannot read seed script " + seed_script.string());
  std::ostringstream script;
  script << in.rdbuf();

  std::error_code ec;
  std::filesystem::remove(database, ec);
  sqlite3* db = nullptr;
  if (sqlite3_open_v2(database.c_str(), &db, SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE, nullptr) != SQLITE_OK) {
    std::string message = db ? sqlite3_errmsg(db) : "out of memory";
    sqlite3_close(db);
    throw ConfigError("cannot create " + database.string() + ": " + message);
  }
  char* err = nullptr;
  const int rc = sqlite3_exec(db, script.str().c_str(), nullptr, nullptr, &err);
  std::string message = err ? err : "";
  sqlite3_free(err);
  sqlite3_close(db);
  if (rc != SQLITE_OK) {
    std::filesystem::remove(database, ec);
    throw ConfigError(seed_script.string() + ": " + message);
  }
}

std::vector<std::filesystem::path> build_fixture_databases(const std::filesystem::path& seed_dir,
                                                           const std::filesystem::path& out_dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(seed_dir, ec)) throw ConfigError("no seed directory " + seed_dir.string());
  std::vector<std::filesystem::path> seeds;
  for (const auto& entry : std::filesystem::directory_iterator(seed_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".sql") seeds.push_back(entry.path());
  }
  std::sort(seeds.begin(), seeds.end());
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;
  for (const auto& seed : seeds) {
    auto target = out_dir / (seed.stem().string() + ".sqlite");
    build_database(seed, target);
    written.push_back(std::move(target));
  }
  return written;
}

}  // namespace bis::bench
