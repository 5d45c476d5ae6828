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

#include "bis/bench/corpus.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bis::bench {

using nlohmann::json;

std::string_view to_string(Category category) {
  switch (category) {
    case Category::kFiltering: return "filtering";
    case Category::kTimePeriod: return "time_period";
    case Category::kComparison: return "comparison";
    case Category::kTrendComparison: return "trend_comparison";
    case Category::kMultiTable: return "multi_table";
    case Category::kRank: return "rank";
    case Category::kPercentage: return "percentage";
    case Category::kAggregation: return "aggregation";
    case Category::kLanguage: return "language";
  }
  return "?";
}

std::optional<Category> category_from_string(std::string_view name) {
  std::string key;
  for (char c : name) {
    if (c == ' ' || c == '-' || c == '_') {
      if (!key.empty() && key.back() != '_') key += '_';
    } else {
      key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  while (!key.empty() && key.back() == '_') key.pop_back();
  for (Category c : kAllCategories) {
    if (to_string(c) == key) return c;
  }
  return std::nullopt;
}

namespace {

std::string required_string(const json& item, const char* key, std::size_t index) {
  const auto it = item.find(key);
  if (it == item.end()) {
    throw ConfigError("question " + std::to_string(index) + ": missing field \"" + key + "\"");
  }
  if (!it->is_string()) {
    throw ConfigError("question " + std::to_string(index) + ": field \"" + key + "\" is not a string");
  }
  return it->get<std::string>();
}

std::string id_text(const json& value, std::size_t index) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw ConfigError("question " + std::to_string(index) + ": field \"id\" must be a string or integer");
}

}  // namespace

std::vector<BenchmarkQuestion> parse_corpus(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed question file: ") + e.what());
  }
  if (!doc.is_array()) throw ConfigError("question file must hold a JSON array");

  std::vector<BenchmarkQuestion> out;
  out.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& item = doc[i];
    if (!item.is_object()) throw ConfigError("question " + std::to_string(i) + ": not an object");
    BenchmarkQuestion q;
    q.index = i;
    q.id = item.contains("id") ? id_text(item["id"], i) : std::to_string(i);
    q.db_id = required_string(item, "db_id", i);
    q.query = required_string(item, "query", i);
    q.question = required_string(item, "question", i);
    q.language = required_string(item, "language", i);
    const std::string case_type = required_string(item, "case_type", i);
    const auto category = category_from_string(case_type);
    if (!category) {
      throw ConfigError("question " + std::to_string(i) + ": unknown case_type \"" + case_type + "\"");
    }
    q.case_type = *category;
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<BenchmarkQuestion> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read question file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_corpus(buffer.str());
}

std::filesystem::path resolve_database(const std::filesystem::path& db_dir, std::string_view db_id) {
  const std::string id(db_id);
  if (id.empty() || id.find('/') != std::string::npos || id == "." || id == "..") {
    throw ConfigError("invalid db_id \"" + id + "\"");
  }
  for (const auto& candidate : {db_dir / (id + ".sqlite"), db_dir / (id + ".db"), db_dir / id / (id + ".sqlite")}) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(candidate, ec)) return candidate;
  }
  throw ConfigError("no database for db_id \"" + id + "\" in " + db_dir.string());
}

}  // namespace bis::bench
