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

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bis::bench {

/// The nine BI question classes used for score breakdowns.
enum class Category {
  kFiltering,
  kTimePeriod,
  kComparison,
  kTrendComparison,
  kMultiTable,
  kRank,
  kPercentage,
  kAggregation,
  kLanguage,
};

inline constexpr std::array<Category, 9> kAllCategories = {
    Category::kFiltering,  Category::kTimePeriod, Category::kComparison,
    Category::kTrendComparison, Category::kMultiTable, Category::kRank,
    Category::kPercentage, Category::kAggregation, Category::kLanguage};

/// snake_case name, e.g. "trend_comparison".
std::string_view to_string(Category category);

/// Accepts the snake_case names and their spaced, hyphenated or upper-case
/// spellings ("Trend Comparison", "multi-table").
std::optional<Category> category_from_string(std::string_view name);

struct BenchmarkQuestion {
  std::string id;          // the "id" field, or the zero-based file position
  std::size_t index = 0;   // file position
  std::string db_id;
  std::string query;       // ground-truth SQL
  std::string question;    // natural-language text
  std::string language;
  Category case_type = Category::kFiltering;
};

/// Invalid user-supplied configuration or input files: missing directories,
/// unknown databases, malformed corpora or prediction files.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bis::bench
