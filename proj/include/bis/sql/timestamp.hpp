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

/// Second-resolution civil timestamp without time zone.
class Timestamp {
 public:
  /// Parses `YYYY-MM-DD`, `YYYY-MM-DDTHH:MM[:SS]` or the same with a space
  /// separator. A trailing `Z` is accepted; fractional seconds are dropped.
  static std::optional<Timestamp> parse(std::string_view text);

  int year() const noexcept { return year_; }
  int month() const noexcept { return month_; }
  int day() const noexcept { return day_; }
  int hour() const noexcept { return hour_; }
  int minute() const noexcept { return minute_; }
  int second() const noexcept { return second_; }

  std::string iso8601() const;       // 2023-01-17T00:00:00
  std::string sql_datetime() const;  // 2023-01-17 00:00:00
  std::string sql_date() const;      // 2023-01-17
  std::string sql_time() const;      // 00:00:00

  friend bool operator==(const Timestamp&, const Timestamp&) = default;

 private:
  Timestamp(int y, int mo, int d, int h, int mi, int s)
      : year_(y), month_(mo), day_(d), hour_(h), minute_(mi), second_(s) {}

  int year_, month_, day_, hour_, minute_, second_;
};

/// Reference instant of the benchmark's sample data.
Timestamp default_anchor();

}  // namespace bis::sql
