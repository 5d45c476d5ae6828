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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "bis/result/cell.hpp"
#include "bis/result/column_matching.hpp"
#include "bis/result/database.hpp"
#include "bis/result/executor.hpp"
#include "bis/result/result_similarity.hpp"
#include "support/paths.hpp"

namespace {

using bis::result::Cell;
using bis::result::Column;
using bis::result::ResultTable;

const bis::sql::Timestamp kAnchor = bis::sql::default_anchor();

Column ints(std::string label, std::vector<long long> values) {
  Column c{std::move(label), {}};
  for (auto v : values) c.values.push_back(Cell::integer(v));
  return c;
}

Column texts(std::string label, std::vector<std::string> values) {
  Column c{std::move(label), {}};
  for (auto& v : values) c.values.push_back(Cell::text(v));
  return c;
}

bis::result::Database fixture(const char* id) {
  return bis::result::Database::open_read_only(bis::testing::fixture_db(id));
}

// ---- cells ------------------------------------------------------------------

TEST(Cell, EqualityPolicy) {
  using bis::result::cells_equal;
  EXPECT_TRUE(cells_equal(Cell::null(), Cell::null()));
  EXPECT_TRUE(cells_equal(Cell::integer(3), Cell::real(3.0)));
  EXPECT_TRUE(cells_equal(Cell::real(0.1 + 0.2), Cell::real(0.3)));
  EXPECT_FALSE(cells_equal(Cell::real(1.0), Cell::real(1.0 + 1e-6)));
  EXPECT_TRUE(cells_equal(Cell::text("abc  "), Cell::text("abc")));
  EXPECT_FALSE(cells_equal(Cell::text("  abc"), Cell::text("abc")));
  EXPECT_TRUE(cells_equal(Cell::timestamp("2023-01-17 00:00:00"), Cell::text("2023-01-17 00:00:00")));
  EXPECT_FALSE(cells_equal(Cell::text("1"), Cell::integer(1)));
  EXPECT_FALSE(cells_equal(Cell::null(), Cell::integer(0)));
  EXPECT_FALSE(cells_equal(Cell::null(), Cell::text("")));

  bis::result::CellEqualityPolicy strict;
  strict.trim_trailing_whitespace = false;
  EXPECT_FALSE(cells_equal(Cell::text("abc "), Cell::text("abc"), strict));
}

TEST(ResultTable, RejectsRaggedColumns) {
  EXPECT_THROW(ResultTable({ints("a", {1, 2}), ints("b", {1})}), std::invalid_argument);
  const ResultTable t({ints("a", {1, 2}), ints("a", {3, 4})});
  EXPECT_EQ(t.row_count(), 2u);
  EXPECT_EQ(t.column_count(), 2u);
}

// ---- execution ----------------------------------------------------------------

TEST(Execute, SelectOne) {
  const auto db = fixture("benchmark_1");
  auto t = bis::result::execute("SELECT 1", db, kAnchor);
  ASSERT_TRUE(t);
  ASSERT_EQ(t->column_count(), 1u);
  ASSERT_EQ(t->row_count(), 1u);
  EXPECT_EQ(t->column(0).values[0].type(), bis::result::CellType::kInteger);
  EXPECT_EQ(t->column(0).values[0].as_integer(), 1);
}

TEST(Execute, SampleInstanceIsSingleCount) {
  const auto db = fixture("benchmark_1");
  auto t = bis::result::execute(
      "SELECT count(*) FROM pre_ranking_filter_log WHERE task=342111 AND filter_key = 'o_rta_filter'", db, kAnchor);
  ASSERT_TRUE(t);
  EXPECT_EQ(t->column_count(), 1u);
  EXPECT_EQ(t->row_count(), 1u);
  EXPECT_GT(t->column(0).values[0].as_integer(), 0);
}

TEST(Execute, TimestampColumnsAreTagged) {
  const auto db = fixture("benchmark_1");
  auto t = bis::result::execute("SELECT ts, filter_key FROM pre_ranking_filter_log LIMIT 1", db, kAnchor);
  ASSERT_TRUE(t);
  EXPECT_EQ(t->column(0).values[0].type(), bis::result::CellType::kTimestamp);
  EXPECT_EQ(t->column(1).values[0].type(), bis::result::CellType::kText);
}

TEST(Execute, ErrorsAreClassified) {
  const auto db = fixture("benchmark_1");
  using Kind = bis::result::ExecutionError::Kind;
  auto parse = bis::result::execute("SELEC 1", db, kAnchor);
  ASSERT_FALSE(parse);
  EXPECT_EQ(parse.error().kind, Kind::kParse);

  auto engine = bis::result::execute("SELECT missing_column FROM campaign", db, kAnchor);
  ASSERT_FALSE(engine);
  EXPECT_EQ(engine.error().kind, Kind::kEngine);

  bis::result::ExecutionOptions capped;
  capped.row_cap = 10;
  auto cap = bis::result::execute("SELECT * FROM ad_metric_real", db, kAnchor, capped);
  ASSERT_FALSE(cap);
  EXPECT_EQ(cap.error().kind, Kind::kRowCap);

  bis::result::ExecutionOptions quick;
  quick.timeout = std::chrono::milliseconds(100);
  auto slow = bis::result::execute(
      "WITH RECURSIVE n(i) AS (SELECT 1 UNION ALL SELECT i + 1 FROM n) SELECT count(*) FROM n", db, kAnchor, quick);
  ASSERT_FALSE(slow);
  EXPECT_EQ(slow.error().kind, Kind::kTimeout);
}

TEST(Execute, ConnectionIsReadOnly) {
  const auto db = fixture("benchmark_1");
  EXPECT_FALSE(bis::result::execute_raw("DELETE FROM campaign", db));
  auto still = bis::result::execute("SELECT count(*) FROM campaign", db, kAnchor);
  ASSERT_TRUE(still);
  EXPECT_EQ(still->column(0).values[0].as_integer(), 6);
}

TEST(Database, MissingFileThrows) {
  EXPECT_THROW(bis::result::Database::open_read_only("/nonexistent/x.sqlite"), bis::result::DatabaseError);
}

// ---- matching -------------------------------------------------------------------

TEST(MatchColumns, RelabeledColumnsAllMatch) {
  const ResultTable truth({ints("a", {1, 2}), texts("b", {"x", "y"})});
  const ResultTable pred({texts("renamed_b", {"x", "y"}), ints("renamed_a", {1, 2})});
  const auto pairs = bis::result::match_columns(pred, truth);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0], (bis::result::ColumnPair{0, 1}));
  EXPECT_EQ(pairs[1], (bis::result::ColumnPair{1, 0}));
}

TEST(MatchColumns, ExtraRankColumnIsUnmatched) {
  const ResultTable truth({texts("name", {"a", "b", "c"}), ints("clicks", {30, 20, 10})});
  const ResultTable pred({ints("rank", {1, 2, 3}), texts("name", {"a", "b", "c"}), ints("clicks", {30, 20, 10})});
  const auto score = bis::result::score_result_pair(pred, truth);
  EXPECT_EQ(score.matched_pairs.size(), 2u);
  EXPECT_DOUBLE_EQ(score.recall, 1.0);
  EXPECT_DOUBLE_EQ(score.precision, 2.0 / 3.0);
}

TEST(MatchColumns, DifferentRowCountsNeverMatch) {
  const ResultTable truth({ints("a", {1, 2})});
  const ResultTable pred({ints("a", {1, 2, 3})});
  EXPECT_TRUE(bis::result::match_columns(pred, truth).empty());
  bis::result::MatchOptions loose;
  loose.order_sensitive = false;
  EXPECT_TRUE(bis::result::match_columns(pred, truth, loose).empty());
}

TEST(MatchColumns, RowOrderModes) {
  const ResultTable truth({ints("a", {1, 2, 3})});
  const ResultTable pred({ints("a", {3, 1, 2})});
  EXPECT_TRUE(bis::result::match_columns(pred, truth).empty());
  bis::result::MatchOptions loose;
  loose.order_sensitive = false;
  EXPECT_EQ(bis::result::match_columns(pred, truth, loose).size(), 1u);
}

TEST(MatchColumns, DuplicateColumnsMatchOneToOne) {
  const ResultTable truth({ints("a", {1}), ints("b", {1}), ints("c", {2})});
  const ResultTable pred({ints("x", {1}), ints("y", {1}), ints("z", {1})});
  EXPECT_EQ(bis::result::match_columns(pred, truth).size(), 2u);
}

// ---- scoring -------------------------------------------------------------------

TEST(Score, PerfectPrediction) {
  const ResultTable truth({ints("a", {1}), ints("b", {2}), ints("c", {3})});
  const auto s = bis::result::score_result_pair(truth, truth);
  EXPECT_EQ(s.precision, 1.0);
  EXPECT_EQ(s.recall, 1.0);
  EXPECT_EQ(s.f1, 1.0);
}

TEST(Score, TwoOfThreeColumns) {
  const ResultTable truth({ints("a", {1, 2}), ints("b", {3, 4}), ints("c", {5, 6})});
  const ResultTable pred({ints("b", {3, 4}), ints("a", {1, 2})});
  const auto s = bis::result::score_result_pair(pred, truth);
  // P = 2/2, R = 2/3, F1 = 2PR/(P+R) = (4/3)/(5/3).
  EXPECT_DOUBLE_EQ(s.precision, 1.0);
  EXPECT_NEAR(s.recall, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(s.f1, 0.8, 1e-12);
}

TEST(Score, EmptyTables) {
  const ResultTable none;
  const ResultTable some({ints("a", {1})});
  EXPECT_EQ(bis::result::score_result_pair(none, none).f1, 1.0);
  EXPECT_EQ(bis::result::score_result_pair(none, some).f1, 0.0);
  EXPECT_EQ(bis::result::score_result_pair(some, none).f1, 0.0);
}

TEST(Score, WrongWhereConstantScoresZero) {
  const auto db = fixture("benchmark_1");
  auto truth = bis::result::execute("SELECT clicks, cost FROM ad_metric_real WHERE campaign_id = 2", db, kAnchor);
  auto pred = bis::result::execute("SELECT clicks, cost FROM ad_metric_real WHERE campaign_id = 3", db, kAnchor);
  ASSERT_TRUE(truth && pred);
  const auto s = bis::result::score_result_pair(*pred, *truth);
  EXPECT_TRUE(s.matched_pairs.empty());
  EXPECT_EQ(s.f1, 0.0);
}

TEST(Score, FailedScoreIsZero) {
  const auto s = bis::result::ResultScore::failed(bis::result::ResultVerdict::kExecutionError, "boom");
  EXPECT_EQ(s.precision + s.recall + s.f1, 0.0);
  EXPECT_EQ(bis::result::harmonic_f1(0.0, 1.0), 0.0);
}

// ---- properties ------------------------------------------------------------------

ResultTable random_table(std::mt19937& rng, std::size_t columns, std::size_t rows) {
  const std::vector<Cell> pool = {Cell::integer(1), Cell::integer(2), Cell::real(2.0), Cell::text("a"),
                                  Cell::text("a "), Cell::null()};
  std::vector<Column> cols;
  for (std::size_t c = 0; c < columns; ++c) {
    Column col{"c" + std::to_string(c), {}};
    for (std::size_t r = 0; r < rows; ++r) col.values.push_back(pool[rng() % pool.size()]);
    cols.push_back(std::move(col));
  }
  return ResultTable(std::move(cols));
}

TEST(ScoreProperty, PermutationAndLabelInvariance) {
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    const std::size_t rows = rng() % 3;
    const ResultTable truth = random_table(rng, 1 + rng() % 4, rows);
    std::vector<Column> cols = random_table(rng, 1 + rng() % 4, rows).columns();
    // Plant copies of truth columns so matches happen.
    for (auto& c : cols) {
      if (rng() % 2) c = truth.column(rng() % truth.column_count());
    }
    const ResultTable pred(cols);
    const auto base = bis::result::score_result_pair(pred, truth);

    std::shuffle(cols.begin(), cols.end(), rng);
    for (auto& c : cols) c.label = "relabeled";
    const auto moved = bis::result::score_result_pair(ResultTable(cols), truth);
    EXPECT_DOUBLE_EQ(base.precision, moved.precision);
    EXPECT_DOUBLE_EQ(base.recall, moved.recall);
    EXPECT_DOUBLE_EQ(base.f1, moved.f1);

    EXPECT_GE(base.f1, 0.0);
    EXPECT_LE(base.f1, std::max(base.precision, base.recall) + 1e-15);
    EXPECT_EQ(base.f1 == 0.0, base.matched_pairs.empty());
    EXPECT_LE(base.matched_pairs.size(), std::min(pred.column_count(), truth.column_count()));
  }
}

}  // namespace
