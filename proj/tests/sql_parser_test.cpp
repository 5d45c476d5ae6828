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

#include <set>

#include "bis/sql/parser.hpp"
#include "bis/sql/render.hpp"
#include "support/random_sql.hpp"

namespace {

using bis::sql::Dialect;
using bis::sql::Node;
using bis::sql::NodeKind;
using bis::sql::SqlAst;

SqlAst must_parse(std::string_view sql, Dialect d = Dialect::kSqlite) {
  auto ast = bis::sql::parse(sql, d);
  if (!ast) ADD_FAILURE() << sql << ": " << ast.error().message;
  return ast ? *ast : SqlAst(Node(NodeKind::kStatement), d);
}

std::string canonical(std::string_view sql, Dialect d = Dialect::kSqlite) {
  return bis::sql::render(must_parse(sql, d), d);
}

std::multiset<std::string> kinds_with_text(const Node& root) {
  std::multiset<std::string> out;
  bis::sql::visit(root, [&](const Node& n, int) {
    out.insert(std::string(bis::sql::to_string(n.kind)) + ":" + n.text);
  });
  return out;
}

TEST(Parser, GroupByCountQuery) {
  const auto ast = must_parse("SELECT count(*) FROM t GROUP BY day");
  const auto seen = kinds_with_text(ast.root());
  EXPECT_TRUE(seen.count("select:"));
  EXPECT_TRUE(seen.count("function-call:count"));
  EXPECT_TRUE(seen.count("table-ref:t"));
  EXPECT_TRUE(seen.count("group-by:"));
  EXPECT_TRUE(seen.count("column-ref:day"));
}

TEST(Parser, MinimalStatement) {
  const auto ast = must_parse("SELECT 1");
  EXPECT_GE(ast.node_count(), 3u);
  EXPECT_EQ(bis::sql::render(ast), "SELECT 1");
}

TEST(Parser, MalformedKeywordFailsAtOffsetZero) {
  auto ast = bis::sql::parse("SELEC x FRM t", Dialect::kSqlite);
  ASSERT_FALSE(ast);
  EXPECT_EQ(ast.error().position, 0u);
}

TEST(Parser, ErrorsStayInsideSource) {
  for (std::string_view bad : {"SELECT", "SELECT a FROM", "SELECT (a FROM t", "SELECT a FROM t WHERE", "SELECT 'open",
                               "SELECT a FROM t; SELECT b FROM t", "DELETE FROM t", "SELECT 1 2", "  "}) {
    auto ast = bis::sql::parse(bad, Dialect::kSqlite);
    ASSERT_FALSE(ast) << bad;
    EXPECT_LE(ast.error().position, bad.size()) << bad;
    EXPECT_FALSE(ast.error().message.empty());
  }
}

TEST(Parser, MultipleStatementsRejected) {
  auto ast = bis::sql::parse("SELECT 1; SELECT 2", Dialect::kSqlite);
  ASSERT_FALSE(ast);
  EXPECT_NE(ast.error().message.find("multiple statements"), std::string::npos);
  EXPECT_TRUE(bis::sql::parse("SELECT 1;", Dialect::kSqlite));
}

TEST(Render, CaseFoldsKeywordsAndIdentifiers) {
  EXPECT_EQ(canonical("select A , b from T"), "SELECT a, b FROM t");
}

TEST(Render, DropsRedundantParenthesesAndComments) {
  EXPECT_EQ(canonical("SELECT ((a)) FROM t -- tail\n WHERE (b = 1) /* note */"), "SELECT a FROM t WHERE b = 1");
  EXPECT_EQ(canonical("SELECT (a + b) * c FROM t"), "SELECT (a + b) * c FROM t");
  EXPECT_EQ(canonical("SELECT a FROM t WHERE (x = 1 OR y = 2) AND z = 3"),
            "SELECT a FROM t WHERE (x = 1 OR y = 2) AND z = 3");
}

TEST(Render, QuotedTextKeepsCase) {
  EXPECT_EQ(canonical("SELECT \"MixedCol\", 'MiXeD' FROM T"), "SELECT \"MixedCol\", 'MiXeD' FROM t");
  EXPECT_EQ(canonical("SELECT 'It''s'"), "SELECT 'It''s'");
}

TEST(Render, OrderOfItemsPreserved) {
  EXPECT_EQ(canonical("SELECT b, a FROM t WHERE y = 1 AND x = 2 GROUP BY b, a"),
            "SELECT b, a FROM t WHERE y = 1 AND x = 2 GROUP BY b, a");
}

TEST(Dialect, SqliteExtensionsOnlyInSqlite) {
  EXPECT_TRUE(bis::sql::parse("SELECT `a` FROM [t] WHERE a == 1", Dialect::kSqlite));
  EXPECT_FALSE(bis::sql::parse("SELECT `a` FROM t", Dialect::kGeneric));
  EXPECT_FALSE(bis::sql::parse("SELECT a FROM t WHERE a == 1", Dialect::kGeneric));
  EXPECT_EQ(canonical("SELECT a FROM t WHERE a == 1"), canonical("SELECT a FROM t WHERE a = 1"));
}

TEST(Parser, SupportedSurface) {
  for (std::string_view sql : {
           "WITH recent AS (SELECT * FROM t WHERE ts > '2023-01-01') SELECT count(*) FROM recent",
           "SELECT a.x, b.y FROM a LEFT JOIN b ON a.id = b.id WHERE b.y IS NOT NULL",
           "SELECT x FROM a JOIN b USING (id) ORDER BY x DESC LIMIT 5 OFFSET 2",
           "SELECT DISTINCT region FROM server",
           "SELECT count(DISTINCT a), CAST(b AS REAL) FROM t GROUP BY c HAVING sum(d) > 10",
           "SELECT day, lag(v) OVER (PARTITION BY k ORDER BY day) FROM t",
           "SELECT a FROM t WHERE b IN (SELECT b FROM u) AND NOT EXISTS (SELECT 1 FROM v)",
           "SELECT CASE WHEN a > 1 THEN 'hi' ELSE 'lo' END FROM t",
           "SELECT a FROM t UNION ALL SELECT a FROM u",
           "SELECT a FROM (SELECT a FROM t) AS s WHERE a BETWEEN 1 AND 3 AND b LIKE 'x%'",
       }) {
    EXPECT_TRUE(bis::sql::parse(sql, Dialect::kSqlite)) << sql;
  }
}

TEST(Parser, CteReferencesAreDistinctFromTables) {
  const auto ast = must_parse("WITH c AS (SELECT a FROM t) SELECT a FROM c");
  const auto seen = kinds_with_text(ast.root());
  EXPECT_TRUE(seen.count("cte-ref:c"));
  EXPECT_TRUE(seen.count("table-ref:t"));
  EXPECT_FALSE(seen.count("table-ref:c"));
}

// Every node is reached exactly once from the root, so the tree is acyclic
// with one parent per non-root node.
TEST(AstProperty, NodeCountMatchesTraversal) {
  bis::testing::RandomSql gen(7);
  for (int i = 0; i < 100; ++i) {
    const auto ast = must_parse(gen.query());
    std::size_t visited = 0;
    bis::sql::visit(ast.root(), [&](const Node&, int) { ++visited; });
    EXPECT_EQ(visited, ast.node_count());
    EXPECT_GE(ast.node_count(), 1u);
  }
}

TEST(AstProperty, RoundTripOnRandomQueries) {
  bis::testing::RandomSql gen(20230117);
  for (int i = 0; i < 200; ++i) {
    const std::string sql = gen.query();
    for (Dialect d : {Dialect::kSqlite, Dialect::kGeneric}) {
      auto first = bis::sql::parse(sql, d);
      ASSERT_TRUE(first) << sql << ": " << first.error().message;
      const std::string text = bis::sql::render(*first, d);
      auto second = bis::sql::parse(text, d);
      ASSERT_TRUE(second) << text << ": " << second.error().message;
      EXPECT_EQ(*first, *second) << sql << "\n" << text;
      EXPECT_EQ(bis::sql::render(*second, d), text);
    }
  }
}

}  // namespace
