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
#include <sqlite3.h>

#include <map>
#include <mutex>
#include <set>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "bis/bench/adapter.hpp"
#include "bis/bench/corpus.hpp"
#include "bis/bench/evaluate.hpp"
#include "bis/bench/fixtures.hpp"
#include "bis/bench/report.hpp"
#include "bis/bench/validate.hpp"
#include "support/paths.hpp"
#include "support/temp_dir.hpp"

namespace {

using namespace bis::bench;
using bis::testing::TempDir;

const char* kSample = R"([{
  "db_id": "benchmark_1",
  "query": "SELECT count(*) FROM pre_ranking_filter_log WHERE task=342111 AND filter_key = 'o_rta_filter'",
  "question": "rta filtering count for task 342111?",
  "language": "en",
  "case_type": "filtering"
}])";

BenchmarkQuestion make_question(std::string id, std::string db, std::string query, Category c,
                                std::string lang = "en") {
  BenchmarkQuestion q;
  q.id = id;
  q.index = static_cast<std::size_t>(std::stoi(id));
  q.db_id = std::move(db);
  q.query = std::move(query);
  q.question = "q" + id;
  q.language = std::move(lang);
  q.case_type = c;
  return q;
}

std::vector<Prediction> with_sql(const std::vector<BenchmarkQuestion>& qs, std::vector<std::string> sql) {
  std::vector<Prediction> out;
  for (std::size_t i = 0; i < qs.size(); ++i) out.push_back({qs[i].id, sql[i], std::nullopt, std::nullopt});
  return out;
}

// Copy of a fixture database with some tables emptied.
std::filesystem::path emptied_copy(const TempDir& dir, const char* id, std::vector<std::string> tables) {
  const auto target = dir.path() / (std::string(id) + ".sqlite");
  std::filesystem::copy_file(bis::testing::fixture_db(id), target);
  sqlite3* db = nullptr;
  sqlite3_open(target.c_str(), &db);
  for (const auto& t : tables) sqlite3_exec(db, ("DELETE FROM " + t).c_str(), nullptr, nullptr, nullptr);
  sqlite3_close(db);
  return target;
}

// ---- corpus -------------------------------------------------------------------

TEST(Corpus, SampleInstance) {
  const auto qs = parse_corpus(kSample);
  ASSERT_EQ(qs.size(), 1u);
  EXPECT_EQ(qs[0].case_type, Category::kFiltering);
  EXPECT_EQ(qs[0].language, "en");
  EXPECT_EQ(qs[0].db_id, "benchmark_1");
  EXPECT_EQ(qs[0].id, "0");
}

TEST(Corpus, EmptyArray) { EXPECT_TRUE(parse_corpus("[]").empty()); }

TEST(Corpus, OptionalIdAndExtraFields) {
  const auto qs = parse_corpus(R"([{"id": "q-7", "db_id": "d", "query": "SELECT 1", "question": "x",
      "language": "zh", "case_type": "Trend Comparison", "note": "ignored"},
     {"id": 12, "db_id": "d", "query": "SELECT 1", "question": "x", "language": "en", "case_type": "multi-table"}])");
  ASSERT_EQ(qs.size(), 2u);
  EXPECT_EQ(qs[0].id, "q-7");
  EXPECT_EQ(qs[0].case_type, Category::kTrendComparison);
  EXPECT_EQ(qs[1].id, "12");
  EXPECT_EQ(qs[1].case_type, Category::kMultiTable);
}

TEST(Corpus, ErrorsNameTheInstance) {
  auto message = [](const char* text) {
    try {
      parse_corpus(text);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message(R"([{"db_id":"d","query":"SELECT 1","question":"x","language":"en","case_type":"rank"},
                        {"db_id":"d","question":"x","language":"en","case_type":"rank"}])")
                .find("question 1: missing field \"query\""),
            std::string::npos);
  EXPECT_NE(message(R"([{"db_id":"d","query":"SELECT 1","question":"x","language":"en","case_type":"weather"}])")
                .find("question 0: unknown case_type"),
            std::string::npos);
  EXPECT_NE(message("[{").find("malformed"), std::string::npos);
  EXPECT_NE(message("{}").find("array"), std::string::npos);
}

TEST(Corpus, CategoryNames) {
  for (Category c : kAllCategories) EXPECT_EQ(category_from_string(to_string(c)), c);
  EXPECT_EQ(category_from_string("Time Period"), Category::kTimePeriod);
  EXPECT_FALSE(category_from_string("time"));
}

TEST(Corpus, FixtureCorpusCoversEveryCategory) {
  const auto qs = load_corpus(bis::testing::fixture_corpus());
  EXPECT_GE(qs.size(), 27u);
  std::map<Category, int> counts;
  std::set<std::string> languages;
  for (const auto& q : qs) {
    ++counts[q.case_type];
    languages.insert(q.language);
  }
  for (Category c : kAllCategories) EXPECT_GE(counts[c], 3) << to_string(c);
  EXPECT_TRUE(languages.count("en"));
  EXPECT_TRUE(languages.count("zh"));
}

TEST(Corpus, ResolveDatabase) {
  EXPECT_EQ(resolve_database(bis::testing::fixture_db_dir(), "benchmark_1"), bis::testing::fixture_db("benchmark_1"));
  EXPECT_THROW(resolve_database(bis::testing::fixture_db_dir(), "nope"), ConfigError);
  EXPECT_THROW(resolve_database(bis::testing::fixture_db_dir(), "../x"), ConfigError);
}

// ---- adapters -------------------------------------------------------------------

TEST(Adapter, SpecParsing) {
  EXPECT_EQ(parse_adapter_spec("identity").kind, AdapterConfig::Kind::kIdentity);
  EXPECT_EQ(parse_adapter_spec("file:/tmp/p.jsonl").target, "/tmp/p.jsonl");
  EXPECT_EQ(parse_adapter_spec("cmd:python model.py").target, "python model.py");
  EXPECT_EQ(parse_adapter_spec("http://localhost:8080/predict").target, "http://localhost:8080/predict");
  EXPECT_EQ(parse_adapter_spec("http:http://h/p").target, "http://h/p");
  EXPECT_THROW(parse_adapter_spec("ftp:x"), ConfigError);
  EXPECT_THROW(parse_adapter_spec("file:"), ConfigError);
}

TEST(Adapter, PredictionsFilePassthrough) {
  TempDir dir;
  const auto qs = parse_corpus(R"([{"id":"a","db_id":"d","query":"SELECT 1","question":"x","language":"en","case_type":"rank"},
      {"id":"b","db_id":"d","query":"SELECT 2","question":"y","language":"en","case_type":"rank"}])");
  const auto file = dir.write("p.jsonl", "{\"id\": \"b\", \"sql\": \"SELECT 22\"}\n\n{\"id\": \"a\", \"sql\": \"SELECT 11\"}\n");
  const auto preds = get_predictions(qs, parse_adapter_spec("file:" + file.string()));
  ASSERT_EQ(preds.size(), 2u);
  EXPECT_EQ(preds[0].sql, "SELECT 11");
  EXPECT_EQ(preds[1].sql, "SELECT 22");

  const auto partial = dir.write("q.jsonl", "{\"id\": \"a\", \"sql\": \"SELECT 11\"}\n");
  const auto missing = get_predictions(qs, parse_adapter_spec("file:" + partial.string()));
  EXPECT_TRUE(missing[1].sql.empty());
  EXPECT_TRUE(missing[1].failure.has_value());

  const auto broken = dir.write("r.jsonl", "{\"id\": \"a\"\n");
  EXPECT_THROW(get_predictions(qs, parse_adapter_spec("file:" + broken.string())), ConfigError);
}

TEST(Adapter, SubprocessEchoingTruthScoresOne) {
  const auto qs = load_corpus(bis::testing::fixture_corpus());
  const auto preds = get_predictions(qs, parse_adapter_spec(std::string("cmd:") + BIS_TEST_ADAPTER));
  ASSERT_EQ(preds.size(), qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i) {
    EXPECT_FALSE(preds[i].failure.has_value());
    EXPECT_EQ(preds[i].sql, qs[i].query);
  }
  const auto report = evaluate(qs, preds, bis::testing::fixture_db_dir());
  for (const auto& r : report.instances) {
    EXPECT_EQ(r.semantic.value, 1.0) << r.id;
    EXPECT_EQ(r.result.f1, 1.0) << r.id;
  }
}

TEST(Adapter, SubprocessFailuresBecomeInvalidPredictions) {
  const auto qs = parse_corpus(kSample);
  const auto failing = get_predictions(qs, parse_adapter_spec(std::string("cmd:") + BIS_TEST_ADAPTER + " fail"));
  EXPECT_TRUE(failing[0].sql.empty());
  EXPECT_NE(failing[0].failure->find("status 1"), std::string::npos);

  auto slow = parse_adapter_spec(std::string("cmd:") + BIS_TEST_ADAPTER + " sleep 5000");
  slow.timeout = std::chrono::milliseconds(200);
  const auto start = std::chrono::steady_clock::now();
  const auto timed_out = get_predictions(qs, slow);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(3));
  EXPECT_NE(timed_out[0].failure->find("timed out"), std::string::npos);

  const auto report = evaluate(qs, failing, bis::testing::fixture_db_dir());
  EXPECT_EQ(report.instances[0].semantic.verdict, bis::semantic::Verdict::kInvalidPrediction);
  EXPECT_EQ(report.instances[0].result.verdict, bis::result::ResultVerdict::kInvalidPrediction);
  EXPECT_EQ(report.overall.f1, 0.0);
}

TEST(Adapter, HttpDegenerateModel) {
  httplib::Server server;
  nlohmann::json last_request;
  std::mutex m;
  server.Post("/predict", [&](const httplib::Request& req, httplib::Response& res) {
    {
      std::lock_guard lock(m);
      last_request = nlohmann::json::parse(req.body);
    }
    res.set_content(R"({"sql": "SELECT 1"})", "application/json");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread t([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  const auto qs = load_corpus(bis::testing::fixture_corpus());
  const auto preds = get_predictions(
      qs, parse_adapter_spec("http://127.0.0.1:" + std::to_string(port) + "/predict"), bis::testing::fixture_db_dir());
  server.stop();
  t.join();

  ASSERT_EQ(preds.size(), qs.size());
  for (const auto& p : preds) EXPECT_EQ(p.sql, "SELECT 1");
  {
    std::lock_guard lock(m);
    std::set<std::string> keys;
    for (const auto& [k, _] : last_request.items()) keys.insert(k);
    EXPECT_EQ(keys, (std::set<std::string>{"db_id", "question", "schema"}));
    EXPECT_NE(last_request["schema"].get<std::string>().find("CREATE TABLE"), std::string::npos);
  }
  const auto report = evaluate(qs, preds, bis::testing::fixture_db_dir());
  EXPECT_EQ(report.instances.size(), qs.size());
  EXPECT_LT(report.overall.semantic, 0.5);
  EXPECT_LT(report.overall.f1, 0.2);
}

TEST(Adapter, HttpUnreachableEndpointIsRunError) {
  // Bind and release a port so nothing listens on it.
  int port = 0;
  {
    httplib::Server probe;
    port = probe.bind_to_any_port("127.0.0.1");
  }
  auto config = parse_adapter_spec("http://127.0.0.1:" + std::to_string(port) + "/predict");
  config.initial_backoff = std::chrono::milliseconds(5);
  config.timeout = std::chrono::milliseconds(500);
  EXPECT_THROW(get_predictions(parse_corpus(kSample), config), AdapterError);
}

// ---- evaluation -------------------------------------------------------------------

TEST(Evaluate, IdentityModelScoresOne) {
  const auto qs = load_corpus(bis::testing::fixture_corpus());
  EvalOptions options;
  options.workers = 3;
  const auto report = evaluate(qs, get_predictions(qs, AdapterConfig{}), bis::testing::fixture_db_dir(), options);
  ASSERT_EQ(report.instances.size(), qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i) EXPECT_EQ(report.instances[i].id, qs[i].id);
  EXPECT_EQ(report.overall.count, qs.size());
  EXPECT_EQ(report.overall.semantic, 1.0);
  EXPECT_EQ(report.overall.f1, 1.0);
  EXPECT_EQ(report.anchor, "2023-01-17T00:00:00");
  EXPECT_TRUE(report.warnings.empty());
}

TEST(Evaluate, TableSwapShowsInCategoryMean) {
  const std::vector<BenchmarkQuestion> qs = {
      make_question("0", "benchmark_1", "SELECT campaign_id, clicks FROM ad_metric_real", Category::kFiltering),
      make_question("1", "benchmark_1", "SELECT name FROM campaign ORDER BY name", Category::kFiltering),
      make_question("2", "benchmark_1", "SELECT count(*) FROM campaign", Category::kAggregation)};
  const auto preds = with_sql(qs, {"SELECT campaign_id, predicted_clicks FROM ad_metric_predicted",
                                   "SELECT name FROM campaign ORDER BY name", "SELECT count(*) FROM campaign"});
  const auto report = evaluate(qs, preds, bis::testing::fixture_db_dir());
  EXPECT_EQ(report.instances[0].semantic.value, 0.0);
  // Hand-computed: filtering mean = (0 + 1) / 2, aggregation = 1, overall = 2 / 3.
  EXPECT_DOUBLE_EQ(report.by_category.at("filtering").semantic, 0.5);
  EXPECT_DOUBLE_EQ(report.by_category.at("aggregation").semantic, 1.0);
  EXPECT_DOUBLE_EQ(report.overall.semantic, 2.0 / 3.0);
}

TEST(Evaluate, CorpusErrorsAreExcluded) {
  const std::vector<BenchmarkQuestion> qs = {
      make_question("0", "benchmark_1", "SELEC broken", Category::kRank),
      make_question("1", "benchmark_1", "SELECT missing FROM campaign", Category::kRank),
      make_question("2", "benchmark_1", "SELECT count(*) FROM campaign", Category::kRank)};
  const auto report = evaluate(qs, with_sql(qs, {"SELECT 1", "SELECT 1", "SELECT 1"}), bis::testing::fixture_db_dir());
  EXPECT_TRUE(report.instances[0].excluded);
  EXPECT_TRUE(report.instances[1].excluded);
  EXPECT_FALSE(report.instances[2].excluded);
  EXPECT_EQ(report.excluded, 2u);
  EXPECT_EQ(report.overall.count, 1u);
  EXPECT_EQ(report.by_category.at("rank").count, 1u);
  EXPECT_EQ(report.warnings.size(), 2u);
}

TEST(Evaluate, PredictionErrorsScoreZero) {
  const std::vector<BenchmarkQuestion> qs = {
      make_question("0", "benchmark_1", "SELECT count(*) FROM campaign", Category::kAggregation),
      make_question("1", "benchmark_1", "SELECT count(*) FROM campaign", Category::kAggregation)};
  const auto report =
      evaluate(qs, with_sql(qs, {"SELECT nope FROM campaign", "SELECT count(*) FROM"}), bis::testing::fixture_db_dir());
  EXPECT_EQ(report.instances[0].result.verdict, bis::result::ResultVerdict::kExecutionError);
  EXPECT_EQ(report.instances[1].result.verdict, bis::result::ResultVerdict::kInvalidPrediction);
  EXPECT_EQ(report.instances[1].semantic.value, 0.0);
  EXPECT_EQ(report.overall.f1, 0.0);
}

TEST(Evaluate, MissingDatabaseIsConfigError) {
  const std::vector<BenchmarkQuestion> qs = {make_question("0", "nowhere", "SELECT 1", Category::kRank)};
  EXPECT_THROW(evaluate(qs, with_sql(qs, {"SELECT 1"}), bis::testing::fixture_db_dir()), ConfigError);
}

TEST(EvaluateProperty, AggregatesAreConsistent) {
  const auto qs = load_corpus(bis::testing::fixture_corpus());
  std::vector<std::string> sql;
  // Alternate good predictions with the truth of a neighbouring question.
  for (std::size_t i = 0; i < qs.size(); ++i) sql.push_back(i % 2 ? qs[i].query : qs[(i + 1) % qs.size()].query);
  const auto report = evaluate(qs, with_sql(qs, sql), bis::testing::fixture_db_dir());
  double sum_semantic = 0, sum_f1 = 0;
  for (const auto& r : report.instances) {
    sum_semantic += r.semantic.value;
    sum_f1 += r.result.f1;
    EXPECT_GE(r.semantic.value, 0.0);
    EXPECT_LE(r.semantic.value, 1.0);
  }
  const auto n = static_cast<double>(report.instances.size());
  EXPECT_NEAR(report.overall.semantic, sum_semantic / n, 1e-12);
  EXPECT_NEAR(report.overall.f1, sum_f1 / n, 1e-12);
  double weighted = 0;
  std::size_t counted = 0;
  for (const auto& [_, m] : report.by_category) {
    weighted += m.semantic * static_cast<double>(m.count);
    counted += m.count;
  }
  EXPECT_EQ(counted, report.instances.size());
  EXPECT_NEAR(weighted / static_cast<double>(counted), report.overall.semantic, 1e-12);
}

TEST(EvaluateProperty, ReportsAreDeterministic) {
  const auto qs = load_corpus(bis::testing::fixture_corpus());
  std::vector<std::string> sql;
  for (std::size_t i = 0; i < qs.size(); ++i) sql.push_back(qs[(i * 7) % qs.size()].query);
  EvalOptions one;
  EvalOptions many;
  many.workers = 4;
  const auto a = evaluate(qs, with_sql(qs, sql), bis::testing::fixture_db_dir(), one);
  const auto b = evaluate(qs, with_sql(qs, sql), bis::testing::fixture_db_dir(), many);
  EXPECT_EQ(render_json(a), render_json(b));
  EXPECT_EQ(render_csv(a), render_csv(b));
  EXPECT_EQ(render_markdown(a), render_markdown(b));
}

// ---- reports ---------------------------------------------------------------------

TEST(Report, Formats) {
  const auto qs = parse_corpus(kSample);
  const auto report = evaluate(qs, get_predictions(qs, AdapterConfig{}), bis::testing::fixture_db_dir());
  const auto json = nlohmann::json::parse(render_json(report));
  EXPECT_EQ(json["instance_count"], 1);
  EXPECT_EQ(json["overall"]["f1"], 1.0);
  EXPECT_EQ(json["instances"][0]["case_type"], "filtering");
  EXPECT_EQ(json["instances"][0]["result"]["matched_pairs"], nlohmann::json::parse("[[0, 0]]"));

  const std::string csv = render_csv(report);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "id,index,db_id,case_type,language,excluded,semantic,semantic_verdict,precision,recall,f1,result_verdict");
  EXPECT_NE(csv.find("0,0,benchmark_1,filtering,en,false,1.000000,scored,1.000000,1.000000,1.000000,scored"),
            std::string::npos);

  const std::string md = render_markdown(report);
  EXPECT_NE(md.find("| filtering | 1 | 1.000 | 1.000 | 1.000 | 1.000 |"), std::string::npos);
  EXPECT_NE(render_summary(report).find("overall"), std::string::npos);
}

// ---- validation -------------------------------------------------------------------

TEST(Validate, ShippedCorpusIsClean) {
  const auto warnings = validate_corpus(load_corpus(bis::testing::fixture_corpus()), bis::testing::fixture_db_dir());
  for (const auto& w : warnings) ADD_FAILURE() << format_warning(w);
}

TEST(Validate, EmptiedDatabaseWarnsForAggregates) {
  TempDir dir;
  emptied_copy(dir, "benchmark_1", {"ad_metric_real", "ad_metric_predicted", "pre_ranking_filter_log"});
  emptied_copy(dir, "benchmark_2", {"metric_log", "error_log"});
  const auto qs = load_corpus(bis::testing::fixture_corpus());
  const auto warnings = validate_corpus(qs, dir.path());
  std::set<std::string> empty_ids;
  for (const auto& w : warnings) {
    if (w.kind == CorpusWarning::Kind::kEmptyResult || w.kind == CorpusWarning::Kind::kDegenerate) {
      empty_ids.insert(w.question_id);
    }
  }
  // Every grouped or filtered question over an emptied table loses its rows,
  // and the scalar aggregates now coincide.
  std::size_t affected = 0;
  for (const auto& q : qs) {
    if (q.query.find("GROUP BY") != std::string::npos) {
      ++affected;
      EXPECT_TRUE(empty_ids.count(q.id)) << q.query;
    }
  }
  EXPECT_GT(affected, 5u);
  bool window = false;
  for (const auto& w : warnings) window |= w.kind == CorpusWarning::Kind::kTimeWindow;
  EXPECT_TRUE(window);
}

TEST(Validate, AggregatesCoincidingOnEmptySlice) {
  const std::vector<BenchmarkQuestion> qs = {
      make_question("0", "benchmark_1", "SELECT count(*) FROM ad_metric_real WHERE campaign_id = 99",
                    Category::kAggregation),
      make_question("1", "benchmark_1", "SELECT count(DISTINCT ts) FROM ad_metric_real WHERE campaign_id = 99",
                    Category::kAggregation)};
  const auto warnings = validate_corpus(qs, bis::testing::fixture_db_dir());
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_EQ(warnings[0].kind, CorpusWarning::Kind::kDegenerate);
  EXPECT_EQ(warnings[0].question_id, "1");
}

TEST(Validate, ParseAndExecutionFailures) {
  const std::vector<BenchmarkQuestion> qs = {
      make_question("0", "benchmark_1", "SELECT count(*) FROM campaign WHERE name = 'spr", Category::kFiltering),
      make_question("1", "benchmark_1", "SELECT nope FROM campaign", Category::kFiltering)};
  const auto warnings = validate_corpus(qs, bis::testing::fixture_db_dir());
  ASSERT_EQ(warnings.size(), 2u);
  EXPECT_EQ(warnings[0].kind, CorpusWarning::Kind::kParse);
  EXPECT_EQ(warnings[1].kind, CorpusWarning::Kind::kExecution);
}

TEST(Validate, WindowOutsideData) {
  const std::vector<BenchmarkQuestion> qs = {make_question(
      "0", "benchmark_1", "SELECT sum(clicks) FROM ad_metric_real WHERE ts >= datetime('now', '-30 days')",
      Category::kTimePeriod)};
  const auto warnings = validate_corpus(qs, bis::testing::fixture_db_dir());
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_EQ(warnings[0].kind, CorpusWarning::Kind::kTimeWindow);
  EXPECT_TRUE(validate_corpus(qs, bis::testing::fixture_db_dir(), *bis::sql::Timestamp::parse("2023-01-31")).size() ==
              1);
  const std::vector<BenchmarkQuestion> inside = {make_question(
      "0", "benchmark_1", "SELECT sum(clicks) FROM ad_metric_real WHERE ts >= datetime('now', '-10 days')",
      Category::kTimePeriod)};
  EXPECT_TRUE(validate_corpus(inside, bis::testing::fixture_db_dir()).empty());
}

// ---- fixtures -------------------------------------------------------------------

TEST(Fixtures, BuildFromSeeds) {
  TempDir dir;
  dir.write("tiny.sql", "CREATE TABLE t (a INTEGER); INSERT INTO t VALUES (1), (2);");
  dir.write("notes.txt", "ignored");
  const auto out = dir.path() / "db";
  const auto built = build_fixture_databases(dir.path(), out);
  ASSERT_EQ(built.size(), 1u);
  EXPECT_EQ(built[0], out / "tiny.sqlite");
  const auto db = bis::result::Database::open_read_only(built[0]);
  auto r = bis::result::execute_raw("SELECT sum(a) FROM t", db);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->column(0).values[0].as_integer(), 3);

  dir.write("bad.sql", "CREATE TABLE");
  EXPECT_THROW(build_fixture_databases(dir.path(), out), ConfigError);
}

}  // namespace
