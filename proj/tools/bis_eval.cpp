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

// bis-eval: score query pairs, run and validate question corpora.
//
// Exit codes: 0 success, 1 validation warnings, 2 configuration or input
// error, 3 run finished but some ground-truth instances were excluded.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "bis/bench/adapter.hpp"
#include "bis/bench/corpus.hpp"
#include "bis/bench/evaluate.hpp"
#include "bis/bench/fixtures.hpp"
#include "bis/bench/report.hpp"
#include "bis/bench/validate.hpp"
#include "bis/result/database.hpp"
#include "bis/result/executor.hpp"
#include "bis/result/result_similarity.hpp"
#include "bis/semantic/semantic_similarity.hpp"
#include "bis/sql/parser.hpp"
#include "bis/sql/render.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kWarnings = 1;
constexpr int kConfigError = 2;
constexpr int kCorpusError = 3;

struct Failure {
  std::string message;
};

bis::sql::Timestamp resolve_anchor(const std::string& flag) {
  std::string text = flag;
  if (text.empty()) {
    if (const char* env = std::getenv("BIS_ANCHOR"); env && *env) text = env;
  }
  if (text.empty()) return bis::sql::default_anchor();
  auto anchor = bis::sql::Timestamp::parse(text);
  if (!anchor) throw Failure{"invalid anchor \"" + text + "\" (expected ISO-8601, e.g. 2023-01-17T00:00:00)"};
  return *anchor;
}

bis::sql::Dialect resolve_dialect(const std::string& name) {
  auto d = bis::sql::dialect_from_string(name);
  if (!d) throw Failure{"unknown dialect \"" + name + "\""};
  return *d;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw Failure{"cannot write " + path};
}

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

void require_directory(const std::string& path, const char* what) {
  std::error_code ec;
  if (!std::filesystem::is_directory(path, ec)) throw Failure{std::string(what) + " not found: " + path};
}

struct ScoreArgs {
  std::string truth, pred, db, anchor, dialect = "sqlite";
  bool order_insensitive = false;
};

int cmd_score(const ScoreArgs& a) {
  const auto dialect = resolve_dialect(a.dialect);
  const auto anchor = resolve_anchor(a.anchor);
  std::optional<bis::result::Database> db;
  if (!a.db.empty()) {
    try {
      db = bis::result::Database::open_read_only(a.db);
    } catch (const bis::result::DatabaseError& e) {
      throw Failure{e.what()};
    }
  }
  bis::semantic::SemanticScore semantic;
  try {
    semantic = bis::semantic::semantic_similarity(a.truth, a.pred, dialect);
  } catch (const bis::semantic::CorpusError& e) {
    throw Failure{e.what()};
  }
  std::cout << "semantic: " << fixed3(semantic.value) << "\n";
  if (semantic.prediction_error) std::cout << "prediction: invalid (" << semantic.prediction_error->message << ")\n";
  if (!db) return kOk;

  bis::result::ExecutionOptions exec;
  exec.dialect = dialect;
  auto truth = bis::result::execute(a.truth, *db, anchor, exec);
  if (!truth) throw Failure{"ground-truth query failed: " + truth.error().message};
  bis::result::ResultScore score;
  auto predicted = bis::result::execute(a.pred, *db, anchor, exec);
  if (!predicted) {
    score = bis::result::ResultScore::failed(bis::result::ResultVerdict::kExecutionError, predicted.error().message);
  } else {
    bis::result::MatchOptions match;
    match.order_sensitive = !a.order_insensitive;
    score = bis::result::score_result_pair(*predicted, *truth, match);
  }
  std::cout << "precision: " << fixed3(score.precision) << "\n"
            << "recall: " << fixed3(score.recall) << "\n"
            << "f1: " << fixed3(score.f1) << "\n";
  if (score.error) std::cout << "result: " << bis::result::to_string(score.verdict) << " (" << *score.error << ")\n";
  return kOk;
}

struct RunArgs {
  std::string corpus, db_dir, adapter = "identity", anchor, report_json, report_csv, report_md;
  bool order_insensitive = false;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  double timeout_s = 60.0;
  double query_timeout_s = 10.0;
  std::size_t row_cap = 100'000;
};

int cmd_run(const RunArgs& a) {
  require_directory(a.db_dir, "database directory");
  const auto anchor = resolve_anchor(a.anchor);
  const auto questions = bis::bench::load_corpus(a.corpus);
  if (questions.empty()) throw Failure{"no questions in " + a.corpus};

  auto adapter = bis::bench::parse_adapter_spec(a.adapter);
  adapter.timeout = std::chrono::milliseconds(static_cast<long long>(a.timeout_s * 1000));
  const auto predictions = bis::bench::get_predictions(questions, adapter, a.db_dir);

  bis::bench::EvalOptions options;
  options.anchor = anchor;
  options.match.order_sensitive = !a.order_insensitive;
  options.execution.timeout = std::chrono::milliseconds(static_cast<long long>(a.query_timeout_s * 1000));
  options.execution.row_cap = a.row_cap;
  options.workers = a.workers;
  const auto report = bis::bench::evaluate(questions, predictions, a.db_dir, options);

  if (!a.report_json.empty()) write_file(a.report_json, bis::bench::render_json(report));
  if (!a.report_csv.empty()) write_file(a.report_csv, bis::bench::render_csv(report));
  if (!a.report_md.empty()) write_file(a.report_md, bis::bench::render_markdown(report));
  std::cout << bis::bench::render_summary(report);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  return report.excluded > 0 ? kCorpusError : kOk;
}

struct ValidateArgs {
  std::string corpus, db_dir, anchor;
};

int cmd_validate(const ValidateArgs& a) {
  require_directory(a.db_dir, "database directory");
  const auto anchor = resolve_anchor(a.anchor);
  const auto questions = bis::bench::load_corpus(a.corpus);
  const auto warnings = bis::bench::validate_corpus(questions, a.db_dir, anchor);
  for (const auto& w : warnings) std::cout << bis::bench::format_warning(w) << "\n";
  std::cout << warnings.size() << " warning(s) in " << questions.size() << " question(s)\n";
  return warnings.empty() ? kOk : kWarnings;
}

int cmd_parse(const std::string& sql, const std::string& dialect_name) {
  const auto dialect = resolve_dialect(dialect_name);
  auto ast = bis::sql::parse(sql, dialect);
  if (!ast) throw Failure{"parse error at offset " + std::to_string(ast.error().position) + ": " + ast.error().message};
  std::cout << bis::sql::render(*ast, dialect) << "\n" << bis::sql::debug_string(ast->root());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial-credit evaluation of NL2SQL predictions"};
  app.require_subcommand(1);

  ScoreArgs score;
  auto* score_cmd = app.add_subcommand("score", "Score one predicted query against a ground-truth query");
  score_cmd->add_option("--truth", score.truth, "Ground-truth SQL")->required();
  score_cmd->add_option("--pred", score.pred, "Predicted SQL")->required();
  score_cmd->add_option("--db", score.db, "Database file; enables result similarity");
  score_cmd->add_option("--anchor", score.anchor, "Current-time anchor (default 2023-01-17T00:00:00 or $BIS_ANCHOR)");
  score_cmd->add_option("--dialect", score.dialect, "sqlite or generic")->capture_default_str();
  score_cmd->add_flag("--order-insensitive", score.order_insensitive, "Sort column values before comparing");

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Evaluate a question corpus with a model adapter");
  run_cmd->add_option("--corpus", run.corpus, "Question file (JSON array)")->required();
  run_cmd->add_option("--db-dir", run.db_dir, "Directory of <db_id>.sqlite files")->required();
  run_cmd->add_option("--adapter", run.adapter, "identity | file:PATH | cmd:COMMAND | http:URL")->capture_default_str();
  run_cmd->add_option("--anchor", run.anchor, "Current-time anchor (default 2023-01-17T00:00:00 or $BIS_ANCHOR)");
  run_cmd->add_flag("--order-insensitive", run.order_insensitive, "Sort column values before comparing");
  run_cmd->add_option("--workers", run.workers, "Scoring threads (default: CPU count)")->check(CLI::PositiveNumber);
  run_cmd->add_option("--timeout-s", run.timeout_s, "Adapter timeout per question")->capture_default_str();
  run_cmd->add_option("--query-timeout-s", run.query_timeout_s, "Execution timeout per query")->capture_default_str();
  run_cmd->add_option("--row-cap", run.row_cap, "Maximum rows materialized per query")->capture_default_str();
  run_cmd->add_option("--report-json", run.report_json, "Write the full JSON report here");
  run_cmd->add_option("--report-csv", run.report_csv, "Write the per-instance CSV here");
  run_cmd->add_option("--report-md", run.report_md, "Write the Markdown summary here");

  ValidateArgs validate;
  auto* validate_cmd = app.add_subcommand("validate", "Check ground-truth queries and fixture data");
  validate_cmd->add_option("--corpus", validate.corpus, "Question file (JSON array)")->required();
  validate_cmd->add_option("--db-dir", validate.db_dir, "Directory of <db_id>.sqlite files")->required();
  validate_cmd->add_option("--anchor", validate.anchor, "Current-time anchor");

  std::string seed_dir, out_dir;
  auto* fixtures_cmd = app.add_subcommand("build-fixtures", "Build fixture databases from SQL seed scripts");
  fixtures_cmd->add_option("--src", seed_dir, "Directory of *.sql seed scripts")->required();
  fixtures_cmd->add_option("--out", out_dir, "Output directory")->required();

  std::string parse_sql, parse_dialect = "sqlite";
  auto* parse_cmd = app.add_subcommand("parse", "Print the canonical form and tree of a query");
  parse_cmd->add_option("sql", parse_sql, "SQL text")->required();
  parse_cmd->add_option("--dialect", parse_dialect, "sqlite or generic")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kConfigError;
  }

  try {
    if (*score_cmd) return cmd_score(score);
    if (*run_cmd) return cmd_run(run);
    if (*validate_cmd) return cmd_validate(validate);
    if (*parse_cmd) return cmd_parse(parse_sql, parse_dialect);
    if (*fixtures_cmd) {
      for (const auto& p : bis::bench::build_fixture_databases(seed_dir, out_dir)) std::cout << p.string() << "\n";
      return kOk;
    }
  } catch (const Failure& f) {
    std::cerr << "bis-eval: " << f.message << "\n";
    return kConfigError;
  } catch (const bis::bench::ConfigError& e) {
    std::cerr << "bis-eval: " << e.what() << "\n";
    return kConfigError;
  } catch (const bis::bench::AdapterError& e) {
    std::cerr << "bis-eval: " << e.what() << "\n";
    return kConfigError;
  } catch (const bis::result::DatabaseError& e) {
    std::cerr << "bis-eval: " << e.what() << "\n";
    return kConfigError;
  }
  return kConfigError;
}
