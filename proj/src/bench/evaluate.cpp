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

#include "bis/bench/evaluate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "bis/bench/corpus.hpp"
#include "bis/result/database.hpp"

namespace bis::bench {

namespace {

using result::ExecutionError;
using result::ResultScore;
using result::ResultVerdict;

// Connections owned by one worker, opened lazily per database id.
class Connections {
 public:
  explicit Connections(const std::unordered_map<std::string, std::filesystem::path>& paths) : paths_(paths) {}

  const result::Database& get(const std::string& db_id) {
    auto it = open_.find(db_id);
    if (it == open_.end()) {
      it = open_.emplace(db_id, result::Database::open_read_only(paths_.at(db_id))).first;
    }
    return it->second;
  }

 private:
  const std::unordered_map<std::string, std::filesystem::path>& paths_;
  std::unordered_map<std::string, result::Database> open_;
};

InstanceRecord score_instance(const BenchmarkQuestion& q, const Prediction& prediction, Connections& dbs,
                              const EvalOptions& options) {
  InstanceRecord record;
  record.id = q.id;
  record.index = q.index;
  record.db_id = q.db_id;
  record.case_type = q.case_type;
  record.language = q.language;
  record.predicted_sql = prediction.sql;

  try {
    record.semantic = semantic::semantic_similarity(q.query, prediction.sql, options.execution.dialect);
  } catch (const semantic::CorpusError& e) {
    record.excluded = true;
    record.exclusion_reason = e.what();
    return record;
  }

  const result::Database& db = dbs.get(q.db_id);
  auto truth = result::execute(q.query, db, options.anchor, options.execution);
  if (!truth) {
    record.excluded = true;
    record.exclusion_reason = "ground-truth query failed (" + std::string(to_string(truth.error().kind)) +
                              "): " + truth.error().message;
    return record;
  }

  if (record.semantic.verdict == semantic::Verdict::kInvalidPrediction) {
    std::string why = prediction.failure ? *prediction.failure
                                         : record.semantic.prediction_error ? record.semantic.prediction_error->message
                                                                            : "invalid prediction";
    record.result = ResultScore::failed(ResultVerdict::kInvalidPrediction, std::move(why));
    return record;
  }
  auto predicted = result::execute(prediction.sql, db, options.anchor, options.execution);
  if (!predicted) {
    const auto verdict = predicted.error().kind == ExecutionError::Kind::kParse ? ResultVerdict::kInvalidPrediction
                                                                                : ResultVerdict::kExecutionError;
    record.result = ResultScore::failed(
        verdict, std::string(to_string(predicted.error().kind)) + ": " + predicted.error().message);
    return record;
  }
  record.result = result::score_result_pair(*predicted, *truth, options.match);
  return record;
}

void add(MetricMeans& m, const InstanceRecord& r) {
  ++m.count;
  m.semantic += r.semantic.value;
  m.precision += r.result.precision;
  m.recall += r.result.recall;
  m.f1 += r.result.f1;
}

void finish(MetricMeans& m) {
  if (m.count == 0) return;
  const auto n = static_cast<double>(m.count);
  m.semantic /= n;
  m.precision /= n;
  m.recall /= n;
  m.f1 /= n;
}

}  // namespace

void aggregate(EvalReport& report) {
  report.overall = {};
  report.by_category.clear();
  report.by_language.clear();
  report.excluded = 0;
  for (const auto& r : report.instances) {
    if (r.excluded) {
      ++report.excluded;
      continue;
    }
    add(report.overall, r);
    add(report.by_category[std::string(to_string(r.case_type))], r);
    add(report.by_language[r.language], r);
  }
  finish(report.overall);
  for (auto& [_, m] : report.by_category) finish(m);
  for (auto& [_, m] : report.by_language) finish(m);
}

EvalReport evaluate(const std::vector<BenchmarkQuestion>& questions, const std::vector<Prediction>& predictions,
                    const std::filesystem::path& db_dir, const EvalOptions& options) {
  std::unordered_map<std::string, std::filesystem::path> paths;
  for (const auto& q : questions) {
    if (!paths.count(q.db_id)) paths.emplace(q.db_id, resolve_database(db_dir, q.db_id));
  }

  // Predictions normally arrive in question order; fall back to id lookup.
  std::unordered_map<std::string, const Prediction*> by_id;
  for (const auto& p : predictions) by_id.emplace(p.question_id, &p);
  std::vector<Prediction> aligned;
  aligned.reserve(questions.size());
  for (std::size_t i = 0; i < questions.size(); ++i) {
    const auto& q = questions[i];
    if (i < predictions.size() && predictions[i].question_id == q.id) {
      aligned.push_back(predictions[i]);
    } else if (auto it = by_id.find(q.id); it != by_id.end()) {
      aligned.push_back(*it->second);
    } else {
      aligned.push_back(Prediction{q.id, "", std::nullopt, "no prediction for id " + q.id});
    }
  }

  EvalReport report;
  report.anchor = options.anchor.iso8601();
  report.order_sensitive = options.match.order_sensitive;
  report.instances.resize(questions.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    Connections dbs(paths);
    try {
      for (std::size_t i = next++; i < questions.size(); i = next++) {
        report.instances[i] = score_instance(questions[i], aligned[i], dbs, options);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = questions.size();
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, std::max<std::size_t>(questions.size(), 1));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& r : report.instances) {
    if (r.excluded) report.warnings.push_back("question " + r.id + " excluded: " + r.exclusion_reason);
  }
  aggregate(report);
  return report;
}

}  // namespace bis::bench
