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

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bis/bench/question.hpp"

namespace bis::bench {

struct Prediction {
  std::string question_id;
  std::string sql;
  std::optional<std::int64_t> latency_ms;
  /// Set when the adapter failed for this question; `sql` is then empty.
  std::optional<std::string> failure;
};

struct AdapterConfig {
  enum class Kind {
    kIdentity,  // echoes the ground-truth query
    kFile,      // JSON-lines predictions file
    kCommand,   // `/bin/sh -c target`, question JSON on stdin, SQL on stdout
    kHttp,      // POST {question, db_id, schema} to target, {"sql"} back
  };
  Kind kind = Kind::kIdentity;
  std::string target;
  std::chrono::milliseconds timeout{60'000};
  int attempts = 3;
  std::chrono::milliseconds initial_backoff{250};
};

/// Parses `identity`, `file:PATH`, `cmd:COMMAND` or `http:URL` / `http://...`.
/// Throws ConfigError on an unknown scheme or empty target.
AdapterConfig parse_adapter_spec(std::string_view spec);

/// The whole run failed to obtain any prediction from an endpoint.
class AdapterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One prediction per question, in question order. Per-question adapter
/// failures yield an empty SQL prediction with `failure` set. Throws
/// AdapterError when an HTTP endpoint stays unreachable for every question,
/// and ConfigError on a malformed predictions file. `db_dir` supplies the
/// schema text sent to HTTP adapters.
std::vector<Prediction> get_predictions(const std::vector<BenchmarkQuestion>& questions,
                                        const AdapterConfig& config,
                                        const std::filesystem::path& db_dir = {});

/// The JSON object sent to subprocess adapters.
std::string question_json(const BenchmarkQuestion& question);

}  // namespace bis::bench
