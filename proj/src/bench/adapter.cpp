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

#include "bis/bench/adapter.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

#include <httplib.h>
#include <json.hpp>

#include "bis/bench/corpus.hpp"
#include "bis/result/database.hpp"

namespace bis::bench {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Prediction failed(const BenchmarkQuestion& q, std::string why) {
  return Prediction{q.id, "", std::nullopt, std::move(why)};
}

// ---- file ----------------------------------------------------------------

std::vector<Prediction> from_file(const std::vector<BenchmarkQuestion>& questions, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read predictions file " + path);
  std::unordered_map<std::string, std::string> by_id;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (trim(line).empty()) continue;
    json row;
    try {
      row = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ConfigError(path + ":" + std::to_string(n) + ": " + e.what());
    }
    if (!row.is_object() || !row.contains("id") || !row.contains("sql") || !row["sql"].is_string()) {
      throw ConfigError(path + ":" + std::to_string(n) + ": expected {\"id\": ..., \"sql\": \"...\"}");
    }
    const json& id = row["id"];
    std::string key = id.is_string() ? id.get<std::string>() : id.dump();
    by_id[std::move(key)] = row["sql"].get<std::string>();
  }
  std::vector<Prediction> out;
  for (const auto& q : questions) {
    const auto it = by_id.find(q.id);
    out.push_back(it == by_id.end() ? failed(q, "no prediction for id " + q.id)
                                    : Prediction{q.id, it->second, std::nullopt, std::nullopt});
  }
  return out;
}

// ---- subprocess -------------------------------------------------------------

struct CommandOutcome {
  bool started = false;
  bool timed_out = false;
  int status = -1;
  std::string out;
};

void close_fd(int& fd) {
  if (fd >= 0) ::close(fd);
  fd = -1;
}

CommandOutcome run_command(const std::string& command, const std::string& input, std::chrono::milliseconds timeout) {
  CommandOutcome outcome;
  int in_pipe[2];
  int out_pipe[2];
  if (::pipe2(in_pipe, O_CLOEXEC) != 0) return outcome;
  if (::pipe2(out_pipe, O_CLOEXEC) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    return outcome;
  }
  const pid_t pid = ::fork();
  if (pid < 0) {
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) ::close(fd);
    return outcome;
  }
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  outcome.started = true;
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  int to_child = in_pipe[1];
  int from_child = out_pipe[0];
  ::fcntl(to_child, F_SETFL, O_NONBLOCK);

  std::size_t written = 0;
  if (input.empty()) close_fd(to_child);
  const auto deadline = Clock::now() + timeout;
  char buffer[4096];
  while (from_child >= 0) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now()).count();
    if (left <= 0) {
      outcome.timed_out = true;
      break;
    }
    pollfd fds[2];
    nfds_t n = 0;
    fds[n++] = {from_child, POLLIN, 0};
    if (to_child >= 0) fds[n++] = {to_child, POLLOUT, 0};
    const int ready = ::poll(fds, n, static_cast<int>(left));
    if (ready < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (n == 2 && fds[1].revents) {
      const ssize_t w = ::write(to_child, input.data() + written, input.size() - written);
      if (w > 0) written += static_cast<std::size_t>(w);
      if (w < 0 && errno != EAGAIN) close_fd(to_child);
      if (written == input.size()) close_fd(to_child);
    }
    if (fds[0].revents) {
      const ssize_t r = ::read(from_child, buffer, sizeof buffer);
      if (r > 0) {
        outcome.out.append(buffer, static_cast<std::size_t>(r));
      } else if (r == 0 || errno != EINTR) {
        close_fd(from_child);
      }
    }
  }
  close_fd(to_child);
  close_fd(from_child);
  if (outcome.timed_out) ::kill(-pid, SIGKILL);
  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  outcome.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return outcome;
}

std::vector<Prediction> from_command(const std::vector<BenchmarkQuestion>& questions, const AdapterConfig& config) {
  // A child that exits without reading stdin must not kill the runner.
  static std::once_flag ignore_sigpipe;
  std::call_once(ignore_sigpipe, [] { ::signal(SIGPIPE, SIG_IGN); });

  std::vector<Prediction> out;
  for (const auto& q : questions) {
    const auto start = Clock::now();
    const CommandOutcome r = run_command(config.target, question_json(q), config.timeout);
    if (!r.started) {
      out.push_back(failed(q, "cannot start adapter command"));
    } else if (r.timed_out) {
      out.push_back(failed(q, "adapter timed out after " + std::to_string(config.timeout.count()) + " ms"));
    } else if (r.status != 0) {
      out.push_back(failed(q, "adapter exited with status " + std::to_string(r.status)));
    } else {
      out.push_back(Prediction{q.id, trim(r.out), elapsed_ms(start), std::nullopt});
    }
  }
  return out;
}

// ---- http ---------------------------------------------------------------

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

Endpoint split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw ConfigError("adapter URL needs a scheme: " + url);
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

std::string schema_for(const std::filesystem::path& db_dir, const std::string& db_id,
                       std::map<std::string, std::string>& cache) {
  if (db_dir.empty()) return {};
  if (auto it = cache.find(db_id); it != cache.end()) return it->second;
  std::string schema;
  try {
    schema = result::Database::open_read_only(resolve_database(db_dir, db_id)).schema_sql();
  } catch (const std::exception&) {
  }
  return cache[db_id] = schema;
}

std::vector<Prediction> from_http(const std::vector<BenchmarkQuestion>& questions, const AdapterConfig& config,
                                  const std::filesystem::path& db_dir) {
  const Endpoint endpoint = split_url(config.target);
  httplib::Client client(endpoint.origin);
  const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(config.timeout).count();
  const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(config.timeout).count() % 1'000'000;
  client.set_connection_timeout(seconds, micros);
  client.set_read_timeout(seconds, micros);
  client.set_write_timeout(seconds, micros);

  std::map<std::string, std::string> schemas;
  std::vector<Prediction> out;
  std::size_t unreachable = 0;
  for (const auto& q : questions) {
    const json body = {{"question", q.question}, {"db_id", q.db_id}, {"schema", schema_for(db_dir, q.db_id, schemas)}};
    const std::string payload = body.dump();
    const auto start = Clock::now();
    auto backoff = config.initial_backoff;
    std::optional<Prediction> prediction;
    std::string last_error;
    bool reached = false;
    for (int attempt = 0; attempt < config.attempts && !prediction; ++attempt) {
      if (attempt > 0) {
        std::this_thread::sleep_for(backoff);
        backoff *= 2;
      }
      auto res = client.Post(endpoint.path, payload, "application/json");
      if (!res) {
        last_error = "unreachable: " + httplib::to_string(res.error());
        continue;
      }
      reached = true;
      if (res->status >= 500) {
        last_error = "HTTP status " + std::to_string(res->status);
        continue;
      }
      if (res->status != 200) {
        last_error = "HTTP status " + std::to_string(res->status);
        break;
      }
      const json reply = json::parse(res->body, nullptr, false);
      if (reply.is_discarded() || !reply.is_object() || !reply.contains("sql") || !reply["sql"].is_string()) {
        last_error = "bad response body";
        break;
      }
      prediction = Prediction{q.id, trim(reply["sql"].get<std::string>()), elapsed_ms(start), std::nullopt};
    }
    if (!reached) ++unreachable;
    out.push_back(prediction ? *prediction : failed(q, last_error));
  }
  if (!questions.empty() && unreachable == questions.size()) {
    throw AdapterError("adapter endpoint " + config.target + " unreachable after " +
                       std::to_string(config.attempts) + " attempts");
  }
  return out;
}

}  // namespace

AdapterConfig parse_adapter_spec(std::string_view spec) {
  AdapterConfig config;
  if (spec == "identity") return config;
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ConfigError("unknown adapter \"" + std::string(spec) + "\"");
  const std::string_view scheme = spec.substr(0, colon);
  std::string target(spec.substr(colon + 1));
  if (scheme == "file") {
    config.kind = AdapterConfig::Kind::kFile;
  } else if (scheme == "cmd") {
    config.kind = AdapterConfig::Kind::kCommand;
  } else if (scheme == "http" || scheme == "https") {
    config.kind = AdapterConfig::Kind::kHttp;
    // Both "http:URL" and a bare "http://..." URL are accepted.
    if (target.rfind("//", 0) == 0) target = std::string(spec);
  } else {
    throw ConfigError("unknown adapter scheme \"" + std::string(scheme) + "\"");
  }
  if (target.empty()) throw ConfigError("adapter \"" + std::string(spec) + "\" has no target");
  config.target = std::move(target);
  return config;
}

std::string question_json(const BenchmarkQuestion& q) {
  const json body = {{"id", q.id},
                     {"db_id", q.db_id},
                     {"query", q.query},
                     {"question", q.question},
                     {"language", q.language},
                     {"case_type", to_string(q.case_type)}};
  return body.dump();
}

std::vector<Prediction> get_predictions(const std::vector<BenchmarkQuestion>& questions, const AdapterConfig& config,
                                        const std::filesystem::path& db_dir) {
  switch (config.kind) {
    case AdapterConfig::Kind::kIdentity: {
      std::vector<Prediction> out;
      for (const auto& q : questions) out.push_back(Prediction{q.id, q.query, 0, std::nullopt});
      return out;
    }
    case AdapterConfig::Kind::kFile: return from_file(questions, config.target);
    case AdapterConfig::Kind::kCommand: return from_command(questions, config);
    case AdapterConfig::Kind::kHttp: return from_http(questions, config, db_dir);
  }
  return {};
}

}  // namespace bis::bench
