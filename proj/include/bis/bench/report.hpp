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

#include <string>

#include "bis/bench/evaluate.hpp"

namespace bis::bench {

/// Full per-instance detail. Keys are sorted and no wall-clock data is
/// included, so equal inputs give byte-identical output.
std::string render_json(const EvalReport& report);

/// One row per instance.
std::string render_csv(const EvalReport& report);

/// Aggregate tables overall, per category and per language.
std::string render_markdown(const EvalReport& report);

/// Plain-text aggregate table printed by `bis-eval run`.
std::string render_summary(const EvalReport& report);

}  // namespace bis::bench
