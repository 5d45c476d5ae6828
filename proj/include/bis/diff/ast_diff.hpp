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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bis/sql/ast.hpp"

namespace bis::diff {

enum class EditKind { kKeep, kMove, kUpdate, kInsert, kDelete };

std::string_view to_string(EditKind kind);

/// A node of one input tree, addressed by its pre-order index.
struct NodeRef {
  std::size_t index = 0;
  sql::NodeKind kind = sql::NodeKind::kStatement;
  std::string text;
};

/// One classified edit. keep/move/update reference a node of each tree,
/// insert only the predicted tree, delete only the truth tree.
struct EditOp {
  EditKind kind = EditKind::kKeep;
  sql::NodeKind node_kind = sql::NodeKind::kStatement;
  std::optional<NodeRef> truth;
  std::optional<NodeRef> predicted;
};

/// Edit script with exactly one entry per node of either tree: mapped node
/// pairs contribute one keep/move/update entry, unmapped nodes one
/// delete/insert entry.
struct EditScript {
  std::vector<EditOp> ops;

  std::size_t size_union() const noexcept { return ops.size(); }
  std::size_t count(EditKind kind) const;
  bool only_keeps() const { return count(EditKind::kKeep) == ops.size(); }
};

/// Computes the edit script from `truth` to `predicted`.
///
/// Matching runs in two phases. First, identical subtrees are anchored
/// top-down by canonical subtree hash (children of unordered containers
/// hashed as a multiset), restricted to nodes that sit under the same chain
/// of enclosing clauses. Second, starting from the roots, unmatched children
/// of every mapped pair are paired by kind: positionally (longest common
/// kind subsequence) under ordered parents, by descendant similarity under
/// unordered ones (SELECT list, GROUP BY, FROM, AND/OR, PARTITION BY).
///
/// A mapped pair with different labels is an update. One with equal labels
/// is a move when its parents are not mapped to each other, or when it falls
/// outside the longest order-preserving run of mapped siblings; otherwise a
/// keep.
EditScript diff(const sql::SqlAst& truth, const sql::SqlAst& predicted);

}  // namespace bis::diff
