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

#include "bis/diff/ast_diff.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <tuple>
#include <unordered_map>

namespace bis::diff {

using sql::Node;
using sql::NodeKind;

std::string_view to_string(EditKind kind) {
  switch (kind) {
    case EditKind::kKeep: return "keep";
    case EditKind::kMove: return "move";
    case EditKind::kUpdate: return "update";
    case EditKind::kInsert: return "insert";
    case EditKind::kDelete: return "delete";
  }
  return "?";
}

std::size_t EditScript::count(EditKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(ops.begin(), ops.end(), [kind](const EditOp& op) { return op.kind == kind; }));
}

namespace {

constexpr int kUnmapped = -1;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t combine(std::uint64_t seed, std::uint64_t value) {
  return mix(seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)));
}

bool is_unordered(const Node& node) {
  switch (node.kind) {
    case NodeKind::kSelectList:
    case NodeKind::kGroupBy:
    case NodeKind::kFrom:
    case NodeKind::kPartitionBy:
      return true;
    case NodeKind::kOperator:
      return node.text == "AND" || node.text == "OR";
    default:
      return false;
  }
}

bool is_clause(NodeKind kind) {
  switch (kind) {
    case NodeKind::kStatement:
    case NodeKind::kSubquery:
    case NodeKind::kCte:
    case NodeKind::kColumnList:
    case NodeKind::kSelect:
    case NodeKind::kSetOperation:
    case NodeKind::kSelectList:
    case NodeKind::kFrom:
    case NodeKind::kOn:
    case NodeKind::kUsing:
    case NodeKind::kWhere:
    case NodeKind::kGroupBy:
    case NodeKind::kHaving:
    case NodeKind::kOrderBy:
    case NodeKind::kLimit:
    case NodeKind::kOffset:
    case NodeKind::kWindow:
    case NodeKind::kPartitionBy:
      return true;
    default:
      return false;
  }
}

/// Pre-order flattening of one tree with the per-node facts matching needs.
struct FlatTree {
  std::vector<const Node*> node;
  std::vector<int> parent;
  std::vector<int> sibling_index;
  std::vector<std::vector<int>> children;
  std::vector<int> height;
  std::vector<int> size;
  std::vector<std::uint64_t> label;
  std::vector<std::uint64_t> shape;   // canonical subtree hash
  std::vector<std::uint64_t> clauses; // hash of enclosing clause chain

  explicit FlatTree(const Node& root) { add(root, kUnmapped, 0, mix(0)); }

  std::size_t count() const { return node.size(); }

  bool in_subtree(int candidate, int root) const {
    return candidate >= root && candidate < root + size[static_cast<std::size_t>(root)];
  }

 private:
  int add(const Node& n, int parent_index, int index_in_parent, std::uint64_t clause_chain) {
    const int id = static_cast<int>(node.size());
    node.push_back(&n);
    parent.push_back(parent_index);
    sibling_index.push_back(index_in_parent);
    children.emplace_back();
    height.push_back(1);
    size.push_back(1);
    label.push_back(combine(mix(static_cast<std::uint64_t>(n.kind)), std::hash<std::string>{}(n.text)));
    shape.push_back(0);
    clauses.push_back(clause_chain);

    const std::uint64_t child_chain =
        is_clause(n.kind) ? combine(clause_chain, static_cast<std::uint64_t>(n.kind)) : clause_chain;
    const auto uid = static_cast<std::size_t>(id);
    std::vector<std::uint64_t> child_shapes;
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      const int c = add(n.children[i], id, static_cast<int>(i), child_chain);
      const auto uc = static_cast<std::size_t>(c);
      children[uid].push_back(c);
      height[uid] = std::max(height[uid], height[uc] + 1);
      size[uid] += size[uc];
      child_shapes.push_back(shape[uc]);
    }
    if (is_unordered(n)) std::sort(child_shapes.begin(), child_shapes.end());
    std::uint64_t h = label[uid];
    for (auto s : child_shapes) h = combine(h, s);
    shape[uid] = combine(h, child_shapes.size());
    return id;
  }
};

class Matcher {
 public:
  Matcher(const FlatTree& truth, const FlatTree& predicted)
      : t1_(truth), t2_(predicted),
        m1_(truth.count(), kUnmapped), m2_(predicted.count(), kUnmapped) {}

  void run() {
    anchor_identical_subtrees();
    pair_top_down();
  }

  int truth_partner(std::size_t i) const { return m1_[i]; }
  int predicted_partner(std::size_t j) const { return m2_[j]; }

 private:
  static std::size_t u(int i) { return static_cast<std::size_t>(i); }

  // Phase 1: exact subtree anchoring, tallest subtrees first.
  void anchor_identical_subtrees() {
    std::unordered_map<std::uint64_t, std::vector<int>> by_shape;
    for (std::size_t j = 0; j < t2_.count(); ++j) by_shape[t2_.shape[j]].push_back(static_cast<int>(j));

    std::vector<int> order(t1_.count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return t1_.height[u(a)] > t1_.height[u(b)]; });

    for (int x : order) {
      if (m1_[u(x)] != kUnmapped) continue;
      auto it = by_shape.find(t1_.shape[u(x)]);
      if (it == by_shape.end()) continue;
      int best = kUnmapped;
      std::tuple<int, int, int, long> best_score{};
      for (int y : it->second) {
        if (m2_[u(y)] != kUnmapped || t1_.clauses[u(x)] != t2_.clauses[u(y)]) continue;
        auto score = anchor_score(x, y);
        if (best == kUnmapped || score > best_score) {
          best = y;
          best_score = score;
        }
      }
      if (best != kUnmapped) map_isomorphic(x, best);
    }
  }

  std::tuple<int, int, int, long> anchor_score(int x, int y) const {
    int shared_ancestry = 0;
    int a = t1_.parent[u(x)];
    int b = t2_.parent[u(y)];
    while (a != kUnmapped && b != kUnmapped && t1_.label[u(a)] == t2_.label[u(b)]) {
      ++shared_ancestry;
      a = t1_.parent[u(a)];
      b = t2_.parent[u(b)];
    }
    const int parents_mapped =
        t1_.parent[u(x)] != kUnmapped && t2_.parent[u(y)] != kUnmapped &&
        m1_[u(t1_.parent[u(x)])] == t2_.parent[u(y)];
    const int same_slot = t1_.sibling_index[u(x)] == t2_.sibling_index[u(y)];
    const long distance = -std::labs(static_cast<long>(x) - static_cast<long>(y));
    return {parents_mapped, shared_ancestry, same_slot, distance};
  }

  void map_pair(int x, int y) {
    m1_[u(x)] = y;
    m2_[u(y)] = x;
  }

  void map_isomorphic(int x, int y) {
    map_pair(x, y);
    const auto& cx = t1_.children[u(x)];
    const auto& cy = t2_.children[u(y)];
    if (!is_unordered(*t1_.node[u(x)])) {
      for (std::size_t i = 0; i < cx.size(); ++i) map_isomorphic(cx[i], cy[i]);
      return;
    }
    std::vector<bool> used(cy.size(), false);
    for (std::size_t i = 0; i < cx.size(); ++i) {
      const std::uint64_t want = t1_.shape[u(cx[i])];
      std::size_t pick = cy.size();
      if (i < cy.size() && !used[i] && t2_.shape[u(cy[i])] == want) {
        pick = i;
      } else {
        for (std::size_t k = 0; k < cy.size(); ++k) {
          if (!used[k] && t2_.shape[u(cy[k])] == want) {
            pick = k;
            break;
          }
        }
      }
      used[pick] = true;
      map_isomorphic(cx[i], cy[pick]);
    }
  }

  // Phase 2: pair leftover children of mapped parents, breadth first.
  void pair_top_down() {
    std::deque<std::pair<int, int>> queue;
    if (m1_[0] == kUnmapped && m2_[0] == kUnmapped && t1_.node[0]->kind == t2_.node[0]->kind) {
      map_pair(0, 0);
    }
    if (m1_[0] == 0) queue.emplace_back(0, 0);
    while (!queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      for (auto [cx, cy] : pair_children(x, y)) {
        map_pair(cx, cy);
        queue.emplace_back(cx, cy);
      }
    }
  }

  std::vector<std::pair<int, int>> pair_children(int x, int y) const {
    std::vector<int> u1, u2;
    for (int c : t1_.children[u(x)]) {
      if (m1_[u(c)] == kUnmapped) u1.push_back(c);
    }
    for (int c : t2_.children[u(y)]) {
      if (m2_[u(c)] == kUnmapped) u2.push_back(c);
    }
    if (u1.empty() || u2.empty()) return {};
    if (is_unordered(*t1_.node[u(x)]) || is_unordered(*t2_.node[u(y)])) return pair_by_similarity(u1, u2);
    return pair_by_position(u1, u2);
  }

  std::vector<std::pair<int, int>> pair_by_position(const std::vector<int>& u1,
                                                    const std::vector<int>& u2) const {
    const std::size_t n = u1.size(), m = u2.size();
    std::vector<std::vector<int>> lcs(n + 1, std::vector<int>(m + 1, 0));
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = m; j-- > 0;) {
        lcs[i][j] = t1_.node[u(u1[i])]->kind == t2_.node[u(u2[j])]->kind
                        ? lcs[i + 1][j + 1] + 1
                        : std::max(lcs[i + 1][j], lcs[i][j + 1]);
      }
    }
    std::vector<std::pair<int, int>> pairs;
    std::size_t i = 0, j = 0;
    while (i < n && j < m) {
      if (t1_.node[u(u1[i])]->kind == t2_.node[u(u2[j])]->kind && lcs[i][j] == lcs[i + 1][j + 1] + 1) {
        pairs.emplace_back(u1[i], u2[j]);
        ++i;
        ++j;
      } else if (lcs[i + 1][j] >= lcs[i][j + 1]) {
        ++i;
      } else {
        ++j;
      }
    }
    return pairs;
  }

  std::vector<std::pair<int, int>> pair_by_similarity(const std::vector<int>& u1,
                                                      const std::vector<int>& u2) const {
    struct Candidate {
      double score;
      int slot_distance;
      std::size_t i, j;
    };
    std::vector<Candidate> candidates;
    for (std::size_t i = 0; i < u1.size(); ++i) {
      for (std::size_t j = 0; j < u2.size(); ++j) {
        if (t1_.node[u(u1[i])]->kind != t2_.node[u(u2[j])]->kind) continue;
        candidates.push_back({similarity(u1[i], u2[j]),
                              std::abs(t1_.sibling_index[u(u1[i])] - t2_.sibling_index[u(u2[j])]), i, j});
      }
    }
    std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      if (a.score != b.score) return a.score > b.score;
      return a.slot_distance < b.slot_distance;
    });
    std::vector<bool> used1(u1.size(), false), used2(u2.size(), false);
    std::vector<std::pair<int, int>> pairs;
    for (const auto& c : candidates) {
      if (used1[c.i] || used2[c.j]) continue;
      used1[c.i] = used2[c.j] = true;
      pairs.emplace_back(u1[c.i], u2[c.j]);
    }
    return pairs;
  }

  double similarity(int a, int b) const {
    const double label_equal = t1_.label[u(a)] == t2_.label[u(b)] ? 2.0 : 0.0;
    const int desc_a = t1_.size[u(a)] - 1;
    const int desc_b = t2_.size[u(b)] - 1;
    if (desc_a + desc_b == 0) return label_equal;

    int mapped_common = 0;
    std::map<std::uint64_t, int> labels;
    for (int d = a + 1; d < a + t1_.size[u(a)]; ++d) {
      if (m1_[u(d)] != kUnmapped && t2_.in_subtree(m1_[u(d)], b)) ++mapped_common;
      ++labels[t1_.label[u(d)]];
    }
    int label_common = 0;
    for (int d = b + 1; d < b + t2_.size[u(b)]; ++d) {
      auto it = labels.find(t2_.label[u(d)]);
      if (it != labels.end() && it->second > 0) {
        --it->second;
        ++label_common;
      }
    }
    const double denom = desc_a + desc_b;
    return label_equal + 2.0 * mapped_common / denom + 0.5 * (2.0 * label_common / denom);
  }

  const FlatTree& t1_;
  const FlatTree& t2_;
  std::vector<int> m1_;
  std::vector<int> m2_;
};

// Children of a mapped parent pair that lie outside the longest increasing
// run of partner positions are reported as moves.
std::vector<bool> out_of_order(const FlatTree& t1, const FlatTree& t2, const Matcher& matcher) {
  std::vector<bool> moved(t1.count(), false);
  for (std::size_t p = 0; p < t1.count(); ++p) {
    const int q = matcher.truth_partner(p);
    if (q == kUnmapped) continue;
    std::vector<int> members;
    std::vector<int> positions;
    for (int c : t1.children[p]) {
      const int partner = matcher.truth_partner(static_cast<std::size_t>(c));
      if (partner != kUnmapped && t2.parent[static_cast<std::size_t>(partner)] == q) {
        members.push_back(c);
        positions.push_back(t2.sibling_index[static_cast<std::size_t>(partner)]);
      }
    }
    if (members.size() < 2) continue;
    // O(k^2) longest increasing subsequence; sibling lists are short.
    const std::size_t k = positions.size();
    std::vector<int> len(k, 1), prev(k, -1);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (positions[j] < positions[i] && len[j] + 1 > len[i]) {
          len[i] = len[j] + 1;
          prev[i] = static_cast<int>(j);
        }
      }
    }
    std::size_t end = 0;
    for (std::size_t i = 1; i < k; ++i) {
      if (len[i] > len[end]) end = i;
    }
    std::vector<bool> in_run(k, false);
    for (int i = static_cast<int>(end); i != -1; i = prev[static_cast<std::size_t>(i)]) {
      in_run[static_cast<std::size_t>(i)] = true;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (!in_run[i]) moved[static_cast<std::size_t>(members[i])] = true;
    }
  }
  return moved;
}

NodeRef ref(const FlatTree& tree, std::size_t index) {
  return NodeRef{index, tree.node[index]->kind, tree.node[index]->text};
}

}  // namespace

EditScript diff(const sql::SqlAst& truth, const sql::SqlAst& predicted) {
  const FlatTree t1(truth.root());
  const FlatTree t2(predicted.root());
  Matcher matcher(t1, t2);
  matcher.run();
  const std::vector<bool> moved = out_of_order(t1, t2, matcher);

  EditScript script;
  script.ops.reserve(t1.count() + t2.count());
  for (std::size_t i = 0; i < t1.count(); ++i) {
    EditOp op;
    op.node_kind = t1.node[i]->kind;
    op.truth = ref(t1, i);
    const int partner = matcher.truth_partner(i);
    if (partner == kUnmapped) {
      op.kind = EditKind::kDelete;
    } else {
      const auto j = static_cast<std::size_t>(partner);
      op.predicted = ref(t2, j);
      const int p1 = t1.parent[i];
      const int p2 = t2.parent[j];
      if (t1.label[i] != t2.label[j]) {
        op.kind = EditKind::kUpdate;
      } else if (p1 == kUnmapped && p2 == kUnmapped) {
        op.kind = EditKind::kKeep;
      } else if (p1 == kUnmapped || p2 == kUnmapped ||
                 matcher.truth_partner(static_cast<std::size_t>(p1)) != p2 || moved[i]) {
        op.kind = EditKind::kMove;
      } else {
        op.kind = EditKind::kKeep;
      }
    }
    script.ops.push_back(std::move(op));
  }
  for (std::size_t j = 0; j < t2.count(); ++j) {
    if (matcher.predicted_partner(j) != kUnmapped) continue;
    EditOp op;
    op.kind = EditKind::kInsert;
    op.node_kind = t2.node[j]->kind;
    op.predicted = ref(t2, j);
    script.ops.push_back(std::move(op));
  }
  return script;
}

}  // namespace bis::diff
