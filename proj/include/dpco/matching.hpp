// Copyright 2026 The dpco Authors.
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

#include <algorithm>
#include <cstddef>
#include <queue>
#include <utility>
#include <vector>

namespace dpco {

/// Maximum matching in a general graph via blossom contraction
/// (Edmonds). O(V^3); fine for the instance sizes this library targets.
/// A maximal (greedy) matching is not enough here: the callers need the
/// size of a *maximum* matching, which is uniquely determined by the
/// graph.
class BlossomMatcher {
 public:
  BlossomMatcher(std::size_t n,
                 const std::vector<std::pair<int, int>>& edges)
      : n_(n), adj_(n) {
    for (const auto& [u, v] : edges) {
      adj_[static_cast<std::size_t>(u)].push_back(v);
      adj_[static_cast<std::size_t>(v)].push_back(u);
    }
  }

  /// Returns mate[v] (or -1 for unmatched vertices).
  std::vector<int> solve() {
    match_.assign(n_, -1);
    for (std::size_t v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int u = find_augmenting_path(static_cast<int>(v));
      while (u != -1) {
        int pv = parent_[static_cast<std::size_t>(u)];
        int ppv = match_[static_cast<std::size_t>(pv)];
        match_[static_cast<std::size_t>(u)] = pv;
        match_[static_cast<std::size_t>(pv)] = u;
        u = ppv;
      }
    }
    return match_;
  }

  static std::size_t maximum_matching_size(
      std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    BlossomMatcher matcher(n, edges);
    auto mate = matcher.solve();
    std::size_t matched = 0;
    for (int m : mate) {
      if (m != -1) ++matched;
    }
    return matched / 2;
  }

 private:
  int lowest_common_base(int a, int b) const {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[static_cast<std::size_t>(a)];
      seen[static_cast<std::size_t>(a)] = true;
      if (match_[static_cast<std::size_t>(a)] == -1) break;
      a = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(a)])];
    }
    for (;;) {
      b = base_[static_cast<std::size_t>(b)];
      if (seen[static_cast<std::size_t>(b)]) return b;
      b = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(b)])];
    }
  }

  void mark_blossom_path(int v, int blossom_base, int child,
                         std::vector<bool>& in_blossom) {
    while (base_[static_cast<std::size_t>(v)] != blossom_base) {
      in_blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] =
          true;
      int mv = match_[static_cast<std::size_t>(v)];
      in_blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] =
          true;
      parent_[static_cast<std::size_t>(v)] = child;
      child = mv;
      v = parent_[static_cast<std::size_t>(mv)];
    }
  }

  int find_augmenting_path(int root) {
    in_tree_.assign(n_, false);
    parent_.assign(n_, -1);
    base_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<int>(i);

    in_tree_[static_cast<std::size_t>(root)] = true;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int to : adj_[static_cast<std::size_t>(v)]) {
        if (base_[static_cast<std::size_t>(v)] ==
                base_[static_cast<std::size_t>(to)] ||
            match_[static_cast<std::size_t>(v)] == to) {
          continue;
        }
        if (to == root ||
            (match_[static_cast<std::size_t>(to)] != -1 &&
             parent_[static_cast<std::size_t>(
                 match_[static_cast<std::size_t>(to)])] != -1)) {
          // Odd cycle: contract the blossom.
          int blossom_base = lowest_common_base(v, to);
          std::vector<bool> in_blossom(n_, false);
          mark_blossom_path(v, blossom_base, to, in_blossom);
          mark_blossom_path(to, blossom_base, v, in_blossom);
          for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom[static_cast<std::size_t>(base_[i])]) {
              base_[i] = blossom_base;
              if (!in_tree_[i]) {
                in_tree_[i] = true;
                queue.push(static_cast<int>(i));
              }
            }
          }
        } else if (parent_[static_cast<std::size_t>(to)] == -1) {
          parent_[static_cast<std::size_t>(to)] = v;
          if (match_[static_cast<std::size_t>(to)] == -1) return to;
          int mate = match_[static_cast<std::size_t>(to)];
          in_tree_[static_cast<std::size_t>(mate)] = true;
          queue.push(mate);
        }
      }
    }
    return -1;
  }

  std::size_t n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> in_tree_;
};

}  // namespace dpco
