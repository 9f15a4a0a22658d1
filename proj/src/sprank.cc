// Copyright 2026 The Spamrank Authors
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

#include "spamrank/sprank.h"

#include <algorithm>
#include <limits>
#include <string>

namespace spamrank {
namespace {

constexpr Index kInf = std::numeric_limits<Index>::max();

}  // namespace

SparsePattern::SparsePattern(Index rows, const std::vector<std::vector<Index>>& columns)
    : n_rows(rows) {
  col_ptr.reserve(columns.size() + 1);
  for (const auto& col : columns) AppendColumn(col);
}

void SparsePattern::AppendColumn(std::span<const Index> rows) {
  row_idx.insert(row_idx.end(), rows.begin(), rows.end());
  col_ptr.push_back(static_cast<Index>(row_idx.size()));
}

void SparsePattern::Validate() const {
  if (n_rows < 0) throw std::invalid_argument("negative row count");
  if (col_ptr.empty() || col_ptr.front() != 0 ||
      col_ptr.back() != static_cast<Index>(row_idx.size())) {
    throw std::invalid_argument("inconsistent column pointers");
  }
  for (Index c = 0; c < n_cols(); ++c) {
    if (col_ptr[c + 1] < col_ptr[c]) throw std::invalid_argument("decreasing column pointers");
    Index prev = -1;
    for (Index r : column(c)) {
      if (r <= prev || r >= n_rows) {
        throw std::invalid_argument("column " + std::to_string(c) +
                                    ": row indices must be strictly increasing and < n_rows");
      }
      prev = r;
    }
  }
}

void MatchingWorkspace::Resize(Index n_rows, Index n_cols) {
  matching_.col_to_row.assign(n_cols, kUnmatched);
  matching_.size = 0;
  row_to_col_.assign(n_rows, kUnmatched);
  dist_.resize(n_cols);
  queue_.resize(n_cols);
  next_edge_.resize(n_cols);
  stack_.resize(n_cols);
  chosen_row_.resize(n_cols);
  if (visit_stamp_.size() < static_cast<std::size_t>(n_rows)) {
    visit_stamp_.assign(n_rows, 0);
    stamp_ = 0;
  }
}

Matching& MatchingWorkspace::Run(const SparsePattern& pattern, MatchingAlgorithm algorithm) {
  Resize(pattern.n_rows, pattern.n_cols());
  GreedyInit(pattern);
  if (algorithm == MatchingAlgorithm::kHopcroftKarp) {
    HopcroftKarp(pattern);
  } else {
    KuhnAugment(pattern);
  }
  return matching_;
}

// Cheap first pass: each column takes its lowest free row.
void MatchingWorkspace::GreedyInit(const SparsePattern& p) {
  for (Index c = 0; c < p.n_cols(); ++c) {
    for (Index r : p.column(c)) {
      if (row_to_col_[r] == kUnmatched) {
        row_to_col_[r] = c;
        matching_.col_to_row[c] = r;
        ++matching_.size;
        break;
      }
    }
  }
}

void MatchingWorkspace::HopcroftKarp(const SparsePattern& p) {
  const Index n_cols = p.n_cols();
  while (matching_.size < std::min(p.n_rows, n_cols) && Bfs(p)) {
    for (Index c = 0; c < n_cols; ++c) next_edge_[c] = p.col_ptr[c];
    for (Index c = 0; c < n_cols; ++c) {
      if (matching_.col_to_row[c] == kUnmatched && Dfs(p, c)) ++matching_.size;
    }
  }
}

// Layers columns by alternating-path distance from the free columns. Returns
// true if some free row is reachable.
bool MatchingWorkspace::Bfs(const SparsePattern& p) {
  const Index n_cols = p.n_cols();
  Index head = 0;
  Index tail = 0;
  for (Index c = 0; c < n_cols; ++c) {
    if (matching_.col_to_row[c] == kUnmatched) {
      dist_[c] = 0;
      queue_[tail++] = c;
    } else {
      dist_[c] = kInf;
    }
  }
  Index shortest = kInf;
  while (head < tail) {
    Index c = queue_[head++];
    if (dist_[c] >= shortest) continue;
    for (Index r : p.column(c)) {
      Index next = row_to_col_[r];
      if (next == kUnmatched) {
        shortest = std::min(shortest, dist_[c] + 1);
      } else if (dist_[next] == kInf) {
        dist_[next] = dist_[c] + 1;
        queue_[tail++] = next;
      }
    }
  }
  return shortest != kInf;
}

// Iterative layered DFS from a free column; flips the path on success.
bool MatchingWorkspace::Dfs(const SparsePattern& p, Index root) {
  Index depth = 0;
  stack_[0] = root;
  while (depth >= 0) {
    Index c = stack_[depth];
    if (next_edge_[c] == p.col_ptr[c + 1]) {
      dist_[c] = kInf;  // dead end for the rest of this phase
      --depth;
      continue;
    }
    Index r = p.row_idx[next_edge_[c]++];
    Index next = row_to_col_[r];
    if (next == kUnmatched) {
      chosen_row_[depth] = r;
      for (Index d = depth; d >= 0; --d) {
        matching_.col_to_row[stack_[d]] = chosen_row_[d];
        row_to_col_[chosen_row_[d]] = stack_[d];
      }
      return true;
    }
    if (dist_[next] == dist_[c] + 1) {
      chosen_row_[depth] = r;
      stack_[++depth] = next;
    }
  }
  return false;
}

void MatchingWorkspace::KuhnAugment(const SparsePattern& p) {
  for (Index root = 0; root < p.n_cols(); ++root) {
    if (matching_.col_to_row[root] != kUnmatched) continue;
    if (matching_.size == p.n_rows) break;
    if (++stamp_ == 0) {
      std::fill(visit_stamp_.begin(), visit_stamp_.end(), 0);
      stamp_ = 1;
    }
    Index depth = 0;
    stack_[0] = root;
    next_edge_[root] = p.col_ptr[root];
    while (depth >= 0) {
      Index c = stack_[depth];
      if (next_edge_[c] == p.col_ptr[c + 1]) {
        --depth;
        continue;
      }
      Index r = p.row_idx[next_edge_[c]++];
      if (visit_stamp_[r] == stamp_) continue;
      visit_stamp_[r] = stamp_;
      chosen_row_[depth] = r;
      Index next = row_to_col_[r];
      if (next == kUnmatched) {
        for (Index d = depth; d >= 0; --d) {
          matching_.col_to_row[stack_[d]] = chosen_row_[d];
          row_to_col_[chosen_row_[d]] = stack_[d];
        }
        ++matching_.size;
        break;
      }
      stack_[++depth] = next;
      next_edge_[next] = p.col_ptr[next];
    }
  }
}

Matching MaximumMatching(const SparsePattern& pattern, MatchingAlgorithm algorithm) {
  MatchingWorkspace ws;
  return ws.Run(pattern, algorithm);
}

Index StructuralRank(const SparsePattern& pattern, MatchingAlgorithm algorithm) {
  MatchingWorkspace ws;
  return StructuralRank(pattern, ws, algorithm);
}

Index StructuralRank(const SparsePattern& pattern, MatchingWorkspace& workspace,
                     MatchingAlgorithm algorithm) {
  return workspace.Run(pattern, algorithm).size;
}

bool IsMaximumMatching(const SparsePattern& pattern, const Matching& m) {
  const Index n_cols = pattern.n_cols();
  if (static_cast<Index>(m.col_to_row.size()) != n_cols) return false;
  std::vector<Index> row_owner(pattern.n_rows, kUnmatched);
  Index matched = 0;
  for (Index c = 0; c < n_cols; ++c) {
    Index r = m.col_to_row[c];
    if (r == kUnmatched) continue;
    if (r < 0 || r >= pattern.n_rows || row_owner[r] != kUnmatched) return false;
    auto col = pattern.column(c);
    if (!std::binary_search(col.begin(), col.end(), r)) return false;
    row_owner[r] = c;
    ++matched;
  }
  if (matched != m.size) return false;

  // Alternating BFS from every free column; reaching a free row means an
  // augmenting path exists.
  std::vector<char> seen_col(n_cols, 0);
  std::vector<Index> frontier;
  for (Index c = 0; c < n_cols; ++c) {
    if (m.col_to_row[c] == kUnmatched) {
      seen_col[c] = 1;
      frontier.push_back(c);
    }
  }
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (Index r : pattern.column(frontier[i])) {
      Index owner = row_owner[r];
      if (owner == kUnmatched) return false;
      if (!seen_col[owner]) {
        seen_col[owner] = 1;
        frontier.push_back(owner);
      }
    }
  }
  return true;
}

namespace {

void BruteForceSearch(const SparsePattern& p, Index col, std::uint32_t used_rows, Index matched,
                      Index& best) {
  if (matched + (p.n_cols() - col) <= best) return;
  if (col == p.n_cols()) {
    best = matched;
    return;
  }
  for (Index r : p.column(col)) {
    std::uint32_t bit = std::uint32_t{1} << r;
    if ((used_rows & bit) == 0) BruteForceSearch(p, col + 1, used_rows | bit, matched + 1, best);
  }
  BruteForceSearch(p, col + 1, used_rows, matched, best);
}

}  // namespace

Index BruteForceStructuralRank(const SparsePattern& pattern) {
  if (pattern.n_cols() > kBruteForceMaxCols || pattern.n_rows > kBruteForceMaxRows) {
    throw BudgetExceeded("brute-force structural rank limited to " +
                         std::to_string(kBruteForceMaxRows) + " rows x " +
                         std::to_string(kBruteForceMaxCols) + " columns");
  }
  Index best = 0;
  BruteForceSearch(pattern, 0, 0, 0, best);
  return best;
}

}  // namespace spamrank
