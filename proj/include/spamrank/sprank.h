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

#ifndef SPAMRANK_SPRANK_H_
#define SPAMRANK_SPRANK_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace spamrank {

using Index = std::int32_t;

// Column-compressed nonzero pattern. Column c owns
// row_idx[col_ptr[c] .. col_ptr[c+1]), strictly increasing.
struct SparsePattern {
  Index n_rows = 0;
  std::vector<Index> col_ptr{0};
  std::vector<Index> row_idx;

  SparsePattern() = default;
  SparsePattern(Index rows, const std::vector<std::vector<Index>>& columns);

  Index n_cols() const { return static_cast<Index>(col_ptr.size()) - 1; }
  std::size_t nnz() const { return row_idx.size(); }

  std::span<const Index> column(Index c) const {
    return {row_idx.data() + col_ptr[c],
            static_cast<std::size_t>(col_ptr[c + 1] - col_ptr[c])};
  }

  // Appends a column; `rows` must be strictly increasing and in range.
  void AppendColumn(std::span<const Index> rows);

  // Throws std::invalid_argument if any invariant is broken.
  void Validate() const;

  bool operator==(const SparsePattern&) const = default;
};

inline constexpr Index kUnmatched = -1;

struct Matching {
  std::vector<Index> col_to_row;  // kUnmatched for free columns
  Index size = 0;
};

enum class MatchingAlgorithm {
  kHopcroftKarp,
  // One augmenting path per free column (Kuhn). Kept for differential tests.
  kAugmentingPath,
};

// Scratch buffers reused across calls so per-author matching does not
// allocate. Not thread-safe; use one per thread.
class MatchingWorkspace {
 public:
  Matching& Run(const SparsePattern& pattern, MatchingAlgorithm algorithm);

 private:
  void Resize(Index n_rows, Index n_cols);
  void GreedyInit(const SparsePattern& p);
  void HopcroftKarp(const SparsePattern& p);
  void KuhnAugment(const SparsePattern& p);
  bool Bfs(const SparsePattern& p);
  bool Dfs(const SparsePattern& p, Index root);

  Matching matching_;
  std::vector<Index> row_to_col_;
  std::vector<Index> dist_;
  std::vector<Index> queue_;
  std::vector<Index> next_edge_;
  std::vector<Index> stack_;
  std::vector<Index> chosen_row_;
  std::vector<std::uint32_t> visit_stamp_;
  std::uint32_t stamp_ = 0;
};

// Maximum bipartite matching between columns and rows. Deterministic:
// columns are visited in ascending order and each adjacency list is scanned
// in ascending row order.
Matching MaximumMatching(const SparsePattern& pattern,
                         MatchingAlgorithm algorithm = MatchingAlgorithm::kHopcroftKarp);

// Maximum rank over all matrices with this nonzero pattern, i.e. the size of
// a maximum matching. Zero for empty patterns.
Index StructuralRank(const SparsePattern& pattern,
                     MatchingAlgorithm algorithm = MatchingAlgorithm::kHopcroftKarp);
Index StructuralRank(const SparsePattern& pattern, MatchingWorkspace& workspace,
                     MatchingAlgorithm algorithm = MatchingAlgorithm::kHopcroftKarp);

// True iff `m` is a valid matching of `pattern` and admits no augmenting
// path, which certifies maximality.
bool IsMaximumMatching(const SparsePattern& pattern, const Matching& m);

class BudgetExceeded : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr Index kBruteForceMaxCols = 12;
inline constexpr Index kBruteForceMaxRows = 24;

// Exhaustive search over row assignments; exponential, test oracle only.
// Throws BudgetExceeded beyond 12 columns or 24 rows.
Index BruteForceStructuralRank(const SparsePattern& pattern);

}  // namespace spamrank

#endif  // SPAMRANK_SPRANK_H_
