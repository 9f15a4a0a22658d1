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

#ifndef SPAMRANK_BASELINES_H_
#define SPAMRANK_BASELINES_H_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "spamrank/sprank.h"
#include "spamrank/vocab_matrix.h"

namespace spamrank {

// A sparse column with term frequencies; `counts` may be empty, meaning every
// listed row has weight 1.
struct CountedColumn {
  std::span<const Index> rows;
  std::span<const Index> counts;
};

enum class CosineWeighting { kTermFrequency, kBinary };

CountedColumn ColumnOf(const AuthorPattern& p, Index c);

// dot(a, b) / (|a| |b|), clamped to [0, 1]; 0 when either column is empty.
double CosineSimilarity(const CountedColumn& a, const CountedColumn& b,
                        CosineWeighting weighting = CosineWeighting::kTermFrequency);

// Mean cosine over all N(N-1)/2 unordered column pairs, evaluated naively:
// every pair runs its own sparse dot product and norms. Pairs are summed in
// (i, j>i) order. Throws std::domain_error when N < 2.
double AveragePairwiseCosine(const AuthorPattern& p,
                             CosineWeighting weighting = CosineWeighting::kTermFrequency);

struct DenseSmallMatrix {
  Index n_rows = 0;
  Index n_cols = 0;
  std::vector<double> values;  // row-major

  double& at(Index r, Index c) { return values[static_cast<std::size_t>(r) * n_cols + c]; }
  double at(Index r, Index c) const { return values[static_cast<std::size_t>(r) * n_cols + c]; }
};

inline constexpr Index kNumericRankMaxDim = 64;
inline constexpr double kDefaultRankTolerance = 1e-8;

// Number of singular values above tol * sigma_max. Throws BudgetExceeded
// when either dimension exceeds 64.
Index NumericRank(const DenseSmallMatrix& m, double tol = kDefaultRankTolerance);

// Fills the nonzeros of `pattern` with independent draws from [lo, hi).
DenseSmallMatrix RandomInstantiation(const SparsePattern& pattern, std::mt19937_64& rng,
                                     double lo = 0.5, double hi = 1.5);

// Dense copy of a counted pattern (counts, or 1 where absent).
DenseSmallMatrix ToDense(const AuthorPattern& p);

}  // namespace spamrank

#endif  // SPAMRANK_BASELINES_H_
