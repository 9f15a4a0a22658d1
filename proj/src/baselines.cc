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

#include "spamrank/baselines.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace spamrank {

CountedColumn ColumnOf(const AuthorPattern& p, Index c) {
  CountedColumn col{p.pattern.column(c), {}};
  if (!p.counts.empty()) {
    col.counts = std::span<const Index>(p.counts).subspan(
        p.pattern.col_ptr[c], p.pattern.col_ptr[c + 1] - p.pattern.col_ptr[c]);
  }
  return col;
}

namespace {

double Weight(const CountedColumn& col, std::size_t k, CosineWeighting weighting) {
  if (weighting == CosineWeighting::kBinary || col.counts.empty()) return 1.0;
  return static_cast<double>(col.counts[k]);
}

double SquaredNorm(const CountedColumn& col, CosineWeighting weighting) {
  double sum = 0.0;
  for (std::size_t k = 0; k < col.rows.size(); ++k) {
    double w = Weight(col, k, weighting);
    sum += w * w;
  }
  return sum;
}

}  // namespace

double CosineSimilarity(const CountedColumn& a, const CountedColumn& b, CosineWeighting weighting) {
  if (a.rows.empty() || b.rows.empty()) return 0.0;
  double dot = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.rows.size() && j < b.rows.size()) {
    if (a.rows[i] < b.rows[j]) {
      ++i;
    } else if (b.rows[j] < a.rows[i]) {
      ++j;
    } else {
      dot += Weight(a, i, weighting) * Weight(b, j, weighting);
      ++i;
      ++j;
    }
  }
  double cosine = dot / std::sqrt(SquaredNorm(a, weighting) * SquaredNorm(b, weighting));
  return std::clamp(cosine, 0.0, 1.0);
}

double AveragePairwiseCosine(const AuthorPattern& p, CosineWeighting weighting) {
  const Index n = p.n_comments();
  if (n < 2) throw std::domain_error("average pairwise cosine needs at least two columns");
  double sum = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      sum += CosineSimilarity(ColumnOf(p, i), ColumnOf(p, j), weighting);
    }
  }
  double pairs = static_cast<double>(n) * (n - 1) / 2.0;
  return sum / pairs;
}

Index NumericRank(const DenseSmallMatrix& m, double tol) {
  if (m.n_rows > kNumericRankMaxDim || m.n_cols > kNumericRankMaxDim) {
    throw BudgetExceeded("numeric rank limited to " + std::to_string(kNumericRankMaxDim) +
                         " rows and columns");
  }
  if (!(tol > 0.0)) throw std::domain_error("rank tolerance must be positive");
  if (m.n_rows == 0 || m.n_cols == 0) return 0;

  using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMajor> a(m.values.data(), m.n_rows, m.n_cols);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sigma = svd.singularValues();
  double largest = sigma.size() > 0 ? sigma(0) : 0.0;
  if (largest == 0.0) return 0;
  Index rank = 0;
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    if (sigma(k) > tol * largest) ++rank;
  }
  return rank;
}

DenseSmallMatrix RandomInstantiation(const SparsePattern& pattern, std::mt19937_64& rng,
                                     double lo, double hi) {
  DenseSmallMatrix m{pattern.n_rows, pattern.n_cols(),
                     std::vector<double>(static_cast<std::size_t>(pattern.n_rows) *
                                         pattern.n_cols())};
  std::uniform_real_distribution<double> value(lo, hi);
  for (Index c = 0; c < pattern.n_cols(); ++c) {
    for (Index r : pattern.column(c)) m.at(r, c) = value(rng);
  }
  return m;
}

DenseSmallMatrix ToDense(const AuthorPattern& p) {
  DenseSmallMatrix m{p.pattern.n_rows, p.pattern.n_cols(),
                     std::vector<double>(static_cast<std::size_t>(p.pattern.n_rows) *
                                         p.pattern.n_cols())};
  for (Index c = 0; c < p.pattern.n_cols(); ++c) {
    CountedColumn col = ColumnOf(p, c);
    for (std::size_t k = 0; k < col.rows.size(); ++k) {
      m.at(col.rows[k], c) = col.counts.empty() ? 1.0 : col.counts[k];
    }
  }
  return m;
}

}  // namespace spamrank
