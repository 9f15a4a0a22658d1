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

#ifndef SPAMRANK_SCORING_H_
#define SPAMRANK_SCORING_H_

#include <span>
#include <string>
#include <vector>

#include "spamrank/sprank.h"
#include "spamrank/vocab_matrix.h"

namespace spamrank {

struct ScoreRecord {
  std::string author_id;
  Index n_comments = 0;
  Index srank = 0;
  double score = 0.0;
  // srank == 0: every comment of the author preprocessed to nothing.
  bool degenerate = false;

  bool operator==(const ScoreRecord&) const = default;
};

// SpammerScore = 1 - srank / n. Throws std::domain_error unless
// 0 <= srank <= n and n > 0.
double SpammerScore(Index srank, Index n);

ScoreRecord MakeScoreRecord(std::string author_id, Index n_comments, Index srank);

// Compacts each pattern and scores it by structural rank. Authors with no
// comments are skipped. Output is sorted by ascending author_id and is
// identical for any `jobs`.
std::vector<ScoreRecord> ScoreCorpus(std::span<const AuthorPattern> patterns, int jobs = 1);

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
};

struct ScoreSummary {
  std::size_t authors = 0;
  std::size_t total_comments = 0;
  std::size_t nonzero_authors = 0;
  std::size_t nonzero_comments = 0;
  std::size_t degenerate_authors = 0;
  // Share of all comments written by authors with score > 0.
  double nonzero_comment_share = 0.0;
  double mean_comments_nonzero = 0.0;
  double mean_comments_zero = 0.0;
};

struct ScoreReport {
  std::vector<ScoreRecord> records;
  double bin_width = 0.1;
  std::vector<HistogramBin> bins;
  ScoreSummary summary;
};

// Fixed-width bins [k*w, (k+1)*w) over [0, 1], the last one closed at 1.0.
// Records with fewer than `min_comments` comments are dropped from the
// report. Throws std::domain_error unless 0 < bin_width <= 1.
ScoreReport Histogram(std::vector<ScoreRecord> records, double bin_width = 0.1,
                      Index min_comments = 1);

// Records with score >= threshold, highest score first, ties by author_id.
// Throws std::domain_error unless threshold is in [0, 1].
std::vector<ScoreRecord> Flag(std::span<const ScoreRecord> records, double threshold);

}  // namespace spamrank

#endif  // SPAMRANK_SCORING_H_
