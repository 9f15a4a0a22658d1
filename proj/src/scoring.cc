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

#include "spamrank/scoring.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spamrank/parallel.h"

namespace spamrank {

double SpammerScore(Index srank, Index n) {
  if (n <= 0) throw std::domain_error("SpammerScore: comment count must be positive");
  if (srank < 0 || srank > n) {
    throw std::domain_error("SpammerScore: structural rank must lie in [0, N]");
  }
  return 1.0 - static_cast<double>(srank) / static_cast<double>(n);
}

ScoreRecord MakeScoreRecord(std::string author_id, Index n_comments, Index srank) {
  return ScoreRecord{std::move(author_id), n_comments, srank, SpammerScore(srank, n_comments),
                     srank == 0};
}

std::vector<ScoreRecord> ScoreCorpus(std::span<const AuthorPattern> patterns, int jobs) {
  std::vector<const AuthorPattern*> live;
  live.reserve(patterns.size());
  for (const AuthorPattern& p : patterns) {
    if (p.n_comments() > 0) live.push_back(&p);
  }

  std::vector<ScoreRecord> out(live.size());
  std::size_t workers = std::max(jobs, 1);
  // One workspace per block so no buffer is shared between threads.
  ParallelFor(workers, static_cast<int>(workers), [&](std::size_t w) {
    MatchingWorkspace ws;
    std::size_t begin = live.size() * w / workers;
    std::size_t end = live.size() * (w + 1) / workers;
    for (std::size_t i = begin; i < end; ++i) {
      AuthorPattern compact = CompactRows(*live[i]);
      out[i] = MakeScoreRecord(compact.author_id, compact.n_comments(),
                               StructuralRank(compact.pattern, ws));
    }
  });
  std::stable_sort(out.begin(), out.end(), [](const ScoreRecord& a, const ScoreRecord& b) {
    return a.author_id < b.author_id;
  });
  return out;
}

ScoreReport Histogram(std::vector<ScoreRecord> records, double bin_width, Index min_comments) {
  if (!(bin_width > 0.0) || bin_width > 1.0) {
    throw std::domain_error("histogram bin width must lie in (0, 1]");
  }
  constexpr double kEdgeSlack = 1e-9;

  ScoreReport report;
  report.bin_width = bin_width;
  std::erase_if(records, [&](const ScoreRecord& r) { return r.n_comments < min_comments; });
  report.records = std::move(records);

  auto n_bins = static_cast<std::size_t>(std::ceil(1.0 / bin_width - kEdgeSlack));
  report.bins.resize(n_bins);
  for (std::size_t k = 0; k < n_bins; ++k) {
    report.bins[k].lo = static_cast<double>(k) * bin_width;
    report.bins[k].hi = k + 1 == n_bins ? 1.0 : static_cast<double>(k + 1) * bin_width;
  }

  ScoreSummary& s = report.summary;
  std::size_t zero_comments = 0;
  for (const ScoreRecord& r : report.records) {
    // Scores are ratios; snap values a rounding error below an edge upward.
    auto k = static_cast<std::size_t>(std::floor(r.score / bin_width + kEdgeSlack));
    ++report.bins[std::min(k, n_bins - 1)].count;

    ++s.authors;
    s.total_comments += r.n_comments;
    if (r.degenerate) ++s.degenerate_authors;
    if (r.score > 0.0) {
      ++s.nonzero_authors;
      s.nonzero_comments += r.n_comments;
    } else {
      zero_comments += r.n_comments;
    }
  }
  std::size_t zero_authors = s.authors - s.nonzero_authors;
  if (s.total_comments > 0) {
    s.nonzero_comment_share = static_cast<double>(s.nonzero_comments) / s.total_comments;
  }
  if (s.nonzero_authors > 0) {
    s.mean_comments_nonzero = static_cast<double>(s.nonzero_comments) / s.nonzero_authors;
  }
  if (zero_authors > 0) {
    s.mean_comments_zero = static_cast<double>(zero_comments) / zero_authors;
  }
  return report;
}

std::vector<ScoreRecord> Flag(std::span<const ScoreRecord> records, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::domain_error("flag threshold must lie in [0, 1]");
  }
  std::vector<ScoreRecord> out;
  for (const ScoreRecord& r : records) {
    if (r.score >= threshold) out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [](const ScoreRecord& a, const ScoreRecord& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.author_id < b.author_id;
  });
  return out;
}

}  // namespace spamrank
