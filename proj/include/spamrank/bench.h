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

#ifndef SPAMRANK_BENCH_H_
#define SPAMRANK_BENCH_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spamrank/corpus.h"
#include "spamrank/sprank.h"
#include "spamrank/vocab_matrix.h"

namespace spamrank {

// Parameters of the synthetic comment corpus. Comment counts per author are
// 1 + NegativeBinomial(mean - 1, dispersion), with spammers drawing from a
// mean `spammer_activity` times larger than legitimate authors. The
// legitimate mean is chosen so the corpus-wide mean is `comments_mean`.
struct SynthSpec {
  std::int64_t n_authors = 10000;
  double comments_mean = 11.0;
  // Negative-binomial shape; smaller is more overdispersed, 0 means Poisson.
  double comments_dispersion = 1.0;
  std::int64_t vocab_size = 7346;
  double terms_per_comment = 9.0;
  double spammer_fraction = 0.03;
  // Probability that a spammer comment repeats one of the spammer's templates.
  double repeat_intensity = 0.8;
  std::int64_t templates_per_spammer = 3;
  double template_terms = 2.0;
  double spammer_activity = 10.0;
  std::uint64_t rng_seed = 7;

  // Throws std::invalid_argument naming the first bad field.
  void Validate() const;
};

// Deterministic for a given spec: author ids are "author00042"-style, words
// come from a fixed pseudo-word lexicon that survives preprocessing
// unchanged, and records are emitted in a seeded shuffled order.
std::vector<RawComment> GenerateSyntheticCorpus(const SynthSpec& spec);

// The first `n` words of the synthetic lexicon.
std::vector<std::string> SyntheticLexicon(std::int64_t n);

enum class BenchMethod { kStructuralRank, kAveragePairwiseCosine, kNumericRankSmall };

std::string_view BenchMethodName(BenchMethod m);
BenchMethod ParseBenchMethod(std::string_view name);

struct BenchOptions {
  int repetitions = 1;
  // 1 = single-threaded. More than one thread splits the matrices across
  // workers; such runs are labelled as parallel in the report.
  int jobs = 1;
};

struct MethodTiming {
  BenchMethod method;
  // Mean wall-clock seconds of one pass over every matrix.
  double seconds = 0.0;
  std::size_t matrices = 0;
  // Sum of per-matrix results; keeps the work observable.
  double checksum = 0.0;
};

struct CorpusStats {
  std::size_t matrices = 0;
  double avg_rows = 0.0;          // global vocabulary rows
  double avg_compact_rows = 0.0;  // rows the author actually touches
  double avg_cols = 0.0;
  double avg_nnz = 0.0;
  double avg_density = 0.0;       // over global rows; authors with N = 0 skipped
};

struct BenchReport {
  std::vector<MethodTiming> timings;
  CorpusStats stats;
  // Structural rank per matrix, in input order, when that method ran.
  std::vector<Index> structural_ranks;
  int repetitions = 1;
  int jobs = 1;
  std::string environment;
  std::string cosine_variant;
};

CorpusStats ComputeCorpusStats(std::span<const AuthorPattern> patterns);

// Times each method over the same pre-compacted matrices. One untimed warmup
// pass precedes the timed passes. Throws std::domain_error for an empty
// method set and BudgetExceeded if numeric rank is requested for a matrix
// larger than 64 in either compacted dimension.
BenchReport TimeMethods(std::span<const AuthorPattern> patterns,
                        std::span<const BenchMethod> methods, const BenchOptions& options = {});

void RenderBenchText(const BenchReport& report, std::ostream& out);
// One JSON object per method.
void RenderBenchJsonl(const BenchReport& report, std::ostream& out);

}  // namespace spamrank

#endif  // SPAMRANK_BENCH_H_
