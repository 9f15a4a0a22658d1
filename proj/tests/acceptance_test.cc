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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spamrank/baselines.h"
#include "spamrank/bench.h"
#include "spamrank/cli.h"
#include "spamrank/corpus.h"
#include "spamrank/reporting.h"
#include "spamrank/scoring.h"
#include "spamrank/sprank.h"
#include "spamrank/vocab_matrix.h"
#include "test_util.h"

namespace spamrank {
namespace {

using Clock = std::chrono::steady_clock;
using ::spamrank::testing::Permute;
using ::spamrank::testing::RandomPattern;
using ::spamrank::testing::RandomPermutation;
using ::spamrank::testing::TempFile;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string Fmt(const char* fmt, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, a, b, c);
  return buf;
}

std::vector<AuthorPattern> SyntheticPatterns(const SynthSpec& spec) {
  auto processed = PreprocessAll(GenerateSyntheticCorpus(spec), StopwordSet::LoadDefault());
  return BuildAuthorMatrices(processed, BuildVocabulary(processed));
}

Outcome GoldenScores() {
  struct Golden { Index srank, n; double printed; };
  const Golden golden[] = {{11, 13, 0.1538}, {20, 28, 0.2857}, {22, 32, 0.3125},
                           {14, 24, 0.4167}, {3, 7, 0.5714},   {12, 33, 0.6364},
                           {2, 7, 0.7143},   {7, 41, 0.8293},  {5, 52, 0.9038}};
  auto start = Clock::now();
  int matched = 0;
  for (const Golden& g : golden) matched += RoundTo4(SpammerScore(g.srank, g.n)) == g.printed;
  // The shipped fixture file carries the same triples.
  auto fixtures = LoadFixtures(DefaultFixturePath());
  int file_matched = 0;
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    file_matched += fixtures[i].expected_srank == golden[i].srank &&
                    fixtures[i].expected_n == golden[i].n &&
                    fixtures[i].expected_score == golden[i].printed;
  }
  double secs = Seconds(start);
  return {matched == 9 && file_matched == 9 && secs < 1.0,
          Fmt("%.0f/9 scores match to 4 decimals, %.0f/9 fixture triples agree, %.3f s (limit 1 s)",
              matched, file_matched, secs)};
}

Outcome FixtureRanks() {
  auto start = Clock::now();
  auto results = CheckFixtures(LoadFixtures(DefaultFixturePath()));
  int ok = 0;
  for (const FixtureResult& r : results) ok += r.status == FixtureStatus::kPass;
  double secs = Seconds(start);
  return {ok == static_cast<int>(results.size()) && secs < 5.0,
          Fmt("%.0f/%.0f ranks match, oracle agrees, in %.3f s (limit 5 s)", ok,
              static_cast<double>(results.size()), secs)};
}

Outcome BruteForceAgreement() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<Index> dim(1, 8);
  const double densities[] = {0.1, 0.3, 0.6, 1.0};
  int disagreements = 0;
  for (int i = 0; i < 1000; ++i) {
    SparsePattern p = RandomPattern(rng, dim(rng), dim(rng), densities[i % 4]);
    disagreements += StructuralRank(p) != BruteForceStructuralRank(p);
  }
  return {disagreements == 0, Fmt("%.0f disagreements over 1000 patterns up to 8x8", disagreements)};
}

Outcome NumericRankCheck() {
  std::mt19937_64 rng(4048);
  std::uniform_int_distribution<Index> dim(1, 32);
  std::uniform_real_distribution<double> density(0.02, 0.5);
  int above = 0;
  int equal = 0;
  for (int i = 0; i < 1000; ++i) {
    SparsePattern p = RandomPattern(rng, dim(rng), dim(rng), density(rng));
    Index srank = StructuralRank(p);
    Index nrank = NumericRank(RandomInstantiation(p, rng), kDefaultRankTolerance);
    above += nrank > srank;
    equal += nrank == srank;
  }
  return {above == 0 && equal >= 990,
          Fmt("numeric > structural on %.0f; equal on %.0f/1000 (need >= 990), tol 1e-8", above,
              equal)};
}

Outcome Invariances() {
  std::mt19937_64 rng(77);
  int failures = 0;
  int checks = 0;
  auto check = [&](bool ok) {
    ++checks;
    failures += !ok;
  };
  for (int i = 0; i < 100; ++i) {
    Index rows = 1 + i % 20;
    SparsePattern p = RandomPattern(rng, rows, 1 + (i * 7) % 20, 0.15);
    Index base = StructuralRank(p);
    // Row and column permutations.
    SparsePattern q = Permute(p, RandomPermutation(rng, rows), RandomPermutation(rng, p.n_cols()));
    check(StructuralRank(q) == base);
    // An empty column changes nothing.
    SparsePattern z = p;
    z.AppendColumn({});
    check(StructuralRank(z) == base);
    // Adding a column moves the rank by 0 or +1.
    SparsePattern a = RandomPattern(rng, rows, 1, 0.3);
    SparsePattern plus = p;
    plus.AppendColumn(std::vector<Index>(a.column(0).begin(), a.column(0).end()));
    Index r = StructuralRank(plus);
    check(r == base || r == base + 1);
    // Adding a nonzero to an existing column never lowers it.
    auto cols = ::spamrank::testing::Columns(p);
    auto& col = cols[i % cols.size()];
    Index row = static_cast<Index>(rng() % rows);
    if (std::find(col.begin(), col.end(), row) == col.end()) {
      col.insert(std::upper_bound(col.begin(), col.end(), row), row);
    }
    check(StructuralRank(SparsePattern(rows, cols)) >= base);
  }
  // Score range, exactness and strict monotonicity.
  for (Index n = 1; n <= 200; ++n) {
    double prev = 2.0;
    for (Index srank = 0; srank <= n; ++srank) {
      double score = SpammerScore(srank, n);
      check(score >= 0.0 && score <= 1.0);
      check((score == 0.0) == (srank == n) && (score == 1.0) == (srank == 0));
      check(std::abs(n * (1.0 - score) - srank) <= std::nextafter(double(n), 1e9) - n);
      check(score < prev);
      prev = score;
    }
  }
  // Flag nesting.
  std::vector<ScoreRecord> records;
  for (Index n = 1; n <= 12; ++n) {
    for (Index srank = 0; srank <= n; ++srank) {
      records.push_back(MakeScoreRecord(std::to_string(n) + "/" + std::to_string(srank), n, srank));
    }
  }
  for (int lo = 0; lo <= 20; ++lo) {
    auto low = Flag(records, lo / 20.0);
    for (int hi = lo; hi <= 20; ++hi) {
      for (const ScoreRecord& r : Flag(records, hi / 20.0)) {
        check(std::find(low.begin(), low.end(), r) != low.end());
      }
    }
  }
  return {failures == 0, Fmt("%.0f violations over %.0f checks", failures, checks)};
}

Outcome BenchRatio() {
  SynthSpec spec;  // 10000 authors
  auto patterns = SyntheticPatterns(spec);
  std::vector<BenchMethod> methods = {BenchMethod::kStructuralRank,
                                      BenchMethod::kAveragePairwiseCosine};
  BenchReport report = TimeMethods(patterns, methods, {3, 1});
  double ratio = report.timings[1].seconds / report.timings[0].seconds;
  return {ratio >= 10.0, Fmt("sprank %.4f s, cosine %.4f s, ratio %.1fx (need >= 10x)",
                             report.timings[0].seconds, report.timings[1].seconds, ratio)};
}

// Same authors and comment counts, each comment given extra terms so the
// mean term count doubles.
Outcome DensityScaling() {
  SynthSpec spec;
  spec.n_authors = 10000;
  spec.terms_per_comment = 9.0;
  auto raw = GenerateSyntheticCorpus(spec);
  auto lexicon = SyntheticLexicon(spec.vocab_size);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, lexicon.size() - 1);
  auto doubled = raw;
  for (RawComment& c : doubled) {
    std::size_t words = std::count(c.text.begin(), c.text.end(), ' ') + 1;
    for (std::size_t k = 0; k < words; ++k) c.text += " " + lexicon[pick(rng)];
  }
  StopwordSet stop = StopwordSet::LoadDefault();
  auto build = [&](const std::vector<RawComment>& corpus) {
    auto processed = PreprocessAll(corpus, stop);
    return BuildAuthorMatrices(processed, BuildVocabulary(processed));
  };
  auto base = build(raw);
  auto dense = build(doubled);
  std::vector<BenchMethod> methods = {BenchMethod::kStructuralRank};
  double t1 = TimeMethods(base, methods, {5, 1}).timings[0].seconds;
  double t2 = TimeMethods(dense, methods, {5, 1}).timings[0].seconds;
  CorpusStats s1 = ComputeCorpusStats(base);
  CorpusStats s2 = ComputeCorpusStats(dense);
  bool same_cols = s1.avg_cols == s2.avg_cols;
  double ratio = t2 / t1;
  return {same_cols && ratio < 4.0,
          Fmt("nnz/column %.2f -> %.2f, runtime ratio %.2f (need < 4)", s1.avg_nnz / s1.avg_cols,
              s2.avg_nnz / s2.avg_cols, ratio)};
}

Outcome ParallelDeterminism() {
  SynthSpec spec;
  spec.n_authors = 1000;
  std::ostringstream corpus;
  WriteCorpusJsonl(GenerateSyntheticCorpus(spec), corpus);
  TempFile in("acceptance_corpus.jsonl", corpus.str());
  TempFile one("jobs1.csv");
  TempFile eight("jobs8.csv");
  std::ostringstream out, err;
  int c1 = RunCli({"score", "--input", in.str(), "--output", one.str(), "--jobs", "1"}, out, err);
  int c8 = RunCli({"score", "--input", in.str(), "--output", eight.str(), "--jobs", "8"}, out, err);
  std::string a = one.Read();
  std::string b = eight.Read();
  return {c1 == 0 && c8 == 0 && !a.empty() && a == b,
          Fmt("exit codes %.0f/%.0f, outputs ", c1, c8) + (a == b ? "identical" : "differ") +
              " (" + std::to_string(a.size()) + " bytes)"};
}

Outcome ActivitySeparation() {
  SynthSpec spec;
  spec.spammer_fraction = 0.03;
  ScoreReport report = Histogram(ScoreCorpus(SyntheticPatterns(spec)));
  const ScoreSummary& s = report.summary;
  double ratio = s.mean_comments_zero > 0 ? s.mean_comments_nonzero / s.mean_comments_zero : 0;
  return {ratio >= 3.0, Fmt("mean comments score>0 %.2f vs score=0 %.2f, ratio %.2f (need >= 3)",
                            s.mean_comments_nonzero, s.mean_comments_zero, ratio)};
}

}  // namespace
}  // namespace spamrank

int main() {
  using namespace spamrank;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"golden scores", GoldenScores},
      {"fixture ranks with oracle", FixtureRanks},
      {"brute-force agreement", BruteForceAgreement},
      {"numeric rank bound", NumericRankCheck},
      {"invariances", Invariances},
      {"speed vs pairwise cosine", BenchRatio},
      {"density scaling", DensityScaling},
      {"parallel determinism", ParallelDeterminism},
      {"activity separation", ActivitySeparation},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].name
              << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
