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

#include "spamrank/bench.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "spamrank/baselines.h"
#include "spamrank/parallel.h"
#include "spamrank/porter_stemmer.h"

namespace spamrank {

void SynthSpec::Validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("invalid synthetic spec: ") + what);
  };
  require(n_authors > 0, "n_authors must be positive");
  require(comments_mean >= 1.0, "comments_mean must be at least 1");
  require(comments_dispersion >= 0.0, "comments_dispersion must be non-negative");
  require(vocab_size > 0, "vocab_size must be positive");
  require(terms_per_comment >= 1.0, "terms_per_comment must be at least 1");
  require(spammer_fraction >= 0.0 && spammer_fraction <= 1.0,
          "spammer_fraction must lie in [0, 1]");
  require(repeat_intensity >= 0.0 && repeat_intensity <= 1.0,
          "repeat_intensity must lie in [0, 1]");
  require(templates_per_spammer > 0, "templates_per_spammer must be positive");
  require(template_terms >= 1.0, "template_terms must be at least 1");
  require(spammer_activity > 0.0, "spammer_activity must be positive");
}

std::vector<std::string> SyntheticLexicon(std::int64_t n) {
  static constexpr std::string_view kOnsets = "bcdfghjklmnprtvz";
  static constexpr std::string_view kVowels = "aeiou";
  static constexpr std::string_view kFinals = "bdgkmnprt";
  constexpr std::int64_t kSyllables = 16 * 5;

  std::vector<std::string> words;
  words.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; static_cast<std::int64_t>(words.size()) < n; ++k) {
    std::string w;
    std::int64_t rest = k / static_cast<std::int64_t>(kFinals.size());
    int syllables = 0;
    while (syllables < 2 || rest > 0) {
      std::int64_t s = rest % kSyllables;
      rest /= kSyllables;
      w.push_back(kOnsets[s / 5]);
      w.push_back(kVowels[s % 5]);
      ++syllables;
    }
    w.push_back(kFinals[k % static_cast<std::int64_t>(kFinals.size())]);
    if (PorterStem(w) == w) words.push_back(std::move(w));
  }
  return words;
}

namespace {

std::int64_t DrawCount(std::mt19937_64& rng, double mean, double dispersion) {
  double extra = mean - 1.0;
  if (extra <= 0.0) return 1;
  double lambda = extra;
  if (dispersion > 0.0) {
    std::gamma_distribution<double> gamma(dispersion, extra / dispersion);
    lambda = gamma(rng);
  }
  if (lambda <= 0.0) return 1;
  std::poisson_distribution<std::int64_t> poisson(lambda);
  return 1 + poisson(rng);
}

std::string RandomText(std::mt19937_64& rng, const std::vector<std::string>& lexicon,
                       double mean_terms) {
  std::uniform_int_distribution<std::size_t> pick(0, lexicon.size() - 1);
  std::int64_t n_terms = DrawCount(rng, mean_terms, 0.0);
  std::string text;
  for (std::int64_t t = 0; t < n_terms; ++t) {
    if (t > 0) text.push_back(' ');
    text += lexicon[pick(rng)];
  }
  return text;
}

std::string AuthorId(std::int64_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "author%05lld", static_cast<long long>(i));
  return buf;
}

}  // namespace

std::vector<RawComment> GenerateSyntheticCorpus(const SynthSpec& spec) {
  spec.Validate();
  std::mt19937_64 rng(spec.rng_seed);
  const std::vector<std::string> lexicon = SyntheticLexicon(spec.vocab_size);
  const double f = spec.spammer_fraction;
  const double legit_mean =
      std::max(1.0, spec.comments_mean / (1.0 - f + f * spec.spammer_activity));
  const double spammer_mean = std::max(1.0, legit_mean * spec.spammer_activity);

  std::bernoulli_distribution is_spammer(f);
  std::bernoulli_distribution repeats(spec.repeat_intensity);
  std::uniform_int_distribution<std::int64_t> pick_template(0, spec.templates_per_spammer - 1);

  std::vector<RawComment> out;
  for (std::int64_t a = 0; a < spec.n_authors; ++a) {
    std::string id = AuthorId(a);
    bool spammer = is_spammer(rng);
    std::int64_t n = DrawCount(rng, spammer ? spammer_mean : legit_mean, spec.comments_dispersion);
    std::vector<std::string> templates;
    if (spammer) {
      for (std::int64_t t = 0; t < spec.templates_per_spammer; ++t) {
        templates.push_back(RandomText(rng, lexicon, spec.template_terms));
      }
    }
    for (std::int64_t k = 0; k < n; ++k) {
      std::string text = spammer && repeats(rng) ? templates[pick_template(rng)]
                                                 : RandomText(rng, lexicon, spec.terms_per_comment);
      out.push_back(RawComment{id, std::move(text), "synthetic", std::nullopt});
    }
  }
  std::shuffle(out.begin(), out.end(), rng);
  for (std::size_t i = 0; i < out.size(); ++i) out[i].timestamp = static_cast<std::int64_t>(i);
  return out;
}

std::string_view BenchMethodName(BenchMethod m) {
  switch (m) {
    case BenchMethod::kStructuralRank:
      return "structural_rank";
    case BenchMethod::kAveragePairwiseCosine:
      return "avg_pairwise_cosine";
    case BenchMethod::kNumericRankSmall:
      return "numeric_rank_small";
  }
  return "unknown";
}

BenchMethod ParseBenchMethod(std::string_view name) {
  for (BenchMethod m : {BenchMethod::kStructuralRank, BenchMethod::kAveragePairwiseCosine,
                        BenchMethod::kNumericRankSmall}) {
    if (BenchMethodName(m) == name) return m;
  }
  throw std::invalid_argument("unknown bench method '" + std::string(name) + "'");
}

CorpusStats ComputeCorpusStats(std::span<const AuthorPattern> patterns) {
  CorpusStats s;
  s.matrices = patterns.size();
  if (patterns.empty()) return s;
  std::size_t density_terms = 0;
  for (const AuthorPattern& p : patterns) {
    s.avg_rows += p.global_rows;
    s.avg_cols += p.n_comments();
    s.avg_nnz += static_cast<double>(p.nnz());
    s.avg_compact_rows += p.compacted() ? p.pattern.n_rows : CompactRows(p).pattern.n_rows;
    if (p.global_rows > 0 && p.n_comments() > 0) {
      s.avg_density += Density(p);
      ++density_terms;
    }
  }
  double n = static_cast<double>(patterns.size());
  s.avg_rows /= n;
  s.avg_cols /= n;
  s.avg_nnz /= n;
  s.avg_compact_rows /= n;
  if (density_terms > 0) s.avg_density /= static_cast<double>(density_terms);
  return s;
}

namespace {

std::string EnvironmentNote(const BenchOptions& options) {
  std::ostringstream note;
#if defined(__clang__)
  note << "clang " << __clang_major__ << '.' << __clang_minor__;
#elif defined(__GNUC__)
  note << "gcc " << __GNUC__ << '.' << __GNUC_MINOR__;
#else
  note << "unknown compiler";
#endif
#ifdef NDEBUG
  note << ", optimized";
#else
  note << ", debug";
#endif
  note << ", hardware threads " << std::thread::hardware_concurrency();
  note << ", " << (options.jobs > 1 ? "parallel per-author, jobs " + std::to_string(options.jobs)
                                    : std::string("single-threaded"));
  return note.str();
}

}  // namespace

BenchReport TimeMethods(std::span<const AuthorPattern> patterns,
                        std::span<const BenchMethod> methods, const BenchOptions& options) {
  if (methods.empty()) throw std::domain_error("bench needs at least one method");
  if (options.repetitions < 1) throw std::domain_error("repetitions must be positive");

  BenchReport report;
  report.repetitions = options.repetitions;
  report.jobs = std::max(options.jobs, 1);
  report.environment = EnvironmentNote(options);
  report.cosine_variant =
      "naive all-pairs, one sparse term-frequency dot product and two norms per pair; "
      "authors with N < 2 contribute no pairs";
  report.stats = ComputeCorpusStats(patterns);

  // Everything below the timed regions is materialized up front.
  std::vector<AuthorPattern> compact;
  compact.reserve(patterns.size());
  for (const AuthorPattern& p : patterns) compact.push_back(CompactRows(p));

  bool wants_numeric =
      std::find(methods.begin(), methods.end(), BenchMethod::kNumericRankSmall) != methods.end();
  std::vector<DenseSmallMatrix> dense;
  if (wants_numeric) {
    for (const AuthorPattern& p : compact) {
      if (p.pattern.n_rows > kNumericRankMaxDim || p.n_comments() > kNumericRankMaxDim) {
        throw BudgetExceeded("numeric_rank_small: author " + p.author_id + " has a " +
                             std::to_string(p.pattern.n_rows) + "x" +
                             std::to_string(p.n_comments()) + " matrix");
      }
      dense.push_back(ToDense(p));
    }
  }

  const std::size_t n = compact.size();
  const std::size_t workers = std::min<std::size_t>(report.jobs, std::max<std::size_t>(n, 1));
  std::vector<double> results(n);

  auto run_pass = [&](BenchMethod method) {
    ParallelFor(workers, static_cast<int>(workers), [&](std::size_t w) {
      MatchingWorkspace ws;
      for (std::size_t i = n * w / workers; i < n * (w + 1) / workers; ++i) {
        switch (method) {
          case BenchMethod::kStructuralRank:
            results[i] = StructuralRank(compact[i].pattern, ws);
            break;
          case BenchMethod::kAveragePairwiseCosine:
            results[i] = compact[i].n_comments() < 2 ? 0.0 : AveragePairwiseCosine(compact[i]);
            break;
          case BenchMethod::kNumericRankSmall:
            results[i] = NumericRank(dense[i]);
            break;
        }
      }
    });
  };

  for (BenchMethod method : methods) {
    run_pass(method);  // warmup
    auto start = std::chrono::steady_clock::now();
    for (int rep = 0; rep < options.repetitions; ++rep) run_pass(method);
    auto stop = std::chrono::steady_clock::now();

    MethodTiming t{method, std::chrono::duration<double>(stop - start).count() /
                               options.repetitions,
                   n, 0.0};
    for (double r : results) t.checksum += r;
    report.timings.push_back(t);
    if (method == BenchMethod::kStructuralRank) {
      report.structural_ranks.assign(results.begin(), results.end());
    }
  }
  return report;
}

namespace {

const MethodTiming* FindTiming(const BenchReport& report, BenchMethod m) {
  for (const MethodTiming& t : report.timings) {
    if (t.method == m) return &t;
  }
  return nullptr;
}

}  // namespace

void RenderBenchText(const BenchReport& report, std::ostream& out) {
  const MethodTiming* base = FindTiming(report, BenchMethod::kStructuralRank);
  const CorpusStats& s = report.stats;
  out << "matrices: " << s.matrices << '\n'
      << std::fixed << std::setprecision(2) << "average size: " << s.avg_rows << " x "
      << s.avg_cols << " (compacted rows " << s.avg_compact_rows << ", nnz " << s.avg_nnz
      << ")\n"
      << std::setprecision(6) << "average density: " << s.avg_density << '\n'
      << "environment: " << report.environment << '\n'
      << "repetitions: " << report.repetitions << '\n'
      << "cosine variant: " << report.cosine_variant << "\n\n";

  out << std::left << std::setw(22) << "method" << std::right << std::setw(14) << "time (sec)"
      << std::setw(10) << "matrices" << std::setw(14) << "x sprank" << '\n';
  for (const MethodTiming& t : report.timings) {
    out << std::left << std::setw(22) << BenchMethodName(t.method) << std::right << std::fixed
        << std::setprecision(6) << std::setw(14) << t.seconds << std::setw(10) << t.matrices;
    if (base != nullptr && base->seconds > 0.0) {
      out << std::setprecision(2) << std::setw(14) << t.seconds / base->seconds;
    } else {
      out << std::setw(14) << "-";
    }
    out << '\n';
  }
}

void RenderBenchJsonl(const BenchReport& report, std::ostream& out) {
  const MethodTiming* base = FindTiming(report, BenchMethod::kStructuralRank);
  const CorpusStats& s = report.stats;
  for (const MethodTiming& t : report.timings) {
    nlohmann::ordered_json row;
    row["method"] = BenchMethodName(t.method);
    row["seconds"] = t.seconds;
    row["matrices"] = t.matrices;
    row["checksum"] = t.checksum;
    if (base != nullptr && base->seconds > 0.0) {
      row["ratio_to_structural_rank"] = t.seconds / base->seconds;
    }
    row["repetitions"] = report.repetitions;
    row["mode"] = report.jobs > 1 ? "parallel" : "single-threaded";
    row["jobs"] = report.jobs;
    row["avg_rows"] = s.avg_rows;
    row["avg_cols"] = s.avg_cols;
    row["avg_compact_rows"] = s.avg_compact_rows;
    row["avg_nnz"] = s.avg_nnz;
    row["avg_density"] = s.avg_density;
    row["environment"] = report.environment;
    if (t.method == BenchMethod::kAveragePairwiseCosine) row["variant"] = report.cosine_variant;
    out << row.dump() << '\n';
  }
}

}  // namespace spamrank
