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

#include "spamrank/cli.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "spamrank/bench.h"
#include "spamrank/corpus.h"
#include "spamrank/reporting.h"
#include "spamrank/scoring.h"
#include "spamrank/sprank.h"
#include "spamrank/vocab_matrix.h"

namespace spamrank {
namespace {

struct RunConfig {
  std::string input;
  std::string format = "jsonl";
  std::string output;
  std::string output_format;
  std::string stopwords;
  double bin_width = 0.1;
  std::optional<double> threshold;
  int min_comments = 1;
  int jobs = 1;

  // score
  std::string summary_path;
  // fixtures
  std::string fixtures;
  // bench
  SynthSpec synth;
  std::string methods = "structural_rank,avg_pairwise_cosine";
  int repetitions = 1;
  std::string write_corpus;
  // sprank
  std::string algorithm = "hopcroft-karp";
};

// Sends data to --output when given, otherwise to the data stream.
class DataSink {
 public:
  DataSink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

StopwordSet LoadStopwords(const RunConfig& cfg) {
  return cfg.stopwords.empty() ? StopwordSet::LoadDefault() : StopwordSet::Load(cfg.stopwords);
}

std::vector<AuthorPattern> PatternsFromCorpus(const std::vector<RawComment>& raw,
                                              const RunConfig& cfg) {
  StopwordSet stopwords = LoadStopwords(cfg);
  std::vector<ProcessedComment> processed = PreprocessAll(raw, stopwords, cfg.jobs);
  Vocabulary vocab = BuildVocabulary(processed);
  return BuildAuthorMatrices(processed, vocab, cfg.jobs);
}

int CmdScore(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.input.empty()) throw std::invalid_argument("score requires --input");
  OutputFormat format = ParseOutputFormat(cfg.output_format.empty() ? "csv" : cfg.output_format);
  std::vector<RawComment> raw = LoadCorpus(cfg.input, ParseCorpusFormat(cfg.format));
  std::vector<ScoreRecord> records = ScoreCorpus(PatternsFromCorpus(raw, cfg), cfg.jobs);

  ScoreReport full = Histogram(records, cfg.bin_width, cfg.min_comments);
  ScoreReport shown = cfg.threshold
                          ? Histogram(Flag(full.records, *cfg.threshold), cfg.bin_width, 1)
                          : full;

  DataSink sink(cfg.output, out);
  RenderReport(shown, format, sink.stream());
  if (format != OutputFormat::kText) {
    if (cfg.summary_path.empty()) {
      RenderSummaryText(full, err);
    } else {
      DataSink summary(cfg.summary_path, err);
      RenderSummaryText(full, summary.stream());
    }
  }
  return kExitOk;
}

int CmdFixtures(const RunConfig& cfg, std::ostream& out) {
  std::filesystem::path path = !cfg.fixtures.empty() ? std::filesystem::path(cfg.fixtures)
                               : !cfg.input.empty()  ? std::filesystem::path(cfg.input)
                                                     : DefaultFixturePath();
  std::vector<FixtureResult> results = CheckFixtures(LoadFixtures(path));
  DataSink sink(cfg.output, out);
  RenderFixtureTable(results, sink.stream());
  return AllRequiredPass(results) ? kExitOk : kExitFixtureFailure;
}

std::vector<BenchMethod> ParseMethods(const std::string& list) {
  std::vector<BenchMethod> methods;
  std::stringstream in(list);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (!name.empty()) methods.push_back(ParseBenchMethod(name));
  }
  return methods;
}

int CmdBench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<BenchMethod> methods = ParseMethods(cfg.methods);
  if (methods.empty()) throw std::invalid_argument("bench requires at least one method");
  std::string format = cfg.output_format.empty() ? "text" : cfg.output_format;
  if (format != "text" && format != "jsonl") {
    throw std::invalid_argument("bench output format must be text or jsonl");
  }

  std::vector<RawComment> raw;
  if (!cfg.input.empty()) {
    raw = LoadCorpus(cfg.input, ParseCorpusFormat(cfg.format));
  } else {
    raw = GenerateSyntheticCorpus(cfg.synth);
  }
  if (!cfg.write_corpus.empty()) {
    std::ofstream corpus(cfg.write_corpus, std::ios::binary);
    if (!corpus) throw std::runtime_error("cannot open " + cfg.write_corpus);
    WriteCorpusJsonl(raw, corpus);
  }

  std::vector<AuthorPattern> patterns = PatternsFromCorpus(raw, cfg);
  BenchReport report = TimeMethods(patterns, methods, {cfg.repetitions, cfg.jobs});

  DataSink sink(cfg.output, out);
  if (format == "text") {
    RenderBenchText(report, sink.stream());
  } else {
    RenderBenchJsonl(report, sink.stream());
  }
  if (cfg.jobs > 1) err << "note: parallel timings; do not compare with single-threaded runs\n";
  return kExitOk;
}

int CmdSprank(const RunConfig& cfg, std::ostream& out) {
  if (cfg.input.empty()) throw std::invalid_argument("sprank requires a triplet file");
  std::ifstream in(cfg.input);
  if (!in) throw std::runtime_error("cannot open triplet file " + cfg.input);
  AuthorPattern p = ReadTriplets(in);
  MatchingAlgorithm algorithm = cfg.algorithm == "augmenting-path"
                                    ? MatchingAlgorithm::kAugmentingPath
                                    : MatchingAlgorithm::kHopcroftKarp;
  DataSink sink(cfg.output, out);
  sink.stream() << StructuralRank(CompactRows(p).pattern, algorithm) << '\n';
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Spammer detection by structural rank of per-author term-document matrices",
               "spamrank"};
  app.set_config("--config", "", "Defaults file of key=value lines, merged beneath flags")
      ->envname("SPAMRANK_DEFAULTS");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--input", cfg.input, "Input corpus, fixture file or triplet file");
  app.add_option("--format", cfg.format, "Input corpus format")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  app.add_option("--output", cfg.output, "Write data here instead of standard output");
  app.add_option("--output-format", cfg.output_format, "text, csv or jsonl")
      ->check(CLI::IsMember({"text", "csv", "jsonl"}));
  app.add_option("--stopwords", cfg.stopwords, "Stopword list, one word per line");
  app.add_option("--bin-width", cfg.bin_width, "Histogram bin width")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--threshold", cfg.threshold, "Only output authors with score >= threshold")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--min-comments", cfg.min_comments, "Drop authors with fewer comments")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.synth.rng_seed, "Random seed");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);

  CLI::App* score = app.add_subcommand("score", "Score every author of a comment corpus");
  score->add_option("--summary", cfg.summary_path, "Write the text summary to this file");

  CLI::App* fixtures = app.add_subcommand("fixtures", "Check the listed example authors");
  fixtures->add_option("--fixtures", cfg.fixtures, "Fixture file (default: shipped listing)");

  CLI::App* bench = app.add_subcommand("bench", "Time similarity methods on a corpus");
  bench->add_option("--authors", cfg.synth.n_authors, "Synthetic authors");
  bench->add_option("--comments-mean", cfg.synth.comments_mean, "Mean comments per author");
  bench->add_option("--comments-dispersion", cfg.synth.comments_dispersion,
                    "Negative-binomial shape of comments per author (0 = Poisson)");
  bench->add_option("--vocab", cfg.synth.vocab_size, "Synthetic vocabulary size");
  bench->add_option("--terms-per-comment", cfg.synth.terms_per_comment, "Mean terms per comment");
  bench->add_option("--spammer-fraction", cfg.synth.spammer_fraction, "Fraction of spammers");
  bench->add_option("--repeat-intensity", cfg.synth.repeat_intensity,
                    "Probability a spammer comment repeats a template");
  bench->add_option("--templates", cfg.synth.templates_per_spammer, "Templates per spammer");
  bench->add_option("--template-terms", cfg.synth.template_terms, "Mean terms per template");
  bench->add_option("--spammer-activity", cfg.synth.spammer_activity,
                    "Spammer to legitimate comment-rate ratio");
  bench->add_option("--methods", cfg.methods,
                    "Comma list of structural_rank, avg_pairwise_cosine, numeric_rank_small");
  bench->add_option("--repetitions", cfg.repetitions, "Timed passes per method")
      ->check(CLI::PositiveNumber);
  bench->add_option("--write-corpus", cfg.write_corpus, "Also write the corpus as jsonl");

  CLI::App* sprank = app.add_subcommand("sprank", "Structural rank of a triplet-format matrix");
  sprank->add_option("file", cfg.input, "Triplet file");
  sprank->add_option("--algorithm", cfg.algorithm, "hopcroft-karp or augmenting-path")
      ->check(CLI::IsMember({"hopcroft-karp", "augmenting-path"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "spamrank: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (score->parsed()) return CmdScore(cfg, out, err);
    if (fixtures->parsed()) return CmdFixtures(cfg, out);
    if (bench->parsed()) return CmdBench(cfg, out, err);
    if (sprank->parsed()) return CmdSprank(cfg, out);
  } catch (const std::exception& e) {
    err << "spamrank: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace spamrank
