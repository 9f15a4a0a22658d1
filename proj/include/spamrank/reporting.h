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

#ifndef SPAMRANK_REPORTING_H_
#define SPAMRANK_REPORTING_H_

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spamrank/scoring.h"
#include "spamrank/sprank.h"
#include "spamrank/vocab_matrix.h"

namespace spamrank {

// One listed author with comments as already-preprocessed token lists.
struct FixtureAuthor {
  std::string label;
  // Fixtures whose printed rank could not be confirmed are reported but
  // never fail a run.
  bool advisory = false;
  std::vector<std::vector<std::string>> comments;
  Index expected_n = 0;
  Index expected_srank = 0;
  double expected_score = 0.0;
};

class FixtureParseError : public std::runtime_error {
 public:
  FixtureParseError(const std::string& label, const std::string& what)
      : std::runtime_error(label.empty() ? what : label + ": " + what), label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

inline constexpr std::size_t kListedFixtureCount = 9;

// Fixture file format, UTF-8, records separated by blank lines; lines
// starting with '#' between records are comments:
//
//   author#74 [advisory]
//   13 11 0.1538
//   man bum hole ?
//   ...                 <- exactly N comment lines; a comment line may be
//                          empty, which is why N is read first
//
// Throws FixtureParseError when a record is malformed or the file does not
// hold exactly `expected_count` records.
std::vector<FixtureAuthor> ParseFixtures(std::istream& in,
                                         std::size_t expected_count = kListedFixtureCount);
std::vector<FixtureAuthor> LoadFixtures(const std::filesystem::path& path,
                                        std::size_t expected_count = kListedFixtureCount);
std::filesystem::path DefaultFixturePath();

// Builds the pattern of a fixture directly from its tokens, with a private
// vocabulary in first-appearance order.
AuthorPattern FixturePattern(const FixtureAuthor& fixture);

enum class FixtureStatus { kPass, kFail, kAdvisory };

struct FixtureResult {
  std::string label;
  FixtureStatus status = FixtureStatus::kFail;
  Index n = 0;
  Index srank = 0;
  double score = 0.0;
  // Independent rank check: brute force when within budget, otherwise the
  // augmenting-path matcher.
  Index oracle_srank = 0;
  std::string oracle;
  // False when 1 - srank/N does not round to the listed score.
  bool transcription_consistent = true;
  std::string detail;
};

// Never stops early; every fixture gets a row.
std::vector<FixtureResult> CheckFixtures(const std::vector<FixtureAuthor>& fixtures);
bool AllRequiredPass(const std::vector<FixtureResult>& results);
void RenderFixtureTable(const std::vector<FixtureResult>& results, std::ostream& out);

// Rounds to four decimals the way listed scores were printed.
double RoundTo4(double x);

enum class OutputFormat { kText, kCsv, kJsonl };
OutputFormat ParseOutputFormat(std::string_view name);

// text: 4-decimal score table, histogram with every bin, and summary.
// csv: header `author_id,n_comments,structural_rank,score,degenerate` and one
//      row per record with full-precision scores.
// jsonl: one {"type":"record"} object per record, then one {"type":"bin"}
//      per bin and a final {"type":"summary"}.
void RenderReport(const ScoreReport& report, OutputFormat format, std::ostream& out);
std::string RenderReport(const ScoreReport& report, OutputFormat format);

// Histogram and corpus summary block used by text output.
void RenderSummaryText(const ScoreReport& report, std::ostream& out);

// Shortest decimal text that parses back to exactly `x`.
std::string FormatExact(double x);

}  // namespace spamrank

#endif  // SPAMRANK_REPORTING_H_
