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

#include "spamrank/reporting.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "spamrank/corpus.h"

namespace spamrank {

double RoundTo4(double x) { return std::round(x * 1e4) / 1e4; }

std::string FormatExact(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

namespace {

std::vector<std::string> SplitTokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

bool IsBlank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::string StripCr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

std::vector<FixtureAuthor> ParseFixtures(std::istream& in, std::size_t expected_count) {
  std::vector<FixtureAuthor> out;
  std::string line;
  while (true) {
    bool have_label = false;
    while (std::getline(in, line)) {
      line = StripCr(line);
      if (!IsBlank(line) && line[line.find_first_not_of(" \t")] != '#') {
        have_label = true;
        break;
      }
    }
    if (!have_label) break;

    FixtureAuthor f;
    std::vector<std::string> head = SplitTokens(line);
    f.label = head[0];
    if (head.size() == 2 && head[1] == "advisory") {
      f.advisory = true;
    } else if (head.size() != 1) {
      throw FixtureParseError(f.label, "label line must be '<label> [advisory]'");
    }

    if (!std::getline(in, line)) throw FixtureParseError(f.label, "missing 'N srank score' line");
    {
      std::istringstream triple(StripCr(line));
      long long n = 0, srank = 0;
      double score = 0.0;
      std::string extra;
      if (!(triple >> n >> srank >> score) || (triple >> extra)) {
        throw FixtureParseError(f.label, "expected 'N srank score', got '" + line + "'");
      }
      if (n < 1 || srank < 0 || srank > n || score < 0.0 || score > 1.0) {
        throw FixtureParseError(f.label, "expectation out of range");
      }
      f.expected_n = static_cast<Index>(n);
      f.expected_srank = static_cast<Index>(srank);
      f.expected_score = score;
    }

    for (Index k = 0; k < f.expected_n; ++k) {
      if (!std::getline(in, line)) {
        throw FixtureParseError(f.label, "expected " + std::to_string(f.expected_n) +
                                             " comment lines, found " + std::to_string(k));
      }
      f.comments.push_back(SplitTokens(StripCr(line)));
    }
    if (std::getline(in, line) && !IsBlank(StripCr(line))) {
      throw FixtureParseError(f.label, "more comment lines than N = " +
                                           std::to_string(f.expected_n));
    }
    out.push_back(std::move(f));
  }
  if (out.size() != expected_count) {
    throw FixtureParseError("", "expected " + std::to_string(expected_count) +
                                    " fixtures, found " + std::to_string(out.size()));
  }
  return out;
}

std::vector<FixtureAuthor> LoadFixtures(const std::filesystem::path& path,
                                        std::size_t expected_count) {
  std::ifstream in(path);
  if (!in) throw FixtureParseError("", "cannot open fixture file " + path.string());
  return ParseFixtures(in, expected_count);
}

std::filesystem::path DefaultFixturePath() { return DataDirectory() / "listed_authors.txt"; }

AuthorPattern FixturePattern(const FixtureAuthor& fixture) {
  std::vector<ProcessedComment> comments;
  comments.reserve(fixture.comments.size());
  for (const auto& tokens : fixture.comments) comments.push_back({fixture.label, tokens});
  Vocabulary vocab = BuildVocabulary(comments);
  return BuildAuthorMatrix(fixture.label, std::span<const ProcessedComment>(comments), vocab);
}

std::vector<FixtureResult> CheckFixtures(const std::vector<FixtureAuthor>& fixtures) {
  std::vector<FixtureResult> results;
  results.reserve(fixtures.size());
  for (const FixtureAuthor& f : fixtures) {
    FixtureResult r;
    r.label = f.label;
    AuthorPattern p = CompactRows(FixturePattern(f));
    r.n = p.n_comments();

    Matching m = MaximumMatching(p.pattern);
    r.srank = m.size;
    bool certified = IsMaximumMatching(p.pattern, m);
    if (p.pattern.n_cols() <= kBruteForceMaxCols && p.pattern.n_rows <= kBruteForceMaxRows) {
      r.oracle = "brute-force";
      r.oracle_srank = BruteForceStructuralRank(p.pattern);
    } else {
      r.oracle = "augmenting-path";
      r.oracle_srank = StructuralRank(p.pattern, MatchingAlgorithm::kAugmentingPath);
    }
    r.score = r.n > 0 ? SpammerScore(r.srank, r.n) : 0.0;
    r.transcription_consistent =
        std::abs(RoundTo4(SpammerScore(f.expected_srank, f.expected_n)) - f.expected_score) < 5e-9;

    std::vector<std::string> problems;
    if (r.n != f.expected_n) problems.push_back("N " + std::to_string(r.n));
    if (r.srank != f.expected_srank) problems.push_back("srank " + std::to_string(r.srank));
    if (r.oracle_srank != r.srank) problems.push_back(r.oracle + " disagrees");
    if (!certified) problems.push_back("matching not certified maximum");
    if (r.n > 0 && std::abs(RoundTo4(r.score) - f.expected_score) >= 5e-9) {
      problems.push_back("score");
    }
    if (!r.transcription_consistent) problems.push_back("listed triple inconsistent");

    if (problems.empty()) {
      r.status = FixtureStatus::kPass;
    } else {
      r.status = f.advisory ? FixtureStatus::kAdvisory : FixtureStatus::kFail;
      for (std::size_t i = 0; i < problems.size(); ++i) {
        r.detail += (i ? "; " : "") + problems[i];
      }
    }
    results.push_back(std::move(r));
  }
  return results;
}

bool AllRequiredPass(const std::vector<FixtureResult>& results) {
  for (const FixtureResult& r : results) {
    if (r.status == FixtureStatus::kFail) return false;
  }
  return true;
}

void RenderFixtureTable(const std::vector<FixtureResult>& results, std::ostream& out) {
  out << std::left << std::setw(14) << "fixture" << std::right << std::setw(5) << "N"
      << std::setw(7) << "srank" << std::setw(9) << "score" << std::setw(8) << "oracle"
      << "  " << std::left << std::setw(16) << "oracle kind" << "status\n";
  for (const FixtureResult& r : results) {
    const char* status = r.status == FixtureStatus::kPass   ? "PASS"
                         : r.status == FixtureStatus::kFail ? "FAIL"
                                                            : "ADVISORY";
    out << std::left << std::setw(14) << r.label << std::right << std::setw(5) << r.n
        << std::setw(7) << r.srank << std::setw(9) << std::fixed << std::setprecision(4)
        << r.score << std::setw(8) << r.oracle_srank << "  " << std::left << std::setw(16)
        << r.oracle << status;
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << '\n';
  }
}

OutputFormat ParseOutputFormat(std::string_view name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "jsonl") return OutputFormat::kJsonl;
  throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

namespace {

// RFC 4180 quoting, only when needed.
std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q.push_back('"');
    q.push_back(c);
  }
  q.push_back('"');
  return q;
}

void RenderText(const ScoreReport& report, std::ostream& out) {
  out << std::left << std::setw(24) << "author_id" << std::right << std::setw(8) << "N"
      << std::setw(8) << "srank" << std::setw(9) << "score" << '\n';
  for (const ScoreRecord& r : report.records) {
    out << std::left << std::setw(24) << r.author_id << std::right << std::setw(8)
        << r.n_comments << std::setw(8) << r.srank << std::setw(9) << std::fixed
        << std::setprecision(4) << r.score;
    if (r.degenerate) out << "  degenerate";
    out << '\n';
  }
  out << '\n';
  RenderSummaryText(report, out);
}

void RenderCsv(const ScoreReport& report, std::ostream& out) {
  out << "author_id,n_comments,structural_rank,score,degenerate\n";
  for (const ScoreRecord& r : report.records) {
    out << CsvField(r.author_id) << ',' << r.n_comments << ',' << r.srank << ','
        << FormatExact(r.score) << ',' << (r.degenerate ? "true" : "false") << '\n';
  }
}

void RenderJsonl(const ScoreReport& report, std::ostream& out) {
  using ordered_json = nlohmann::ordered_json;
  for (const ScoreRecord& r : report.records) {
    ordered_json j;
    j["type"] = "record";
    j["author_id"] = r.author_id;
    j["n_comments"] = r.n_comments;
    j["structural_rank"] = r.srank;
    j["score"] = r.score;
    j["degenerate"] = r.degenerate;
    out << j.dump() << '\n';
  }
  for (const HistogramBin& b : report.bins) {
    ordered_json j;
    j["type"] = "bin";
    j["lo"] = b.lo;
    j["hi"] = b.hi;
    j["count"] = b.count;
    out << j.dump() << '\n';
  }
  const ScoreSummary& s = report.summary;
  ordered_json j;
  j["type"] = "summary";
  j["authors"] = s.authors;
  j["total_comments"] = s.total_comments;
  j["nonzero_authors"] = s.nonzero_authors;
  j["nonzero_comments"] = s.nonzero_comments;
  j["degenerate_authors"] = s.degenerate_authors;
  j["nonzero_comment_share"] = s.nonzero_comment_share;
  j["mean_comments_nonzero"] = s.mean_comments_nonzero;
  j["mean_comments_zero"] = s.mean_comments_zero;
  out << j.dump() << '\n';
}

}  // namespace

void RenderSummaryText(const ScoreReport& report, std::ostream& out) {
  out << "histogram (bin width " << FormatExact(report.bin_width) << ")\n";
  for (std::size_t k = 0; k < report.bins.size(); ++k) {
    const HistogramBin& b = report.bins[k];
    bool last = k + 1 == report.bins.size();
    out << '[' << std::fixed << std::setprecision(4) << b.lo << ", " << b.hi << (last ? ']' : ')')
        << std::right << std::setw(10) << b.count << '\n';
  }
  const ScoreSummary& s = report.summary;
  out << "\nauthors: " << s.authors << '\n'
      << "comments: " << s.total_comments << '\n'
      << "authors with score > 0: " << s.nonzero_authors << '\n'
      << "degenerate authors (rank 0): " << s.degenerate_authors << '\n'
      << std::setprecision(2) << "comment share of score > 0 authors: "
      << 100.0 * s.nonzero_comment_share << "%\n"
      << "mean comments per author, score > 0: " << s.mean_comments_nonzero << '\n'
      << "mean comments per author, score = 0: " << s.mean_comments_zero << '\n';
}

void RenderReport(const ScoreReport& report, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::kText:
      RenderText(report, out);
      break;
    case OutputFormat::kCsv:
      RenderCsv(report, out);
      break;
    case OutputFormat::kJsonl:
      RenderJsonl(report, out);
      break;
  }
}

std::string RenderReport(const ScoreReport& report, OutputFormat format) {
  std::ostringstream out;
  RenderReport(report, format, out);
  return out.str();
}

}  // namespace spamrank
