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

#ifndef SPAMRANK_CORPUS_H_
#define SPAMRANK_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace spamrank {

struct RawComment {
  std::string author_id;
  std::string text;
  std::optional<std::string> source;
  std::optional<std::int64_t> timestamp;

  bool operator==(const RawComment&) const = default;
};

// One comment reduced to its stemmed terms, in token order (a multiset).
struct ProcessedComment {
  std::string author_id;
  std::vector<std::string> terms;

  bool operator==(const ProcessedComment&) const = default;
};

// Immutable after construction; safe to share across threads.
class StopwordSet {
 public:
  StopwordSet() = default;
  explicit StopwordSet(std::vector<std::string> words);

  // One word per line; blank lines and lines starting with '#' are ignored.
  static StopwordSet Load(const std::filesystem::path& path);
  // The English list shipped in data/stopwords_en.txt.
  static StopwordSet LoadDefault();

  bool Contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// Path of the shipped data directory: $SPAMRANK_DATA_DIR if set, otherwise
// the directory baked in at build time.
std::filesystem::path DataDirectory();

// strip_html -> tokenize -> stem -> stopword removal. A token is dropped when
// either its surface form or its stem is a stopword.
ProcessedComment Preprocess(const RawComment& comment, const StopwordSet& stopwords);

// Preprocesses every comment with up to `jobs` worker threads. Output order
// always matches input order.
std::vector<ProcessedComment> PreprocessAll(std::span<const RawComment> comments,
                                            const StopwordSet& stopwords, int jobs = 1);

enum class CorpusFormat { kJsonl, kCsv };

CorpusFormat ParseCorpusFormat(std::string_view name);

class CorpusError : public std::runtime_error {
 public:
  CorpusError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  // 1-based input line of the offending record, 0 for IO failures.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Reads every record in file order. Any malformed record aborts with a
// CorpusError naming its line.
std::vector<RawComment> LoadCorpus(const std::filesystem::path& path, CorpusFormat format);
std::vector<RawComment> ReadCorpus(std::istream& in, CorpusFormat format);

void WriteCorpusJsonl(std::span<const RawComment> comments, std::ostream& out);

}  // namespace spamrank

#endif  // SPAMRANK_CORPUS_H_
