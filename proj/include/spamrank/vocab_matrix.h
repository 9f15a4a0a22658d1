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

#ifndef SPAMRANK_VOCAB_MATRIX_H_
#define SPAMRANK_VOCAB_MATRIX_H_

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "spamrank/corpus.h"
#include "spamrank/sprank.h"

namespace spamrank {

// Dense term -> row map; rows are assigned in first-appearance order.
class Vocabulary {
 public:
  // Returns the row of `term`, inserting it if new.
  Index Add(std::string_view term);
  std::optional<Index> Find(std::string_view term) const;

  Index size() const { return static_cast<Index>(terms_.size()); }
  const std::string& term(Index row) const { return terms_[row]; }

 private:
  std::unordered_map<std::string, Index> term_to_row_;
  std::vector<std::string> terms_;
};

Vocabulary BuildVocabulary(std::span<const ProcessedComment> comments);

// Per-author term-document nonzero pattern: rows are terms, columns are the
// author's comments in input order. Comments with no terms stay as empty
// columns so that n_cols() is the author's comment count.
struct AuthorPattern {
  std::string author_id;
  SparsePattern pattern;
  // Term frequency per nonzero, parallel to pattern.row_idx; empty if absent.
  std::vector<Index> counts;
  // Filled by CompactRows: local row -> global vocabulary row.
  std::vector<Index> row_map;
  // Row count of the uncompacted (global) matrix.
  Index global_rows = 0;

  Index n_comments() const { return pattern.n_cols(); }
  std::size_t nnz() const { return pattern.nnz(); }
  bool compacted() const { return !row_map.empty() || pattern.n_rows != global_rows; }
};

class UnknownTermError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Column k holds the distinct rows of comment k with their term counts.
// Throws UnknownTermError if a term is missing from `vocab`.
AuthorPattern BuildAuthorMatrix(std::string author_id,
                                std::span<const ProcessedComment* const> comments,
                                const Vocabulary& vocab);
AuthorPattern BuildAuthorMatrix(std::string author_id,
                                std::span<const ProcessedComment> comments,
                                const Vocabulary& vocab);

// Groups comments by author (ascending author_id, per-author input order
// preserved) and builds one pattern per author against a shared vocabulary.
// Authors are built with up to `jobs` threads; the result does not depend on
// `jobs`.
std::vector<AuthorPattern> BuildAuthorMatrices(std::span<const ProcessedComment> comments,
                                               const Vocabulary& vocab, int jobs = 1);

// Drops rows no column references and renumbers the rest densely, keeping
// ascending global order so columns stay sorted. Structural rank and column
// count are unchanged.
AuthorPattern CompactRows(const AuthorPattern& pattern);

// nnz / (rows * N) over the uncompacted dimensions. Throws std::domain_error
// when rows * N == 0.
double Density(const AuthorPattern& pattern);

// Sparse triplet dump: "M N nnz" header, then "row col count" per nonzero,
// 0-based, sorted by (col, row). Counts default to 1 when absent.
void WriteTriplets(const AuthorPattern& pattern, std::ostream& out);

class TripletParseError : public std::runtime_error {
 public:
  TripletParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Parses the triplet format back into a pattern (counts included). Entries
// may appear in any order but duplicates are rejected.
AuthorPattern ReadTriplets(std::istream& in);

}  // namespace spamrank

#endif  // SPAMRANK_VOCAB_MATRIX_H_
