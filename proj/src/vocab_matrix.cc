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

#include "spamrank/vocab_matrix.h"

#include <algorithm>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "spamrank/parallel.h"

namespace spamrank {

Index Vocabulary::Add(std::string_view term) {
  auto [it, inserted] = term_to_row_.try_emplace(std::string(term), size());
  if (inserted) terms_.emplace_back(term);
  return it->second;
}

std::optional<Index> Vocabulary::Find(std::string_view term) const {
  auto it = term_to_row_.find(std::string(term));
  if (it == term_to_row_.end()) return std::nullopt;
  return it->second;
}

Vocabulary BuildVocabulary(std::span<const ProcessedComment> comments) {
  Vocabulary vocab;
  for (const ProcessedComment& c : comments) {
    for (const std::string& t : c.terms) vocab.Add(t);
  }
  return vocab;
}

AuthorPattern BuildAuthorMatrix(std::string author_id,
                                std::span<const ProcessedComment* const> comments,
                                const Vocabulary& vocab) {
  AuthorPattern out;
  out.author_id = std::move(author_id);
  out.global_rows = vocab.size();
  out.pattern.n_rows = vocab.size();
  out.pattern.col_ptr.reserve(comments.size() + 1);

  std::vector<Index> rows;
  for (const ProcessedComment* comment : comments) {
    rows.clear();
    for (const std::string& t : comment->terms) {
      auto row = vocab.Find(t);
      if (!row) {
        throw UnknownTermError("author " + out.author_id + ": term '" + t +
                               "' is not in the vocabulary");
      }
      rows.push_back(*row);
    }
    std::sort(rows.begin(), rows.end());
    for (std::size_t i = 0; i < rows.size();) {
      std::size_t j = i;
      while (j < rows.size() && rows[j] == rows[i]) ++j;
      out.pattern.row_idx.push_back(rows[i]);
      out.counts.push_back(static_cast<Index>(j - i));
      i = j;
    }
    out.pattern.col_ptr.push_back(static_cast<Index>(out.pattern.row_idx.size()));
  }
  return out;
}

AuthorPattern BuildAuthorMatrix(std::string author_id,
                                std::span<const ProcessedComment> comments,
                                const Vocabulary& vocab) {
  std::vector<const ProcessedComment*> ptrs;
  ptrs.reserve(comments.size());
  for (const ProcessedComment& c : comments) ptrs.push_back(&c);
  return BuildAuthorMatrix(std::move(author_id), ptrs, vocab);
}

std::vector<AuthorPattern> BuildAuthorMatrices(std::span<const ProcessedComment> comments,
                                               const Vocabulary& vocab, int jobs) {
  std::map<std::string, std::vector<const ProcessedComment*>> by_author;
  for (const ProcessedComment& c : comments) by_author[c.author_id].push_back(&c);

  std::vector<const std::pair<const std::string, std::vector<const ProcessedComment*>>*> groups;
  groups.reserve(by_author.size());
  for (const auto& entry : by_author) groups.push_back(&entry);

  std::vector<AuthorPattern> out(groups.size());
  ParallelFor(groups.size(), jobs, [&](std::size_t i) {
    out[i] = BuildAuthorMatrix(groups[i]->first, groups[i]->second, vocab);
  });
  return out;
}

AuthorPattern CompactRows(const AuthorPattern& in) {
  AuthorPattern out;
  out.author_id = in.author_id;
  out.counts = in.counts;
  out.global_rows = in.global_rows;

  std::vector<Index> used(in.pattern.row_idx);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());

  out.pattern.n_rows = static_cast<Index>(used.size());
  out.pattern.col_ptr = in.pattern.col_ptr;
  out.pattern.row_idx.reserve(in.pattern.row_idx.size());
  for (Index r : in.pattern.row_idx) {
    out.pattern.row_idx.push_back(
        static_cast<Index>(std::lower_bound(used.begin(), used.end(), r) - used.begin()));
  }
  // Compose with an existing map so local rows always point at global rows.
  if (in.row_map.empty()) {
    out.row_map = std::move(used);
  } else {
    out.row_map.reserve(used.size());
    for (Index r : used) out.row_map.push_back(in.row_map[r]);
  }
  return out;
}

double Density(const AuthorPattern& p) {
  double cells = static_cast<double>(p.global_rows) * p.n_comments();
  if (cells == 0) throw std::domain_error("density undefined for a matrix with no cells");
  return static_cast<double>(p.nnz()) / cells;
}

void WriteTriplets(const AuthorPattern& p, std::ostream& out) {
  out << p.pattern.n_rows << ' ' << p.pattern.n_cols() << ' ' << p.nnz() << '\n';
  for (Index c = 0; c < p.pattern.n_cols(); ++c) {
    for (Index k = p.pattern.col_ptr[c]; k < p.pattern.col_ptr[c + 1]; ++k) {
      out << p.pattern.row_idx[k] << ' ' << c << ' ' << (p.counts.empty() ? 1 : p.counts[k])
          << '\n';
    }
  }
}

namespace {

bool NextContentLine(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

AuthorPattern ReadTriplets(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    return TripletParseError("line " + std::to_string(line_no) + ": " + why, line_no);
  };
  if (!NextContentLine(in, line, line_no)) throw fail("missing 'M N nnz' header");

  long long m = -1, n = -1, nnz = -1;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> m >> n >> nnz) || (header >> extra) || m < 0 || n < 0 || nnz < 0) {
      throw fail("malformed header, expected 'M N nnz'");
    }
    constexpr long long kMaxDim = std::numeric_limits<Index>::max() - 1;
    if (m > kMaxDim || n > kMaxDim) throw fail("dimensions too large");
    if (nnz > m * n) throw fail("nnz exceeds M*N");
  }

  std::vector<std::tuple<Index, Index, Index>> entries;  // (col, row, count)
  entries.reserve(static_cast<std::size_t>(nnz));
  for (long long k = 0; k < nnz; ++k) {
    if (!NextContentLine(in, line, line_no)) {
      ++line_no;
      throw fail("expected " + std::to_string(nnz) + " triples, found " + std::to_string(k));
    }
    std::istringstream triple(line);
    long long r, c, count;
    std::string extra;
    if (!(triple >> r >> c >> count) || (triple >> extra)) {
      throw fail("malformed triple, expected 'row col count'");
    }
    if (r < 0 || r >= m || c < 0 || c >= n) throw fail("index out of range");
    if (count < 1 || count > std::numeric_limits<Index>::max()) {
      throw fail("count must be a positive 32-bit integer");
    }
    entries.emplace_back(static_cast<Index>(c), static_cast<Index>(r),
                         static_cast<Index>(count));
  }
  if (NextContentLine(in, line, line_no)) throw fail("unexpected trailing content");

  std::sort(entries.begin(), entries.end());
  AuthorPattern out;
  out.global_rows = static_cast<Index>(m);
  out.pattern.n_rows = static_cast<Index>(m);
  out.pattern.col_ptr.assign(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto [c, r, count] = entries[i];
    if (i > 0 && std::get<0>(entries[i - 1]) == c && std::get<1>(entries[i - 1]) == r) {
      throw TripletParseError(
          "duplicate entry (" + std::to_string(r) + ", " + std::to_string(c) + ")", 0);
    }
    out.pattern.row_idx.push_back(r);
    out.counts.push_back(count);
    ++out.pattern.col_ptr[c + 1];
  }
  for (std::size_t c = 0; c + 1 < out.pattern.col_ptr.size(); ++c) {
    out.pattern.col_ptr[c + 1] += out.pattern.col_ptr[c];
  }
  return out;
}

}  // namespace spamrank
