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

#include "spamrank/corpus.h"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "spamrank/parallel.h"
#include "spamrank/porter_stemmer.h"
#include "spamrank/text.h"

namespace spamrank {

using json = nlohmann::json;

StopwordSet::StopwordSet(std::vector<std::string> words)
    : words_(std::make_move_iterator(words.begin()), std::make_move_iterator(words.end())) {}

StopwordSet StopwordSet::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open stopword file " + path.string(), 0);
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    words.push_back(line.substr(first, last - first + 1));
  }
  return StopwordSet(std::move(words));
}

StopwordSet StopwordSet::LoadDefault() { return Load(DataDirectory() / "stopwords_en.txt"); }

bool StopwordSet::Contains(std::string_view word) const {
  return words_.find(std::string(word)) != words_.end();
}

std::filesystem::path DataDirectory() {
  if (const char* env = std::getenv("SPAMRANK_DATA_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return SPAMRANK_DATA_DIR;
}

ProcessedComment Preprocess(const RawComment& comment, const StopwordSet& stopwords) {
  ProcessedComment out{comment.author_id, {}};
  for (std::string& token : Tokenize(StripHtml(comment.text))) {
    if (stopwords.Contains(token)) continue;
    std::string term = PorterStem(token);
    if (stopwords.Contains(term)) continue;
    out.terms.push_back(std::move(term));
  }
  return out;
}

std::vector<ProcessedComment> PreprocessAll(std::span<const RawComment> comments,
                                            const StopwordSet& stopwords, int jobs) {
  std::vector<ProcessedComment> out(comments.size());
  ParallelFor(comments.size(), jobs,
              [&](std::size_t i) { out[i] = Preprocess(comments[i], stopwords); });
  return out;
}

CorpusFormat ParseCorpusFormat(std::string_view name) {
  if (name == "jsonl") return CorpusFormat::kJsonl;
  if (name == "csv") return CorpusFormat::kCsv;
  throw CorpusError("unknown corpus format '" + std::string(name) + "'", 0);
}

namespace {

std::vector<RawComment> ReadJsonl(std::istream& in) {
  std::vector<RawComment> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fail = [&](const std::string& why) -> CorpusError {
      return CorpusError("line " + std::to_string(line_no) + ": " + why, line_no);
    };
    json record = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (record.is_discarded()) throw fail("invalid JSON");
    if (!record.is_object()) throw fail("record is not a JSON object");

    RawComment c;
    auto author = record.find("author_id");
    if (author == record.end() || !author->is_string()) {
      throw fail("missing or non-string 'author_id'");
    }
    c.author_id = author->get<std::string>();
    if (c.author_id.empty()) throw fail("empty 'author_id'");
    auto text = record.find("text");
    if (text == record.end() || !text->is_string()) throw fail("missing or non-string 'text'");
    c.text = text->get<std::string>();
    if (auto src = record.find("source"); src != record.end() && !src->is_null()) {
      if (!src->is_string()) throw fail("non-string 'source'");
      c.source = src->get<std::string>();
    }
    if (auto ts = record.find("timestamp"); ts != record.end() && !ts->is_null()) {
      if (!ts->is_number_integer()) throw fail("non-integer 'timestamp'");
      c.timestamp = ts->get<std::int64_t>();
    }
    out.push_back(std::move(c));
  }
  if (in.bad()) throw CorpusError("read failure", line_no);
  return out;
}

// RFC 4180 record reader. Quoted fields may span lines; `line_no` tracks the
// physical line count consumed so far.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  // Returns false at end of input. `start_line` receives the first line of
  // the record.
  bool Next(std::vector<std::string>& fields, std::size_t& start_line) {
    fields.clear();
    int ch = in_.peek();
    if (ch == std::char_traits<char>::eof()) return false;
    start_line = line_ + 1;
    std::string field;
    bool quoted = false;
    bool field_was_quoted = false;
    while (true) {
      ch = in_.get();
      if (ch == std::char_traits<char>::eof()) {
        if (quoted) {
          throw CorpusError("line " + std::to_string(start_line) + ": unterminated quoted field",
                            start_line);
        }
        fields.push_back(std::move(field));
        ++line_;
        return true;
      }
      char c = static_cast<char>(ch);
      if (quoted) {
        if (c == '"') {
          if (in_.peek() == '"') {
            in_.get();
            field.push_back('"');
          } else {
            quoted = false;
          }
        } else {
          if (c == '\n') ++line_;
          field.push_back(c);
        }
        continue;
      }
      if (c == '"') {
        if (!field.empty() || field_was_quoted) {
          throw CorpusError("line " + std::to_string(line_ + 1) + ": stray quote in field",
                            line_ + 1);
        }
        quoted = true;
        field_was_quoted = true;
      } else if (c == ',') {
        fields.push_back(std::move(field));
        field.clear();
        field_was_quoted = false;
      } else if (c == '\r' && in_.peek() == '\n') {
        // CRLF; the '\n' ends the record on the next iteration
      } else if (c == '\n') {
        fields.push_back(std::move(field));
        ++line_;
        return true;
      } else {
        if (field_was_quoted) {
          throw CorpusError("line " + std::to_string(line_ + 1) + ": text after closing quote",
                            line_ + 1);
        }
        field.push_back(c);
      }
    }
  }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::vector<RawComment> ReadCsv(std::istream& in) {
  CsvReader reader(in);
  std::vector<std::string> header;
  std::size_t line_no = 0;
  if (!reader.Next(header, line_no)) return {};
  if (header.size() < 2 || header.size() > 4 || header[0] != "author_id" || header[1] != "text" ||
      (header.size() > 2 && header[2] != "source") ||
      (header.size() > 3 && header[3] != "timestamp")) {
    throw CorpusError("line 1: header must be author_id,text[,source,timestamp]", 1);
  }

  std::vector<RawComment> out;
  std::vector<std::string> fields;
  while (reader.Next(fields, line_no)) {
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    auto fail = [&](const std::string& why) -> CorpusError {
      return CorpusError("line " + std::to_string(line_no) + ": " + why, line_no);
    };
    if (fields.size() != header.size()) {
      throw fail("expected " + std::to_string(header.size()) + " fields, got " +
                 std::to_string(fields.size()));
    }
    RawComment c;
    c.author_id = std::move(fields[0]);
    if (c.author_id.empty()) throw fail("empty 'author_id'");
    c.text = std::move(fields[1]);
    if (fields.size() > 2 && !fields[2].empty()) c.source = std::move(fields[2]);
    if (fields.size() > 3 && !fields[3].empty()) {
      std::istringstream ts(fields[3]);
      std::int64_t value;
      if (!(ts >> value) || !ts.eof()) throw fail("non-integer 'timestamp'");
      c.timestamp = value;
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<RawComment> ReadCorpus(std::istream& in, CorpusFormat format) {
  return format == CorpusFormat::kJsonl ? ReadJsonl(in) : ReadCsv(in);
}

std::vector<RawComment> LoadCorpus(const std::filesystem::path& path, CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot open corpus file " + path.string(), 0);
  return ReadCorpus(in, format);
}

void WriteCorpusJsonl(std::span<const RawComment> comments, std::ostream& out) {
  for (const RawComment& c : comments) {
    json record = {{"author_id", c.author_id}, {"text", c.text}};
    if (c.source) record["source"] = *c.source;
    if (c.timestamp) record["timestamp"] = *c.timestamp;
    out << record.dump() << '\n';
  }
}

}  // namespace spamrank
