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

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spamrank/bench.h"
#include "spamrank/porter_stemmer.h"
#include "spamrank/text.h"
#include "test_util.h"

namespace spamrank {
namespace {

using Terms = std::vector<std::string>;
using ::spamrank::testing::TempFile;

class PreprocessTest : public ::testing::Test {
 protected:
  StopwordSet stopwords_ = StopwordSet::LoadDefault();
};

TEST_F(PreprocessTest, ComposesThePipeline) {
  ProcessedComment p = Preprocess({"a7", "<p>Merry Christmas!</p>"}, stopwords_);
  EXPECT_EQ(p.author_id, "a7");
  EXPECT_EQ(p.terms, (Terms{"merri", "christma", "!"}));
}

TEST_F(PreprocessTest, EmptyComment) {
  EXPECT_TRUE(Preprocess({"a7", ""}, stopwords_).terms.empty());
}

TEST_F(PreprocessTest, AllStopwords) {
  EXPECT_TRUE(Preprocess({"a7", "the a of"}, stopwords_).terms.empty());
  EXPECT_TRUE(Preprocess({"a7", "<i>The</i> OF"}, stopwords_).terms.empty());
}

TEST_F(PreprocessTest, StemmedFormOfStopwordIsRemovedToo) {
  // "was" -> "wa" and "this" -> "thi" would otherwise leak through.
  EXPECT_EQ(Preprocess({"a", "this was great"}, stopwords_).terms, Terms{"great"});
}

TEST_F(PreprocessTest, OutputTermsSatisfyInvariants) {
  std::vector<std::string> texts = {
      "Thunder UP!!! Westbrook &amp; KD...", "<div>I can't BELIEVE the refs</div>",
      "okc\xC2\xA0" "babi roll", "  \t ", "http://t.co/x ? ? !!"};
  for (const std::string& text : texts) {
    for (const std::string& term : Preprocess({"x", text}, stopwords_).terms) {
      EXPECT_FALSE(term.empty());
      EXPECT_EQ(term.find_first_of(" \t\r\n"), std::string::npos) << term;
      for (char c : term) EXPECT_FALSE(c >= 'A' && c <= 'Z') << term;
      EXPECT_FALSE(stopwords_.Contains(term)) << term;
    }
  }
}

TEST_F(PreprocessTest, StopwordListIsFrozen) {
  EXPECT_EQ(stopwords_.size(), 179u);
  EXPECT_TRUE(stopwords_.Contains("the"));
  EXPECT_FALSE(stopwords_.Contains("lol"));
}

TEST_F(PreprocessTest, IdempotentOnStableVocabulary) {
  // Words whose stem is a Porter fixpoint: the synthetic lexicon plus tokens
  // from the listed authors.
  std::vector<std::string> words = SyntheticLexicon(200);
  for (const char* w : {"wizard", "thunder", "merri", "christma", "lol", "http", "!", "?", "okc",
                        "random", "nbsp", ";", "westbrook"}) {
    words.push_back(w);
  }
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    for (int k = 0; k < 6; ++k) text += words[pick(rng)] + " ";
    ProcessedComment once = Preprocess({"a", text}, stopwords_);
    std::string rejoined;
    for (const std::string& t : once.terms) rejoined += t + " ";
    EXPECT_EQ(Preprocess({"a", rejoined}, stopwords_), once) << text;
  }
}

TEST_F(PreprocessTest, PorterIsNotIdempotentInGeneral) {
  // Known limitation of the Porter rule set: a stem may stem further.
  ProcessedComment once = Preprocess({"a", "agreed"}, stopwords_);
  ASSERT_EQ(once.terms, Terms{"agre"});
  EXPECT_EQ(Preprocess({"a", "agre"}, stopwords_).terms, Terms{"agr"});
}

TEST_F(PreprocessTest, ParallelMatchesSequential) {
  SynthSpec spec;
  spec.n_authors = 200;
  std::vector<RawComment> raw = GenerateSyntheticCorpus(spec);
  raw.push_back({"zz", "<b>Merry</b> Christmas &amp; happy holidays!!!"});
  auto sequential = PreprocessAll(raw, stopwords_, 1);
  EXPECT_EQ(PreprocessAll(raw, stopwords_, 4), sequential);
  EXPECT_EQ(PreprocessAll(raw, stopwords_, 7), sequential);
  ASSERT_EQ(sequential.size(), raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) EXPECT_EQ(sequential[i].author_id, raw[i].author_id);
}

TEST(StopwordSetTest, LoadSkipsCommentsAndBlanks) {
  TempFile f("stop.txt", "# header\nfoo\n\n  bar  \n");
  StopwordSet s = StopwordSet::Load(f.path());
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.Contains("foo"));
  EXPECT_TRUE(s.Contains("bar"));
}

TEST(StopwordSetTest, MissingFileThrows) {
  EXPECT_THROW(StopwordSet::Load("/nonexistent/stop.txt"), CorpusError);
}

TEST(LoadCorpusTest, JsonlSingleRecord) {
  TempFile f("one.jsonl", "{\"author_id\":\"a1\",\"text\":\"hi\"}\n");
  auto comments = LoadCorpus(f.path(), CorpusFormat::kJsonl);
  ASSERT_EQ(comments.size(), 1u);
  EXPECT_EQ(comments[0].author_id, "a1");
  EXPECT_EQ(comments[0].text, "hi");
  EXPECT_FALSE(comments[0].source.has_value());
}

TEST(LoadCorpusTest, EmptyFile) {
  TempFile f("empty.jsonl");
  EXPECT_TRUE(LoadCorpus(f.path(), CorpusFormat::kJsonl).empty());
  TempFile g("empty.csv");
  EXPECT_TRUE(LoadCorpus(g.path(), CorpusFormat::kCsv).empty());
}

TEST(LoadCorpusTest, JsonlOptionalFields) {
  TempFile f("opt.jsonl",
             "{\"author_id\":\"a\",\"text\":\"x\",\"source\":\"espn\",\"timestamp\":1389000000}\n"
             "\n"
             "{\"author_id\":\"b\",\"text\":\"\",\"source\":null}\n");
  auto c = LoadCorpus(f.path(), CorpusFormat::kJsonl);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].source, "espn");
  EXPECT_EQ(c[0].timestamp, 1389000000);
  EXPECT_EQ(c[1].text, "");
  EXPECT_FALSE(c[1].source.has_value());
}

std::size_t ErrorLine(const std::string& contents, CorpusFormat format) {
  std::istringstream in(contents);
  try {
    ReadCorpus(in, format);
  } catch (const CorpusError& e) {
    return e.line();
  }
  return 0;
}

TEST(LoadCorpusTest, MalformedJsonlReportsLine) {
  EXPECT_EQ(ErrorLine("{\"author_id\":\"a\",\"text\":\"x\"}\n{\"text\":\"no author\"}\n",
                      CorpusFormat::kJsonl),
            2u);
  EXPECT_EQ(ErrorLine("{\"author_id\":\"\",\"text\":\"x\"}\n", CorpusFormat::kJsonl), 1u);
  EXPECT_EQ(ErrorLine("{\"author_id\":\"a\"}\n", CorpusFormat::kJsonl), 1u);
  EXPECT_EQ(ErrorLine("\n\nnot json\n", CorpusFormat::kJsonl), 3u);
  EXPECT_EQ(ErrorLine("[1,2]\n", CorpusFormat::kJsonl), 1u);
  EXPECT_EQ(ErrorLine("{\"author_id\":7,\"text\":\"x\"}\n", CorpusFormat::kJsonl), 1u);
  EXPECT_EQ(ErrorLine("{\"author_id\":\"a\",\"text\":\"x\",\"timestamp\":\"now\"}\n",
                      CorpusFormat::kJsonl),
            1u);
}

TEST(LoadCorpusTest, CsvWithQuoting) {
  std::istringstream in(
      "author_id,text,source,timestamp\r\n"
      "a1,\"hello, \"\"world\"\"\",yahoo,100\r\n"
      "a2,\"two\nlines\",,\n"
      "a1,plain,espn,200\n");
  auto c = ReadCorpus(in, CorpusFormat::kCsv);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0].text, "hello, \"world\"");
  EXPECT_EQ(c[0].timestamp, 100);
  EXPECT_EQ(c[1].text, "two\nlines");
  EXPECT_FALSE(c[1].source.has_value());
  EXPECT_FALSE(c[1].timestamp.has_value());
  EXPECT_EQ(c[2].source, "espn");
}

TEST(LoadCorpusTest, CsvTwoColumnHeader) {
  std::istringstream in("author_id,text\nx,\n");
  auto c = ReadCorpus(in, CorpusFormat::kCsv);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].text, "");
}

TEST(LoadCorpusTest, MalformedCsvReportsLine) {
  EXPECT_EQ(ErrorLine("text,author_id\n", CorpusFormat::kCsv), 1u);
  EXPECT_EQ(ErrorLine("author_id,text\na,ok\nb\n", CorpusFormat::kCsv), 3u);
  EXPECT_EQ(ErrorLine("author_id,text\n,orphan\n", CorpusFormat::kCsv), 2u);
  EXPECT_EQ(ErrorLine("author_id,text\na,\"multi\nline\"\nb,\"open\n", CorpusFormat::kCsv), 4u);
  EXPECT_EQ(ErrorLine("author_id,text,source,timestamp\na,x,s,12x\n", CorpusFormat::kCsv), 2u);
}

TEST(LoadCorpusTest, MissingFileIsAnError) {
  EXPECT_THROW(LoadCorpus("/nonexistent/corpus.jsonl", CorpusFormat::kJsonl), CorpusError);
  EXPECT_THROW(ParseCorpusFormat("xml"), CorpusError);
}

TEST(LoadCorpusTest, JsonlWriterRoundTrips) {
  SynthSpec spec;
  spec.n_authors = 30;
  std::vector<RawComment> raw = GenerateSyntheticCorpus(spec);
  raw.push_back({"q\"uote", "line\nbreak \xC3\xA9", std::nullopt, -5});
  std::stringstream buf;
  WriteCorpusJsonl(raw, buf);
  EXPECT_EQ(ReadCorpus(buf, CorpusFormat::kJsonl), raw);
}

}  // namespace
}  // namespace spamrank
