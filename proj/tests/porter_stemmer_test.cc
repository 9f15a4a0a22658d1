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

#include "spamrank/porter_stemmer.h"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>

namespace spamrank {
namespace {

TEST(PorterStemTest, ListedForms) {
  EXPECT_EQ(PorterStem("christmas"), "christma");
  EXPECT_EQ(PorterStem("merry"), "merri");
  EXPECT_EQ(PorterStem("wizards"), "wizard");
  EXPECT_EQ(PorterStem("dirty"), "dirti");
  EXPECT_EQ(PorterStem("baby"), "babi");
}

TEST(PorterStemTest, NonAlphabeticPassThrough) {
  EXPECT_EQ(PorterStem("!"), "!");
  EXPECT_EQ(PorterStem("kd35"), "kd35");
  EXPECT_EQ(PorterStem("caf\xC3\xA9s"), "caf\xC3\xA9s");
  EXPECT_EQ(PorterStem(""), "");
}

TEST(PorterStemTest, RuleTableExamples) {
  // Examples printed alongside the original rule tables.
  EXPECT_EQ(PorterStem("caresses"), "caress");
  EXPECT_EQ(PorterStem("ponies"), "poni");
  EXPECT_EQ(PorterStem("feed"), "feed");
  EXPECT_EQ(PorterStem("agreed"), "agre");
  EXPECT_EQ(PorterStem("hopping"), "hop");
  EXPECT_EQ(PorterStem("filing"), "file");
  EXPECT_EQ(PorterStem("relational"), "relat");
  EXPECT_EQ(PorterStem("generalization"), "gener");
  EXPECT_EQ(PorterStem("controll"), "control");
}

// Expected stems were produced by an independent implementation (NLTK's
// PorterStemmer in ORIGINAL_ALGORITHM mode) and frozen into the data file.
TEST(PorterStemTest, MatchesFrozenVocabulary) {
  std::ifstream in(std::string(SPAMRANK_TEST_DATA_DIR) + "/porter_vocabulary.tsv");
  ASSERT_TRUE(in) << "missing porter_vocabulary.tsv";
  std::string line;
  int checked = 0;
  int mismatches = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string word, expected;
    ASSERT_TRUE(std::getline(fields, word, '\t') && std::getline(fields, expected));
    std::string got = PorterStem(word);
    if (got != expected && ++mismatches <= 20) {
      ADD_FAILURE() << word << ": got " << got << ", expected " << expected;
    }
    ++checked;
  }
  EXPECT_GT(checked, 3000);
  EXPECT_EQ(mismatches, 0);
}

}  // namespace
}  // namespace spamrank
