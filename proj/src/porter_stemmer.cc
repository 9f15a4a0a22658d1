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

#include <algorithm>
#include <array>
#include <string>

namespace spamrank {
namespace {

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

class Stemmer {
 public:
  explicit Stemmer(std::string word) : w_(std::move(word)) {}

  std::string Run() && {
    Step1a();
    Step1b();
    Step1c();
    Step2();
    Step3();
    Step4();
    Step5a();
    Step5b();
    return std::move(w_);
  }

 private:
  bool IsConsonant(std::size_t i) const {
    switch (w_[i]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 || !IsConsonant(i - 1);
      default:
        return true;
    }
  }

  // m in [C](VC)^m[V], over the first `len` characters.
  int Measure(std::size_t len) const {
    int m = 0;
    std::size_t i = 0;
    while (i < len && IsConsonant(i)) ++i;
    while (i < len) {
      while (i < len && !IsConsonant(i)) ++i;
      if (i >= len) break;
      while (i < len && IsConsonant(i)) ++i;
      ++m;
    }
    return m;
  }

  bool HasVowel(std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i) {
      if (!IsConsonant(i)) return true;
    }
    return false;
  }

  bool EndsDoubleConsonant(std::size_t len) const {
    return len >= 2 && w_[len - 1] == w_[len - 2] && IsConsonant(len - 1);
  }

  // *o: stem ends cvc with the final c not w, x or y.
  bool EndsCvc(std::size_t len) const {
    if (len < 3) return false;
    if (!IsConsonant(len - 3) || IsConsonant(len - 2) || !IsConsonant(len - 1)) {
      return false;
    }
    char c = w_[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool EndsWith(std::string_view suffix) const {
    return w_.size() >= suffix.size() &&
           std::string_view(w_).substr(w_.size() - suffix.size()) == suffix;
  }

  void Replace(std::size_t suffix_len, std::string_view replacement) {
    w_.resize(w_.size() - suffix_len);
    w_.append(replacement);
  }

  // Longest matching suffix wins; if its condition fails, the step is done.
  template <std::size_t N, typename Cond>
  void ApplyLongest(const std::array<Rule, N>& rules, Cond cond) {
    const Rule* best = nullptr;
    for (const Rule& r : rules) {
      if (EndsWith(r.suffix) && (!best || r.suffix.size() > best->suffix.size())) {
        best = &r;
      }
    }
    if (best == nullptr) return;
    std::size_t stem_len = w_.size() - best->suffix.size();
    if (cond(*best, stem_len)) Replace(best->suffix.size(), best->replacement);
  }

  void Step1a() {
    if (EndsWith("sses")) {
      Replace(4, "ss");
    } else if (EndsWith("ies")) {
      Replace(3, "i");
    } else if (EndsWith("ss")) {
      // unchanged
    } else if (EndsWith("s")) {
      Replace(1, "");
    }
  }

  void Step1b() {
    if (EndsWith("eed")) {
      if (Measure(w_.size() - 3) > 0) Replace(3, "ee");
      return;
    }
    bool stripped = false;
    if (EndsWith("ed") && HasVowel(w_.size() - 2)) {
      Replace(2, "");
      stripped = true;
    } else if (EndsWith("ing") && HasVowel(w_.size() - 3)) {
      Replace(3, "");
      stripped = true;
    }
    if (!stripped) return;

    if (EndsWith("at") || EndsWith("bl") || EndsWith("iz")) {
      w_.push_back('e');
    } else if (EndsDoubleConsonant(w_.size())) {
      char c = w_.back();
      if (c != 'l' && c != 's' && c != 'z') w_.pop_back();
    } else if (Measure(w_.size()) == 1 && EndsCvc(w_.size())) {
      w_.push_back('e');
    }
  }

  void Step1c() {
    if (EndsWith("y") && HasVowel(w_.size() - 1)) w_.back() = 'i';
  }

  void Step2() {
    static constexpr std::array<Rule, 20> kRules{{
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
        {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
        {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
        {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
        {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
        {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
        {"iviti", "ive"},   {"biliti", "ble"},
    }};
    ApplyLongest(kRules, [this](const Rule&, std::size_t stem) {
      return Measure(stem) > 0;
    });
  }

  void Step3() {
    static constexpr std::array<Rule, 7> kRules{{
        {"icate", "ic"},
        {"ative", ""},
        {"alize", "al"},
        {"iciti", "ic"},
        {"ical", "ic"},
        {"ful", ""},
        {"ness", ""},
    }};
    ApplyLongest(kRules, [this](const Rule&, std::size_t stem) {
      return Measure(stem) > 0;
    });
  }

  void Step4() {
    static constexpr std::array<Rule, 19> kRules{{
        {"al", ""},   {"ance", ""}, {"ence", ""}, {"er", ""},   {"ic", ""},
        {"able", ""}, {"ible", ""}, {"ant", ""},  {"ement", ""}, {"ment", ""},
        {"ent", ""},  {"ion", ""},  {"ou", ""},   {"ism", ""},  {"ate", ""},
        {"iti", ""},  {"ous", ""},  {"ive", ""},  {"ize", ""},
    }};
    ApplyLongest(kRules, [this](const Rule& r, std::size_t stem) {
      if (Measure(stem) <= 1) return false;
      if (r.suffix == "ion") {
        return stem > 0 && (w_[stem - 1] == 's' || w_[stem - 1] == 't');
      }
      return true;
    });
  }

  void Step5a() {
    if (!EndsWith("e")) return;
    std::size_t stem = w_.size() - 1;
    int m = Measure(stem);
    if (m > 1 || (m == 1 && !EndsCvc(stem))) w_.pop_back();
  }

  void Step5b() {
    if (Measure(w_.size()) > 1 && EndsDoubleConsonant(w_.size()) &&
        w_.back() == 'l') {
      w_.pop_back();
    }
  }

  std::string w_;
};

}  // namespace

std::string PorterStem(std::string_view word) {
  bool alphabetic = !word.empty() && std::all_of(word.begin(), word.end(), [](char c) {
    return c >= 'a' && c <= 'z';
  });
  if (!alphabetic) return std::string(word);
  return Stemmer(std::string(word)).Run();
}

}  // namespace spamrank
