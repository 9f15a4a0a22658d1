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

#ifndef SPAMRANK_TEXT_H_
#define SPAMRANK_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace spamrank {

// Removes `<...>` tag spans and decodes character references. Named
// references outside the built-in table and malformed numeric references are
// kept verbatim. An unclosed `<` swallows the rest of the input.
std::string StripHtml(std::string_view text);

// Lowercases (ASCII), splits on Unicode whitespace, and separates punctuation
// from alphanumeric runs. Each maximal run of one repeated punctuation
// character becomes a single token, so "win!!!" yields {"win", "!"} and
// "?!" yields {"?", "!"}. Bytes >= 0x80 that are not whitespace are treated
// as word characters so UTF-8 letters stay inside their word.
std::vector<std::string> Tokenize(std::string_view text);

// True when the token holds no ASCII letter or digit and no non-ASCII byte.
bool IsPunctuationToken(std::string_view token);

}  // namespace spamrank

#endif  // SPAMRANK_TEXT_H_
