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

#include "spamrank/text.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <utility>

namespace spamrank {
namespace {

// Sorted by name for binary search.
constexpr std::array<std::pair<std::string_view, char32_t>, 62> kNamedEntities{{
    {"AElig", 0x00C6},  {"Aacute", 0x00C1}, {"Agrave", 0x00C0},
    {"Auml", 0x00C4},   {"Ccedil", 0x00C7}, {"Eacute", 0x00C9},
    {"Ntilde", 0x00D1}, {"Ouml", 0x00D6},   {"Uuml", 0x00DC},
    {"aacute", 0x00E1}, {"acirc", 0x00E2},  {"aelig", 0x00E6},
    {"agrave", 0x00E0}, {"amp", 0x0026},    {"apos", 0x0027},
    {"aring", 0x00E5},  {"auml", 0x00E4},   {"bull", 0x2022},
    {"ccedil", 0x00E7}, {"cent", 0x00A2},   {"copy", 0x00A9},
    {"deg", 0x00B0},    {"divide", 0x00F7}, {"eacute", 0x00E9},
    {"ecirc", 0x00EA},  {"egrave", 0x00E8}, {"euml", 0x00EB},
    {"euro", 0x20AC},   {"gt", 0x003E},     {"hellip", 0x2026},
    {"iacute", 0x00ED}, {"iexcl", 0x00A1},  {"iquest", 0x00BF},
    {"laquo", 0x00AB},  {"ldquo", 0x201C},  {"lsquo", 0x2018},
    {"lt", 0x003C},     {"mdash", 0x2014},  {"middot", 0x00B7},
    {"nbsp", 0x00A0},   {"ndash", 0x2013},  {"ntilde", 0x00F1},
    {"oacute", 0x00F3}, {"ouml", 0x00F6},   {"para", 0x00B6},
    {"plusmn", 0x00B1}, {"pound", 0x00A3},  {"quot", 0x0022},
    {"raquo", 0x00BB},  {"rdquo", 0x201D},  {"reg", 0x00AE},
    {"rsquo", 0x2019},  {"sect", 0x00A7},   {"shy", 0x00AD},
    {"szlig", 0x00DF},  {"times", 0x00D7},  {"trade", 0x2122},
    {"uacute", 0x00FA}, {"uuml", 0x00FC},   {"yen", 0x00A5},
    {"yuml", 0x00FF},   {"zwnj", 0x200C},
}};

void AppendUtf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::optional<char32_t> ParseNumericReference(std::string_view body) {
  // body excludes '&#' and ';'
  bool hex = !body.empty() && (body[0] == 'x' || body[0] == 'X');
  if (hex) body.remove_prefix(1);
  if (body.empty() || body.size() > 8) return std::nullopt;
  std::uint32_t value = 0;
  for (char c : body) {
    int digit;
    if (c >= '0' && c <= '9') {
      digit = c - '0';
    } else if (hex && c >= 'a' && c <= 'f') {
      digit = c - 'a' + 10;
    } else if (hex && c >= 'A' && c <= 'F') {
      digit = c - 'A' + 10;
    } else {
      return std::nullopt;
    }
    value = value * (hex ? 16 : 10) + static_cast<std::uint32_t>(digit);
  }
  if (value == 0 || value > 0x10FFFF || (value >= 0xD800 && value <= 0xDFFF)) {
    return std::nullopt;
  }
  return static_cast<char32_t>(value);
}

// Attempts to decode a reference starting at text[pos] == '&'. Returns the
// number of bytes consumed, or 0 if the text is not a known reference.
std::size_t DecodeReference(std::string_view text, std::size_t pos, std::string& out) {
  constexpr std::size_t kMaxReference = 12;
  std::size_t semi = text.find(';', pos + 1);
  if (semi == std::string_view::npos || semi - pos > kMaxReference) return 0;
  std::string_view body = text.substr(pos + 1, semi - pos - 1);
  if (body.empty()) return 0;
  std::optional<char32_t> cp;
  if (body[0] == '#') {
    cp = ParseNumericReference(body.substr(1));
  } else {
    auto it = std::lower_bound(
        kNamedEntities.begin(), kNamedEntities.end(), body,
        [](const auto& entry, std::string_view key) { return entry.first < key; });
    if (it != kNamedEntities.end() && it->first == body) cp = it->second;
  }
  if (!cp) return 0;
  AppendUtf8(*cp, out);
  return semi - pos + 1;
}

enum class CharClass { kSpace, kWord, kPunct };

// Decodes one UTF-8 sequence at text[pos]; invalid bytes decode as themselves
// with length 1.
std::pair<char32_t, std::size_t> DecodeUtf8(std::string_view text, std::size_t pos) {
  auto b0 = static_cast<unsigned char>(text[pos]);
  std::size_t len = 1;
  char32_t cp = b0;
  if (b0 >= 0xF0 && b0 < 0xF8) {
    len = 4;
    cp = b0 & 0x07;
  } else if (b0 >= 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if (b0 >= 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else {
    return {cp, 1};
  }
  if (pos + len > text.size()) return {b0, 1};
  for (std::size_t i = 1; i < len; ++i) {
    auto b = static_cast<unsigned char>(text[pos + i]);
    if ((b & 0xC0) != 0x80) return {b0, 1};
    cp = (cp << 6) | (b & 0x3F);
  }
  return {cp, len};
}

bool IsUnicodeSpace(char32_t cp) {
  switch (cp) {
    case 0x85:
    case 0xA0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

CharClass Classify(char32_t cp) {
  if (cp < 0x80) {
    auto c = static_cast<char>(cp);
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9')) {
      return CharClass::kWord;
    }
    if (c > ' ' && c < 0x7F) return CharClass::kPunct;
    return CharClass::kSpace;  // whitespace and control characters
  }
  return IsUnicodeSpace(cp) ? CharClass::kSpace : CharClass::kWord;
}

char AsciiLower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

}  // namespace

std::string StripHtml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '<') {
      std::size_t close = text.find('>', i + 1);
      if (close == std::string_view::npos) break;
      i = close + 1;
    } else if (c == '&') {
      std::size_t used = DecodeReference(text, i, out);
      if (used == 0) {
        out.push_back('&');
        ++i;
      } else {
        i += used;
      }
    } else {
      out.push_back(c);
      ++i;
    }
  }
  return out;
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string word;
  char last_punct = 0;

  auto flush_word = [&] {
    if (!word.empty()) tokens.push_back(std::move(word));
    word.clear();
  };

  std::size_t i = 0;
  while (i < text.size()) {
    auto [cp, len] = DecodeUtf8(text, i);
    switch (Classify(cp)) {
      case CharClass::kSpace:
        flush_word();
        last_punct = 0;
        break;
      case CharClass::kWord:
        last_punct = 0;
        for (std::size_t k = 0; k < len; ++k) word.push_back(AsciiLower(text[i + k]));
        break;
      case CharClass::kPunct:
        flush_word();
        if (text[i] != last_punct) {
          tokens.emplace_back(1, text[i]);
          last_punct = text[i];
        }
        break;
    }
    i += len;
  }
  flush_word();
  return tokens;
}

bool IsPunctuationToken(std::string_view token) {
  return !token.empty() && std::all_of(token.begin(), token.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return u < 0x80 && Classify(u) == CharClass::kPunct;
  });
}

}  // namespace spamrank
