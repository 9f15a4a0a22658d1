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

#ifndef SPAMRANK_PORTER_STEMMER_H_
#define SPAMRANK_PORTER_STEMMER_H_

#include <string>
#include <string_view>

namespace spamrank {

// Porter (1980) suffix-stripping stemmer, original rule set (steps 1a-5b).
// Input is expected to be lowercase. Tokens containing anything other than
// ASCII lowercase letters (punctuation, digits, UTF-8) are returned unchanged.
std::string PorterStem(std::string_view word);

}  // namespace spamrank

#endif  // SPAMRANK_PORTER_STEMMER_H_
