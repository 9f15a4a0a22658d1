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

#ifndef SPAMRANK_CLI_H_
#define SPAMRANK_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace spamrank {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitFixtureFailure = 2;

// Entry point shared by the `spamrank` binary and the tests. `args` excludes
// the program name. Data goes to `out` (or --output), diagnostics to `err`.
// Defaults may come from a key=value file named by --config or by the
// SPAMRANK_DEFAULTS environment variable; command-line flags win.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spamrank

#endif  // SPAMRANK_CLI_H_
