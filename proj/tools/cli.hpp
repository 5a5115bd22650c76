// Copyright 2026 The Transfinite Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRANSFINITE_TOOLS_CLI_HPP_
#define TRANSFINITE_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "transfinite/engine.hpp"

namespace transfinite::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kDeviation = 3;

// "min", "kth:<k>" or "scripted:<step>=<first>/<second>,...".
// Throws ConfigError on anything else.
Strategy parse_strategy(const std::string& text);

// Runs the command line `args` (without the program name), writing results
// to `out` (unless --output redirects them) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace transfinite::cli

#endif  // TRANSFINITE_TOOLS_CLI_HPP_
