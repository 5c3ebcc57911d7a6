// Copyright 2026 The sdim Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace sdim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Exit codes: 0 success,
// 1 verification mismatch or disagreeing methods, 2 usage or input error.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

// "a..b" (inclusive) or a single integer.
std::pair<int, int> parse_range(const std::string& text);

}  // namespace sdim::cli
