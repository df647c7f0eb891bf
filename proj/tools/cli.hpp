// Copyright 2026 The pkr Authors.
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

#ifndef PKR_TOOLS_CLI_HPP_
#define PKR_TOOLS_CLI_HPP_

#include <ostream>

namespace pkr::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kRejected = 1;  // certify: a condition failed
inline constexpr int kInvalidInput = 2;
inline constexpr int kToleranceNotMet = 3;
inline constexpr int kInternalError = 4;

// Runs one command. Results go to `out` (or --output) as a single JSON line,
// errors to `err` as {"error": {"kind": ..., "detail": ...}}.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pkr::cli

#endif  // PKR_TOOLS_CLI_HPP_
