// Copyright 2026 The Unfmt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UNFMT_CLI_H_
#define UNFMT_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace unfmt {

// Exit codes for the `unfmt` command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitTransform = 4;

// Runs `unfmt` with the given arguments (argv[1:] — no program name) and
// streams. Deterministic: same inputs, same outputs, same exit code.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace unfmt

#endif  // UNFMT_CLI_H_
