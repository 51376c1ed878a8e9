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

#ifndef UNFMT_LOGICAL_LINES_H_
#define UNFMT_LOGICAL_LINES_H_

#include <string_view>
#include <vector>

#include "unfmt/token.h"

namespace unfmt {

// One Python logical line: physical lines joined by open brackets or by a
// trailing backslash. Blank lines and comment-only lines each form a logical
// line with an empty `tokens` list, mirroring how Python's own tokenizer
// treats them (they never emit NEWLINE/INDENT/DEDENT).
struct LogicalLine {
  int indent_width = 0;  // leading whitespace of the first physical line,
                         // tabs expanded to the next multiple of 8
  std::vector<LexToken> tokens;    // significant tokens, comments excluded
  std::vector<LexToken> comments;  // comments inside the line, in order
  bool joined_implicit = false;    // spans lines due to an open bracket
  bool joined_explicit = false;    // spans lines due to a backslash splice
  uint32_t first_line = 0;         // 1-based physical line it starts on
};

// Groups Python source into logical lines. Indentation significance, and the
// line-safety guarantees strip makes for Python, are defined over this view.
std::vector<LogicalLine> logical_lines(std::string_view source);

}  // namespace unfmt

#endif  // UNFMT_LOGICAL_LINES_H_
