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
//
// The two directions of the transformer.
//
// strip removes removable formatting (indentation, interior whitespace,
// newlines, each independently toggleable) while provably preserving the
// significant token stream: a dropped space is replaced by a single space
// whenever the separator oracle says the neighbors would merge, newlines
// guarding line comments and preprocessor directives survive, and Python
// keeps its line structure (indentation/newline removal is clamped off).
//
// restore is the inverse direction: it re-lays-out code according to a style
// profile (attached braces, fixed indent width, spaced operators). It is
// token-driven, not AST-driven: it guarantees token-stream equivalence and
// profile conformance, not bit-exact agreement with any external formatter.

#ifndef UNFMT_TRANSFORM_H_
#define UNFMT_TRANSFORM_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "unfmt/language.h"
#include "unfmt/token.h"

namespace unfmt {

// Which trivia kinds strip removes. Defaults to all three.
struct FormatConfig {
  bool remove_indentation = true;
  bool remove_whitespace = true;  // interior space/tab runs
  bool remove_newlines = true;    // line joins; blank lines always go

  static FormatConfig none() { return {false, false, false}; }
};

bool operator==(const FormatConfig& a, const FormatConfig& b);

enum class BraceStyle {
  kAttached,  // opening brace on the same line as its declaration
};

// Layout rules for restore. indent_width defaults differ per language
// family, so profiles are built through defaults_for().
struct StyleProfile {
  int indent_width = 2;
  BraceStyle brace_style = BraceStyle::kAttached;
  bool space_after_control_keyword = true;  // "if (" not "if("
  bool space_around_binary_ops = true;
  bool space_after_comma = true;
  int max_blank_lines = 1;

  // 2 columns for Java/C++/C#, 4 for Python.
  static StyleProfile defaults_for(Language language);
};

struct TransformResult {
  std::string output;
  size_t bytes_before = 0;
  size_t bytes_after = 0;
  // Config flags that were requested but forced off (Python clamps
  // remove_indentation and remove_newlines).
  std::vector<std::string> clamped_options;
  // Unterminated-construct warnings from lexing the input.
  std::vector<LexFlag> lex_flags;
};

// Removes the trivia kinds selected by config. Guarantees the output's
// significant token stream equals the input's, bytes_after <= bytes_before,
// and idempotence under the same config.
// Throws Error(kInvalidEncoding) on interior invalid UTF-8.
TransformResult strip(std::string_view source, Language language,
                      const FormatConfig& config);

// Re-lays-out source per the style profile. Output is token-equivalent to
// the input and idempotent. For C-family input the braces must balance;
// otherwise Error(kUnbalancedBraces) is thrown (use transform_partial for
// incomplete code).
TransformResult restore(std::string_view source, Language language,
                        const StyleProfile& style);

// strip with everything removable removed: the shortest text this library
// produces for the given token stream. Output-side token counts are metered
// against this form.
std::string canonical_minimal(std::string_view source, Language language);

}  // namespace unfmt

#endif  // UNFMT_TRANSFORM_H_
