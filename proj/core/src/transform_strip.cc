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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "unfmt/lexer.h"
#include "unfmt/transform.h"

namespace unfmt {

bool operator==(const FormatConfig& a, const FormatConfig& b) {
  return a.remove_indentation == b.remove_indentation &&
         a.remove_whitespace == b.remove_whitespace &&
         a.remove_newlines == b.remove_newlines;
}

StyleProfile StyleProfile::defaults_for(Language language) {
  StyleProfile style;
  style.indent_width = language == Language::kPython ? 4 : 2;
  return style;
}

namespace {

// Emits one trivia gap (the run of Whitespace/Newline/Indent tokens between
// two significant tokens, or at either end of the file) after filtering by
// config. `prev`/`next` are the flanking significant tokens, null at BOF/EOF.
void flush_gap(const std::vector<LexToken>& tokens, size_t begin, size_t end,
               const LexToken* prev, const LexToken* next,
               const FormatConfig& cfg, Language language, std::string* out) {
  if (begin == end) return;  // already adjacent; the lexer guarantees no merge

  // Newlines that guard line-oriented constructs survive removal: a line
  // comment or preprocessor line must not swallow following code, and a `#`
  // directive is only a directive at the start of a line.
  int newline_budget = 0;
  if (cfg.remove_newlines && prev != nullptr && next != nullptr) {
    const bool after_line_construct = prev->kind == TokenKind::kLineComment ||
                                      prev->kind == TokenKind::kPreprocessor;
    const bool before_directive = next->kind == TokenKind::kPreprocessor;
    if (after_line_construct || before_directive) newline_budget = 1;
  }

  const size_t kept_start = out->size();
  for (size_t i = begin; i < end; ++i) {
    const LexToken& t = tokens[i];
    switch (t.kind) {
      case TokenKind::kWhitespace:
        if (!cfg.remove_whitespace) *out += t.text;
        break;
      case TokenKind::kIndent:
        if (!cfg.remove_indentation) *out += t.text;
        break;
      case TokenKind::kNewline:
        if (!cfg.remove_newlines) {
          *out += t.text;  // splice tokens ("\\\n") stay verbatim
        } else if (newline_budget > 0) {
          *out += '\n';
          --newline_budget;
        }
        break;
      default:
        *out += t.text;  // defensive: non-trivia never lands in a gap
        break;
    }
  }

  // If the gap vanished entirely, ask the re-lex oracle whether the two
  // neighbors would fuse into a different token sequence; if so exactly one
  // space is the mandatory separator.
  if (out->size() == kept_start && prev != nullptr && next != nullptr &&
      relex_pair(*prev, *next, language) == MergeOutcome::kMerges) {
    *out += ' ';
  }
}

}  // namespace

TransformResult strip(std::string_view source, Language language,
                      const FormatConfig& config) {
  TransformResult result;
  result.bytes_before = source.size();

  FormatConfig cfg = config;
  if (language == Language::kPython) {
    // Python's block structure lives in its line structure; only interior
    // whitespace is removable.
    if (cfg.remove_indentation) {
      cfg.remove_indentation = false;
      result.clamped_options.push_back("remove_indentation");
    }
    if (cfg.remove_newlines) {
      cfg.remove_newlines = false;
      result.clamped_options.push_back("remove_newlines");
    }
  }

  const std::string normalized = normalize_newlines(source);
  const LexResult lexed = lex(normalized, language);
  result.lex_flags = lexed.flags;

  const std::vector<LexToken>& tokens = lexed.tokens;
  std::string out;
  out.reserve(normalized.size());

  const LexToken* prev_sig = nullptr;
  size_t i = 0;
  while (i < tokens.size()) {
    if (!is_trivia(tokens[i].kind)) {
      out += tokens[i].text;
      prev_sig = &tokens[i];
      ++i;
      continue;
    }
    size_t j = i;
    while (j < tokens.size() && is_trivia(tokens[j].kind)) ++j;
    const LexToken* next_sig = j < tokens.size() ? &tokens[j] : nullptr;
    flush_gap(tokens, i, j, prev_sig, next_sig, cfg, language, &out);
    i = j;
  }

  result.output = std::move(out);
  result.bytes_after = result.output.size();
  return result;
}

std::string canonical_minimal(std::string_view source, Language language) {
  return strip(source, language, FormatConfig{}).output;
}

}  // namespace unfmt
