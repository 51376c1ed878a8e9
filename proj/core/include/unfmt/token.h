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

#ifndef UNFMT_TOKEN_H_
#define UNFMT_TOKEN_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace unfmt {

enum class TokenKind {
  kWord,          // identifiers and keywords alike
  kNumber,        // numeric literal, maximal-munch ("pp-number" style)
  kString,        // any string literal form, prefix and quotes included
  kChar,          // character literal
  kOperator,      // operators plus degenerate single bytes
  kPunct,         // ( ) [ ] { } , ;
  kLineComment,   // '//' or '#' to end of line, newline excluded
  kBlockComment,  // '/* ... */', interior verbatim
  kPreprocessor,  // whole '#'-directive physical line, continuations included
  kWhitespace,    // space/tab run not at line start
  kNewline,       // one line break ("\n", "\r\n", "\r", or a "\\\n" splice)
  kIndent,        // space/tab run at line start
};

std::string_view to_string(TokenKind kind);

// Whitespace, Newline and Indent are the removable formatting kinds; every
// other kind carries program meaning (comments included) and is never edited.
inline bool is_trivia(TokenKind kind) {
  return kind == TokenKind::kWhitespace || kind == TokenKind::kNewline ||
         kind == TokenKind::kIndent;
}

struct LexToken {
  TokenKind kind;
  std::string text;  // verbatim source bytes, never empty
  uint32_t line;     // 1-based line of the first byte
  uint32_t col;      // 1-based byte column of the first byte

  bool is_significant() const { return !is_trivia(kind); }
};

bool operator==(const LexToken& a, const LexToken& b);

enum class LexFlagKind {
  kUnterminatedString,
  kUnterminatedChar,
  kUnterminatedComment,
  kTruncatedUtf8,
};

// Non-fatal lexing diagnostics. The flagged token is still emitted verbatim,
// keeping the token stream lossless; downstream code treats flagged regions
// as unfinished "tail" territory.
struct LexFlag {
  LexFlagKind kind;
  uint32_t line;
  uint32_t col;
  size_t offset;  // byte offset of the construct's opening delimiter

  std::string describe() const;
};

struct LexResult {
  std::vector<LexToken> tokens;
  std::vector<LexFlag> flags;
};

}  // namespace unfmt

#endif  // UNFMT_TOKEN_H_
