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
// Lossless lexers for Java, C++, C# and Python.
//
// The contract that everything else in this library leans on:
//
//   * Losslessness: concatenating the token texts of lex(s, L) reproduces s
//     byte for byte, for any input that lexes at all (malformed regions
//     degrade to single-byte Operator tokens rather than failing).
//   * Maximal munch: each token is the longest match at its position, with
//     real-language string prefixes (u8"", R"(...)", @"", $"", r'', f"") and
//     multi-character operators honored, so token boundaries agree with the
//     language's own lexer on well-formed input.
//
// Those two properties make relex_pair a sound separator oracle: a space
// between two tokens is removable exactly when re-lexing their juxtaposition
// still yields the same two tokens.

#ifndef UNFMT_LEXER_H_
#define UNFMT_LEXER_H_

#include <string>
#include <string_view>
#include <vector>

#include "unfmt/language.h"
#include "unfmt/token.h"

namespace unfmt {

// Lexes source into a lossless token stream.
// Throws Error(kInvalidEncoding) for interior invalid UTF-8; a multibyte
// sequence cut off by end-of-input is flagged (kTruncatedUtf8) instead so
// truncated inputs still lex.
LexResult lex(std::string_view source, Language language);

// Filters a stream down to its significant (non-trivia) tokens.
std::vector<LexToken> significant(const std::vector<LexToken>& tokens);

enum class MergeOutcome {
  kSeparate,  // juxtaposition re-lexes as the same two tokens
  kMerges,    // juxtaposition would change the token stream; keep a separator
};

// The separator oracle: lexes left+right and reports whether the two
// original texts survive as the first two tokens. Both inputs must be the
// texts of significant tokens.
MergeOutcome relex_pair(std::string_view left, std::string_view right,
                        Language language);
MergeOutcome relex_pair(const LexToken& left, const LexToken& right,
                        Language language);

// Converts CRLF and lone CR line endings to LF. Transform entry points
// normalize before lexing; output text always uses LF.
std::string normalize_newlines(std::string_view source);

}  // namespace unfmt

#endif  // UNFMT_LEXER_H_
