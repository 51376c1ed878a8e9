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

#include "unfmt/token.h"

#include <sstream>

namespace unfmt {

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord:
      return "Word";
    case TokenKind::kNumber:
      return "Number";
    case TokenKind::kString:
      return "String";
    case TokenKind::kChar:
      return "Char";
    case TokenKind::kOperator:
      return "Operator";
    case TokenKind::kPunct:
      return "Punct";
    case TokenKind::kLineComment:
      return "LineComment";
    case TokenKind::kBlockComment:
      return "BlockComment";
    case TokenKind::kPreprocessor:
      return "Preprocessor";
    case TokenKind::kWhitespace:
      return "Whitespace";
    case TokenKind::kNewline:
      return "Newline";
    case TokenKind::kIndent:
      return "Indent";
  }
  return "Unknown";
}

bool operator==(const LexToken& a, const LexToken& b) {
  return a.kind == b.kind && a.text == b.text && a.line == b.line &&
         a.col == b.col;
}

std::string LexFlag::describe() const {
  std::ostringstream os;
  switch (kind) {
    case LexFlagKind::kUnterminatedString:
      os << "unterminated string";
      break;
    case LexFlagKind::kUnterminatedChar:
      os << "unterminated character literal";
      break;
    case LexFlagKind::kUnterminatedComment:
      os << "unterminated comment";
      break;
    case LexFlagKind::kTruncatedUtf8:
      os << "UTF-8 sequence truncated at end of input";
      break;
  }
  os << " at " << line << ":" << col;
  return os.str();
}

}  // namespace unfmt
