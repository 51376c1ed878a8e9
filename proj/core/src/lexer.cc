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

#include "unfmt/lexer.h"

#include <array>
#include <cctype>
#include <cstring>
#include <sstream>

#include "unfmt/error.h"

namespace unfmt {

namespace {

struct Utf8Check {
  bool ok = true;
  bool truncated = false;  // valid lead byte cut off by end of input
  size_t offset = 0;
};

Utf8Check validate_utf8(std::string_view s) {
  size_t i = 0;
  while (i < s.size()) {
    const unsigned char b = static_cast<unsigned char>(s[i]);
    size_t need = 0;
    if (b < 0x80) {
      ++i;
      continue;
    } else if ((b & 0xE0) == 0xC0) {
      if (b < 0xC2) return {false, false, i};  // overlong
      need = 1;
    } else if ((b & 0xF0) == 0xE0) {
      need = 2;
    } else if ((b & 0xF8) == 0xF0) {
      if (b > 0xF4) return {false, false, i};  // beyond U+10FFFF
      need = 3;
    } else {
      return {false, false, i};
    }
    for (size_t k = 1; k <= need; ++k) {
      if (i + k >= s.size()) return {false, true, i};
      const unsigned char cb = static_cast<unsigned char>(s[i + k]);
      if ((cb & 0xC0) != 0x80) return {false, false, i};
      if (k == 1) {
        if (b == 0xE0 && cb < 0xA0) return {false, false, i};  // overlong
        if (b == 0xED && cb > 0x9F) return {false, false, i};  // surrogate
        if (b == 0xF0 && cb < 0x90) return {false, false, i};  // overlong
        if (b == 0xF4 && cb > 0x8F) return {false, false, i};  // > U+10FFFF
      }
    }
    i += need + 1;
  }
  return {};
}

bool is_word_start(unsigned char c, Language lang) {
  if (std::isalpha(c) || c == '_') return true;
  if (c >= 0x80) return true;  // Unicode identifiers, byte-wise
  if (c == '$' && lang == Language::kJava) return true;
  return false;
}

bool is_word_char(unsigned char c, Language lang) {
  return is_word_start(c, lang) || std::isdigit(c);
}

// Multi-character operators, longest first within each language.
const std::string_view kJavaOps[] = {
    ">>>=", ">>>", "<<=", ">>=", "...", "::", "->", "++", "--",
    "<<",   ">>",  "<=",  ">=",  "==",  "!=", "&&", "||", "+=",
    "-=",   "*=",  "/=",  "%=",  "&=",  "|=", "^="};
const std::string_view kCppOps[] = {
    "<<=", ">>=", "->*", "...", "<=>", "::", "->", "++", "--", ".*",
    "<<",  ">>",  "<=",  ">=",  "==",  "!=", "&&", "||", "+=", "-=",
    "*=",  "/=",  "%=",  "&=",  "|=",  "^="};
const std::string_view kCSharpOps[] = {
    ">>>=", ">>>", "<<=", ">>=", "?\?=", "=>", "?\?", "?.", "::",
    "->",   "++",  "--",  "<<",  ">>",  "<=", ">=", "==", "!=",
    "&&",   "||",  "+=",  "-=",  "*=",  "/=", "%=", "&=", "|=",
    "^=",   ".."};
const std::string_view kPythonOps[] = {
    "**=", "//=", "<<=", ">>=", ":=", "->", "**", "//", "<<", ">>",
    "<=",  ">=",  "==",  "!=",  "+=", "-=", "*=", "/=", "%=", "&=",
    "|=",  "^=",  "@="};

std::pair<const std::string_view*, size_t> operator_table(Language lang) {
  switch (lang) {
    case Language::kJava:
      return {kJavaOps, std::size(kJavaOps)};
    case Language::kCpp:
      return {kCppOps, std::size(kCppOps)};
    case Language::kCSharp:
      return {kCSharpOps, std::size(kCSharpOps)};
    case Language::kPython:
      return {kPythonOps, std::size(kPythonOps)};
  }
  return {nullptr, 0};
}

bool is_punct_char(char c) {
  return c == '(' || c == ')' || c == '[' || c == ']' || c == '{' ||
         c == '}' || c == ',' || c == ';';
}

// C++ encoding prefixes for string literals ('R' suffix marks raw strings).
bool is_cpp_string_prefix(std::string_view w) {
  return w == "u8" || w == "u" || w == "U" || w == "L" || w == "R" ||
         w == "u8R" || w == "uR" || w == "UR" || w == "LR";
}

bool is_cpp_char_prefix(std::string_view w) {
  return w == "u8" || w == "u" || w == "U" || w == "L";
}

bool is_python_string_prefix(std::string_view w) {
  if (w.empty() || w.size() > 2) return false;
  for (char c : w) {
    switch (std::tolower(static_cast<unsigned char>(c))) {
      case 'r':
      case 'b':
      case 'u':
      case 'f':
        break;
      default:
        return false;
    }
  }
  return true;
}

class Scanner {
 public:
  Scanner(std::string_view src, Language lang) : src_(src), lang_(lang) {}

  LexResult take() && {
    scan();
    return std::move(result_);
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek(size_t off = 0) const {
    return pos_ + off < src_.size() ? src_[pos_ + off] : '\0';
  }
  char prev_char() const { return pos_ > 0 ? src_[pos_ - 1] : '\0'; }

  void advance(size_t n = 1) {
    for (size_t k = 0; k < n && pos_ < src_.size(); ++k) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void flag(LexFlagKind kind, uint32_t line, uint32_t col, size_t offset) {
    result_.flags.push_back({kind, line, col, offset});
  }

  void scan() {
    while (!at_end()) {
      const size_t start = pos_;
      const uint32_t tline = line_;
      const uint32_t tcol = col_;
      const TokenKind kind = next_token();
      result_.tokens.push_back(
          {kind, std::string(src_.substr(start, pos_ - start)), tline, tcol});
      if (kind == TokenKind::kNewline) {
        line_start_ = true;
      } else if (kind != TokenKind::kIndent) {
        line_start_ = false;
      }
    }
  }

  // Consumes one token and returns its kind; token text is whatever was
  // consumed, recorded by scan().
  TokenKind next_token() {
    const char c = peek();

    if (c == '\r' || c == '\n') {
      if (c == '\r' && peek(1) == '\n') advance();
      advance();
      return TokenKind::kNewline;
    }
    if (c == ' ' || c == '\t') {
      while (peek() == ' ' || peek() == '\t') advance();
      return line_start_ ? TokenKind::kIndent : TokenKind::kWhitespace;
    }
    // Backslash-newline is a line splice in Python and C++; between tokens it
    // behaves exactly like a removable newline.
    if ((lang_ == Language::kPython || lang_ == Language::kCpp) &&
        c == '\\' && (peek(1) == '\n' || peek(1) == '\r')) {
      advance();
      if (peek() == '\r' && peek(1) == '\n') advance();
      advance();
      return TokenKind::kNewline;
    }
    if (line_start_ && c == '#' &&
        (lang_ == Language::kCpp || lang_ == Language::kCSharp)) {
      return lex_preprocessor();
    }
    if (c == '#' && lang_ == Language::kPython) {
      return lex_line_comment();
    }
    if (c == '/' && lang_ != Language::kPython) {
      if (peek(1) == '/') return lex_line_comment();
      if (peek(1) == '*') return lex_block_comment();
    }
    if (lang_ == Language::kCSharp && c == '@') {
      if (peek(1) == '"') {
        advance();
        return lex_verbatim_string();
      }
      if (peek(1) == '$' && peek(2) == '"') {
        advance(2);
        return lex_interpolated_string(/*verbatim=*/true);
      }
      if (is_word_start(static_cast<unsigned char>(peek(1)), lang_)) {
        advance();  // '@' joins the verbatim identifier
        return lex_word();
      }
    }
    if (lang_ == Language::kCSharp && c == '$') {
      if (peek(1) == '"') {
        advance();
        return lex_interpolated_string(/*verbatim=*/false);
      }
      if (peek(1) == '@' && peek(2) == '"') {
        advance(2);
        return lex_interpolated_string(/*verbatim=*/true);
      }
    }
    if (c == '"') return lex_double_quoted();
    if (c == '\'') return lex_single_quoted();
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      return lex_number();
    }
    if (is_word_start(static_cast<unsigned char>(c), lang_)) {
      return lex_word();
    }
    // Operators, longest match first, then single-byte fallback.
    auto [ops, nops] = operator_table(lang_);
    for (size_t i = 0; i < nops; ++i) {
      if (src_.substr(pos_).substr(0, ops[i].size()) == ops[i]) {
        advance(ops[i].size());
        return TokenKind::kOperator;
      }
    }
    advance();
    return is_punct_char(c) ? TokenKind::kPunct : TokenKind::kOperator;
  }

  TokenKind lex_line_comment() {
    while (!at_end() && peek() != '\n' && peek() != '\r') advance();
    return TokenKind::kLineComment;
  }

  TokenKind lex_block_comment() {
    const uint32_t sline = line_, scol = col_;
    const size_t soff = pos_;
    advance(2);  // "/*"
    while (!at_end()) {
      if (peek() == '*' && peek(1) == '/') {
        advance(2);
        return TokenKind::kBlockComment;
      }
      advance();
    }
    flag(LexFlagKind::kUnterminatedComment, sline, scol, soff);
    return TokenKind::kBlockComment;
  }

  // Whole physical line from '#'; in C++ a backslash immediately before the
  // line break continues the directive onto the next line.
  TokenKind lex_preprocessor() {
    while (!at_end()) {
      const char c = peek();
      if (c == '\n' || c == '\r') {
        if (lang_ == Language::kCpp && prev_char() == '\\') {
          if (c == '\r' && peek(1) == '\n') advance();
          advance();
          continue;
        }
        break;
      }
      advance();
    }
    return TokenKind::kPreprocessor;
  }

  TokenKind lex_number() {
    advance();
    while (!at_end()) {
      const char c = peek();
      const char p = prev_char();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
          c == '.') {
        advance();
      } else if ((c == '+' || c == '-') &&
                 (p == 'e' || p == 'E' || p == 'p' || p == 'P')) {
        advance();
      } else if (lang_ == Language::kCpp && c == '\'' &&
                 std::isalnum(static_cast<unsigned char>(p)) &&
                 std::isalnum(static_cast<unsigned char>(peek(1)))) {
        advance();  // digit separator
      } else {
        break;
      }
    }
    return TokenKind::kNumber;
  }

  TokenKind lex_word() {
    const size_t wstart = pos_;
    advance();
    while (!at_end() &&
           is_word_char(static_cast<unsigned char>(peek()), lang_)) {
      advance();
    }
    const std::string_view word = src_.substr(wstart, pos_ - wstart);
    // A string prefix directly against a quote is part of the literal; this
    // keeps the oracle honest about pairs like L "x" vs L"x" in C++.
    const char q = peek();
    if (lang_ == Language::kCpp) {
      if (q == '"' && is_cpp_string_prefix(word)) {
        if (word.back() == 'R') return lex_cpp_raw_string();
        return lex_plain(TokenKind::kString, '"');
      }
      if (q == '\'' && is_cpp_char_prefix(word)) {
        return lex_plain(TokenKind::kChar, '\'');
      }
    }
    if (lang_ == Language::kPython && (q == '"' || q == '\'') &&
        is_python_string_prefix(word)) {
      if (peek(1) == q && peek(2) == q) return lex_triple(q);
      return lex_plain(TokenKind::kString, q);
    }
    return TokenKind::kWord;
  }

  TokenKind lex_double_quoted() {
    if (peek(1) == '"' && peek(2) == '"') {
      switch (lang_) {
        case Language::kPython:
        case Language::kJava:
          return lex_triple('"');  // triple-quoted / text block
        case Language::kCSharp:
          return lex_csharp_raw_string();
        case Language::kCpp:
          break;  // "" then "..." — plain handles it
      }
    }
    return lex_plain(TokenKind::kString, '"');
  }

  TokenKind lex_single_quoted() {
    if (lang_ == Language::kPython) {
      if (peek(1) == '\'' && peek(2) == '\'') return lex_triple('\'');
      return lex_plain(TokenKind::kString, '\'');
    }
    return lex_plain(TokenKind::kChar, '\'');
  }

  // One-line literal with backslash escapes; an unescaped line break leaves
  // it unterminated (flagged) without consuming the break.
  TokenKind lex_plain(TokenKind kind, char quote) {
    const uint32_t sline = line_, scol = col_;
    const size_t soff = pos_;
    advance();  // opening quote
    while (!at_end()) {
      const char c = peek();
      if (c == '\\') {
        advance();
        if (!at_end() && peek() != '\n' && peek() != '\r') advance();
        continue;
      }
      if (c == quote) {
        advance();
        return kind;
      }
      if (c == '\n' || c == '\r') break;
      advance();
    }
    flag(kind == TokenKind::kChar ? LexFlagKind::kUnterminatedChar
                                  : LexFlagKind::kUnterminatedString,
         sline, scol, soff);
    return kind;
  }

  TokenKind lex_triple(char quote) {
    const uint32_t sline = line_, scol = col_;
    const size_t soff = pos_;
    advance(3);
    while (!at_end()) {
      if (peek() == '\\') {
        advance();
        if (!at_end()) advance();
        continue;
      }
      if (peek() == quote && peek(1) == quote && peek(2) == quote) {
        advance(3);
        return TokenKind::kString;
      }
      advance();
    }
    flag(LexFlagKind::kUnterminatedString, sline, scol, soff);
    return TokenKind::kString;
  }

  // C# raw string: N>=3 quotes, closed by the same run length, no escapes.
  TokenKind lex_csharp_raw_string() {
    const uint32_t sline = line_, scol = col_;
    const size_t soff = pos_;
    size_t n = 0;
    while (peek() == '"') {
      advance();
      ++n;
    }
    while (!at_end()) {
      if (peek() == '"') {
        size_t run = 0;
        while (peek(run) == '"') ++run;
        if (run >= n) {
          advance(n);
          return TokenKind::kString;
        }
        advance(run);
        continue;
      }
      advance();
    }
    flag(LexFlagKind::kUnterminatedString, sline, scol, soff);
    return TokenKind::kString;
  }

  // C# @"...": doubled quotes escape, newlines allowed, backslash literal.
  TokenKind lex_verbatim_string() {
    const uint32_t sline = line_, scol = col_;
    const size_t soff = pos_ - 1;  // '@'
    advance();                     // opening quote
    while (!at_end()) {
      if (peek() == '"') {
        if (peek(1) == '"') {
          advance(2);
          continue;
        }
        advance();
        return TokenKind::kString;
      }
      advance();
    }
    flag(LexFlagKind::kUnterminatedString, sline, scol, soff);
    return TokenKind::kString;
  }

  // C# $"...{expr}...": the whole literal, holes included, is one token.
  // Hole interiors may contain nested string literals.
  TokenKind lex_interpolated_string(bool verbatim) {
    const uint32_t sline = line_, scol = col_;
    const size_t soff = pos_ - 1;
    advance();  // opening quote
    int holes = 0;
    while (!at_end()) {
      const char c = peek();
      if (holes == 0) {
        if (c == '"') {
          if (verbatim && peek(1) == '"') {
            advance(2);
            continue;
          }
          advance();
          return TokenKind::kString;
        }
        if (c == '{') {
          if (peek(1) == '{') {
            advance(2);
            continue;
          }
          advance();
          holes = 1;
          continue;
        }
        if (c == '\\' && !verbatim) {
          advance();
          if (!at_end() && peek() != '\n' && peek() != '\r') advance();
          continue;
        }
        if ((c == '\n' || c == '\r') && !verbatim) break;
        advance();
      } else {
        if (c == '{') {
          advance();
          ++holes;
        } else if (c == '}') {
          advance();
          --holes;
        } else if (c == '@' && peek(1) == '"') {
          advance();
          skip_verbatim_inner();
        } else if (c == '$' && peek(1) == '"') {
          advance(2);
          skip_interpolated_inner(/*verbatim=*/false);
        } else if ((c == '$' && peek(1) == '@' && peek(2) == '"') ||
                   (c == '@' && peek(1) == '$' && peek(2) == '"')) {
          advance(3);
          skip_interpolated_inner(/*verbatim=*/true);
        } else if (c == '"' || c == '\'') {
          skip_plain_inner(c);
        } else {
          advance();
        }
      }
    }
    flag(LexFlagKind::kUnterminatedString, sline, scol, soff);
    return TokenKind::kString;
  }

  void skip_plain_inner(char quote) {
    advance();
    while (!at_end()) {
      const char c = peek();
      if (c == '\\') {
        advance();
        if (!at_end()) advance();
        continue;
      }
      if (c == quote) {
        advance();
        return;
      }
      if (c == '\n' || c == '\r') return;
      advance();
    }
  }

  void skip_verbatim_inner() {
    advance();  // quote
    while (!at_end()) {
      if (peek() == '"') {
        if (peek(1) == '"') {
          advance(2);
          continue;
        }
        advance();
        return;
      }
      advance();
    }
  }

  void skip_interpolated_inner(bool verbatim) {
    int holes = 0;
    while (!at_end()) {
      const char c = peek();
      if (c == '{' && peek(1) == '{' && holes == 0) {
        advance(2);
      } else if (c == '{') {
        advance();
        ++holes;
      } else if (c == '}' && holes > 0) {
        advance();
        --holes;
      } else if (c == '"' && holes == 0) {
        if (verbatim && peek(1) == '"') {
          advance(2);
          continue;
        }
        advance();
        return;
      } else if ((c == '"' || c == '\'') && holes > 0) {
        skip_plain_inner(c);
      } else if (c == '\\' && !verbatim && holes == 0) {
        advance();
        if (!at_end()) advance();
      } else if ((c == '\n' || c == '\r') && !verbatim && holes == 0) {
        return;
      } else {
        advance();
      }
    }
  }

  // C++ R"delim( ... )delim".
  TokenKind lex_cpp_raw_string() {
    const uint32_t sline = line_, scol = col_;
    const size_t soff = pos_;
    advance();  // opening quote
    std::string delim;
    while (!at_end() && peek() != '(' && peek() != '\n' && peek() != '\r' &&
           delim.size() <= 16) {
      delim.push_back(peek());
      advance();
    }
    if (at_end() || peek() != '(') {
      flag(LexFlagKind::kUnterminatedString, sline, scol, soff);
      return TokenKind::kString;
    }
    advance();  // '('
    const std::string close = ")" + delim + "\"";
    while (!at_end()) {
      if (src_.substr(pos_).substr(0, close.size()) == close) {
        advance(close.size());
        return TokenKind::kString;
      }
      advance();
    }
    flag(LexFlagKind::kUnterminatedString, sline, scol, soff);
    return TokenKind::kString;
  }

  std::string_view src_;
  Language lang_;
  size_t pos_ = 0;
  uint32_t line_ = 1;
  uint32_t col_ = 1;
  bool line_start_ = true;
  LexResult result_;
};

LexResult lex_impl(std::string_view source, Language language) {
  return Scanner(source, language).take();
}

}  // namespace

LexResult lex(std::string_view source, Language language) {
  const Utf8Check check = validate_utf8(source);
  if (!check.ok && !check.truncated) {
    std::ostringstream os;
    os << "input is not valid UTF-8 (byte offset " << check.offset << ")";
    throw Error(ErrorCode::kInvalidEncoding, os.str());
  }
  LexResult result = lex_impl(source, language);
  if (check.truncated) {
    uint32_t line = 1, col = 1;
    for (size_t i = 0; i < check.offset && i < source.size(); ++i) {
      if (source[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    result.flags.push_back(
        {LexFlagKind::kTruncatedUtf8, line, col, check.offset});
  }
  return result;
}

std::vector<LexToken> significant(const std::vector<LexToken>& tokens) {
  std::vector<LexToken> out;
  out.reserve(tokens.size());
  for (const LexToken& t : tokens) {
    if (t.is_significant()) out.push_back(t);
  }
  return out;
}

MergeOutcome relex_pair(std::string_view left, std::string_view right,
                        Language language) {
  std::string joined;
  joined.reserve(left.size() + right.size());
  joined.append(left);
  joined.append(right);
  const LexResult relexed = lex_impl(joined, language);
  const auto& t = relexed.tokens;
  if (t.size() >= 2 && t[0].text == left && t[1].text == right) {
    return MergeOutcome::kSeparate;
  }
  return MergeOutcome::kMerges;
}

MergeOutcome relex_pair(const LexToken& left, const LexToken& right,
                        Language language) {
  return relex_pair(left.text, right.text, language);
}

std::string normalize_newlines(std::string_view source) {
  std::string out;
  out.reserve(source.size());
  for (size_t i = 0; i < source.size(); ++i) {
    if (source[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < source.size() && source[i + 1] == '\n') ++i;
    } else {
      out.push_back(source[i]);
    }
  }
  return out;
}

}  // namespace unfmt
