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

#include "unfmt/verify.h"

#include <sstream>

#include "unfmt/lexer.h"
#include "unfmt/token.h"

namespace unfmt {

namespace {

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

std::string collapse_ws(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_run = false;
  for (char c : s) {
    if (is_ws(c)) {
      in_run = true;
      continue;
    }
    if (in_run && !out.empty()) out += ' ';
    in_run = false;
    out += c;
  }
  return out;
}

// Comment text minus its delimiters, interior whitespace collapsed, so that
// re-indenting a block comment's continuation lines is not a divergence.
std::string comment_interior(const LexToken& t, bool strict) {
  if (strict) return t.text;
  std::string_view s = t.text;
  if (t.kind == TokenKind::kLineComment) {
    if (s.substr(0, 2) == "//") {
      s.remove_prefix(2);
    } else if (!s.empty() && s[0] == '#') {
      s.remove_prefix(1);
    }
  } else if (t.kind == TokenKind::kBlockComment) {
    if (s.substr(0, 2) == "/*") s.remove_prefix(2);
    if (s.size() >= 2 && s.substr(s.size() - 2) == "*/")
      s.remove_suffix(2);
  }
  return collapse_ws(s);
}

bool is_comment(TokenKind k) {
  return k == TokenKind::kLineComment || k == TokenKind::kBlockComment;
}

NormToken make(NormKind kind, std::string text, const LexToken& at) {
  return NormToken{kind, std::move(text), at.line, at.col};
}

int expanded_width(std::string_view ws) {
  int w = 0;
  for (char c : ws) w = c == '\t' ? (w / 8 + 1) * 8 : w + 1;
  return w;
}

std::vector<NormToken> normalize_python(const std::vector<LexToken>& tokens,
                                        const VerifyOptions& options) {
  std::vector<NormToken> out;
  std::vector<int> indents{0};
  int depth = 0;
  int pending_indent = 0;
  bool line_open = false;

  for (const LexToken& t : tokens) {
    switch (t.kind) {
      case TokenKind::kIndent:
        pending_indent = expanded_width(t.text);
        break;
      case TokenKind::kWhitespace:
        break;
      case TokenKind::kNewline:
        if (t.text[0] == '\\') break;  // explicit join
        if (depth > 0) break;          // implicit join
        if (line_open) {
          out.push_back(make(NormKind::kNewline, "", t));
          line_open = false;
        }
        pending_indent = 0;
        break;
      case TokenKind::kLineComment:
        // Comments never open a logical line or move the indent stack.
        out.push_back(
            make(NormKind::kComment, comment_interior(t, options.strict), t));
        break;
      default:
        if (!line_open) {
          const int w = pending_indent;
          while (indents.size() > 1 && w < indents.back()) {
            indents.pop_back();
            out.push_back(make(NormKind::kDedent, "", t));
          }
          if (w > indents.back()) {
            indents.push_back(w);
            out.push_back(make(NormKind::kIndent, "", t));
          }
          line_open = true;
        }
        if (t.kind == TokenKind::kPunct) {
          if (t.text == "(" || t.text == "[" || t.text == "{") {
            ++depth;
          } else if (t.text == ")" || t.text == "]" || t.text == "}") {
            if (depth > 0) --depth;
          }
        }
        out.push_back(make(NormKind::kToken, t.text, t));
        break;
    }
  }
  if (!tokens.empty()) {
    const LexToken& last = tokens.back();
    if (line_open) out.push_back(make(NormKind::kNewline, "", last));
    while (indents.size() > 1) {
      indents.pop_back();
      out.push_back(make(NormKind::kDedent, "", last));
    }
  }
  return out;
}

std::string_view marker_name(NormKind k) {
  switch (k) {
    case NormKind::kNewline:
      return "NEWLINE";
    case NormKind::kIndent:
      return "INDENT";
    case NormKind::kDedent:
      return "DEDENT";
    default:
      return "";
  }
}

// Raw text for code tokens and comments; marker names for the Python
// line-structure markers. Quoting happens in describe(), not here, so the
// fields stay machine-consumable.
std::string display(const NormToken& t) {
  if (t.kind == NormKind::kToken || t.kind == NormKind::kComment)
    return t.text;
  return std::string(marker_name(t.kind));
}

}  // namespace

bool operator==(const NormToken& a, const NormToken& b) {
  return a.kind == b.kind && a.text == b.text;
}

std::vector<NormToken> normalize_stream(std::string_view source,
                                        Language language,
                                        const VerifyOptions& options) {
  const LexResult lexed = lex(normalize_newlines(source), language);
  if (language == Language::kPython)
    return normalize_python(lexed.tokens, options);

  std::vector<NormToken> out;
  out.reserve(lexed.tokens.size());
  for (const LexToken& t : lexed.tokens) {
    if (is_trivia(t.kind)) continue;
    if (is_comment(t.kind)) {
      out.push_back(
          make(NormKind::kComment, comment_interior(t, options.strict), t));
    } else {
      out.push_back(make(NormKind::kToken, t.text, t));
    }
  }
  return out;
}

std::string Divergence::describe() const {
  std::ostringstream os;
  os << "streams diverge at element " << index << ": '" << left_text
     << "' vs '" << right_text << "' (left " << left_line << ":" << left_col
     << ", right " << right_line << ":" << right_col << ")";
  return os.str();
}

EquivalenceReport equivalent(std::string_view left, std::string_view right,
                             Language language, const VerifyOptions& options) {
  const std::vector<NormToken> a = normalize_stream(left, language, options);
  const std::vector<NormToken> b = normalize_stream(right, language, options);

  EquivalenceReport report;
  const size_t common = std::min(a.size(), b.size());
  for (size_t i = 0; i < common; ++i) {
    if (a[i] == b[i]) continue;
    Divergence d;
    d.index = i;
    d.left_text = display(a[i]);
    d.right_text = display(b[i]);
    d.left_line = a[i].line;
    d.left_col = a[i].col;
    d.right_line = b[i].line;
    d.right_col = b[i].col;
    report.first_divergence = std::move(d);
    report.compared_tokens = i;
    return report;
  }
  if (a.size() != b.size()) {
    Divergence d;
    d.index = common;
    d.left_text = common < a.size() ? display(a[common]) : "<end>";
    d.right_text = common < b.size() ? display(b[common]) : "<end>";
    if (common < a.size()) {
      d.left_line = a[common].line;
      d.left_col = a[common].col;
    }
    if (common < b.size()) {
      d.right_line = b[common].line;
      d.right_col = b[common].col;
    }
    report.first_divergence = std::move(d);
    report.compared_tokens = common;
    return report;
  }
  report.equivalent = true;
  report.compared_tokens = common;
  return report;
}

}  // namespace unfmt
