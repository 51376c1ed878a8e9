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

#include "unfmt/logical_lines.h"

#include "unfmt/lexer.h"

namespace unfmt {

namespace {

int expanded_width(std::string_view ws) {
  int width = 0;
  for (char c : ws) {
    if (c == '\t') {
      width = (width / 8 + 1) * 8;
    } else {
      ++width;
    }
  }
  return width;
}

bool is_opener(const LexToken& t) {
  return t.kind == TokenKind::kPunct &&
         (t.text == "(" || t.text == "[" || t.text == "{");
}

bool is_closer(const LexToken& t) {
  return t.kind == TokenKind::kPunct &&
         (t.text == ")" || t.text == "]" || t.text == "}");
}

bool is_splice(const LexToken& t) {
  return t.kind == TokenKind::kNewline && !t.text.empty() &&
         t.text[0] == '\\';
}

}  // namespace

std::vector<LogicalLine> logical_lines(std::string_view source) {
  const LexResult lexed = lex(source, Language::kPython);

  std::vector<LogicalLine> lines;
  LogicalLine cur;
  bool active = false;
  int depth = 0;
  int physical_indent = 0;

  auto reset = [&] {
    cur = LogicalLine{};
    active = false;
    physical_indent = 0;
  };

  auto activate = [&](const LexToken& t) {
    if (active) return;
    active = true;
    cur.indent_width = physical_indent;
    cur.first_line = t.line;
  };

  for (const LexToken& t : lexed.tokens) {
    switch (t.kind) {
      case TokenKind::kIndent:
        physical_indent = expanded_width(t.text);
        break;
      case TokenKind::kWhitespace:
        break;
      case TokenKind::kNewline:
        if (is_splice(t)) {
          activate(t);
          cur.joined_explicit = true;
          physical_indent = 0;
          break;
        }
        if (active && depth > 0) {
          cur.joined_implicit = true;
          physical_indent = 0;
          break;
        }
        if (!active) {
          // Blank line.
          cur.indent_width = physical_indent;
          cur.first_line = t.line;
        }
        lines.push_back(std::move(cur));
        reset();
        break;
      case TokenKind::kLineComment:
        // A comment-only line becomes a logical line with no tokens.
        activate(t);
        cur.comments.push_back(t);
        break;
      default:
        activate(t);
        if (is_opener(t)) {
          ++depth;
        } else if (is_closer(t) && depth > 0) {
          --depth;
        }
        cur.tokens.push_back(t);
        break;
    }
  }
  if (active) lines.push_back(std::move(cur));
  return lines;
}

}  // namespace unfmt
