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
// Token-driven layout. The engine never invents or deletes significant
// tokens; every spacing decision errs toward a space, because whitespace can
// only add a token boundary that already existed, while a wrongly omitted
// space can fuse two tokens.

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "unfmt/error.h"
#include "unfmt/lexer.h"
#include "unfmt/transform.h"

namespace unfmt {
namespace {

// A significant token plus the count of hard line breaks that preceded it in
// the input (used for blank-line preservation and comment attachment).
struct SigTok {
  const LexToken* tok;
  int newlines_before;
};

std::vector<SigTok> significant_with_breaks(const std::vector<LexToken>& in) {
  std::vector<SigTok> out;
  int newlines = 0;
  for (const LexToken& t : in) {
    if (is_trivia(t.kind)) {
      // Backslash splices join lines; they do not count as breaks.
      if (t.kind == TokenKind::kNewline && t.text[0] != '\\') ++newlines;
      continue;
    }
    out.push_back({&t, newlines});
    newlines = 0;
  }
  return out;
}

bool contains(std::initializer_list<std::string_view> set,
              std::string_view s) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

// ---------------------------------------------------------------------------
// C-family layout
// ---------------------------------------------------------------------------

// Keywords that take a parenthesized clause and get a space before the paren.
bool is_control_paren_word(std::string_view s) {
  return contains({"if", "else", "for", "foreach", "while", "do", "switch",
                   "catch", "using", "lock", "synchronized", "return",
                   "throw", "new", "delete", "assert"},
                  s);
}

// Words that introduce an expression rather than ending one; an operator
// after them is unary.
bool is_c_expr_keyword(std::string_view s) {
  return contains({"return", "case", "goto", "throw", "new", "delete",
                   "sizeof", "typeof", "co_return", "co_yield", "co_await",
                   "yield", "await", "default", "else", "do", "in", "out",
                   "ref", "not", "and", "or"},
                  s);
}

bool is_member_op(std::string_view s) {
  return contains({".", "->", "::", "?.", ".*", "->*"}, s);
}

bool is_value_kind(TokenKind k) {
  return k == TokenKind::kWord || k == TokenKind::kNumber ||
         k == TokenKind::kString || k == TokenKind::kChar;
}

// True when `t` can end an operand, so a following +,-,*,&c. reads as binary.
bool c_is_operand_ender(const LexToken& t) {
  if (t.kind == TokenKind::kWord) return !is_c_expr_keyword(t.text);
  if (is_value_kind(t.kind)) return true;
  if (t.kind == TokenKind::kPunct) return t.text == ")" || t.text == "]";
  if (t.kind == TokenKind::kOperator)
    return t.text == "++" || t.text == "--";
  return false;
}

// Words that introduce a braced body, never a braced list.
bool is_structure_word(std::string_view s) {
  return contains({"class", "struct", "union", "enum", "interface",
                   "namespace", "record", "implements", "extends", "throws",
                   "permits", "where", "delegate"},
                  s);
}

// Angle brackets acting as template/generic argument delimiters, identified
// by a bounded forward scan from each candidate '<'. A wrong guess only
// affects spacing taste, never correctness: write_token re-checks every
// omitted space against the re-lex oracle.
enum class AngleMark : uint8_t { kNone, kOpen, kClose, kCloseTwo };

bool angle_trigger(const LexToken& t) {
  return t.kind == TokenKind::kWord && !is_control_paren_word(t.text) &&
         !is_c_expr_keyword(t.text);
}

std::vector<AngleMark> mark_angles(const std::vector<SigTok>& toks) {
  std::vector<AngleMark> marks(toks.size(), AngleMark::kNone);
  for (size_t i = 0; i < toks.size(); ++i) {
    if (marks[i] != AngleMark::kNone) continue;
    if (toks[i].tok->text != "<" ||
        toks[i].tok->kind != TokenKind::kOperator)
      continue;
    if (i == 0 || !angle_trigger(*toks[i - 1].tok)) continue;

    std::vector<size_t> opens = {i};
    std::vector<size_t> open_marks;
    std::vector<std::pair<size_t, AngleMark>> closes;
    int paren_depth = 0;
    bool matched = false;
    const size_t limit = std::min(toks.size(), i + 64);
    for (size_t j = i + 1; j < limit && !matched; ++j) {
      const LexToken& t = *toks[j].tok;
      const std::string_view s = t.text;
      if (paren_depth > 0) {
        // Inside parenthesized template arguments ("function<void(int)>"),
        // anything goes except a statement boundary.
        if (s == "(") ++paren_depth;
        if (s == ")") --paren_depth;
        if (s == ";" || s == "{" || s == "}") break;
        continue;
      }
      if (s == "(") {
        ++paren_depth;
      } else if (s == "<" && t.kind == TokenKind::kOperator) {
        if (!angle_trigger(*toks[j - 1].tok)) break;
        opens.push_back(j);
      } else if (s == ">" && t.kind == TokenKind::kOperator) {
        closes.emplace_back(j, AngleMark::kClose);
        open_marks.push_back(opens.back());
        opens.pop_back();
        matched = opens.empty();
      } else if (s == ">>" && t.kind == TokenKind::kOperator) {
        if (opens.size() < 2) break;
        closes.emplace_back(j, AngleMark::kCloseTwo);
        open_marks.push_back(opens.back());
        opens.pop_back();
        open_marks.push_back(opens.back());
        opens.pop_back();
        matched = opens.empty();
      } else if (t.kind == TokenKind::kWord ||
                 t.kind == TokenKind::kNumber || s == "," || s == "::" ||
                 s == "." || s == "?" || s == "*" || s == "&" ||
                 s == "...") {
        // Type-ish tokens; all else (other operators, literals, statement
        // punctuation) means this '<' was a comparison after all.
      } else {
        break;
      }
    }
    if (!matched) continue;
    for (size_t open : open_marks) marks[open] = AngleMark::kOpen;
    for (const auto& [idx, kind] : closes) marks[idx] = kind;
  }
  return marks;
}

class CFamilyEmitter {
 public:
  CFamilyEmitter(Language language, const StyleProfile& style)
      : lang_(language), style_(style) {}

  std::string run(const std::vector<SigTok>& tokens) {
    const std::vector<AngleMark> marks = mark_angles(tokens);
    for (size_t i = 0; i < tokens.size(); ++i) {
      const LexToken* next =
          i + 1 < tokens.size() ? tokens[i + 1].tok : nullptr;
      cur_mark_ = marks[i];
      emit(*tokens[i].tok, tokens[i].newlines_before, next);
    }
    for (const Ctx& c : ctx_) {
      if (c.kind == CtxKind::kBlock || c.kind == CtxKind::kInit) {
        throw Error(ErrorCode::kUnbalancedBraces,
                    "unclosed brace at end of input");
      }
    }
    if (!out_.empty() && out_.back() != '\n') out_ += '\n';
    return std::move(out_);
  }

 private:
  enum class CtxKind { kParen, kBracket, kBlock, kInit };
  struct Ctx {
    CtxKind kind;
    bool flag = false;  // paren: for-header; bracket: began a line; block: do-body
    bool empty = false;  // block: fused "{}"
  };

  bool in_init() const {
    return !ctx_.empty() && ctx_.back().kind == CtxKind::kInit;
  }

  void break_line() {
    if (!out_.empty() && out_.back() != '\n') out_ += '\n';
    line_dirty_ = false;
    annotation_run_ = false;
  }

  void pad_indent() {
    out_.append(static_cast<size_t>(indent_) *
                    static_cast<size_t>(style_.indent_width),
                ' ');
  }

  void emit(const LexToken& t, int nl_before, const LexToken* next) {
    // Trailing comments stay on the line they annotate.
    if ((t.kind == TokenKind::kLineComment ||
         t.kind == TokenKind::kBlockComment) &&
        nl_before == 0 && line_dirty_) {
      if (t.kind == TokenKind::kBlockComment && !pending_newline_) {
        out_ += ' ';
        out_ += t.text;
        finish(t);
        return;
      }
      out_ += "  ";
      out_ += t.text;
      pending_newline_ = true;
      finish(t);
      return;
    }

    if (t.kind == TokenKind::kLineComment ||
        t.kind == TokenKind::kBlockComment) {
      start_line(nl_before, /*blanks_ok=*/true);
      pad_indent();
      out_ += t.text;
      line_dirty_ = true;
      pending_newline_ = true;
      finish(t);
      return;
    }

    if (t.kind == TokenKind::kPreprocessor) {
      if (line_dirty_) pending_newline_ = true;
      start_line(nl_before, /*blanks_ok=*/true);
      out_ += t.text;  // directives sit at column 0
      line_dirty_ = true;
      pending_newline_ = true;
      finish(t);
      return;
    }

    if (t.kind == TokenKind::kPunct && t.text == "}") {
      emit_close_brace(t, nl_before, next);
      finish(t);
      return;
    }

    if (t.kind == TokenKind::kPunct && t.text == "{") {
      emit_open_brace(t, nl_before, next);
      finish(t);
      return;
    }

    // Tokens that attach leftward cancel a pending break (never across a
    // line comment or preprocessor line, which own their newline).
    const bool prev_line_construct =
        prev_ != nullptr && (prev_->kind == TokenKind::kLineComment ||
                             prev_->kind == TokenKind::kPreprocessor);
    if (pending_newline_ && !prev_line_construct) {
      const bool attach_always =
          t.kind == TokenKind::kPunct &&
          (t.text == ";" || t.text == "," || t.text == ")" || t.text == "]");
      const bool attach_after_brace =
          prev_ != nullptr && prev_->text == "}" &&
          (t.text == "(" || is_member_op(t.text));
      if (attach_always || attach_after_brace) pending_newline_ = false;
    }

    // Honor an input break after an attribute/annotation line or after a
    // label colon (access specifiers, case labels).
    if (!pending_newline_ && nl_before > 0 && ctx_paren_depth() == 0 &&
        !in_init() && prev_ != nullptr) {
      if (annotation_run_ || prev_->text == ":") pending_newline_ = true;
    }

    if (pending_newline_) {
      start_line(nl_before, /*blanks_ok=*/true);
      pad_indent();
      emitted_fresh_ = true;
      write_token(t, /*space_before=*/false);
    } else {
      emitted_fresh_ = !line_dirty_;
      write_token(t, line_dirty_ && space_before(t));
    }

    track(t, next);
    finish(t);
  }

  // Starts a fresh physical line, inserting preserved blank lines (capped).
  // prev_ != nullptr keeps blanks off the top of the file; "{" keeps the
  // first line of a block flush against its brace.
  void start_line(int nl_before, bool blanks_ok) {
    break_line();
    pending_newline_ = false;
    if (blanks_ok && prev_ != nullptr && prev_->text != "{") {
      int blanks = std::min(std::max(nl_before - 1, 0), style_.max_blank_lines);
      for (int i = 0; i < blanks; ++i) out_ += '\n';
    }
  }

  void write_token(const LexToken& t, bool space) {
    // Tightness is the risky direction: omitting a space may only stand if
    // the neighbors still re-lex as themselves.
    if (!space && line_dirty_ && prev_ != nullptr &&
        prev_->is_significant() &&
        relex_pair(*prev_, t, lang_) == MergeOutcome::kMerges) {
      space = true;
    }
    if (space) out_ += ' ';
    out_ += t.text;
    line_dirty_ = true;
  }

  void emit_open_brace(const LexToken& t, int nl_before, const LexToken* next) {
    const bool init = is_init_brace();
    if (init) {
      bool space = line_dirty_ && !pending_newline_ && space_before(t);
      if (pending_newline_) {
        start_line(nl_before, true);
        pad_indent();
        space = false;
      }
      write_token(t, space);
      ctx_.push_back({CtxKind::kInit});
      track(t, next);
      return;
    }
    const bool fused = next != nullptr && next->text == "}" &&
                       next->kind == TokenKind::kPunct;
    if (pending_newline_ || !line_dirty_) {
      start_line(nl_before, true);
      pad_indent();
      write_token(t, false);
    } else {
      write_token(t, true);  // attached brace style
    }
    Ctx c{CtxKind::kBlock};
    c.flag = saw_do_;
    c.empty = fused;
    saw_do_ = false;
    ctx_.push_back(c);
    if (!fused) {
      ++indent_;
      pending_newline_ = true;
    }
    track(t, next);
  }

  void emit_close_brace(const LexToken& t, int nl_before,
                        const LexToken* next) {
    if (ctx_.empty()) {
      throw Error(ErrorCode::kUnbalancedBraces, "unmatched '}'");
    }
    Ctx top = ctx_.back();
    if (top.kind == CtxKind::kInit) {
      ctx_.pop_back();
      if (pending_newline_) {
        // A comment or directive inside the initializer owns its line end.
        start_line(nl_before, /*blanks_ok=*/false);
        pad_indent();
        write_token(t, false);
      } else {
        // C# pads non-empty braced bodies: "{ get; set; }".
        write_token(t, lang_ == Language::kCSharp && prev_ != nullptr &&
                           prev_->text != "{");
      }
      // A value token after a braced list starts its own statement (C#
      // property bodies); punctuation and operators stay attached.
      if (next != nullptr && is_value_kind(next->kind)) {
        pending_newline_ = true;
      }
      track(t, next);
      return;
    }
    if (top.kind != CtxKind::kBlock) {
      throw Error(ErrorCode::kUnbalancedBraces,
                  "'}' closes an unclosed parenthesis");
    }
    ctx_.pop_back();
    if (top.empty) {
      write_token(t, false);  // fused "{}"
    } else {
      --indent_;
      pending_newline_ = false;
      start_line(nl_before, /*blanks_ok=*/false);
      pad_indent();
      write_token(t, false);
    }
    // "} else", "} catch", "} finally", and do-while "} while" share a line.
    pending_newline_ = true;
    if (next != nullptr && next->kind == TokenKind::kWord) {
      if (contains({"else", "catch", "finally"}, next->text) ||
          (next->text == "while" && top.flag)) {
        pending_newline_ = false;
      }
    }
    track(t, next);
  }

  // An opening brace is an initializer (kept inline) rather than a block.
  bool is_init_brace() const {
    if (in_init()) return true;
    if (prev_ == nullptr) return false;
    if (contains({"=", "(", ",", "["}, prev_->text)) return true;
    if (prev_->kind == TokenKind::kWord && prev_->text == "return")
      return true;
    // Java/C# array literals: "new int[] {1, 2}". C++ "]" is a lambda intro.
    if (prev_->text == "]" && lang_ != Language::kCpp) return true;
    const bool in_expr =
        !ctx_.empty() && (ctx_.back().kind == CtxKind::kParen ||
                          ctx_.back().kind == CtxKind::kBracket);
    if (prev_->kind == TokenKind::kWord && !is_c_expr_keyword(prev_->text) &&
        !is_structure_word(prev_->text)) {
      // Inside parens/brackets no block statement can start, so a brace
      // after a type-ish word is list-initialization: "f(Foo{1})".
      if (in_expr) return true;
      // Declarator form "Type name {...}": two plain words (or a generic
      // type) before the brace, in a statement that declares no type.
      if (!stmt_structure_ && prev_->text != "final" &&
          prevprev_ != nullptr &&
          ((prevprev_->kind == TokenKind::kWord &&
            !is_structure_word(prevprev_->text)) ||
           prevprev_mark_ == AngleMark::kClose ||
           prevprev_mark_ == AngleMark::kCloseTwo))
        return true;
    }
    // "set<int>{...}" as an operand; "template <> struct S<int> {" is not.
    if ((prev_mark_ == AngleMark::kClose ||
         prev_mark_ == AngleMark::kCloseTwo) &&
        (in_expr || !stmt_structure_))
      return true;
    return false;
  }

  int ctx_paren_depth() const {
    int d = 0;
    for (const Ctx& c : ctx_) {
      if (c.kind == CtxKind::kParen || c.kind == CtxKind::kBracket) ++d;
    }
    return d;
  }

  void track(const LexToken& t, const LexToken* next) {
    (void)next;
    if (t.kind == TokenKind::kPunct) {
      switch (t.text[0]) {
        case '(': {
          Ctx c{CtxKind::kParen};
          c.flag = prev_ != nullptr && prev_->kind == TokenKind::kWord &&
                   (prev_->text == "for" || prev_->text == "foreach");
          ctx_.push_back(c);
          break;
        }
        case ')':
          if (!ctx_.empty() && ctx_.back().kind == CtxKind::kParen)
            ctx_.pop_back();
          break;
        case '[': {
          Ctx c{CtxKind::kBracket};
          c.flag = emitted_fresh_;
          ctx_.push_back(c);
          break;
        }
        case ']':
          if (!ctx_.empty() && ctx_.back().kind == CtxKind::kBracket) {
            if (ctx_.back().flag) annotation_run_ = true;
            ctx_.pop_back();
          }
          break;
        case ';': {
          saw_do_ = false;
          // The nearest enclosing layout context decides: for-headers keep
          // their semicolons inline, blocks break the line.
          bool newline = true;
          for (auto it = ctx_.rbegin(); it != ctx_.rend(); ++it) {
            if (it->kind == CtxKind::kParen) {
              newline = !it->flag;
              break;
            }
            if (it->kind == CtxKind::kBlock) break;
            if (it->kind == CtxKind::kInit) {
              newline = false;
              break;
            }
          }
          pending_newline_ = newline;
          break;
        }
        default:
          break;
      }
    } else if (t.kind == TokenKind::kWord) {
      if (t.text == "do" && !in_init()) saw_do_ = true;
    }
    if (t.text == "@" && emitted_fresh_) annotation_run_ = true;
  }

  // Decides the space to the left of `t`; `prev_` is the emitted neighbor.
  bool space_before(const LexToken& t) {
    const LexToken& p = *prev_;
    const std::string_view pt = p.text;
    const std::string_view tt = t.text;

    if (t.kind == TokenKind::kPunct &&
        (tt == ";" || tt == "," || tt == ")" || tt == "]"))
      return false;
    if (p.kind == TokenKind::kPunct && (pt == "(" || pt == "["))
      return false;
    if (tt == "}") return false;  // initializer close (see emit_close_brace)

    // Member access binds tight, except around numbers, where fusing would
    // extend a numeric literal ("1.5", ".5").
    if (is_member_op(tt) || is_member_op(pt)) {
      if (p.kind == TokenKind::kNumber || t.kind == TokenKind::kNumber)
        return true;
      return false;
    }

    // Template/generic argument lists print tight: "vector<int> v". Only
    // the C++ "template <...>" head keeps its space.
    if (cur_mark_ == AngleMark::kOpen) return pt == "template";
    if (cur_mark_ != AngleMark::kNone) return false;
    if (prev_mark_ == AngleMark::kOpen) return false;
    if (prev_mark_ != AngleMark::kNone) {
      return is_value_kind(t.kind) || t.kind == TokenKind::kBlockComment;
    }

    // C++ operator functions: "operator<(", "operator+(".
    if (lang_ == Language::kCpp && pt == "operator" &&
        t.kind == TokenKind::kOperator)
      return false;
    if (prev_op_symbol_ && tt == "(") return false;

    if (pt == "@") return false;  // annotations: "@Override"
    if (pt == "++" || pt == "--") {
      if (is_value_kind(t.kind) || tt == "(") return false;
    }

    if (tt == "(") {
      if (p.kind == TokenKind::kWord) {
        return is_control_paren_word(pt) && style_.space_after_control_keyword;
      }
      if (pt == ")" || pt == "]" || pt == "++" || pt == "--") return false;
      return space_after_context(p);
    }
    if (tt == "[") {
      if (p.kind == TokenKind::kWord && !is_c_expr_keyword(pt)) return false;
      if (p.kind == TokenKind::kString || pt == ")" || pt == "]") return false;
      return space_after_context(p);
    }
    if (tt == "{") {  // initializer open
      // C++ list-init is tight after a declarator or type ("Foo{1}");
      // expression keywords and '=' keep a space ("return {0};").
      if (lang_ == Language::kCpp && p.kind == TokenKind::kWord &&
          !is_c_expr_keyword(pt))
        return false;
      return space_after_context(p);
    }

    if (tt == "++" || tt == "--") {
      if (c_is_operand_ender(p)) return false;  // postfix
      return space_after_context(p);
    }

    // C++ reference/pointer declarators attach to the type when the type is
    // provably a type: "const Span& a", "const char* s".
    if (lang_ == Language::kCpp && (tt == "&" || tt == "*" || tt == "&&") &&
        p.kind == TokenKind::kWord && prevprev_ != nullptr &&
        contains({"const", "volatile"}, prevprev_->text))
      return false;

    if (t.kind == TokenKind::kOperator) {
      if (c_is_operand_ender(p)) return style_.space_around_binary_ops;
      return space_after_context(p);
    }

    if (is_value_kind(t.kind) || t.kind == TokenKind::kBlockComment) {
      if (prev_unary_) return false;
      if (p.kind == TokenKind::kPunct) {
        if (pt == ",") return style_.space_after_comma;
        if (pt == "{" && in_init())
          return lang_ == Language::kCSharp;  // "{1, 2}" vs "{ get; set; }"
        return true;  // ; in for-headers, }, etc.
      }
      return true;
    }
    if (tt == ":") return false;
    return true;
  }

  // Spacing demanded by the left token when the right side has no opinion
  // (openers, unary operators).
  bool space_after_context(const LexToken& p) {
    const std::string_view pt = p.text;
    if (pt == ",") return style_.space_after_comma;
    if (pt == "(" || pt == "[" || pt == "@") return false;
    if (pt == "{" && in_init()) return lang_ == Language::kCSharp;
    return true;
  }

  void finish(const LexToken& t) {
    const bool prev_ends_operand =
        prev_ != nullptr && (c_is_operand_ender(*prev_) ||
                             prev_mark_ == AngleMark::kClose ||
                             prev_mark_ == AngleMark::kCloseTwo);  // "Foo<T>&"
    if (t.kind == TokenKind::kOperator && prev_ != nullptr &&
        !prev_ends_operand &&
        contains({"+", "-", "*", "&", "!", "~", "++", "--"}, t.text)) {
      prev_unary_ = true;
    } else if (prev_ == nullptr &&
               contains({"+", "-", "*", "&", "!", "~"}, t.text)) {
      prev_unary_ = true;
    } else {
      prev_unary_ = false;
    }
    prev_op_symbol_ = lang_ == Language::kCpp && prev_ != nullptr &&
                      prev_->text == "operator" &&
                      t.kind == TokenKind::kOperator;
    if (t.kind == TokenKind::kWord && is_structure_word(t.text)) {
      stmt_structure_ = true;
    } else if (t.kind == TokenKind::kPunct &&
               (t.text == ";" || t.text == "{" || t.text == "}")) {
      stmt_structure_ = false;
    }
    prevprev_ = prev_;
    prevprev_mark_ = prev_mark_;
    prev_ = &t;
    prev_mark_ = cur_mark_;
  }

  Language lang_;
  const StyleProfile& style_;
  std::string out_;
  std::vector<Ctx> ctx_;
  const LexToken* prev_ = nullptr;
  const LexToken* prevprev_ = nullptr;
  AngleMark cur_mark_ = AngleMark::kNone;
  AngleMark prev_mark_ = AngleMark::kNone;
  AngleMark prevprev_mark_ = AngleMark::kNone;
  int indent_ = 0;
  bool line_dirty_ = false;
  bool emitted_fresh_ = false;
  bool pending_newline_ = false;
  bool prev_unary_ = false;
  bool saw_do_ = false;
  bool annotation_run_ = false;
  bool prev_op_symbol_ = false;
  bool stmt_structure_ = false;
};

// ---------------------------------------------------------------------------
// Python layout
// ---------------------------------------------------------------------------

bool is_python_keyword(std::string_view s) {
  return contains(
      {"False", "None",   "True",   "and",      "as",     "assert", "async",
       "await", "break",  "class",  "continue", "def",    "del",    "elif",
       "else",  "except", "finally", "for",     "from",   "global", "if",
       "import", "in",    "is",     "lambda",   "nonlocal", "not",  "or",
       "pass",  "raise",  "return", "try",      "while",  "with",   "yield"},
      s);
}

bool py_is_operand_ender(const LexToken& t) {
  if (t.kind == TokenKind::kWord) {
    if (contains({"True", "False", "None"}, t.text)) return true;
    return !is_python_keyword(t.text);
  }
  if (is_value_kind(t.kind)) return true;
  if (t.kind == TokenKind::kPunct)
    return t.text == ")" || t.text == "]" || t.text == "}";
  return false;
}

class PythonEmitter {
 public:
  explicit PythonEmitter(const StyleProfile& style) : style_(style) {
    indent_stack_.push_back(0);
  }

  std::string run(const std::vector<LexToken>& tokens) {
    for (size_t i = 0; i < tokens.size(); ++i) {
      const LexToken& t = tokens[i];
      switch (t.kind) {
        case TokenKind::kIndent:
          pending_indent_ = expanded_width(t.text);
          break;
        case TokenKind::kWhitespace:
          break;
        case TokenKind::kNewline:
          on_newline(t);
          break;
        case TokenKind::kLineComment:
          on_comment(t);
          break;
        default:
          on_significant(t);
          break;
      }
    }
    if (line_open_) out_ += '\n';
    return std::move(out_);
  }

 private:
  struct Bracket {
    char open;
    bool saw_colon = false;  // annotation seen in the current parameter
  };

  static int expanded_width(std::string_view ws) {
    int w = 0;
    for (char c : ws) w = c == '\t' ? (w / 8 + 1) * 8 : w + 1;
    return w;
  }

  void on_newline(const LexToken& t) {
    const bool splice = t.text[0] == '\\';
    if (splice) return;  // explicit join: keep building the logical line
    if (!brackets_.empty()) return;  // implicit join
    if (line_open_) {
      out_ += '\n';
      line_open_ = false;
      prev_ = nullptr;
      prev_unary_ = false;
      continuation_ = false;
    } else {
      ++pending_blanks_;
    }
    pending_indent_ = 0;
  }

  void on_comment(const LexToken& t) {
    if (line_open_) {
      out_ += "  ";
      out_ += t.text;
      if (!brackets_.empty()) {
        // A comment inside an open bracket must end its physical line.
        out_ += '\n';
        continuation_ = true;
      }
      return;
    }
    open_line(t);
    out_ += t.text;
  }

  void on_significant(const LexToken& t) {
    const bool fresh = !line_open_ || continuation_;
    if (!line_open_) {
      open_line(t);
      write(t, false);
    } else if (continuation_) {
      out_.append(static_cast<size_t>(line_depth_ + 1) *
                      static_cast<size_t>(style_.indent_width),
                  ' ');
      continuation_ = false;
      write(t, false);
    } else {
      write(t, prev_ != nullptr && space_before(t));
    }
    if (t.text == "@") at_decorator_ = fresh;
    track(t);
  }

  // Maps the observed indent to a depth and begins the physical line.
  void open_line(const LexToken& first) {
    (void)first;
    if (started_) {
      int blanks = std::min(pending_blanks_, style_.max_blank_lines);
      for (int i = 0; i < blanks; ++i) out_ += '\n';
    }
    pending_blanks_ = 0;
    started_ = true;

    const int w = pending_indent_;
    while (indent_stack_.size() > 1 && w < indent_stack_.back())
      indent_stack_.pop_back();
    if (w > indent_stack_.back()) indent_stack_.push_back(w);
    line_depth_ = static_cast<int>(indent_stack_.size()) - 1;

    out_.append(static_cast<size_t>(line_depth_) *
                    static_cast<size_t>(style_.indent_width),
                ' ');
    line_open_ = true;
  }

  void write(const LexToken& t, bool space) {
    // Same safety rule as the C-family emitter: a space may only be omitted
    // when the neighbors do not re-lex as a merged token.
    if (!space && prev_ != nullptr && prev_->is_significant() &&
        relex_pair(*prev_, t, Language::kPython) == MergeOutcome::kMerges) {
      space = true;
    }
    if (space) out_ += ' ';
    out_ += t.text;
  }

  void track(const LexToken& t) {
    const std::string_view s = t.text;
    if (t.kind == TokenKind::kPunct) {
      if (s == "(" || s == "[" || s == "{") {
        brackets_.push_back({s[0]});
      } else if (s == ")" || s == "]" || s == "}") {
        if (!brackets_.empty()) brackets_.pop_back();
      } else if (s == "," && !brackets_.empty()) {
        brackets_.back().saw_colon = false;
      }
    }
    if (s == ":" && !brackets_.empty() && brackets_.back().open == '(')
      brackets_.back().saw_colon = true;

    colon_tight_after_ =
        s == ":" && !brackets_.empty() && brackets_.back().open == '[';
    eq_tight_after_ = s == "=" && eq_tight_now_;

    const bool unary_pos = prev_ == nullptr || !py_is_operand_ender(*prev_);
    prev_unary_ = t.kind == TokenKind::kOperator && unary_pos &&
                  contains({"+", "-", "~", "*", "**", "&"}, s);
    prev_ = &t;
  }

  bool space_before(const LexToken& t) {
    const LexToken& p = *prev_;
    const std::string_view pt = p.text;
    const std::string_view tt = t.text;

    if (tt == "," || tt == ";") return false;
    if (tt == ")" || tt == "]" || tt == "}") return false;
    if (p.kind == TokenKind::kPunct && (pt == "(" || pt == "[" || pt == "{"))
      return false;
    if (tt == ":") {
      return false;  // slices, annotations, and suites all bind left
    }
    if (pt == ":") return !colon_tight_after_;
    if (pt == "=") return !eq_tight_after_;
    if (tt == "**" || pt == "**") {
      if (tt == "**") return py_is_operand_ender(p) ? false : ctx_space(p);
      return false;  // operand after ** binds tight
    }
    if (is_member_op(tt) || is_member_op(pt)) {
      if (tt == "->" || pt == "->") return true;  // return annotations
      if (p.kind == TokenKind::kNumber || t.kind == TokenKind::kNumber)
        return true;
      return false;
    }
    if (pt == "@") return !at_decorator_;

    if (tt == "=") {
      // Keyword arguments and unannotated defaults bind tight inside parens.
      eq_tight_now_ = !brackets_.empty() && brackets_.back().open == '(' &&
                      !brackets_.back().saw_colon;
      return !eq_tight_now_;
    }
    eq_tight_now_ = false;

    if (tt == "(" || tt == "[") {
      if (p.kind == TokenKind::kWord)
        return is_python_keyword(pt) &&
               !contains({"True", "False", "None"}, pt);
      if (pt == ")" || pt == "]" || p.kind == TokenKind::kString) return false;
      if (tt == "[" && pt == "}") return false;
      return ctx_space(p);
    }
    if (tt == "{") return ctx_space(p);

    if (t.kind == TokenKind::kOperator) {
      if (py_is_operand_ender(p)) return true;
      return ctx_space(p);
    }

    if (prev_unary_) return false;
    if (pt == ",") return true;
    if (pt == ";") return true;
    return true;
  }

  bool ctx_space(const LexToken& p) {
    const std::string_view pt = p.text;
    if (pt == "(" || pt == "[" || pt == "{" || pt == "@") return false;
    return true;
  }

  const StyleProfile& style_;
  std::string out_;
  std::vector<int> indent_stack_;
  std::vector<Bracket> brackets_;
  const LexToken* prev_ = nullptr;
  int pending_indent_ = 0;
  int pending_blanks_ = 0;
  int line_depth_ = 0;
  bool line_open_ = false;
  bool started_ = false;
  bool continuation_ = false;
  bool prev_unary_ = false;
  bool colon_tight_after_ = false;
  bool eq_tight_after_ = false;
  bool eq_tight_now_ = false;
  bool at_decorator_ = false;
};

}  // namespace

TransformResult restore(std::string_view source, Language language,
                        const StyleProfile& style) {
  TransformResult result;
  result.bytes_before = source.size();

  const std::string normalized = normalize_newlines(source);
  const LexResult lexed = lex(normalized, language);
  result.lex_flags = lexed.flags;

  if (language == Language::kPython) {
    PythonEmitter emitter(style);
    result.output = emitter.run(lexed.tokens);
  } else {
    CFamilyEmitter emitter(language, style);
    result.output = emitter.run(significant_with_breaks(lexed.tokens));
  }
  result.bytes_after = result.output.size();
  return result;
}

}  // namespace unfmt
