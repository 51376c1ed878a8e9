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

#include "unfmt/partial.h"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "unfmt/error.h"
#include "unfmt/lexer.h"
#include "unfmt/verify.h"

namespace unfmt {

namespace {

bool is_ident_char(unsigned char c) {
  return std::isalnum(c) != 0 || c == '_' || c == '$' ||
         c >= 0x80;  // conservative: any UTF-8 continuation counts
}

bool contains_any(std::string_view s,
                  std::initializer_list<std::string_view> set) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

// Characters that can extend a multi-character operator or open a comment
// when they touch ("- -" vs "--", "/ /" vs "//"); a separating space between
// two of these must survive.
bool is_fusable_char(char c) {
  return std::string_view("+-*/%<>=&|^!?:.#@~").find(c) !=
         std::string_view::npos;
}

// The space between two characters may be dropped only when losing it cannot
// change how the text re-lexes.
bool space_required(char left, char right) {
  const auto l = static_cast<unsigned char>(left);
  const auto r = static_cast<unsigned char>(right);
  if (is_ident_char(l) && is_ident_char(r)) return true;
  return is_fusable_char(left) && is_fusable_char(right);
}

char matching_opener(char closer) {
  switch (closer) {
    case ')':
      return '(';
    case ']':
      return '[';
    default:
      return '{';
  }
}

char matching_closer(char opener) {
  switch (opener) {
    case '(':
      return ')';
    case '[':
      return ']';
    default:
      return '}';
  }
}

bool is_opener(const LexToken& t) {
  return t.kind == TokenKind::kPunct &&
         (t.text == "(" || t.text == "[" || t.text == "{");
}

bool is_closer(const LexToken& t) {
  return t.kind == TokenKind::kPunct &&
         (t.text == ")" || t.text == "]" || t.text == "}");
}

}  // namespace

SplitCode split_unfinished(std::string_view source, Language language) {
  const LexResult lexed = lex(source, language);

  size_t split = 0;
  size_t offset = 0;

  if (language == Language::kPython) {
    // The last logical line that closes at bracket depth zero, ended by an
    // explicit newline, marks the boundary; the split lands right after the
    // line's final significant token.
    int depth = 0;
    size_t line_last_sig_end = 0;
    bool line_has_sig = false;
    for (const LexToken& t : lexed.tokens) {
      const size_t end = offset + t.text.size();
      if (t.kind == TokenKind::kNewline) {
        if (t.text[0] != '\\' && depth == 0) {
          if (line_has_sig) split = line_last_sig_end;
          line_has_sig = false;
        }
      } else if (!is_trivia(t.kind)) {
        if (is_opener(t)) {
          ++depth;
        } else if (is_closer(t) && depth > 0) {
          --depth;
        }
        line_has_sig = true;
        line_last_sig_end = end;
      }
      offset = end;
    }
  } else {
    // C-family: split after the last ';', '{' or '}' outside () and [].
    int depth = 0;
    for (const LexToken& t : lexed.tokens) {
      const size_t end = offset + t.text.size();
      if (t.kind == TokenKind::kPunct) {
        if (t.text == "(" || t.text == "[") {
          ++depth;
        } else if (t.text == ")" || t.text == "]") {
          if (depth > 0) --depth;
        } else if (depth == 0 &&
                   (t.text == ";" || t.text == "{" || t.text == "}")) {
          split = end;
        }
      }
      offset = end;
    }
  }

  SplitCode result;
  result.split_offset = split;
  result.body = std::string(source.substr(0, split));
  result.tail = std::string(source.substr(split));
  return result;
}

BalanceResult balance_brackets(std::string_view body, Language language) {
  const LexResult lexed = lex(body, language);

  BalanceResult result;
  std::vector<char> stack;          // open brackets awaiting their closer
  std::vector<char> lone_closers;   // closers with no matching opener
  for (const LexToken& t : lexed.tokens) {
    if (is_opener(t)) {
      stack.push_back(t.text[0]);
    } else if (is_closer(t)) {
      const char need = matching_opener(t.text[0]);
      if (!stack.empty() && stack.back() == need) {
        stack.pop_back();
      } else {
        if (!stack.empty()) result.mismatches.push_back(std::string(t.text));
        lone_closers.push_back(t.text[0]);
      }
    }
  }

  // Openers for stray closers go up front, outermost first, so nesting in the
  // repaired text is proper; closers for unclosed openers go at the end,
  // innermost first.
  std::string prefix;
  for (auto it = lone_closers.rbegin(); it != lone_closers.rend(); ++it) {
    prefix += matching_opener(*it);
  }
  std::string suffix;
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    suffix += matching_closer(*it);
  }

  for (char c : prefix) result.ledger.prepended_openers.emplace_back(1, c);
  for (char c : suffix) result.ledger.appended_closers.emplace_back(1, c);

  // Newlines isolate the synthetic brackets from line-oriented constructs:
  // a body starting with a preprocessor directive keeps its column, a body
  // ending in a line comment cannot swallow a closer.
  result.repaired.reserve(body.size() + prefix.size() + suffix.size() + 2);
  if (!prefix.empty()) {
    result.repaired += prefix;
    result.repaired += '\n';
  }
  result.repaired += body;
  if (!suffix.empty()) {
    result.repaired += '\n';
    result.repaired += suffix;
  }
  return result;
}

std::string remove_ledger(std::string_view text, const RepairLedger& ledger,
                          Language language) {
  if (ledger.empty()) return std::string(text);

  const LexResult lexed = lex(text, language);
  std::vector<const LexToken*> sig;
  std::vector<size_t> sig_begin, sig_end;
  size_t offset = 0;
  for (const LexToken& t : lexed.tokens) {
    const size_t end = offset + t.text.size();
    if (!is_trivia(t.kind)) {
      sig.push_back(&t);
      sig_begin.push_back(offset);
      sig_end.push_back(end);
    }
    offset = end;
  }

  const size_t lead = ledger.prepended_openers.size();
  const size_t trail = ledger.appended_closers.size();
  if (sig.size() < lead + trail) {
    throw Error(ErrorCode::kLedgerMismatch,
                "transformed text has fewer tokens than the repair ledger");
  }
  for (size_t i = 0; i < lead; ++i) {
    if (sig[i]->text != ledger.prepended_openers[i]) {
      throw Error(ErrorCode::kLedgerMismatch,
                  "leading token '" + sig[i]->text +
                      "' does not match repair ledger entry '" +
                      ledger.prepended_openers[i] + "'");
    }
  }
  for (size_t i = 0; i < trail; ++i) {
    const size_t at = sig.size() - trail + i;
    if (sig[at]->text != ledger.appended_closers[i]) {
      throw Error(ErrorCode::kLedgerMismatch,
                  "trailing token '" + sig[at]->text +
                      "' does not match repair ledger entry '" +
                      ledger.appended_closers[i] + "'");
    }
  }

  if (sig.size() == lead + trail) return "";
  const size_t keep_begin = sig_begin[lead];
  const size_t keep_end = sig_end[sig.size() - trail - 1];
  std::string kept(text.substr(keep_begin, keep_end - keep_begin));

  if (lead == 0) return kept;

  // Removing synthetic openers drops a nesting level, so continuation lines
  // shed their common leading whitespace.
  std::string common;
  bool first_line = true;
  bool have_common = false;
  size_t pos = 0;
  while (pos < kept.size()) {
    size_t eol = kept.find('\n', pos);
    if (eol == std::string::npos) eol = kept.size();
    if (!first_line && eol > pos) {  // non-blank continuation line
      size_t ws = pos;
      while (ws < eol && (kept[ws] == ' ' || kept[ws] == '\t')) ++ws;
      std::string prefix = kept.substr(pos, ws - pos);
      if (!have_common) {
        common = prefix;
        have_common = true;
      } else {
        size_t n = 0;
        while (n < common.size() && n < prefix.size() &&
               common[n] == prefix[n])
          ++n;
        common.resize(n);
      }
    }
    first_line = false;
    pos = eol + 1;
  }
  if (!have_common || common.empty()) return kept;

  std::string rebased;
  rebased.reserve(kept.size());
  first_line = true;
  pos = 0;
  while (pos <= kept.size()) {
    size_t eol = kept.find('\n', pos);
    const bool last = eol == std::string::npos;
    if (last) eol = kept.size();
    size_t from = pos;
    if (!first_line && eol - pos >= common.size() &&
        kept.compare(pos, common.size(), common) == 0) {
      from = pos + common.size();
    }
    rebased.append(kept, from, eol - from);
    if (!last) rebased += '\n';
    first_line = false;
    pos = eol + 1;
    if (last) break;
  }
  return rebased;
}

namespace {

// Emits one trivia run for a strip-direction tail.
void tail_strip_gap(const std::string& gap, const LexToken* prev,
                    const LexToken* next, Language language,
                    std::string* out) {
  if (gap.empty()) return;
  const bool keep_lines = language == Language::kPython;
  if (keep_lines) {
    if (prev == nullptr) {
      *out += gap;  // the first line's indentation is structural
      return;
    }
    // Preserve newlines and line-leading indentation; collapse interior runs.
    size_t i = 0;
    while (i < gap.size()) {
      if (gap[i] == '\n' || gap[i] == '\\') {
        // copy the newline (or splice) and the following indentation
        while (i < gap.size()) {
          *out += gap[i];
          const bool was_newline = gap[i] == '\n';
          ++i;
          if (was_newline) break;
        }
        while (i < gap.size() && (gap[i] == ' ' || gap[i] == '\t')) {
          *out += gap[i];
          ++i;
        }
        continue;
      }
      // An interior space/tab run: keep one space only where dropping it
      // could re-lex the neighbors as one token.
      size_t j = i;
      while (j < gap.size() && (gap[j] == ' ' || gap[j] == '\t')) ++j;
      if (j >= gap.size() && next != nullptr && !out->empty() &&
          !next->text.empty() && space_required(out->back(), next->text[0])) {
        *out += ' ';
      }
      i = j;
    }
    return;
  }

  // C-family: join lines and drop indentation, but a line comment keeps its
  // newline and a directive keeps its line start.
  const bool has_newline = gap.find('\n') != std::string::npos;
  if (has_newline && prev != nullptr && next != nullptr &&
      (prev->kind == TokenKind::kLineComment ||
       prev->kind == TokenKind::kPreprocessor ||
       next->kind == TokenKind::kPreprocessor)) {
    *out += '\n';
    return;
  }
  if (prev == nullptr || next == nullptr) return;  // edge runs vanish
  if (!out->empty() && !next->text.empty() &&
      space_required(out->back(), next->text[0])) {
    *out += ' ';
  }
}

std::string tail_rewrite_prefix(std::string_view tail, Language language,
                                Direction direction) {
  const LexResult lexed = lex(tail, language);

  // A tail of pure trivia contributes nothing.
  bool any_sig = false;
  for (const LexToken& t : lexed.tokens) {
    if (!is_trivia(t.kind)) {
      any_sig = true;
      break;
    }
  }
  if (!any_sig) return "";

  std::string out;
  out.reserve(tail.size());

  if (direction == Direction::kStrip) {
    std::string gap;
    const LexToken* prev = nullptr;
    for (const LexToken& t : lexed.tokens) {
      if (is_trivia(t.kind)) {
        gap += t.text;
        continue;
      }
      tail_strip_gap(gap, prev, &t, language, &out);
      gap.clear();
      out += t.text;
      prev = &t;
    }
    // Trailing trivia: drop for C-family; Python keeps its final newline.
    if (language == Language::kPython && gap.find('\n') != std::string::npos)
      out += '\n';
    return out;
  }

  // Restore direction: single spaces after commas and around '=' between
  // identifier characters; everything else verbatim.
  const std::vector<LexToken>& toks = lexed.tokens;
  const LexToken* prev_sig = nullptr;
  bool sig_adjacent = false;  // no trivia emitted since the last token
  for (size_t i = 0; i < toks.size(); ++i) {
    const LexToken& t = toks[i];
    if (is_trivia(t.kind)) {
      if (t.kind == TokenKind::kNewline) {
        out += t.text;
        sig_adjacent = false;
        continue;
      }
      const LexToken* next = nullptr;
      for (size_t j = i + 1; j < toks.size(); ++j) {
        if (toks[j].kind == TokenKind::kNewline) break;
        if (!is_trivia(toks[j].kind)) {
          next = &toks[j];
          break;
        }
      }
      const bool squeeze =
          (prev_sig != nullptr &&
           (prev_sig->text == "," || prev_sig->text == "=")) ||
          (next != nullptr && next->text == "=");
      out += squeeze ? " " : std::string(t.text);
      sig_adjacent = false;
      continue;
    }
    if (sig_adjacent && prev_sig != nullptr) {
      const bool ident_left = is_ident_char(
          static_cast<unsigned char>(prev_sig->text.back()));
      const bool ident_right =
          is_ident_char(static_cast<unsigned char>(t.text[0]));
      if (prev_sig->text == "," &&
          !contains_any(t.text, {")", "]", "}", ","})) {
        out += ' ';
      } else if (t.text == "=" && ident_left) {
        out += ' ';
      } else if (prev_sig->text == "=" && ident_right) {
        out += ' ';
      }
    }
    out += t.text;
    prev_sig = &t;
    sig_adjacent = true;
  }
  return out;
}

}  // namespace

std::string tail_rewrite(std::string_view tail, Language language,
                         Direction direction) {
  if (tail.empty()) return "";

  // Everything from the first unterminated construct (or truncated UTF-8)
  // onward is copied verbatim; only the clean prefix is rewritten.
  const LexResult lexed = lex(tail, language);
  size_t verbatim_from = tail.size();
  for (const LexFlag& f : lexed.flags) {
    verbatim_from = std::min(verbatim_from, f.offset);
  }

  std::string out =
      tail_rewrite_prefix(tail.substr(0, verbatim_from), language, direction);
  out.append(tail.substr(verbatim_from));
  return out;
}

TransformResult transform_partial(std::string_view source, Language language,
                                  Direction direction,
                                  const FormatConfig& config,
                                  const StyleProfile& style) {
  TransformResult result;
  result.bytes_before = source.size();

  const std::string normalized = normalize_newlines(source);
  {
    const LexResult lexed = lex(normalized, language);
    result.lex_flags = lexed.flags;
  }

  const SplitCode split = split_unfinished(normalized, language);
  std::string body_out;
  if (!split.body.empty()) {
    BalanceResult balance = balance_brackets(split.body, language);
    TransformResult t;
    if (direction == Direction::kStrip) {
      t = strip(balance.repaired, language, config);
      result.clamped_options = t.clamped_options;
    } else {
      t = restore(balance.repaired, language, style);
    }
    body_out = remove_ledger(t.output, balance.ledger, language);
  }
  const std::string tail_out =
      tail_rewrite(split.tail, language, direction);

  if (tail_out.empty()) {
    result.output = body_out;
  } else if (body_out.empty()) {
    result.output = tail_out;
  } else if (direction == Direction::kRestore) {
    result.output = body_out;
    if (result.output.back() != '\n') result.output += '\n';
    result.output += tail_out;
  } else {
    result.output = body_out;
    // The seam is a token boundary: apply the separator oracle, and keep a
    // line break after a trailing line construct.
    const std::vector<LexToken> body_sig =
        significant(lex(body_out, language).tokens);
    const std::vector<LexToken> tail_sig =
        significant(lex(tail_out, language).tokens);
    const char last = result.output.back();
    const char first = tail_out.front();
    const bool has_gap = last == '\n' || last == ' ' || last == '\t' ||
                         first == '\n' || first == ' ' || first == '\t';
    if (!body_sig.empty() && !tail_sig.empty() && !has_gap) {
      if (body_sig.back().kind == TokenKind::kLineComment ||
          body_sig.back().kind == TokenKind::kPreprocessor ||
          tail_sig.front().kind == TokenKind::kPreprocessor) {
        result.output += '\n';
      } else if (relex_pair(body_sig.back(), tail_sig.front(), language) ==
                 MergeOutcome::kMerges) {
        result.output += ' ';
      }
    }
    result.output += tail_out;
  }

  result.bytes_after = result.output.size();
  return result;
}

TransformResult strip_partial(std::string_view source, Language language,
                              const FormatConfig& config) {
  return transform_partial(source, language, Direction::kStrip, config,
                           StyleProfile::defaults_for(language));
}

TransformResult restore_partial(std::string_view source, Language language,
                                const StyleProfile& style) {
  return transform_partial(source, language, Direction::kRestore,
                           FormatConfig{}, style);
}

}  // namespace unfmt
