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
// Handling for incomplete code: prompts cut off mid-expression, and
// model completions that begin mid-block. The pipeline is
//
//   split_unfinished -> balance_brackets -> strip/restore
//     -> remove_ledger -> tail_rewrite -> rejoin
//
// The complete prefix (body) goes through the full transformer after bracket
// repair; the unfinished remainder (tail) only receives conservative textual
// whitespace edits. Every synthetic bracket is recorded in a ledger and
// removed again, so repair never leaks brackets into the output.

#ifndef UNFMT_PARTIAL_H_
#define UNFMT_PARTIAL_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "unfmt/language.h"
#include "unfmt/token.h"
#include "unfmt/transform.h"

namespace unfmt {

struct SplitCode {
  std::string body;     // longest transformable prefix; may be empty
  std::string tail;     // unfinished remainder; may be empty
  size_t split_offset;  // bytes in body; body + tail == input
};

// Splits after the last significant token that ends a complete unit:
// C-family: a ';', '{' or '}' at paren/bracket depth zero; Python: the last
// token of a logical line that ends at bracket depth zero. Trailing trivia
// after that token, and any unterminated string/comment, belong to the tail.
SplitCode split_unfinished(std::string_view source, Language language);

// Synthetic brackets added by balance_brackets, in textual order.
struct RepairLedger {
  std::vector<std::string> prepended_openers;
  std::vector<std::string> appended_closers;

  bool empty() const {
    return prepended_openers.empty() && appended_closers.empty();
  }
};

struct BalanceResult {
  std::string repaired;
  RepairLedger ledger;
  // One entry per closer whose kind did not match the innermost opener;
  // repair proceeds by treating such a closer as unmatched.
  std::vector<std::string> mismatches;
};

// Makes (), [] and {} balance by prepending missing openers (innermost
// first, so nesting is proper) and appending missing closers. Brackets
// inside strings and comments are ignored, since counting is done on the
// lexed significant stream.
BalanceResult balance_brackets(std::string_view body, Language language);

// Removes exactly the ledger-recorded boundary brackets from transformed
// text (skipping trivia), together with the layout trivia the formatter
// attached to them; after removing prepended openers the remaining lines are
// re-based to indent depth zero. Throws Error(kLedgerMismatch) if the
// boundary tokens no longer match the ledger.
std::string remove_ledger(std::string_view text, const RepairLedger& ledger,
                          Language language);

enum class Direction {
  kStrip,
  kRestore,
};

// Conservative whitespace edits for tail text, the textual analogue of the
// separator oracle. Strings, chars and comments located by a lexical
// pre-pass are copied verbatim (an unterminated one verbatim to the end).
// Strip direction: whitespace runs collapse to one space, which is then
// dropped unless both neighboring characters are identifier characters;
// C-family tails also drop leading indentation and join lines, Python tails
// keep their line structure. Restore direction: ensures single spaces after
// commas and around '=' where identifier characters flank it.
std::string tail_rewrite(std::string_view tail, Language language,
                         Direction direction);

// The full pipeline above. direction selects strip (with config) or restore
// (with style). Never fails on truncated input; lex flags from the input are
// reported in the result.
TransformResult transform_partial(std::string_view source, Language language,
                                  Direction direction,
                                  const FormatConfig& config,
                                  const StyleProfile& style);

// Convenience wrappers.
TransformResult strip_partial(std::string_view source, Language language,
                              const FormatConfig& config);
TransformResult restore_partial(std::string_view source, Language language,
                                const StyleProfile& style);

}  // namespace unfmt

#endif  // UNFMT_PARTIAL_H_
