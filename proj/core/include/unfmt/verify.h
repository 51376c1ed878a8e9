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
// Token-stream equivalence: two texts are equivalent when their normalized
// significant token streams match element-wise. For these languages,
// identical token streams parse to identical ASTs, so this is the practical
// stand-in for AST equivalence that the transformer is verified against.

#ifndef UNFMT_VERIFY_H_
#define UNFMT_VERIFY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unfmt/language.h"

namespace unfmt {

enum class NormKind {
  kToken,    // code token, text verbatim
  kComment,  // comment, reduced to interior text (line/block alike)
  kNewline,  // Python NEWLINE marker (logical line ended)
  kIndent,   // Python INDENT marker (block opened)
  kDedent,   // Python DEDENT marker (block closed)
};

struct NormToken {
  NormKind kind;
  std::string text;  // empty for markers
  uint32_t line = 0;
  uint32_t col = 0;
};

bool operator==(const NormToken& a, const NormToken& b);

struct VerifyOptions {
  // Strict mode compares comment texts verbatim instead of normalizing
  // their interiors.
  bool strict = false;
};

// Significant tokens with comment interiors whitespace-collapsed; Python
// streams additionally interleave NEWLINE/INDENT/DEDENT markers derived from
// logical lines, so indentation changes that alter block structure diverge.
std::vector<NormToken> normalize_stream(std::string_view source,
                                        Language language,
                                        const VerifyOptions& options = {});

struct Divergence {
  size_t index;            // position in the normalized streams
  std::string left_text;   // "<end>" when one stream is shorter
  std::string right_text;
  uint32_t left_line = 0, left_col = 0;
  uint32_t right_line = 0, right_col = 0;

  std::string describe() const;
};

struct EquivalenceReport {
  bool equivalent = false;
  std::optional<Divergence> first_divergence;
  size_t compared_tokens = 0;
};

// Element-wise comparison of the two normalized streams.
EquivalenceReport equivalent(std::string_view left, std::string_view right,
                             Language language,
                             const VerifyOptions& options = {});

}  // namespace unfmt

#endif  // UNFMT_VERIFY_H_
