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
// Token metering: how much does stripping actually save, under a chosen
// token counter? Builtin counters (bytes, words) need no data files; a BPE
// counter loads a vocab + merges pair so counts can approximate a deployed
// model's tokenizer.

#ifndef UNFMT_METERING_H_
#define UNFMT_METERING_H_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unfmt/language.h"
#include "unfmt/transform.h"

namespace unfmt {

enum class TokenizerKind {
  kBuiltinBytes,  // token count = byte count
  kBuiltinWords,  // maximal non-whitespace runs; punctuation counts singly
  kBpe,           // byte-level pair merging driven by vocab + merges files
};

struct TokenizerSpec {
  TokenizerKind kind = TokenizerKind::kBuiltinWords;
  std::string vocab_path;   // BPE only: JSON object {token: id}
  std::string merges_path;  // BPE only: one "left right" pair per line,
                            // rank = line order, '#' lines are comments

  static TokenizerSpec bytes() { return {TokenizerKind::kBuiltinBytes}; }
  static TokenizerSpec words() { return {TokenizerKind::kBuiltinWords}; }
  static TokenizerSpec bpe(std::string vocab, std::string merges) {
    return {TokenizerKind::kBpe, std::move(vocab), std::move(merges)};
  }
};

class Tokenizer {
 public:
  virtual ~Tokenizer() = default;
  virtual size_t count(std::string_view text) const = 0;
  virtual std::string_view name() const = 0;
};

// Throws Error(kMissingFile / kMalformedVocab / kMalformedMerges) for BPE
// specs whose files are absent, whose ids are not exactly 0..N-1, or whose
// merge rules reference symbols missing from the vocab.
std::unique_ptr<Tokenizer> load_tokenizer(const TokenizerSpec& spec);

size_t count_tokens(const Tokenizer& tokenizer, std::string_view text);

struct ReductionStats {
  size_t tokens_before = 0;
  size_t tokens_after = 0;
  double reduction_pct = 0.0;  // 100 * (before - after) / before; 0 if before=0
};

ReductionStats reduction(std::string_view before, std::string_view after,
                         const Tokenizer& tokenizer);

struct FileReport {
  std::string path;  // relative to the corpus root, '/'-separated
  Language language;
  ReductionStats stats;
  double latency_ms = 0.0;  // strip + restore wall time
  bool verified = false;    // original vs strip output token-equivalent
  std::optional<std::string> error;  // per-file I/O problem, if any
};

struct LanguageAggregate {
  double mean_reduction_pct = 0.0;
  double median_reduction_pct = 0.0;
  double mean_latency_ms = 0.0;
  size_t files = 0;     // rows included in the aggregates (verified)
  size_t failures = 0;  // rows excluded (unverified or unreadable)
};

struct CorpusReport {
  FormatConfig config;
  std::string tokenizer_name;
  std::vector<FileReport> files;  // sorted by path
  std::map<std::string, LanguageAggregate> aggregates;  // keyed by language

  std::string to_json() const;  // machine-readable, schema in README
  std::string to_text() const;  // aligned columns for terminals
};

// Walks root recursively (extensions .java/.cpp/.cc/.h/.hpp/.cs/.py),
// strips each file under config, verifies equivalence, and times
// strip + restore. Files that fail verification are reported but excluded
// from aggregates; unreadable files are recorded per-file, not fatal.
// Throws Error(kEmptyCorpus) when nothing matches and Error(kIoError) when
// root is not a readable directory.
CorpusReport measure_corpus(const std::string& root,
                            const std::vector<Language>& languages,
                            const FormatConfig& config,
                            const Tokenizer& tokenizer);

}  // namespace unfmt

#endif  // UNFMT_METERING_H_
