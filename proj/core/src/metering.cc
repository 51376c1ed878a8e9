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

#include "unfmt/metering.h"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

#include "unfmt/error.h"
#include "unfmt/verify.h"

namespace unfmt {

namespace {

bool is_space_byte(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_word_byte(unsigned char c) {
  return std::isalnum(c) != 0 || c == '_' || c == '$' || c >= 0x80;
}

bool is_letter_byte(unsigned char c) {
  return std::isalpha(c) != 0 || c == '_' || c >= 0x80;
}

class BytesTokenizer final : public Tokenizer {
 public:
  size_t count(std::string_view text) const override { return text.size(); }
  std::string_view name() const override { return "bytes"; }
};

// Maximal word-character runs count once; every other non-whitespace byte
// counts on its own. Whitespace never counts, which makes this counter
// invariant under whitespace-only edits.
class WordsTokenizer final : public Tokenizer {
 public:
  size_t count(std::string_view text) const override {
    size_t n = 0;
    size_t i = 0;
    while (i < text.size()) {
      const unsigned char c = static_cast<unsigned char>(text[i]);
      if (is_space_byte(c)) {
        ++i;
        continue;
      }
      if (is_word_byte(c)) {
        ++n;
        while (i < text.size() &&
               is_word_byte(static_cast<unsigned char>(text[i])))
          ++i;
        continue;
      }
      ++n;  // one token per punctuation byte
      ++i;
    }
    return n;
  }
  std::string_view name() const override { return "words"; }
};

class BpeTokenizer final : public Tokenizer {
 public:
  BpeTokenizer(std::unordered_map<std::string, int> vocab,
               std::unordered_map<std::string, int> ranks)
      : vocab_(std::move(vocab)), ranks_(std::move(ranks)) {}

  size_t count(std::string_view text) const override {
    size_t total = 0;
    size_t i = 0;
    while (i < text.size()) {
      const size_t begin = i;
      const unsigned char c = static_cast<unsigned char>(text[i]);
      if (is_space_byte(c)) {
        while (i < text.size() &&
               is_space_byte(static_cast<unsigned char>(text[i])))
          ++i;
        // Whitespace attaches to a following letter run, mirroring the
        // space-prefixed tokens of byte-level BPE vocabularies.
        if (i < text.size() &&
            is_letter_byte(static_cast<unsigned char>(text[i]))) {
          while (i < text.size() &&
                 is_letter_byte(static_cast<unsigned char>(text[i])))
            ++i;
        }
      } else if (is_letter_byte(c)) {
        while (i < text.size() &&
               is_letter_byte(static_cast<unsigned char>(text[i])))
          ++i;
      } else if (std::isdigit(c) != 0) {
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i])) != 0)
          ++i;
      } else {
        ++i;  // single punctuation byte
      }
      total += merge_count(text.substr(begin, i - begin));
    }
    return total;
  }

  std::string_view name() const override { return "bpe"; }

 private:
  // Applies merge rules by rank within one pre-split piece; returns the
  // number of symbols left.
  size_t merge_count(std::string_view piece) const {
    std::vector<std::string> syms;
    syms.reserve(piece.size());
    for (char c : piece) syms.emplace_back(1, c);
    while (syms.size() > 1) {
      int best_rank = -1;
      size_t best_at = 0;
      for (size_t i = 0; i + 1 < syms.size(); ++i) {
        auto it = ranks_.find(syms[i] + syms[i + 1]);
        if (it == ranks_.end()) continue;
        if (best_rank < 0 || it->second < best_rank) {
          best_rank = it->second;
          best_at = i;
        }
      }
      if (best_rank < 0) break;
      syms[best_at] += syms[best_at + 1];
      syms.erase(syms.begin() + static_cast<ptrdiff_t>(best_at) + 1);
    }
    return syms.size();
  }

  std::unordered_map<std::string, int> vocab_;
  std::unordered_map<std::string, int> ranks_;
};

std::string read_file_or_throw(const std::string& path, ErrorCode missing) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(missing, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::unique_ptr<Tokenizer> load_bpe(const TokenizerSpec& spec) {
  const std::string vocab_text =
      read_file_or_throw(spec.vocab_path, ErrorCode::kMissingFile);
  nlohmann::json vocab_json;
  try {
    vocab_json = nlohmann::json::parse(vocab_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedVocab,
                std::string("vocab is not valid JSON: ") + e.what());
  }
  if (!vocab_json.is_object()) {
    throw Error(ErrorCode::kMalformedVocab, "vocab must be a JSON object");
  }

  std::unordered_map<std::string, int> vocab;
  std::unordered_set<int> ids;
  for (const auto& [token, id] : vocab_json.items()) {
    if (!id.is_number_integer()) {
      throw Error(ErrorCode::kMalformedVocab,
                  "vocab id for '" + token + "' is not an integer");
    }
    const int v = id.get<int>();
    if (!ids.insert(v).second) {
      throw Error(ErrorCode::kMalformedVocab,
                  "duplicate vocab id " + std::to_string(v));
    }
    vocab.emplace(token, v);
  }
  for (int i = 0; i < static_cast<int>(vocab.size()); ++i) {
    if (ids.find(i) == ids.end()) {
      throw Error(ErrorCode::kMalformedVocab,
                  "vocab ids are not contiguous: missing " +
                      std::to_string(i));
    }
  }

  const std::string merges_text =
      read_file_or_throw(spec.merges_path, ErrorCode::kMissingFile);
  std::unordered_map<std::string, int> ranks;
  std::istringstream lines(merges_text);
  std::string line;
  int rank = 0;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const size_t sp = line.find(' ');
    if (sp == std::string::npos || sp == 0 || sp + 1 >= line.size() ||
        line.find(' ', sp + 1) != std::string::npos) {
      throw Error(ErrorCode::kMalformedMerges,
                  "merges line " + std::to_string(lineno) +
                      " is not two space-separated symbols");
    }
    const std::string left = line.substr(0, sp);
    const std::string right = line.substr(sp + 1);
    for (const std::string& sym : {left, right, left + right}) {
      if (vocab.find(sym) == vocab.end()) {
        throw Error(ErrorCode::kMalformedMerges,
                    "merges line " + std::to_string(lineno) +
                        " uses symbol '" + sym + "' missing from the vocab");
      }
    }
    ranks.emplace(left + right, rank);
    ++rank;
  }
  return std::make_unique<BpeTokenizer>(std::move(vocab), std::move(ranks));
}

}  // namespace

std::unique_ptr<Tokenizer> load_tokenizer(const TokenizerSpec& spec) {
  switch (spec.kind) {
    case TokenizerKind::kBuiltinBytes:
      return std::make_unique<BytesTokenizer>();
    case TokenizerKind::kBuiltinWords:
      return std::make_unique<WordsTokenizer>();
    case TokenizerKind::kBpe:
      return load_bpe(spec);
  }
  return std::make_unique<WordsTokenizer>();
}

size_t count_tokens(const Tokenizer& tokenizer, std::string_view text) {
  return tokenizer.count(text);
}

ReductionStats reduction(std::string_view before, std::string_view after,
                         const Tokenizer& tokenizer) {
  ReductionStats stats;
  stats.tokens_before = tokenizer.count(before);
  stats.tokens_after = tokenizer.count(after);
  if (stats.tokens_before > 0) {
    stats.reduction_pct = 100.0 *
                          (static_cast<double>(stats.tokens_before) -
                           static_cast<double>(stats.tokens_after)) /
                          static_cast<double>(stats.tokens_before);
  }
  return stats;
}

namespace {

double mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

double median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const size_t n = xs.size();
  if (n % 2 == 1) return xs[n / 2];
  return (xs[n / 2 - 1] + xs[n / 2]) / 2.0;
}

}  // namespace

CorpusReport measure_corpus(const std::string& root,
                            const std::vector<Language>& languages,
                            const FormatConfig& config,
                            const Tokenizer& tokenizer) {
  namespace fs = std::filesystem;

  std::error_code ec;
  if (!fs::is_directory(root, ec) || ec) {
    throw Error(ErrorCode::kIoError, "not a readable directory: " + root);
  }

  std::vector<std::pair<std::string, fs::path>> entries;  // rel path, full
  for (fs::recursive_directory_iterator it(root, ec), end; it != end;
       it.increment(ec)) {
    if (ec) throw Error(ErrorCode::kIoError, "walking " + root);
    if (!it->is_regular_file()) continue;
    const auto lang = language_from_path(it->path().string());
    if (!lang) continue;
    if (std::find(languages.begin(), languages.end(), *lang) ==
        languages.end())
      continue;
    std::string rel = fs::relative(it->path(), root, ec).generic_string();
    if (ec) rel = it->path().generic_string();
    entries.emplace_back(std::move(rel), it->path());
  }
  if (entries.empty()) {
    throw Error(ErrorCode::kEmptyCorpus,
                "no source files with known extensions under " + root);
  }
  std::sort(entries.begin(), entries.end());

  CorpusReport report;
  report.config = config;
  report.tokenizer_name = std::string(tokenizer.name());

  for (const auto& [rel, full] : entries) {
    FileReport row;
    row.path = rel;
    row.language = *language_from_path(full.string());

    std::ifstream in(full, std::ios::binary);
    std::ostringstream ss;
    if (in) ss << in.rdbuf();
    if (!in) {
      row.error = "unreadable";
      report.files.push_back(std::move(row));
      continue;
    }
    const std::string source = ss.str();

    try {
      const auto t0 = std::chrono::steady_clock::now();
      const TransformResult stripped = strip(source, row.language, config);
      const TransformResult restored =
          restore(stripped.output, row.language,
                  StyleProfile::defaults_for(row.language));
      const auto t1 = std::chrono::steady_clock::now();
      (void)restored;
      row.latency_ms =
          std::chrono::duration<double, std::milli>(t1 - t0).count();
      row.stats = reduction(source, stripped.output, tokenizer);
      row.verified =
          equivalent(source, stripped.output, row.language).equivalent;
    } catch (const Error& e) {
      row.error = e.what();
    }
    report.files.push_back(std::move(row));
  }

  std::map<std::string, std::vector<double>> red, lat;
  std::map<std::string, size_t> fail;
  for (const FileReport& row : report.files) {
    const std::string key(to_string(row.language));
    if (row.verified && !row.error) {
      red[key].push_back(row.stats.reduction_pct);
      lat[key].push_back(row.latency_ms);
      fail.emplace(key, 0);
    } else {
      ++fail[key];
    }
  }
  for (const auto& [key, values] : red) {
    LanguageAggregate agg;
    agg.mean_reduction_pct = mean(values);
    agg.median_reduction_pct = median(values);
    agg.mean_latency_ms = mean(lat[key]);
    agg.files = values.size();
    agg.failures = fail.count(key) ? fail[key] : 0;
    report.aggregates[key] = agg;
  }
  for (const auto& [key, n] : fail) {
    if (report.aggregates.find(key) == report.aggregates.end()) {
      LanguageAggregate agg;
      agg.failures = n;
      report.aggregates[key] = agg;
    }
  }
  return report;
}

std::string CorpusReport::to_json() const {
  nlohmann::ordered_json j;
  j["config"] = {{"remove_indentation", config.remove_indentation},
                 {"remove_whitespace", config.remove_whitespace},
                 {"remove_newlines", config.remove_newlines}};
  j["tokenizer"] = tokenizer_name;
  j["files"] = nlohmann::ordered_json::array();
  for (const FileReport& row : files) {
    nlohmann::ordered_json f;
    f["path"] = row.path;
    f["language"] = std::string(to_string(row.language));
    f["tokens_before"] = row.stats.tokens_before;
    f["tokens_after"] = row.stats.tokens_after;
    f["reduction_pct"] = row.stats.reduction_pct;
    f["latency_ms"] = row.latency_ms;
    f["verified"] = row.verified;
    j["files"].push_back(std::move(f));
  }
  j["aggregates"] = nlohmann::ordered_json::object();
  for (const auto& [key, agg] : aggregates) {
    j["aggregates"][key] = {{"mean_reduction_pct", agg.mean_reduction_pct},
                            {"median_reduction_pct", agg.median_reduction_pct},
                            {"mean_latency_ms", agg.mean_latency_ms},
                            {"files", agg.files},
                            {"failures", agg.failures}};
  }
  return j.dump(2);
}

std::string CorpusReport::to_text() const {
  std::ostringstream os;
  size_t width = 4;
  for (const FileReport& row : files) width = std::max(width, row.path.size());

  os << std::left << std::setw(static_cast<int>(width)) << "path"
     << "  lang     before    after   red%     ms  ok\n";
  for (const FileReport& row : files) {
    os << std::left << std::setw(static_cast<int>(width)) << row.path << "  "
       << std::setw(7) << to_string(row.language) << std::right
       << std::setw(9) << row.stats.tokens_before << std::setw(9)
       << row.stats.tokens_after << std::setw(7) << std::fixed
       << std::setprecision(1) << row.stats.reduction_pct << std::setw(7)
       << std::setprecision(2) << row.latency_ms << "  "
       << (row.error ? "err" : (row.verified ? "yes" : "NO")) << "\n";
  }
  os << "\n";
  for (const auto& [key, agg] : aggregates) {
    os << key << ": mean " << std::fixed << std::setprecision(2)
       << agg.mean_reduction_pct << "%, median " << agg.median_reduction_pct
       << "%, mean latency " << agg.mean_latency_ms << " ms, files "
       << agg.files << ", failures " << agg.failures << "\n";
  }
  return os.str();
}

}  // namespace unfmt
