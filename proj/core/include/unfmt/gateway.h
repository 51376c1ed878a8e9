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
// A forwarding HTTP proxy for completions-style JSON APIs that strips code
// regions in outbound prompts and restores code regions in inbound
// completions. Bodies are buffered and rewritten whole; incremental
// (streaming) rewriting is out of scope.

#ifndef UNFMT_GATEWAY_H_
#define UNFMT_GATEWAY_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "unfmt/language.h"
#include "unfmt/transform.h"

namespace unfmt {

enum class CodeRegionMode {
  kFenced,     // interiors of ``` fences; info string selects the language
  kWholeBody,  // the entire text field is one code region
};

struct GatewayConfig {
  std::string listen_address = "127.0.0.1:8787";
  std::string upstream_url = "http://127.0.0.1:8080";
  CodeRegionMode code_region_mode = CodeRegionMode::kFenced;
  Language language_default = Language::kCpp;
  FormatConfig config;
  StyleProfile style = StyleProfile::defaults_for(Language::kCpp);
  int request_timeout_s = 30;
};

struct CodeRegion {
  size_t begin = 0;  // byte range of the region interior within the text
  size_t end = 0;
  Language language = Language::kCpp;
};

// Finds rewritable code regions in a text field. Fenced mode: a fence is a
// line starting with exactly three backticks plus an optional info string;
// an unterminated fence extends to the end. Fences with an info string that
// is not one of the four languages are left untouched; a bare fence takes
// default_language. Whole-body mode returns one region covering everything.
std::vector<CodeRegion> extract_code_regions(std::string_view text,
                                             CodeRegionMode mode,
                                             Language default_language);

// Per-request telemetry, and the cumulative /stats totals.
struct GatewayStats {
  uint64_t requests = 0;
  uint64_t malformed_requests = 0;
  uint64_t upstream_failures = 0;
  uint64_t request_regions = 0;
  uint64_t response_regions = 0;
  uint64_t request_bytes_before = 0;
  uint64_t request_bytes_after = 0;
  uint64_t request_tokens_before = 0;  // builtin_words over code regions
  uint64_t request_tokens_after = 0;
  uint64_t response_tokens_before = 0;
  uint64_t response_tokens_after = 0;
};

// Rewrites the code regions of a request document in place (strip
// direction). Returns the per-document telemetry delta. The document must
// carry a "prompt" string or a "messages" array with "content" strings;
// anything else throws Error(kMalformedRequest) — checked before any
// upstream contact. body is the JSON request body.
GatewayStats rewrite_request(std::string& body, const GatewayConfig& config);

// Restore direction for a response document: rewrites choices[*].text and
// choices[*].message.content when present; otherwise leaves the body alone.
GatewayStats rewrite_response(std::string& body, const GatewayConfig& config);

class Gateway {
 public:
  explicit Gateway(GatewayConfig config);
  ~Gateway();

  Gateway(const Gateway&) = delete;
  Gateway& operator=(const Gateway&) = delete;

  // Binds and serves on a background thread. Returns false if the address
  // cannot be bound. With port 0 an ephemeral port is chosen; see port().
  bool start();
  void stop();
  int port() const;

  GatewayStats stats() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Blocking entry point used by `unfmt serve`: start() and wait until
// SIGINT/SIGTERM. UNFMT_UPSTREAM_URL, when set, overrides
// config.upstream_url. Returns false if binding failed.
bool serve(GatewayConfig config);

}  // namespace unfmt

#endif  // UNFMT_GATEWAY_H_
