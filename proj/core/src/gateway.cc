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

#include "unfmt/gateway.h"

#include <atomic>
#include <cctype>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <mutex>
#include <functional>
#include <optional>
#include <thread>

#include "httplib.h"
#include "json.hpp"

#include "unfmt/error.h"
#include "unfmt/metering.h"
#include "unfmt/partial.h"

namespace unfmt {

namespace {

size_t words_count(std::string_view text) {
  static const std::unique_ptr<Tokenizer> kWords =
      load_tokenizer(TokenizerSpec::words());
  return kWords->count(text);
}

void add_stats(GatewayStats* into, const GatewayStats& delta) {
  into->requests += delta.requests;
  into->malformed_requests += delta.malformed_requests;
  into->upstream_failures += delta.upstream_failures;
  into->request_regions += delta.request_regions;
  into->response_regions += delta.response_regions;
  into->request_bytes_before += delta.request_bytes_before;
  into->request_bytes_after += delta.request_bytes_after;
  into->request_tokens_before += delta.request_tokens_before;
  into->request_tokens_after += delta.request_tokens_after;
  into->response_tokens_before += delta.response_tokens_before;
  into->response_tokens_after += delta.response_tokens_after;
}

// --- JSON string surgery -------------------------------------------------
//
// Rewritten documents must keep every byte outside the rewritten code
// regions intact, so instead of reserializing through a JSON library the
// gateway locates the raw string literals it cares about and splices new
// content into them. Documents are validated with a JSON parse first, so
// the scanner below may assume well-formed input (and bails out harmlessly
// if it is ever wrong).

struct PathElem {
  bool is_index = false;
  size_t index = 0;
  std::string key;
};

using Path = std::vector<PathElem>;

// Byte range of a string literal, including both quotes.
struct LiteralSpan {
  size_t begin = 0;
  size_t end = 0;
};

void append_utf8(uint32_t cp, std::string* out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// Decodes a string literal interior. When map is non-null it receives, for
// every decoded byte, the offset within `raw` of the escape sequence that
// produced it, plus a final entry equal to raw.size(); that lets callers
// translate decoded offsets back into raw offsets for splicing.
bool unescape_json(std::string_view raw, std::string* out,
                   std::vector<size_t>* map) {
  out->clear();
  if (map) map->clear();
  size_t i = 0;
  auto emit = [&](size_t src, std::string_view text) {
    for (char c : text) {
      out->push_back(c);
      if (map) map->push_back(src);
    }
  };
  while (i < raw.size()) {
    const char c = raw[i];
    if (c != '\\') {
      emit(i, std::string_view(&raw[i], 1));
      ++i;
      continue;
    }
    if (i + 1 >= raw.size()) return false;
    const size_t start = i;
    const char esc = raw[i + 1];
    i += 2;
    switch (esc) {
      case '"': emit(start, "\""); break;
      case '\\': emit(start, "\\"); break;
      case '/': emit(start, "/"); break;
      case 'b': emit(start, "\b"); break;
      case 'f': emit(start, "\f"); break;
      case 'n': emit(start, "\n"); break;
      case 'r': emit(start, "\r"); break;
      case 't': emit(start, "\t"); break;
      case 'u': {
        if (i + 4 > raw.size()) return false;
        uint32_t cp = 0;
        for (int k = 0; k < 4; ++k) {
          const int h = hex_value(raw[i + static_cast<size_t>(k)]);
          if (h < 0) return false;
          cp = (cp << 4) | static_cast<uint32_t>(h);
        }
        i += 4;
        if (cp >= 0xD800 && cp <= 0xDBFF) {
          // High surrogate: must pair with a following \uDC00..\uDFFF.
          if (i + 6 > raw.size() || raw[i] != '\\' || raw[i + 1] != 'u')
            return false;
          uint32_t lo = 0;
          for (int k = 0; k < 4; ++k) {
            const int h = hex_value(raw[i + 2 + static_cast<size_t>(k)]);
            if (h < 0) return false;
            lo = (lo << 4) | static_cast<uint32_t>(h);
          }
          if (lo < 0xDC00 || lo > 0xDFFF) return false;
          i += 6;
          cp = 0x10000 + ((cp - 0xD800) << 10) + (lo - 0xDC00);
        } else if (cp >= 0xDC00 && cp <= 0xDFFF) {
          return false;  // lone low surrogate
        }
        std::string buf;
        append_utf8(cp, &buf);
        emit(start, buf);
        break;
      }
      default:
        return false;
    }
  }
  if (map) map->push_back(raw.size());
  return true;
}

// Escapes text for inclusion inside a JSON string literal. Non-ASCII bytes
// pass through raw (the transport is UTF-8 throughout).
std::string escape_json(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  return out;
}

// Advances past one string literal; i must point at the opening quote.
// Returns the index just past the closing quote, or npos on overrun.
size_t skip_string(std::string_view s, size_t i) {
  ++i;
  while (i < s.size()) {
    if (s[i] == '\\') {
      i += 2;
    } else if (s[i] == '"') {
      return i + 1;
    } else {
      ++i;
    }
  }
  return std::string_view::npos;
}

size_t skip_ws(std::string_view s, size_t i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' ||
                          s[i] == '\r'))
    ++i;
  return i;
}

using StringHit = std::function<void(const Path&, LiteralSpan)>;

// Walks a JSON value invoking hit for every string VALUE (keys excluded).
// Returns the index just past the value, or npos when the scan loses sync.
size_t scan_value(std::string_view s, size_t i, Path* path,
                  const StringHit& hit) {
  constexpr size_t npos = std::string_view::npos;
  i = skip_ws(s, i);
  if (i >= s.size()) return npos;
  const char c = s[i];
  if (c == '"') {
    const size_t end = skip_string(s, i);
    if (end == npos) return npos;
    hit(*path, LiteralSpan{i, end});
    return end;
  }
  if (c == '{') {
    i = skip_ws(s, i + 1);
    if (i < s.size() && s[i] == '}') return i + 1;
    while (i < s.size()) {
      if (s[i] != '"') return npos;
      const size_t key_end = skip_string(s, i);
      if (key_end == npos) return npos;
      std::string key;
      if (!unescape_json(s.substr(i + 1, key_end - i - 2), &key, nullptr))
        return npos;
      i = skip_ws(s, key_end);
      if (i >= s.size() || s[i] != ':') return npos;
      path->push_back(PathElem{false, 0, std::move(key)});
      i = scan_value(s, i + 1, path, hit);
      path->pop_back();
      if (i == npos) return npos;
      i = skip_ws(s, i);
      if (i >= s.size()) return npos;
      if (s[i] == ',') {
        i = skip_ws(s, i + 1);
        continue;
      }
      if (s[i] == '}') return i + 1;
      return npos;
    }
    return npos;
  }
  if (c == '[') {
    i = skip_ws(s, i + 1);
    if (i < s.size() && s[i] == ']') return i + 1;
    size_t index = 0;
    while (i < s.size()) {
      path->push_back(PathElem{true, index, {}});
      i = scan_value(s, i, path, hit);
      path->pop_back();
      if (i == npos) return npos;
      ++index;
      i = skip_ws(s, i);
      if (i >= s.size()) return npos;
      if (s[i] == ',') {
        i = skip_ws(s, i + 1);
        continue;
      }
      if (s[i] == ']') return i + 1;
      return npos;
    }
    return npos;
  }
  // Number, true, false or null: consume until a structural delimiter.
  while (i < s.size() && s[i] != ',' && s[i] != '}' && s[i] != ']' &&
         s[i] != ' ' && s[i] != '\t' && s[i] != '\n' && s[i] != '\r')
    ++i;
  return i;
}

bool path_is_prompt(const Path& p) {
  return p.size() == 1 && !p[0].is_index && p[0].key == "prompt";
}

bool path_is_message_content(const Path& p) {
  return p.size() == 3 && !p[0].is_index && p[0].key == "messages" &&
         p[1].is_index && !p[2].is_index && p[2].key == "content";
}

bool path_is_choice_text(const Path& p) {
  return p.size() == 3 && !p[0].is_index && p[0].key == "choices" &&
         p[1].is_index && !p[2].is_index && p[2].key == "text";
}

bool path_is_choice_message_content(const Path& p) {
  return p.size() == 4 && !p[0].is_index && p[0].key == "choices" &&
         p[1].is_index && !p[2].is_index && p[2].key == "message" &&
         !p[3].is_index && p[3].key == "content";
}

// --- Region rewriting ----------------------------------------------------

struct RegionTally {
  uint64_t regions = 0;
  uint64_t bytes_before = 0;
  uint64_t bytes_after = 0;
  uint64_t tokens_before = 0;
  uint64_t tokens_after = 0;
};

std::string rewrite_region(std::string_view original, Language language,
                           Direction direction, const GatewayConfig& cfg) {
  std::string rewritten;
  try {
    if (direction == Direction::kStrip) {
      rewritten = strip_partial(original, language, cfg.config).output;
    } else {
      rewritten = restore_partial(original, language, cfg.style).output;
    }
  } catch (const Error&) {
    return std::string(original);  // never let odd code break the proxy
  }
  // A fence interior ends with the newline that puts the closing ``` at
  // line start; that newline is structure, not code, and must survive.
  if (cfg.code_region_mode == CodeRegionMode::kFenced && !original.empty() &&
      original.back() == '\n' &&
      (rewritten.empty() || rewritten.back() != '\n')) {
    rewritten += '\n';
  }
  return rewritten;
}

// Rewrites the code regions of one string literal (quotes included).
// Returns the replacement literal, or nullopt when nothing changes.
std::optional<std::string> rewrite_literal(std::string_view literal,
                                           Direction direction,
                                           const GatewayConfig& cfg,
                                           RegionTally* tally) {
  const std::string_view interior =
      literal.substr(1, literal.size() - 2);
  std::string decoded;
  std::vector<size_t> map;
  if (!unescape_json(interior, &decoded, &map)) return std::nullopt;

  const std::vector<CodeRegion> regions = extract_code_regions(
      decoded, cfg.code_region_mode, cfg.language_default);
  if (regions.empty()) return std::nullopt;

  std::string out;
  out.reserve(literal.size());
  out.push_back('"');
  size_t cursor = 0;  // decoded offset of the first byte not yet emitted
  for (const CodeRegion& region : regions) {
    out.append(interior.substr(map[cursor], map[region.begin] - map[cursor]));
    const std::string_view original =
        std::string_view(decoded).substr(region.begin,
                                         region.end - region.begin);
    const std::string rewritten =
        rewrite_region(original, region.language, direction, cfg);
    ++tally->regions;
    tally->bytes_before += original.size();
    tally->bytes_after += rewritten.size();
    tally->tokens_before += words_count(original);
    tally->tokens_after += words_count(rewritten);
    out += escape_json(rewritten);
    cursor = region.end;
  }
  out.append(interior.substr(map[cursor]));
  out.push_back('"');
  if (out == literal) return std::nullopt;
  return out;
}

// Splices every matched literal of `body` through rewrite_literal.
bool rewrite_fields(std::string* body, Direction direction,
                    const GatewayConfig& cfg,
                    const std::function<bool(const Path&)>& match,
                    RegionTally* tally) {
  std::vector<LiteralSpan> spans;
  Path path;
  scan_value(*body, 0, &path,
             [&](const Path& p, LiteralSpan span) {
               if (match(p)) spans.push_back(span);
             });
  if (spans.empty()) return false;

  std::string out;
  out.reserve(body->size());
  size_t cursor = 0;
  bool changed = false;
  for (const LiteralSpan& span : spans) {
    const std::string_view literal =
        std::string_view(*body).substr(span.begin, span.end - span.begin);
    const auto replacement = rewrite_literal(literal, direction, cfg, tally);
    out.append(*body, cursor, span.begin - cursor);
    if (replacement) {
      out += *replacement;
      changed = true;
    } else {
      out.append(literal);
    }
    cursor = span.end;
  }
  out.append(*body, cursor, body->size() - cursor);
  if (changed) *body = std::move(out);
  return changed;
}

}  // namespace

std::vector<CodeRegion> extract_code_regions(std::string_view text,
                                             CodeRegionMode mode,
                                             Language default_language) {
  std::vector<CodeRegion> regions;
  if (mode == CodeRegionMode::kWholeBody) {
    regions.push_back(CodeRegion{0, text.size(), default_language});
    return regions;
  }

  bool in_fence = false;
  bool fence_rewritable = false;
  Language fence_language = default_language;
  size_t interior_begin = 0;

  size_t line_start = 0;
  while (line_start <= text.size()) {
    size_t line_end = text.find('\n', line_start);
    const bool last = line_end == std::string_view::npos;
    if (last) line_end = text.size();

    std::string_view line = text.substr(line_start, line_end - line_start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const bool is_fence = line.size() >= 3 && line.substr(0, 3) == "```" &&
                          (line.size() == 3 || line[3] != '`');
    std::string_view info;
    if (is_fence) {
      info = line.substr(3);
      while (!info.empty() && (info.front() == ' ' || info.front() == '\t'))
        info.remove_prefix(1);
      while (!info.empty() && (info.back() == ' ' || info.back() == '\t'))
        info.remove_suffix(1);
    }

    if (!in_fence && is_fence) {
      in_fence = true;
      if (info.empty()) {
        fence_rewritable = true;
        fence_language = default_language;
      } else if (auto lang = language_from_name(info)) {
        fence_rewritable = true;
        fence_language = *lang;
      } else {
        fence_rewritable = false;  // unknown info string: leave untouched
      }
      interior_begin = last ? text.size() : line_end + 1;
    } else if (in_fence && is_fence && info.empty()) {
      if (fence_rewritable) {
        regions.push_back(
            CodeRegion{interior_begin, line_start, fence_language});
      }
      in_fence = false;
    }

    if (last) break;
    line_start = line_end + 1;
  }
  if (in_fence && fence_rewritable) {
    // Unterminated fence: the region extends to the end of the text.
    regions.push_back(CodeRegion{interior_begin, text.size(), fence_language});
  }
  return regions;
}

GatewayStats rewrite_request(std::string& body, const GatewayConfig& config) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::kMalformedRequest, "body is not valid JSON");
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kMalformedRequest, "body is not a JSON object");
  }
  const bool has_prompt = doc.contains("prompt");
  const bool has_messages = doc.contains("messages");
  if (!has_prompt && !has_messages) {
    throw Error(ErrorCode::kMalformedRequest,
                "request carries neither \"prompt\" nor \"messages\"");
  }
  if (has_prompt && !doc["prompt"].is_string()) {
    throw Error(ErrorCode::kMalformedRequest, "\"prompt\" is not a string");
  }
  if (has_messages && !doc["messages"].is_array()) {
    throw Error(ErrorCode::kMalformedRequest, "\"messages\" is not an array");
  }

  RegionTally tally;
  rewrite_fields(&body, Direction::kStrip, config,
                 [](const Path& p) {
                   return path_is_prompt(p) || path_is_message_content(p);
                 },
                 &tally);
  GatewayStats stats;
  stats.request_regions = tally.regions;
  stats.request_bytes_before = tally.bytes_before;
  stats.request_bytes_after = tally.bytes_after;
  stats.request_tokens_before = tally.tokens_before;
  stats.request_tokens_after = tally.tokens_after;
  return stats;
}

GatewayStats rewrite_response(std::string& body, const GatewayConfig& config) {
  GatewayStats stats;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception&) {
    return stats;  // non-JSON responses pass through untouched
  }
  if (!doc.is_object() || !doc.contains("choices") ||
      !doc["choices"].is_array()) {
    return stats;
  }

  RegionTally tally;
  rewrite_fields(&body, Direction::kRestore, config,
                 [](const Path& p) {
                   return path_is_choice_text(p) ||
                          path_is_choice_message_content(p);
                 },
                 &tally);
  stats.response_regions = tally.regions;
  stats.response_tokens_before = tally.tokens_before;
  stats.response_tokens_after = tally.tokens_after;
  return stats;
}

// --- HTTP plumbing -------------------------------------------------------

namespace {

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  }
  return true;
}

// Hop-by-hop headers (RFC 9110 §7.6.1) plus fields the HTTP layer manages
// itself. httplib also injects REMOTE_/LOCAL_ pseudo headers server-side.
bool drop_forwarded_header(std::string_view name) {
  static constexpr std::string_view kDrop[] = {
      "connection",        "keep-alive",      "proxy-authenticate",
      "proxy-authorization", "te",            "trailer",
      "transfer-encoding", "upgrade",         "host",
      "content-length",    "content-type",    "accept-encoding",
      "expect",            "remote_addr",     "remote_port",
      "local_addr",        "local_port"};
  for (std::string_view d : kDrop) {
    if (iequals(name, d)) return true;
  }
  return false;
}

bool drop_reply_header(std::string_view name) {
  static constexpr std::string_view kDrop[] = {
      "connection",        "keep-alive", "proxy-authenticate",
      "proxy-authorization", "te",       "trailer",
      "transfer-encoding", "upgrade",    "content-length",
      "content-type",      "content-encoding"};
  for (std::string_view d : kDrop) {
    if (iequals(name, d)) return true;
  }
  return false;
}

std::string error_body(std::string_view code, std::string_view message) {
  nlohmann::json j;
  j["error"] = {{"code", std::string(code)},
                {"message", std::string(message)}};
  return j.dump();
}

// "http://host:port/prefix" -> base "http://host:port", prefix "/prefix".
void split_upstream_url(const std::string& url, std::string* base,
                        std::string* prefix) {
  size_t host_start = 0;
  const size_t scheme = url.find("://");
  if (scheme != std::string::npos) host_start = scheme + 3;
  const size_t slash = url.find('/', host_start);
  if (slash == std::string::npos) {
    *base = url;
    prefix->clear();
  } else {
    *base = url.substr(0, slash);
    *prefix = url.substr(slash);
    if (*prefix == "/") prefix->clear();
  }
}

bool parse_listen_address(const std::string& address, std::string* host,
                          int* port) {
  const size_t colon = address.rfind(':');
  if (colon == std::string::npos || colon == 0 ||
      colon + 1 >= address.size()) {
    return false;
  }
  *host = address.substr(0, colon);
  try {
    *port = std::stoi(address.substr(colon + 1));
  } catch (const std::exception&) {
    return false;
  }
  return *port >= 0 && *port <= 65535;
}

}  // namespace

struct Gateway::Impl {
  explicit Impl(GatewayConfig cfg) : config(std::move(cfg)) {
    split_upstream_url(config.upstream_url, &upstream_base, &upstream_prefix);
    install_routes();
  }

  void install_routes() {
    server.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
      res.set_content("ok", "text/plain");
    });
    server.Get("/stats", [this](const httplib::Request&,
                                httplib::Response& res) {
      GatewayStats s;
      {
        std::lock_guard<std::mutex> lock(mu);
        s = totals;
      }
      nlohmann::ordered_json j{
          {"requests", s.requests},
          {"malformed_requests", s.malformed_requests},
          {"upstream_failures", s.upstream_failures},
          {"request_regions", s.request_regions},
          {"response_regions", s.response_regions},
          {"request_bytes_before", s.request_bytes_before},
          {"request_bytes_after", s.request_bytes_after},
          {"request_tokens_before", s.request_tokens_before},
          {"request_tokens_after", s.request_tokens_after},
          {"response_tokens_before", s.response_tokens_before},
          {"response_tokens_after", s.response_tokens_after}};
      res.set_content(j.dump(2), "application/json");
    });
    server.Post(R"(/.*)", [this](const httplib::Request& req,
                                 httplib::Response& res) {
      handle_proxy(req, res);
    });
  }

  void handle_proxy(const httplib::Request& req, httplib::Response& res) {
    GatewayStats delta;
    delta.requests = 1;

    std::string body = req.body;
    try {
      add_stats(&delta, rewrite_request(body, config));
    } catch (const Error& e) {
      delta.malformed_requests = 1;
      res.status = 400;
      res.set_content(error_body("malformed_request", e.what()),
                      "application/json");
      commit(delta);
      return;
    }

    httplib::Client client(upstream_base);
    client.set_connection_timeout(config.request_timeout_s, 0);
    client.set_read_timeout(config.request_timeout_s, 0);
    client.set_write_timeout(config.request_timeout_s, 0);

    httplib::Headers forwarded;
    for (const auto& [name, value] : req.headers) {
      if (!drop_forwarded_header(name)) forwarded.emplace(name, value);
    }
    std::string content_type = req.get_header_value("Content-Type");
    if (content_type.empty()) content_type = "application/json";
    const std::string target =
        upstream_prefix + (req.target.empty() ? req.path : req.target);

    httplib::Result upstream =
        client.Post(target, forwarded, body, content_type);
    if (!upstream) {
      delta.upstream_failures = 1;
      res.status = 502;
      res.set_content(error_body("upstream_unreachable",
                                 "could not reach " + config.upstream_url),
                      "application/json");
      commit(delta);
      return;
    }

    std::string reply = upstream->body;
    if (upstream->status < 400) {
      // Error responses pass through unrewritten.
      add_stats(&delta, rewrite_response(reply, config));
    }
    res.status = upstream->status;
    for (const auto& [name, value] : upstream->headers) {
      if (!drop_reply_header(name)) res.set_header(name, value);
    }
    std::string reply_type = upstream->get_header_value("Content-Type");
    if (reply_type.empty()) reply_type = "application/json";
    res.set_content(reply, reply_type);
    commit(delta);
  }

  void commit(const GatewayStats& delta) {
    std::lock_guard<std::mutex> lock(mu);
    add_stats(&totals, delta);
  }

  GatewayConfig config;
  std::string upstream_base;
  std::string upstream_prefix;
  httplib::Server server;
  std::thread thread;
  mutable std::mutex mu;
  GatewayStats totals;
  int port = 0;
};

Gateway::Gateway(GatewayConfig config)
    : impl_(std::make_unique<Impl>(std::move(config))) {}

Gateway::~Gateway() { stop(); }

bool Gateway::start() {
  std::string host;
  int port = 0;
  if (!parse_listen_address(impl_->config.listen_address, &host, &port)) {
    return false;
  }
  if (port == 0) {
    const int bound = impl_->server.bind_to_any_port(host);
    if (bound <= 0) return false;
    impl_->port = bound;
  } else {
    if (!impl_->server.bind_to_port(host, port)) return false;
    impl_->port = port;
  }
  Impl* impl = impl_.get();
  impl_->thread = std::thread([impl] { impl->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return true;
}

void Gateway::stop() {
  if (!impl_) return;
  if (impl_->server.is_running()) impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

int Gateway::port() const { return impl_->port; }

GatewayStats Gateway::stats() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  return impl_->totals;
}

namespace {

std::atomic<bool> g_shutdown{false};

extern "C" void handle_shutdown_signal(int) { g_shutdown = true; }

}  // namespace

bool serve(GatewayConfig config) {
  if (const char* env = std::getenv("UNFMT_UPSTREAM_URL");
      env != nullptr && *env != '\0') {
    config.upstream_url = env;
  }
  Gateway gateway(std::move(config));
  if (!gateway.start()) return false;

  g_shutdown = false;
  std::signal(SIGINT, handle_shutdown_signal);
  std::signal(SIGTERM, handle_shutdown_signal);
  while (!g_shutdown) {
    std::this_thread::sleep_for(std::chrono::milliseconds(100));
  }
  gateway.stop();
  return true;
}

}  // namespace unfmt
