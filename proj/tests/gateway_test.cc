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

#include <atomic>
#include <string>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "json.hpp"
#include "support/test_util.h"
#include "unfmt/error.h"
#include "unfmt/gateway.h"

namespace unfmt {
namespace {

using nlohmann::json;

TEST_CASE("fenced extraction finds interiors and languages") {
  const std::string text = "Fix this:\n```cpp\nint  x = 1;\n```\nthanks";
  auto regions =
      extract_code_regions(text, CodeRegionMode::kFenced, Language::kCpp);
  REQUIRE(regions.size() == 1);
  CHECK(regions[0].begin == 17);
  CHECK(regions[0].end == 29);
  CHECK(regions[0].language == Language::kCpp);
  CHECK(text.substr(regions[0].begin, regions[0].end - regions[0].begin) ==
        "int  x = 1;\n");
}

TEST_CASE("info strings select the language, case-insensitively") {
  auto lang_of = [](const std::string& info) {
    auto r = extract_code_regions("```" + info + "\nx\n```",
                                  CodeRegionMode::kFenced, Language::kCpp);
    REQUIRE(r.size() == 1);
    return r[0].language;
  };
  CHECK(lang_of("java") == Language::kJava);
  CHECK(lang_of("Java") == Language::kJava);
  CHECK(lang_of("c++") == Language::kCpp);
  CHECK(lang_of("cs") == Language::kCSharp);
  CHECK(lang_of("py") == Language::kPython);
}

TEST_CASE("a bare fence takes the default language") {
  auto regions = extract_code_regions("```\nint y;\n```",
                                      CodeRegionMode::kFenced,
                                      Language::kJava);
  REQUIRE(regions.size() == 1);
  CHECK(regions[0].language == Language::kJava);
}

TEST_CASE("unknown info strings are left untouched") {
  CHECK(extract_code_regions("```text\nhello\n```\n", CodeRegionMode::kFenced,
                             Language::kCpp)
            .empty());
}

TEST_CASE("an unterminated fence runs to the end") {
  auto regions = extract_code_regions("```python\nx = 1\n",
                                      CodeRegionMode::kFenced,
                                      Language::kCpp);
  REQUIRE(regions.size() == 1);
  CHECK(regions[0].begin == 10);
  CHECK(regions[0].end == 16);
  CHECK(regions[0].language == Language::kPython);
}

TEST_CASE("four backticks do not open a fence") {
  CHECK(extract_code_regions("````\nnot a fence\n````",
                             CodeRegionMode::kFenced, Language::kCpp)
            .empty());
}

TEST_CASE("multiple fences each get a region") {
  const std::string text = "```java\na;\n```\nmid\n```py\nb = 1\n```\n";
  auto regions =
      extract_code_regions(text, CodeRegionMode::kFenced, Language::kCpp);
  REQUIRE(regions.size() == 2);
  CHECK(regions[0].language == Language::kJava);
  CHECK(regions[1].language == Language::kPython);
}

TEST_CASE("whole-body mode covers everything") {
  auto regions = extract_code_regions("anything at all",
                                      CodeRegionMode::kWholeBody,
                                      Language::kPython);
  REQUIRE(regions.size() == 1);
  CHECK(regions[0].begin == 0);
  CHECK(regions[0].end == 15);
}

TEST_CASE("request rewrite strips fence interiors in prompts") {
  GatewayConfig config;
  std::string body =
      R"({"model":"m","prompt":"Fix:\n```cpp\nint  x = 1;\n```\n","max_tokens":10})";
  auto stats = rewrite_request(body, config);
  CHECK(body ==
        R"({"model":"m","prompt":"Fix:\n```cpp\nint x=1;\n```\n","max_tokens":10})");
  CHECK(stats.request_regions == 1);
  CHECK(stats.request_bytes_before == 12);
  CHECK(stats.request_bytes_after == 9);
  CHECK(stats.request_tokens_before == 5);
  CHECK(stats.request_tokens_after == 5);
}

TEST_CASE("request rewrite handles message arrays") {
  GatewayConfig config;
  std::string body =
      R"({"messages":[{"role":"user","content":"```java\nint  a = 1;\n```"}]})";
  auto stats = rewrite_request(body, config);
  CHECK(body ==
        R"({"messages":[{"role":"user","content":"```java\nint a=1;\n```"}]})");
  CHECK(stats.request_regions == 1);
}

TEST_CASE("request rewrite leaves non-code JSON byte-identical") {
  GatewayConfig config;
  std::string body =
      "{ \"model\" : \"caf\\u00e9\" ,\n"
      "  \"prompt\": \"no code here\\n\\t\\\"quoted\\\"\",  \"n\": 1 }";
  const std::string original = body;
  auto stats = rewrite_request(body, config);
  CHECK(body == original);
  CHECK(stats.request_regions == 0);
}

TEST_CASE("request rewrite preserves escapes outside code regions") {
  GatewayConfig config;
  std::string body =
      R"({"prompt":"pre →\n```cpp\nint  a = 1;\n```\npost 😀"})";
  rewrite_request(body, config);
  CHECK(body ==
        R"({"prompt":"pre →\n```cpp\nint a=1;\n```\npost 😀"})");
}

TEST_CASE("malformed requests are rejected before any forwarding") {
  GatewayConfig config;
  auto expect_malformed = [&](std::string body) {
    try {
      rewrite_request(body, config);
      FAIL("expected an exception for: ", body);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kMalformedRequest);
    }
  };
  expect_malformed(R"({"model":"m"})");
  expect_malformed(R"({"prompt": 7})");
  expect_malformed("{nope");
  expect_malformed(R"({"messages":"hi"})");
}

TEST_CASE("response rewrite restores completion text") {
  GatewayConfig config;
  std::string body = R"({"choices":[{"text":"```cpp\nint y=2;\n```"}]})";
  auto stats = rewrite_response(body, config);
  CHECK(body == R"({"choices":[{"text":"```cpp\nint y = 2;\n```"}]})");
  CHECK(stats.response_regions == 1);
}

TEST_CASE("response rewrite restores chat message content") {
  GatewayConfig config;
  std::string body =
      R"({"choices":[{"message":{"role":"assistant","content":"```cpp\nint z=3;\n```"}}]})";
  rewrite_response(body, config);
  CHECK(body ==
        R"({"choices":[{"message":{"role":"assistant","content":"```cpp\nint z = 3;\n```"}}]})");
}

TEST_CASE("responses without choices pass through untouched") {
  GatewayConfig config;
  std::string plain = "plain text";
  auto s1 = rewrite_response(plain, config);
  CHECK(plain == "plain text");
  CHECK(s1.response_regions == 0);

  std::string ok = R"({"ok":true})";
  rewrite_response(ok, config);
  CHECK(ok == R"({"ok":true})");
}

// A canned upstream that records what it received and answers with a fixed
// compact completion.
class MockUpstream {
 public:
  MockUpstream() {
    server_.Post("/v1/completions", [this](const httplib::Request& req,
                                           httplib::Response& res) {
      {
        std::lock_guard<std::mutex> lock(mu_);
        last_body_ = req.body;
        last_auth_ = req.get_header_value("Authorization");
        saw_proxy_auth_ = req.has_header("Proxy-Authorization");
        ++hits_;
      }
      res.set_header("X-Upstream", "mock");
      res.set_content(
          R"({"choices":[{"text":"```cpp\nint y=2;if(y>0){y--;}\n```"}]})",
          "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~MockUpstream() {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }

  int port() const { return port_; }
  std::string last_body() {
    std::lock_guard<std::mutex> lock(mu_);
    return last_body_;
  }
  std::string last_auth() {
    std::lock_guard<std::mutex> lock(mu_);
    return last_auth_;
  }
  bool saw_proxy_auth() {
    std::lock_guard<std::mutex> lock(mu_);
    return saw_proxy_auth_;
  }
  int hits() {
    std::lock_guard<std::mutex> lock(mu_);
    return hits_;
  }

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::mutex mu_;
  std::string last_body_;
  std::string last_auth_;
  bool saw_proxy_auth_ = false;
  int hits_ = 0;
};

TEST_CASE("the gateway proxies, stripping out and restoring back") {
  MockUpstream upstream;
  GatewayConfig config;
  config.listen_address = "127.0.0.1:0";
  config.upstream_url = "http://127.0.0.1:" + std::to_string(upstream.port());
  Gateway gateway(config);
  REQUIRE(gateway.start());

  httplib::Client client("127.0.0.1", gateway.port());
  httplib::Headers headers{{"Authorization", "Bearer sk-test"},
                           {"Proxy-Authorization", "Basic hop-secret"}};
  auto res = client.Post(
      "/v1/completions", headers,
      R"({"model":"m","prompt":"Fix:\n```cpp\nint  x  =  1;\n```\n"})",
      "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);

  // Upstream saw the stripped form, with auth forwarded and hop-by-hop
  // headers dropped.
  CHECK(upstream.last_body().find("int x=1;") != std::string::npos);
  CHECK(upstream.last_body().find("int  x  =  1;") == std::string::npos);
  CHECK(upstream.last_auth() == "Bearer sk-test");
  CHECK(!upstream.saw_proxy_auth());
  CHECK(res->get_header_value("X-Upstream") == "mock");

  // The client saw the restored form of the canned completion.
  const json reply = json::parse(res->body);
  const std::string text =
      reply.at("choices").at(0).at("text").get<std::string>();
  CHECK(text.find("int y = 2;") != std::string::npos);
  CHECK(text.find("if (y > 0)") != std::string::npos);

  auto stats = gateway.stats();
  CHECK(stats.requests == 1);
  CHECK(stats.request_regions == 1);
  CHECK(stats.response_regions == 1);
  CHECK(stats.malformed_requests == 0);
  CHECK(stats.upstream_failures == 0);

  // /healthz and /stats are served locally, not proxied.
  auto health = client.Get("/healthz");
  REQUIRE(health);
  CHECK(health->body == "ok");
  auto stat_res = client.Get("/stats");
  REQUIRE(stat_res);
  const json stat_doc = json::parse(stat_res->body);
  CHECK(stat_doc.at("requests").get<uint64_t>() == 1);
  CHECK(stat_doc.at("request_regions").get<uint64_t>() == 1);

  gateway.stop();
}

TEST_CASE("the gateway rejects malformed bodies with 400") {
  MockUpstream upstream;
  GatewayConfig config;
  config.listen_address = "127.0.0.1:0";
  config.upstream_url = "http://127.0.0.1:" + std::to_string(upstream.port());
  Gateway gateway(config);
  REQUIRE(gateway.start());

  httplib::Client client("127.0.0.1", gateway.port());
  auto res = client.Post("/v1/completions", R"({"model":"m"})",
                         "application/json");
  REQUIRE(res);
  CHECK(res->status == 400);
  CHECK(upstream.hits() == 0);  // never forwarded
  CHECK(gateway.stats().malformed_requests == 1);

  gateway.stop();
}

TEST_CASE("an unreachable upstream yields 502") {
  GatewayConfig config;
  config.listen_address = "127.0.0.1:0";
  config.upstream_url = "http://127.0.0.1:9";  // discard port, nothing there
  config.request_timeout_s = 2;
  Gateway gateway(config);
  REQUIRE(gateway.start());

  httplib::Client client("127.0.0.1", gateway.port());
  auto res = client.Post("/v1/completions", R"({"prompt":"hi"})",
                         "application/json");
  REQUIRE(res);
  CHECK(res->status == 502);
  CHECK(gateway.stats().upstream_failures == 1);

  gateway.stop();
}

}  // namespace
}  // namespace unfmt
