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

#include "unfmt/cli.h"

#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "unfmt/error.h"
#include "unfmt/gateway.h"
#include "unfmt/metering.h"
#include "unfmt/partial.h"
#include "unfmt/transform.h"
#include "unfmt/verify.h"

namespace unfmt {

namespace {

struct Options {
  std::string lang;
  std::string remove = "indent,space,newline";
  std::string style_path;
  bool partial = false;
  std::string tokenizer = "words";
  bool json = false;
  std::string out_path;
  std::vector<std::string> paths;
};

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kUsage:
      return kExitUsage;
    case ErrorCode::kMissingFile:
    case ErrorCode::kIoError:
    case ErrorCode::kEmptyCorpus:
      return kExitIo;
    default:
      return kExitTransform;
  }
}

FormatConfig parse_remove(const std::string& spec) {
  FormatConfig config = FormatConfig::none();
  std::istringstream parts(spec);
  std::string part;
  while (std::getline(parts, part, ',')) {
    if (part == "indent") {
      config.remove_indentation = true;
    } else if (part == "space") {
      config.remove_whitespace = true;
    } else if (part == "newline") {
      config.remove_newlines = true;
    } else {
      throw Error(ErrorCode::kUsage,
                  "--remove accepts indent,space,newline; got '" + part + "'");
    }
  }
  return config;
}

TokenizerSpec parse_tokenizer(const std::string& spec) {
  if (spec == "bytes") return TokenizerSpec::bytes();
  if (spec == "words") return TokenizerSpec::words();
  if (spec.rfind("bpe:", 0) == 0) {
    const std::string rest = spec.substr(4);
    const size_t comma = rest.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 >= rest.size()) {
      throw Error(ErrorCode::kUsage,
                  "--tokenizer bpe wants bpe:<vocab>,<merges>");
    }
    return TokenizerSpec::bpe(rest.substr(0, comma), rest.substr(comma + 1));
  }
  throw Error(ErrorCode::kUsage,
              "--tokenizer accepts bytes, words or bpe:<vocab>,<merges>");
}

Language language_for(const Options& opts, const std::string& path) {
  if (!opts.lang.empty()) {
    if (auto lang = language_from_name(opts.lang)) return *lang;
    throw Error(ErrorCode::kUsage, "unknown language '" + opts.lang + "'");
  }
  if (path != "-") {
    if (auto lang = language_from_path(path)) return *lang;
  }
  throw Error(ErrorCode::kUsage,
              "cannot infer a language for '" + path + "'; pass --lang");
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

StyleProfile load_style(const std::string& path, Language language) {
  StyleProfile style = StyleProfile::defaults_for(language);
  if (path.empty()) return style;
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoError, "cannot open " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(file);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kUsage,
                "style profile is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kUsage, "style profile must be a JSON object");
  }
  for (const auto& [key, value] : doc.items()) {
    try {
      if (key == "indent_width") {
        style.indent_width = value.get<int>();
      } else if (key == "brace_style") {
        if (value.get<std::string>() != "attached") {
          throw Error(ErrorCode::kUsage,
                      "brace_style supports only \"attached\"");
        }
      } else if (key == "space_after_control_keyword") {
        style.space_after_control_keyword = value.get<bool>();
      } else if (key == "space_around_binary_ops") {
        style.space_around_binary_ops = value.get<bool>();
      } else if (key == "space_after_comma") {
        style.space_after_comma = value.get<bool>();
      } else if (key == "max_blank_lines") {
        style.max_blank_lines = value.get<int>();
      } else {
        throw Error(ErrorCode::kUsage,
                    "unknown style profile key '" + key + "'");
      }
    } catch (const nlohmann::json::exception&) {
      throw Error(ErrorCode::kUsage,
                  "style profile key '" + key + "' has the wrong type");
    }
  }
  if (style.indent_width < 1 || style.max_blank_lines < 0) {
    throw Error(ErrorCode::kUsage, "style profile values out of range");
  }
  return style;
}

// Resolves --out: returns the stream to write results to.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw Error(ErrorCode::kIoError, "cannot write " + path);
    stream_ = file_.get();
  }

  std::ostream& stream() { return *stream_; }

  void finish() {
    if (file_) {
      file_->flush();
      if (!*file_) throw Error(ErrorCode::kIoError, "write failed");
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

int run_transform(const Options& opts, bool is_strip, std::istream& in,
                  std::ostream& out, std::ostream& err) {
  if (opts.paths.empty()) {
    throw Error(ErrorCode::kUsage, "no inputs; pass file paths or -");
  }
  const FormatConfig config = parse_remove(opts.remove);
  OutputTarget target(opts.out_path, out);
  nlohmann::ordered_json report = nlohmann::ordered_json::array();

  for (const std::string& path : opts.paths) {
    const Language language = language_for(opts, path);
    const std::string source = read_input(path, in);
    const StyleProfile style = load_style(opts.style_path, language);

    TransformResult result;
    if (is_strip) {
      result = opts.partial ? strip_partial(source, language, config)
                            : strip(source, language, config);
    } else {
      result = opts.partial ? restore_partial(source, language, style)
                            : restore(source, language, style);
    }
    for (const std::string& clamped : result.clamped_options) {
      err << "note: " << path << ": " << clamped << " has no effect for "
          << to_string(language) << "\n";
    }
    if (opts.json) {
      nlohmann::ordered_json row;
      row["path"] = path;
      row["language"] = std::string(to_string(language));
      row["bytes_before"] = result.bytes_before;
      row["bytes_after"] = result.bytes_after;
      row["clamped_options"] = result.clamped_options;
      row["output"] = result.output;
      report.push_back(std::move(row));
    } else {
      target.stream() << result.output;
    }
  }
  if (opts.json) target.stream() << report.dump(2) << "\n";
  target.finish();
  return kExitOk;
}

int run_verify(const Options& opts, std::istream& in, std::ostream& out,
               std::ostream& err) {
  (void)err;
  if (opts.paths.size() != 2) {
    throw Error(ErrorCode::kUsage, "verify wants exactly two inputs");
  }
  const Language language = language_for(opts, opts.paths[0]);
  const std::string left = read_input(opts.paths[0], in);
  const std::string right = read_input(opts.paths[1], in);

  const EquivalenceReport report = equivalent(left, right, language);
  OutputTarget target(opts.out_path, out);
  if (opts.json) {
    nlohmann::ordered_json j;
    j["equivalent"] = report.equivalent;
    j["compared_tokens"] = report.compared_tokens;
    if (report.first_divergence) {
      const Divergence& d = *report.first_divergence;
      j["divergence"] = {{"index", d.index},
                         {"left", d.left_text},
                         {"right", d.right_text},
                         {"left_line", d.left_line},
                         {"left_col", d.left_col},
                         {"right_line", d.right_line},
                         {"right_col", d.right_col}};
    }
    target.stream() << j.dump(2) << "\n";
  } else if (report.equivalent) {
    target.stream() << "equivalent (" << report.compared_tokens
                    << " tokens)\n";
  } else {
    target.stream() << report.first_divergence->describe() << "\n";
  }
  target.finish();
  return report.equivalent ? kExitOk : kExitVerifyFailed;
}

int run_measure(const Options& opts, std::ostream& out) {
  if (opts.paths.size() != 1) {
    throw Error(ErrorCode::kUsage, "measure wants one corpus directory");
  }
  std::vector<Language> languages;
  if (opts.lang.empty()) {
    languages.assign(std::begin(kAllLanguages), std::end(kAllLanguages));
  } else if (auto lang = language_from_name(opts.lang)) {
    languages.push_back(*lang);
  } else {
    throw Error(ErrorCode::kUsage, "unknown language '" + opts.lang + "'");
  }
  const FormatConfig config = parse_remove(opts.remove);
  const std::unique_ptr<Tokenizer> tokenizer =
      load_tokenizer(parse_tokenizer(opts.tokenizer));

  const CorpusReport report =
      measure_corpus(opts.paths[0], languages, config, *tokenizer);
  OutputTarget target(opts.out_path, out);
  target.stream() << (opts.json ? report.to_json() + "\n" : report.to_text());
  target.finish();
  return kExitOk;
}

int run_serve(const Options& opts, std::ostream& err) {
  GatewayConfig config;
  if (!opts.lang.empty()) {
    if (auto lang = language_from_name(opts.lang)) {
      config.language_default = *lang;
    } else {
      throw Error(ErrorCode::kUsage, "unknown language '" + opts.lang + "'");
    }
  }
  config.config = parse_remove(opts.remove);
  config.style = load_style(opts.style_path, config.language_default);
  if (!serve(config)) {
    err << "error: cannot bind " << config.listen_address << "\n";
    return kExitIo;
  }
  return kExitOk;
}

void add_common_options(CLI::App* cmd, Options* opts, bool with_paths) {
  cmd->add_option("--lang", opts->lang,
                  "Source language: java, cpp, csharp or python");
  cmd->add_option("--remove", opts->remove,
                  "Comma list of trivia to strip: indent,space,newline");
  cmd->add_option("--style", opts->style_path, "Style profile JSON file");
  cmd->add_flag("--partial", opts->partial,
                "Treat inputs as possibly incomplete snippets");
  cmd->add_option("--tokenizer", opts->tokenizer,
                  "bytes, words or bpe:<vocab>,<merges>");
  cmd->add_flag("--json", opts->json, "Machine-readable JSON output");
  cmd->add_option("--out", opts->out_path, "Write output to PATH");
  if (with_paths) {
    cmd->add_option("paths", opts->paths, "Input files, or - for stdin");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"unfmt: strip code formatting for LLM prompts, restore it in "
               "LLM output"};
  app.require_subcommand(1);
  CLI::App* strip_cmd =
      app.add_subcommand("strip", "Remove removable formatting");
  CLI::App* restore_cmd =
      app.add_subcommand("restore", "Re-layout compact code per a style");
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check token-stream equivalence");
  CLI::App* measure_cmd =
      app.add_subcommand("measure", "Token-reduction report for a corpus");
  CLI::App* serve_cmd =
      app.add_subcommand("serve", "Run the LLM gateway proxy");
  for (CLI::App* cmd :
       {strip_cmd, restore_cmd, verify_cmd, measure_cmd, serve_cmd}) {
    add_common_options(cmd, &opts, cmd != serve_cmd);
  }

  // CLI11's vector overload consumes arguments as a stack (reversed).
  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(strip_cmd))
      return run_transform(opts, /*is_strip=*/true, in, out, err);
    if (app.got_subcommand(restore_cmd))
      return run_transform(opts, /*is_strip=*/false, in, out, err);
    if (app.got_subcommand(verify_cmd)) return run_verify(opts, in, out, err);
    if (app.got_subcommand(measure_cmd)) return run_measure(opts, out);
    if (app.got_subcommand(serve_cmd)) return run_serve(opts, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace unfmt
