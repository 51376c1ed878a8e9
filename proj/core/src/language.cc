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

#include "unfmt/language.h"

#include <algorithm>
#include <cctype>
#include <string>

namespace unfmt {

std::string_view to_string(Language language) {
  switch (language) {
    case Language::kJava:
      return "java";
    case Language::kCpp:
      return "cpp";
    case Language::kCSharp:
      return "csharp";
    case Language::kPython:
      return "python";
  }
  return "unknown";
}

std::optional<Language> language_from_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "java") return Language::kJava;
  if (lower == "cpp" || lower == "c++" || lower == "cc" || lower == "cxx") {
    return Language::kCpp;
  }
  if (lower == "csharp" || lower == "cs" || lower == "c#") {
    return Language::kCSharp;
  }
  if (lower == "python" || lower == "py") return Language::kPython;
  return std::nullopt;
}

std::optional<Language> language_from_path(std::string_view path) {
  const size_t dot = path.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  const std::string_view ext = path.substr(dot);
  if (ext == ".java") return Language::kJava;
  if (ext == ".cpp" || ext == ".cc" || ext == ".h" || ext == ".hpp") {
    return Language::kCpp;
  }
  if (ext == ".cs") return Language::kCSharp;
  if (ext == ".py") return Language::kPython;
  return std::nullopt;
}

}  // namespace unfmt
