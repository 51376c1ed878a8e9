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

#ifndef UNFMT_LANGUAGE_H_
#define UNFMT_LANGUAGE_H_

#include <optional>
#include <string_view>

namespace unfmt {

enum class Language {
  kJava,
  kCpp,
  kCSharp,
  kPython,
};

inline constexpr Language kAllLanguages[] = {
    Language::kJava, Language::kCpp, Language::kCSharp, Language::kPython};

// Canonical lowercase name: "java", "cpp", "csharp", "python".
std::string_view to_string(Language language);

// Accepts canonical names plus common aliases ("c++", "cs", "c#", "py").
std::optional<Language> language_from_name(std::string_view name);

// Maps a file path by extension: .java / .cpp .cc .h .hpp / .cs / .py.
std::optional<Language> language_from_path(std::string_view path);

// Java, C++ and C# share brace/semicolon structure; Python does not.
inline bool is_c_family(Language language) {
  return language != Language::kPython;
}

}  // namespace unfmt

#endif  // UNFMT_LANGUAGE_H_
