// Copyright 2026 The punct Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PUNCT_PUNCT_CLASS_HPP_
#define PUNCT_PUNCT_CLASS_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace punct {

/// Label alphabet. A label names the mark that FOLLOWS a word.
///
/// The enumerator order is significant: it is the tie-break order used by
/// the tagger (lower wins) and the column order of every report.
enum class PunctClass : unsigned char {
  kBlank = 0,
  kFullstop,
  kComma,
  kQuestion,
  kExclamation,
  kHyphen,
  kEllipsis,
};

inline constexpr std::size_t kNumClasses = 7;

inline constexpr std::array<PunctClass, kNumClasses> kAllClasses = {
    PunctClass::kBlank,       PunctClass::kFullstop, PunctClass::kComma,    PunctClass::kQuestion,
    PunctClass::kExclamation, PunctClass::kHyphen,   PunctClass::kEllipsis,
};

/// The six real marks, BLANK excluded, in report order.
inline constexpr std::array<PunctClass, kNumClasses - 1> kMarkClasses = {
    PunctClass::kFullstop,    PunctClass::kComma,  PunctClass::kQuestion,
    PunctClass::kExclamation, PunctClass::kHyphen, PunctClass::kEllipsis,
};

inline constexpr std::size_t index_of(PunctClass c) { return static_cast<std::size_t>(c); }

inline constexpr PunctClass class_at(std::size_t i) { return static_cast<PunctClass>(i); }

/// Surface code point of a mark; U+0000 for BLANK.
inline constexpr char32_t surface_char(PunctClass c) {
  constexpr std::array<char32_t, kNumClasses> kChars = {0, U'.', U',', U'?', U'!', U'-', U'…'};
  return kChars[index_of(c)];
}

/// UTF-8 surface form; empty for BLANK.
inline constexpr std::string_view surface(PunctClass c) {
  constexpr std::array<std::string_view, kNumClasses> kSurfaces = {"",  ".", ",", "?",
                                                                   "!", "-", "\xE2\x80\xA6"};
  return kSurfaces[index_of(c)];
}

inline std::optional<PunctClass> mark_from_char(char32_t cp) {
  for (PunctClass c : kMarkClasses) {
    if (surface_char(c) == cp) return c;
  }
  return std::nullopt;
}

inline bool is_mark(char32_t cp) { return mark_from_char(cp).has_value(); }

/// Stable upper-case identifier used in label files and model dumps.
inline constexpr std::string_view name(PunctClass c) {
  constexpr std::array<std::string_view, kNumClasses> kNames = {
      "BLANK", "FULLSTOP", "COMMA", "QUESTION", "EXCLAMATION", "HYPHEN", "ELLIPSIS"};
  return kNames[index_of(c)];
}

/// Human-readable column title, as used in report tables.
inline constexpr std::string_view display_name(PunctClass c) {
  constexpr std::array<std::string_view, kNumClasses> kTitles = {
      "Blank", "Fullstop", "Comma", "Question Mark", "Exclamation Mark", "Hyphen", "Ellipsis"};
  return kTitles[index_of(c)];
}

inline std::optional<PunctClass> class_from_name(std::string_view n) {
  for (PunctClass c : kAllClasses) {
    if (name(c) == n) return c;
  }
  return std::nullopt;
}

}  // namespace punct

#endif  // PUNCT_PUNCT_CLASS_HPP_
