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

// Reading and writing the challenge corpus formats.
//
//   in-file        one transcript per line: "token:start-end token:start-end ..."
//                  (timestamps in milliseconds). A line may carry a leading
//                  tab-separated id column; the last column is the transcript.
//   expected/out   one punctuated text per line, aligned 1:1 with the in-file.
//
// Labels are suffix labels: the label of word i is the mark written directly
// after it ("d-" labels "d" with HYPHEN).

#ifndef PUNCT_CORPUS_IO_HPP_
#define PUNCT_CORPUS_IO_HPP_

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "punct/errors.hpp"
#include "punct/punct_class.hpp"
#include "punct/utf8.hpp"

namespace punct {

struct TimedWord {
  std::string text;
  std::int64_t start_ms = 0;
  std::int64_t end_ms = 0;

  friend bool operator==(const TimedWord&, const TimedWord&) = default;
};

struct TimeSpan {
  std::int64_t start_ms = 0;
  std::int64_t end_ms = 0;

  friend bool operator==(const TimeSpan&, const TimeSpan&) = default;
};

struct RawDocument {
  std::string doc_id;
  std::vector<TimedWord> words;

  std::vector<std::string> texts() const {
    std::vector<std::string> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(w.text);
    return out;
  }

  std::vector<TimeSpan> spans() const {
    std::vector<TimeSpan> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back({w.start_ms, w.end_ms});
    return out;
  }
};

struct LabeledDocument {
  std::string doc_id;
  std::vector<std::string> words;
  std::vector<PunctClass> labels;
  /// Per-word timestamps when the document came from an in-file; empty
  /// otherwise. Only the optional pause features read them.
  std::vector<TimeSpan> timings;

  friend bool operator==(const LabeledDocument&, const LabeledDocument&) = default;
};

/// Non-fatal alignment findings (stacked or orphaned marks).
struct AlignDiagnostics {
  std::vector<std::string> warnings;
};

namespace detail {

inline std::optional<std::int64_t> parse_ms(std::string_view s) {
  if (s.empty()) return std::nullopt;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

inline std::string_view last_tab_column(std::string_view line, std::string_view* first = nullptr) {
  const auto tab = line.rfind('\t');
  if (tab == std::string_view::npos) return line;
  if (first != nullptr) *first = line.substr(0, line.find('\t'));
  return line.substr(tab + 1);
}

inline std::string_view trim_line_end(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
  return line;
}

// Characters that never take part in word identity during alignment.
inline bool is_ignorable(char32_t cp) {
  if (is_mark(cp)) return true;
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) || (cp >= 0x5B && cp <= 0x60) ||
           (cp >= 0x7B && cp <= 0x7E);
  }
  switch (cp) {
    case 0xAB: case 0xBB:                          // « »
    case 0x2013: case 0x2014:                      // – —
    case 0x2018: case 0x2019: case 0x201A:         // ‘ ’ ‚
    case 0x201C: case 0x201D: case 0x201E:         // “ ” „
    case 0x2039: case 0x203A:                      // ‹ ›
      return true;
    default:
      return false;
  }
}

inline std::u32string identity_key(std::u32string_view cps) {
  std::u32string key;
  key.reserve(cps.size());
  for (char32_t cp : cps) {
    if (!is_ignorable(cp)) key.push_back(utf8::to_lower(cp));
  }
  return key;
}

inline std::vector<PunctClass> marks_in(std::u32string_view cps) {
  std::vector<PunctClass> marks;
  for (char32_t cp : cps) {
    if (auto m = mark_from_char(cp)) marks.push_back(*m);
  }
  return marks;
}

}  // namespace detail

/// Parses one in-file record. Fields are split on whitespace; within a field
/// the LAST ':' separates the token from "start-end".
inline RawDocument parse_timed_line(std::string_view line) {
  RawDocument doc;
  std::string_view id;
  line = detail::last_tab_column(detail::trim_line_end(line), &id);
  doc.doc_id = std::string(id);

  std::size_t index = 0;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    const std::string_view field = line.substr(pos, end - pos);
    pos = end;

    const auto colon = field.rfind(':');
    if (colon == std::string_view::npos) throw MalformedField(index, std::string(field), "missing ':'");
    const std::string_view token = field.substr(0, colon);
    const std::string_view stamps = field.substr(colon + 1);
    if (token.empty()) throw MalformedField(index, std::string(field), "empty token");
    const auto dash = stamps.find('-');
    if (dash == std::string_view::npos) throw MalformedField(index, std::string(field), "missing '-'");
    const auto start = detail::parse_ms(stamps.substr(0, dash));
    const auto stop = detail::parse_ms(stamps.substr(dash + 1));
    if (!start || !stop) throw MalformedField(index, std::string(field), "non-integer timestamp");
    if (*stop < *start) throw MalformedField(index, std::string(field), "end before start");
    doc.words.push_back({std::string(token), *start, *stop});
    ++index;
  }
  return doc;
}

inline std::string strip_timestamps(const RawDocument& doc) {
  std::string out;
  for (const auto& w : doc.words) {
    if (!out.empty()) out.push_back(' ');
    out += w.text;
  }
  return out;
}

/// Folds each complete group of three consecutive '.' into U+2026, scanning
/// every run of dots left to right. One or two leftover dots are kept.
inline std::string normalize_ellipsis(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '.') {
      out.push_back(text[i++]);
      continue;
    }
    std::size_t run = 0;
    while (i + run < text.size() && text[i + run] == '.') ++run;
    for (std::size_t k = 0; k < run / 3; ++k) out += surface(PunctClass::kEllipsis);
    out.append(run % 3, '.');
    i += run;
  }
  return out;
}

/// Derives one suffix label per word from punctuated gold text.
///
/// Gold tokens are consumed left to right against `words`:
///  1. If the token, case-folded, starts with the next word and the rest is
///     made only of marks, the word takes the first of those marks.
///  2. A token with no word content (e.g. a lone "-" or a quote) is not
///     matched to a word; its first mark, if any, goes to the previous word
///     when that word is still BLANK.
///  3. Otherwise leading/internal punctuation is ignored: the token matches
///     the next word when both agree after case folding and removal of
///     punctuation, and the first mark of the token's trailing punctuation
///     becomes the label.
/// Stacked marks keep only the first; dropped marks are reported in `diag`.
inline LabeledDocument align_gold(const std::vector<std::string>& words, std::string_view gold_text,
                                  AlignDiagnostics* diag = nullptr) {
  LabeledDocument doc;
  doc.words = words;
  doc.labels.assign(words.size(), PunctClass::kBlank);

  auto warn = [&](std::string msg) {
    if (diag != nullptr) diag->warnings.push_back(std::move(msg));
  };
  auto take_first = [&](const std::vector<PunctClass>& marks, std::size_t at, const std::string& tok) {
    if (marks.size() > 1) {
      warn("stacked marks after word " + std::to_string(at) + " in '" + tok + "'; kept " +
           std::string(name(marks.front())));
    }
    return marks.empty() ? PunctClass::kBlank : marks.front();
  };

  std::size_t next = 0;
  for (const std::string& token : utf8::split_whitespace(gold_text)) {
    const std::u32string tok = utf8::decode(token);
    const std::u32string tok_lower = utf8::to_lower(tok);

    if (next < words.size()) {
      const std::u32string word_lower = utf8::to_lower(utf8::decode(words[next]));
      if (tok_lower.size() >= word_lower.size() &&
          tok_lower.compare(0, word_lower.size(), word_lower) == 0) {
        const std::u32string_view rest = std::u32string_view(tok).substr(word_lower.size());
        bool all_marks = true;
        for (char32_t cp : rest) all_marks = all_marks && is_mark(cp);
        if (all_marks) {
          doc.labels[next] = take_first(detail::marks_in(rest), next, token);
          ++next;
          continue;
        }
      }
    }

    const std::u32string key = detail::identity_key(tok);
    if (key.empty()) {
      const auto marks = detail::marks_in(tok);
      if (marks.empty()) continue;
      if (next > 0 && doc.labels[next - 1] == PunctClass::kBlank) {
        doc.labels[next - 1] = take_first(marks, next - 1, token);
      } else {
        warn("dropped orphan mark token '" + token + "'");
      }
      continue;
    }

    if (next >= words.size()) {
      throw LengthError(words.size(), next, "gold text has extra token '" + token + "'");
    }
    if (detail::identity_key(utf8::decode(words[next])) != key) {
      throw AlignmentError(next, words[next], token);
    }
    std::size_t tail = tok.size();
    while (tail > 0 && detail::is_ignorable(tok[tail - 1])) --tail;
    doc.labels[next] = take_first(detail::marks_in(std::u32string_view(tok).substr(tail)), next, token);
    ++next;
  }

  if (next != words.size()) {
    throw LengthError(words.size(), next, "gold text ended before word '" + words[next] + "'");
  }
  return doc;
}

/// align_gold over a parsed in-file record, keeping its id and timings.
inline LabeledDocument align_document(const RawDocument& raw, std::string_view gold_text,
                                      AlignDiagnostics* diag = nullptr) {
  LabeledDocument doc = align_gold(raw.texts(), gold_text, diag);
  doc.doc_id = raw.doc_id;
  doc.timings = raw.spans();
  return doc;
}

/// Words joined by single spaces, each followed directly by its mark.
inline std::string render_punctuated(const LabeledDocument& doc) {
  std::string out;
  for (std::size_t i = 0; i < doc.words.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += doc.words[i];
    if (i < doc.labels.size()) out += surface(doc.labels[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Files

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.emplace_back(detail::trim_line_end(line));
  return lines;
}

inline void write_lines(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  for (const auto& l : lines) out << l << '\n';
  if (!out) throw IoError("write failed for '" + path + "'");
}

/// Reads an in-file. Documents without an id column get their 1-based line
/// number as id.
inline std::vector<RawDocument> read_in_file(const std::string& path) {
  const auto lines = read_lines(path);
  std::vector<RawDocument> docs;
  docs.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      docs.push_back(parse_timed_line(lines[i]));
    } catch (Error& e) {
      e.set_location(path, i + 1);
      throw;
    }
    if (docs.back().doc_id.empty()) docs.back().doc_id = std::to_string(i + 1);
  }
  return docs;
}

/// Reads an expected/out file, keeping only the text column of each line.
inline std::vector<std::string> read_text_file(const std::string& path) {
  auto lines = read_lines(path);
  for (auto& l : lines) l = std::string(detail::last_tab_column(l));
  return lines;
}

/// Normalizes and aligns punctuated `lines` (read from `text_path`) against
/// `docs` (read from `in_path`), line by line.
inline std::vector<LabeledDocument> align_lines(const std::vector<RawDocument>& docs,
                                                const std::string& in_path,
                                                const std::vector<std::string>& lines,
                                                const std::string& text_path,
                                                AlignDiagnostics* diag = nullptr) {
  if (docs.size() != lines.size()) {
    const bool text_shorter = lines.size() < docs.size();
    throw LineCountMismatch("'" + (text_shorter ? text_path : in_path) + "' is shorter: " +
                            std::to_string(text_shorter ? lines.size() : docs.size()) +
                            " lines vs " +
                            std::to_string(text_shorter ? docs.size() : lines.size()) + " in '" +
                            (text_shorter ? in_path : text_path) + "'");
  }
  std::vector<LabeledDocument> out;
  out.reserve(docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    try {
      out.push_back(align_document(docs[i], normalize_ellipsis(lines[i]), diag));
    } catch (Error& e) {
      e.set_location(text_path, i + 1);
      throw;
    }
  }
  return out;
}

}  // namespace punct

#endif  // PUNCT_CORPUS_IO_HPP_
