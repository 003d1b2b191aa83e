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

#ifndef PUNCT_ERRORS_HPP_
#define PUNCT_ERRORS_HPP_

#include <cstddef>
#include <exception>
#include <string>
#include <utility>

namespace punct {

/// Coarse error families. The CLI maps each family to a fixed exit code.
enum class ErrorKind {
  kParse,      // malformed input records, model files, empty corpora
  kAlignment,  // gold text does not match the word stream
  kShape,      // length / count mismatches between paired sequences
  kConfig,     // invalid numeric configuration
  kIo,         // unreadable or unwritable files
};

/// Base of every error thrown by the library.
///
/// An error can be annotated with the file and 1-based line it came from
/// after the fact (see `set_location`), so low-level parsers do not need to
/// know where their input was read from.
class Error : public std::exception {
 public:
  Error(ErrorKind kind, std::string name, std::string message)
      : kind_(kind), name_(std::move(name)), message_(std::move(message)) {
    compose();
  }

  ErrorKind kind() const noexcept { return kind_; }
  /// Short error name, e.g. "MalformedField".
  const std::string& name() const noexcept { return name_; }
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& file() const noexcept { return file_; }

  void set_location(std::string file, std::size_t line) {
    file_ = std::move(file);
    line_ = line;
    compose();
  }

  const char* what() const noexcept override { return what_.c_str(); }

 private:
  void compose() {
    what_ = name_ + ": ";
    if (!file_.empty()) what_ += file_ + ":";
    if (line_ > 0) what_ += std::to_string(line_) + ": ";
    else if (!file_.empty()) what_ += " ";
    what_ += message_;
  }

  ErrorKind kind_;
  std::string name_;
  std::string message_;
  std::string file_;
  std::size_t line_ = 0;
  std::string what_;
};

/// A "token:start-end" field that cannot be parsed.
class MalformedField : public Error {
 public:
  MalformedField(std::size_t field_index, std::string field, const std::string& reason)
      : Error(ErrorKind::kParse, "MalformedField",
              "field " + std::to_string(field_index) + " '" + field + "': " + reason),
        field_index_(field_index),
        field_(std::move(field)) {}

  std::size_t field_index() const noexcept { return field_index_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t field_index_;
  std::string field_;
};

/// Gold text token does not correspond to the next transcript word.
class AlignmentError : public Error {
 public:
  AlignmentError(std::size_t position, std::string word, std::string gold_token)
      : Error(ErrorKind::kAlignment, "AlignmentError",
              "word " + std::to_string(position) + " '" + word + "' does not match gold token '" +
                  gold_token + "'"),
        position_(position),
        word_(std::move(word)),
        gold_token_(std::move(gold_token)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& word() const noexcept { return word_; }
  const std::string& gold_token() const noexcept { return gold_token_; }

 private:
  std::size_t position_;
  std::string word_;
  std::string gold_token_;
};

/// Gold text runs out before the words do, or vice versa.
class LengthError : public Error {
 public:
  LengthError(std::size_t words, std::size_t matched, const std::string& detail)
      : Error(ErrorKind::kAlignment, "LengthError",
              "matched " + std::to_string(matched) + " of " + std::to_string(words) +
                  " words: " + detail) {}
};

class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& message)
      : Error(ErrorKind::kShape, "ShapeMismatch", message) {}
};

class LineCountMismatch : public Error {
 public:
  explicit LineCountMismatch(const std::string& message)
      : Error(ErrorKind::kShape, "LineCountMismatch", message) {}
};

class BadConfig : public Error {
 public:
  explicit BadConfig(const std::string& message)
      : Error(ErrorKind::kConfig, "BadConfig", message) {}
};

class EmptyCorpus : public Error {
 public:
  explicit EmptyCorpus(const std::string& message = "corpus contains no words")
      : Error(ErrorKind::kParse, "EmptyCorpus", message) {}
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(std::size_t index, std::size_t size)
      : Error(ErrorKind::kConfig, "IndexOutOfRange",
              "position " + std::to_string(index) + " outside [0, " + std::to_string(size) + ")") {}
};

class ModelFormatError : public Error {
 public:
  explicit ModelFormatError(const std::string& message)
      : Error(ErrorKind::kParse, "ModelFormatError", message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error(ErrorKind::kIo, "IoError", message) {}
};

}  // namespace punct

#endif  // PUNCT_ERRORS_HPP_
