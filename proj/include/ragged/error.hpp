// Copyright 2026 The ragged Authors
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ragged {

// Exception hierarchy. The three intermediate classes map onto the CLI exit
// codes: IoError -> 1, FormatError -> 2, LayoutError -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  IoError(std::string path, const std::string& what)
      : Error(what + ": " + path), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class LayoutError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON. `offset` is the byte position reported by the parser.
class ParseError : public FormatError {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : FormatError("parse error at byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A layout class, dtype or offsets type outside the supported set.
class UnsupportedLayoutError : public FormatError {
 public:
  using FormatError::FormatError;
};

/// A required form key is missing or has the wrong JSON type.
class SchemaError : public FormatError {
 public:
  SchemaError(std::string key, const std::string& what) : FormatError(what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class MissingBufferError : public FormatError {
 public:
  explicit MissingBufferError(std::string name)
      : FormatError("missing buffer \"" + name + "\""), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// A buffer holds fewer bytes than its declared length requires.
class SizeError : public LayoutError {
 public:
  SizeError(std::string what, std::size_t required, std::size_t actual)
      : LayoutError(what + " (needs " + std::to_string(required) + " bytes, has " +
                    std::to_string(actual) + ")"),
        required_(required),
        actual_(actual) {}
  std::size_t required() const noexcept { return required_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t required_;
  std::size_t actual_;
};

/// Out-of-range element access. `index` is in the caller's convention and
/// `first` is that convention's first valid index.
class BoundsError : public LayoutError {
 public:
  BoundsError(std::int64_t index, std::int64_t length, std::int64_t first = 0)
      : LayoutError("BoundsError: attempt to access " + std::to_string(length) +
                    "-element array at index [" + std::to_string(index) + "]; valid range [" +
                    std::to_string(first) + ", " + std::to_string(first + length) + ")"),
        index_(index),
        length_(length),
        first_(first) {}
  std::int64_t index() const noexcept { return index_; }
  std::int64_t length() const noexcept { return length_; }
  std::int64_t first() const noexcept { return first_; }

 private:
  std::int64_t index_;
  std::int64_t length_;
  std::int64_t first_;
};

class FieldError : public LayoutError {
 public:
  FieldError(const std::string& name, std::vector<std::string> available);
  const std::vector<std::string>& available() const noexcept { return available_; }

 private:
  std::vector<std::string> available_;
};

/// One violated structural rule, located by a path such as `$.content.x`.
struct ValidationIssue {
  std::string path;
  std::string rule;
  std::string detail;

  std::string message() const;
  bool operator==(const ValidationIssue&) const = default;
};

class ValidationError : public LayoutError {
 public:
  explicit ValidationError(ValidationIssue issue)
      : LayoutError(issue.message()), issue_(std::move(issue)) {}
  const ValidationIssue& issue() const noexcept { return issue_; }

 private:
  ValidationIssue issue_;
};

class NoRuleError : public Error {
 public:
  NoRuleError(std::string type_key, std::vector<int> tiers_tried);
  const std::string& type_key() const noexcept { return type_key_; }
  const std::vector<int>& tiers_tried() const noexcept { return tiers_tried_; }

 private:
  std::string type_key_;
  std::vector<int> tiers_tried_;
};

}  // namespace ragged
