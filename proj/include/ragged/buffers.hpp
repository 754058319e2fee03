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

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ragged/buffer.hpp"
#include "ragged/forms.hpp"
#include "ragged/layout.hpp"

namespace ragged {

/// Named byte buffers plus a counter of bytes duplicated through copy().
/// Copies of a BufferSet alias the same buffers and share the counter.
class BufferSet {
 public:
  BufferSet() : copied_(std::make_shared<std::atomic<std::uint64_t>>(0)) {}

  /// Throws FormatError if `name` is already present.
  void insert(std::string name, Buffer buffer);

  bool contains(std::string_view name) const { return entries_.find(name) != entries_.end(); }
  /// Throws MissingBufferError.
  const Buffer& at(std::string_view name) const;
  const std::map<std::string, Buffer, std::less<>>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Returns a freshly allocated duplicate of buffer `name`. This is the
  /// only operation that advances copy_counter().
  Buffer copy(std::string_view name) const;

  std::uint64_t copy_counter() const noexcept { return copied_->load(); }

  /// Same names with byte-equal contents.
  friend bool operator==(const BufferSet& a, const BufferSet& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::map<std::string, Buffer, std::less<>> entries_;
  std::shared_ptr<std::atomic<std::uint64_t>> copied_;
};

/// The three parts exchanged by to_buffers/from_buffers.
struct Container {
  Form form;
  std::int64_t length = 0;
  BufferSet buffers;

  bool operator==(const Container&) const = default;
};

/// Decomposes a valid node. Buffers alias the node's memory: "<key>-offsets"
/// for list-offset nodes, "<key>-data" for primitive nodes.
Container to_buffers(const ArrayNode& node, std::string_view key_prefix = "node");

/// Reassembles a node that views `buffers` directly. Buffers longer than
/// needed are narrowed, never copied.
///
/// Throws MissingBufferError, SizeError (buffer shorter than the declared
/// length requires) or ValidationError (offsets break layout invariants).
NodePtr from_buffers(const Form& form, std::int64_t length, const BufferSet& buffers);
NodePtr from_buffers(const Container& c);

// On-disk layout:
//   <dir>/form.json       emit_form() output
//   <dir>/length.txt      decimal length and a newline
//   <dir>/buffers/<name>  raw little-endian bytes

void write_container(const Container& c, const std::filesystem::path& dir);

/// Throws FormatError for a missing form.json/length.txt or a bad length,
/// MissingBufferError for a buffer the form names but the directory lacks,
/// IoError when a file exists but cannot be read.
Container read_container(const std::filesystem::path& dir);

}  // namespace ragged
