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

#include <bit>
#include <cstddef>
#include <cstring>
#include <memory>
#include <span>
#include <vector>

namespace ragged {

static_assert(std::endian::native == std::endian::little,
              "buffers are exchanged as raw little-endian bytes");

/// Immutable, shared byte range. Copies and slices alias the same storage.
class Buffer {
 public:
  Buffer() = default;
  explicit Buffer(std::vector<std::byte> bytes);

  /// Takes ownership of `values` and exposes them as bytes.
  template <class T>
  static Buffer from_vector(std::vector<T> values) {
    static_assert(std::is_trivially_copyable_v<T>);
    auto owner = std::make_shared<const std::vector<T>>(std::move(values));
    auto* p = reinterpret_cast<const std::byte*>(owner->data());
    std::size_t n = owner->size() * sizeof(T);
    return Buffer(std::shared_ptr<const void>(owner, p), p, n);
  }

  const std::byte* data() const noexcept { return data_; }
  std::size_t size() const noexcept { return size_; }
  std::span<const std::byte> bytes() const noexcept { return {data_, size_}; }

  /// Sub-range view; throws BoundsError if it leaves the buffer.
  Buffer slice(std::size_t offset, std::size_t length) const;

  /// Reads element `i` of type T without assuming alignment.
  template <class T>
  T read(std::size_t i) const noexcept {
    T out;
    std::memcpy(&out, data_ + i * sizeof(T), sizeof(T));
    return out;
  }

  /// True if both refer to the same bytes in memory.
  bool aliases(const Buffer& other) const noexcept {
    return data_ == other.data_ && size_ == other.size_;
  }

  /// Byte-wise equality.
  friend bool operator==(const Buffer& a, const Buffer& b) noexcept {
    return a.size_ == b.size_ && (a.size_ == 0 || std::memcmp(a.data_, b.data_, a.size_) == 0);
  }

 private:
  Buffer(std::shared_ptr<const void> owner, const std::byte* data, std::size_t size)
      : owner_(std::move(owner)), data_(data), size_(size) {}

  std::shared_ptr<const void> owner_;
  const std::byte* data_ = nullptr;
  std::size_t size_ = 0;
};

}  // namespace ragged
