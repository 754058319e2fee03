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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ragged/buffer.hpp"
#include "ragged/dtype.hpp"
#include "ragged/error.hpp"
#include "ragged/value.hpp"

namespace ragged {

class ArrayNode;
using NodePtr = std::shared_ptr<const ArrayNode>;

enum class NodeKind { Primitive, ListOffset, Record };

std::string_view kind_name(NodeKind k);

/// Flat run of fixed-width elements over a byte buffer.
class PrimitiveArray {
 public:
  /// Throws SizeError if `data` is shorter than length * width; longer
  /// buffers are narrowed to exactly that many bytes.
  PrimitiveArray(DType dtype, Buffer data, std::int64_t length);

  DType dtype() const noexcept { return dtype_; }
  const Buffer& data() const noexcept { return data_; }
  std::int64_t length() const noexcept { return length_; }

  /// Decodes element i (zero-based). Throws BoundsError.
  Scalar at(std::int64_t i) const;

  /// Unchecked typed read; T must match dtype().
  template <class T>
  T value(std::int64_t i) const noexcept {
    return data_.read<T>(static_cast<std::size_t>(i));
  }

 private:
  DType dtype_;
  Buffer data_;
  std::int64_t length_;
};

/// Ragged lists: list i spans content[offsets[i], offsets[i+1]).
class ListOffsetArray {
 public:
  /// Throws SizeError if `offsets` holds fewer than length + 1 int64 values.
  ListOffsetArray(Buffer offsets, NodePtr content, std::int64_t length);

  const Buffer& offsets() const noexcept { return offsets_; }
  const NodePtr& content() const noexcept { return content_; }
  std::int64_t length() const noexcept { return length_; }

  std::int64_t offset(std::int64_t i) const noexcept {
    return offsets_.read<std::int64_t>(static_cast<std::size_t>(i));
  }

 private:
  Buffer offsets_;
  NodePtr content_;
  std::int64_t length_;
};

/// Struct of arrays: named, equal-length children.
class RecordArray {
 public:
  RecordArray(std::vector<std::string> names, std::vector<NodePtr> contents, std::int64_t length);

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<NodePtr>& contents() const noexcept { return contents_; }
  std::int64_t length() const noexcept { return length_; }

  /// Index of `name`, or nullopt.
  std::optional<std::size_t> field_index(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::vector<NodePtr> contents_;
  std::int64_t length_;
};

class ArrayNode {
 public:
  using Storage = std::variant<PrimitiveArray, ListOffsetArray, RecordArray>;

  ArrayNode(PrimitiveArray a) : node_(std::move(a)) {}
  ArrayNode(ListOffsetArray a) : node_(std::move(a)) {}
  ArrayNode(RecordArray a) : node_(std::move(a)) {}

  NodeKind kind() const noexcept { return static_cast<NodeKind>(node_.index()); }
  std::int64_t length() const noexcept;

  template <class T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&node_);
  }

  /// Typed access; throws LayoutError naming the actual kind on mismatch.
  const PrimitiveArray& as_primitive() const;
  const ListOffsetArray& as_list_offset() const;
  const RecordArray& as_record() const;

  const Storage& storage() const noexcept { return node_; }

 private:
  Storage node_;
};

// ---------------------------------------------------------------------------
// Construction from owned values. Each result passes validate(); invalid
// input raises ValidationError.

template <class T>
NodePtr make_primitive(std::vector<T> values) {
  auto n = static_cast<std::int64_t>(values.size());
  if constexpr (std::is_same_v<T, bool>) {
    std::vector<std::uint8_t> bytes(values.begin(), values.end());
    return std::make_shared<const ArrayNode>(
        PrimitiveArray(DType::Bool, Buffer::from_vector(std::move(bytes)), n));
  } else {
    return std::make_shared<const ArrayNode>(
        PrimitiveArray(dtype_of<T>(), Buffer::from_vector(std::move(values)), n));
  }
}

NodePtr make_list_offset(std::vector<std::int64_t> offsets, NodePtr content);

/// Length is taken from the first field; with no fields, `length` is used.
NodePtr make_record(std::vector<std::pair<std::string, NodePtr>> fields, std::int64_t length = 0);

// ---------------------------------------------------------------------------
// Access. All results share buffers with their input.

inline std::int64_t length(const ArrayNode& node) noexcept { return node.length(); }

/// Zero-copy view of elements [start, stop). Throws BoundsError.
NodePtr slice(const NodePtr& node, std::int64_t start, std::int64_t stop);

/// The i-th list of a list-offset node as a view over its content.
NodePtr get_list(const ArrayNode& node, std::int64_t i);

/// A record's child by name; FieldError lists the available names.
NodePtr get_field(const ArrayNode& node, std::string_view name);

class RecordView;

/// One element of any node: a scalar, a nested list, or a record row.
using Element = std::variant<Scalar, NodePtr, RecordView>;

/// Read-through view of row `index` of a record node.
class RecordView {
 public:
  RecordView(NodePtr record, std::int64_t index);

  std::int64_t index() const noexcept { return index_; }
  const RecordArray& record() const { return record_->as_record(); }
  const std::vector<std::string>& keys() const { return record().names(); }

  Element operator[](std::string_view name) const;
  Value to_value() const;

 private:
  NodePtr record_;
  std::int64_t index_;
};

RecordView get_record(const NodePtr& node, std::int64_t i);

/// Element `i` (zero-based) of any node kind. Throws BoundsError.
Element element_at(const NodePtr& node, std::int64_t i);

Value to_value(const Element& e);

/// Deep materialization into plain values.
Value to_list(const ArrayNode& node);

/// Checks every structural invariant recursively. Returns the first
/// violation found (pre-order), or nullopt when the tree is valid.
std::optional<ValidationIssue> validate(const ArrayNode& node);

/// validate() and throw ValidationError on failure.
void ensure_valid(const ArrayNode& node);

}  // namespace ragged
