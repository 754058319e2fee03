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

#include "ragged/layout.hpp"

#include <unordered_set>

namespace ragged {

namespace {

constexpr std::size_t kOffsetWidth = sizeof(std::int64_t);

Scalar decode(const PrimitiveArray& a, std::int64_t i) {
  switch (a.dtype()) {
    case DType::Bool:
      return a.value<std::uint8_t>(i) != 0;
    case DType::Int8:
      return std::int64_t{a.value<std::int8_t>(i)};
    case DType::Int16:
      return std::int64_t{a.value<std::int16_t>(i)};
    case DType::Int32:
      return std::int64_t{a.value<std::int32_t>(i)};
    case DType::Int64:
      return a.value<std::int64_t>(i);
    case DType::UInt8:
      return std::uint64_t{a.value<std::uint8_t>(i)};
    case DType::UInt16:
      return std::uint64_t{a.value<std::uint16_t>(i)};
    case DType::UInt32:
      return std::uint64_t{a.value<std::uint32_t>(i)};
    case DType::UInt64:
      return a.value<std::uint64_t>(i);
    case DType::Float32:
      return double{a.value<float>(i)};
    case DType::Float64:
      return a.value<double>(i);
  }
  return false;
}

void check_index(std::int64_t i, std::int64_t length) {
  if (i < 0 || i >= length) throw BoundsError(i, length);
}

std::optional<ValidationIssue> validate_at(const ArrayNode& node, const std::string& path) {
  auto issue = [&](std::string rule, std::string detail = {}) {
    return ValidationIssue{path, std::move(rule), std::move(detail)};
  };
  if (node.length() < 0) return issue("non-negative length");

  if (const auto* p = node.get_if<PrimitiveArray>()) {
    auto need = static_cast<std::size_t>(p->length()) * width(p->dtype());
    if (p->data().size() != need) {
      return issue("data byte length",
                   std::to_string(p->data().size()) + " != " + std::to_string(need));
    }
    return std::nullopt;
  }

  if (const auto* l = node.get_if<ListOffsetArray>()) {
    auto n = l->length();
    if (l->offsets().size() != static_cast<std::size_t>(n + 1) * kOffsetWidth) {
      return issue("offsets byte length");
    }
    if (!l->content()) return issue("missing content");
    if (l->offset(0) < 0) return issue("non-negative first offset", std::to_string(l->offset(0)));
    for (std::int64_t i = 0; i < n; ++i) {
      if (l->offset(i + 1) < l->offset(i)) {
        return issue("monotonic offsets", "offsets[" + std::to_string(i) +
                                              "] = " + std::to_string(l->offset(i)) +
                                              " > offsets[" + std::to_string(i + 1) +
                                              "] = " + std::to_string(l->offset(i + 1)));
      }
    }
    if (l->offset(n) > l->content()->length()) {
      return issue("final offset within content",
                   std::to_string(l->offset(n)) + " > " + std::to_string(l->content()->length()));
    }
    return validate_at(*l->content(), path + ".content");
  }

  const auto& r = node.as_record();
  if (r.names().size() != r.contents().size()) return issue("field count");
  std::unordered_set<std::string_view> seen;
  for (const auto& name : r.names()) {
    if (name.empty()) return issue("non-empty field names");
    if (!seen.insert(name).second) return issue("unique field names", name);
  }
  for (std::size_t f = 0; f < r.contents().size(); ++f) {
    const auto& child = r.contents()[f];
    if (!child) return issue("missing content", r.names()[f]);
    if (child->length() != r.length()) {
      return issue("field length", r.names()[f] + " has " + std::to_string(child->length()) +
                                       ", record has " + std::to_string(r.length()));
    }
  }
  for (std::size_t f = 0; f < r.contents().size(); ++f) {
    if (auto bad = validate_at(*r.contents()[f], path + "." + r.names()[f])) return bad;
  }
  return std::nullopt;
}

}  // namespace

std::string_view kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Primitive:
      return "primitive";
    case NodeKind::ListOffset:
      return "list-offset";
    case NodeKind::Record:
      return "record";
  }
  return "?";
}

PrimitiveArray::PrimitiveArray(DType dtype, Buffer data, std::int64_t length)
    : dtype_(dtype), length_(length) {
  if (length < 0) throw ValidationError({"$", "non-negative length", std::to_string(length)});
  auto need = static_cast<std::size_t>(length) * width(dtype);
  if (data.size() < need) {
    throw SizeError("data buffer too short for " + std::to_string(length) + " " +
                        std::string(dtype_name(dtype)) + " values",
                    need, data.size());
  }
  data_ = data.size() == need ? std::move(data) : data.slice(0, need);
}

Scalar PrimitiveArray::at(std::int64_t i) const {
  check_index(i, length_);
  return decode(*this, i);
}

ListOffsetArray::ListOffsetArray(Buffer offsets, NodePtr content, std::int64_t length)
    : content_(std::move(content)), length_(length) {
  if (length < 0) throw ValidationError({"$", "non-negative length", std::to_string(length)});
  auto need = static_cast<std::size_t>(length + 1) * kOffsetWidth;
  if (offsets.size() < need) {
    throw SizeError("offsets buffer too short for " + std::to_string(length) + " lists", need,
                    offsets.size());
  }
  offsets_ = offsets.size() == need ? std::move(offsets) : offsets.slice(0, need);
}

RecordArray::RecordArray(std::vector<std::string> names, std::vector<NodePtr> contents,
                         std::int64_t length)
    : names_(std::move(names)), contents_(std::move(contents)), length_(length) {
  if (length < 0) throw ValidationError({"$", "non-negative length", std::to_string(length)});
}

std::optional<std::size_t> RecordArray::field_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::int64_t ArrayNode::length() const noexcept {
  return std::visit([](const auto& a) { return a.length(); }, node_);
}

const PrimitiveArray& ArrayNode::as_primitive() const {
  if (auto* p = get_if<PrimitiveArray>()) return *p;
  throw LayoutError("expected a primitive node, got " + std::string(kind_name(kind())));
}

const ListOffsetArray& ArrayNode::as_list_offset() const {
  if (auto* p = get_if<ListOffsetArray>()) return *p;
  throw LayoutError("expected a list-offset node, got " + std::string(kind_name(kind())));
}

const RecordArray& ArrayNode::as_record() const {
  if (auto* p = get_if<RecordArray>()) return *p;
  throw LayoutError("expected a record node, got " + std::string(kind_name(kind())));
}

NodePtr make_list_offset(std::vector<std::int64_t> offsets, NodePtr content) {
  if (offsets.empty()) throw ValidationError({"$", "offsets byte length", "no offsets"});
  auto n = static_cast<std::int64_t>(offsets.size()) - 1;
  auto node = std::make_shared<const ArrayNode>(
      ListOffsetArray(Buffer::from_vector(std::move(offsets)), std::move(content), n));
  ensure_valid(*node);
  return node;
}

NodePtr make_record(std::vector<std::pair<std::string, NodePtr>> fields, std::int64_t length) {
  std::vector<std::string> names;
  std::vector<NodePtr> contents;
  for (auto& [name, child] : fields) {
    names.push_back(std::move(name));
    contents.push_back(std::move(child));
  }
  if (!contents.empty() && contents.front()) length = contents.front()->length();
  auto node =
      std::make_shared<const ArrayNode>(RecordArray(std::move(names), std::move(contents), length));
  ensure_valid(*node);
  return node;
}

NodePtr slice(const NodePtr& node, std::int64_t start, std::int64_t stop) {
  auto n = node->length();
  if (start < 0 || start > n) throw BoundsError(start, n);
  if (stop < start || stop > n) throw BoundsError(stop, n);
  if (start == 0 && stop == n) return node;
  auto count = stop - start;

  if (const auto* p = node->get_if<PrimitiveArray>()) {
    auto w = width(p->dtype());
    return std::make_shared<const ArrayNode>(PrimitiveArray(
        p->dtype(),
        p->data().slice(static_cast<std::size_t>(start) * w, static_cast<std::size_t>(count) * w),
        count));
  }
  if (const auto* l = node->get_if<ListOffsetArray>()) {
    return std::make_shared<const ArrayNode>(
        ListOffsetArray(l->offsets().slice(static_cast<std::size_t>(start) * kOffsetWidth,
                                           static_cast<std::size_t>(count + 1) * kOffsetWidth),
                        l->content(), count));
  }
  const auto& r = node->as_record();
  std::vector<NodePtr> contents;
  contents.reserve(r.contents().size());
  for (const auto& child : r.contents()) contents.push_back(slice(child, start, stop));
  return std::make_shared<const ArrayNode>(RecordArray(r.names(), std::move(contents), count));
}

NodePtr get_list(const ArrayNode& node, std::int64_t i) {
  const auto& l = node.as_list_offset();
  check_index(i, l.length());
  return slice(l.content(), l.offset(i), l.offset(i + 1));
}

NodePtr get_field(const ArrayNode& node, std::string_view name) {
  const auto& r = node.as_record();
  if (auto idx = r.field_index(name)) return r.contents()[*idx];
  throw FieldError(std::string(name), r.names());
}

RecordView::RecordView(NodePtr record, std::int64_t index)
    : record_(std::move(record)), index_(index) {
  check_index(index_, record_->as_record().length());
}

Element RecordView::operator[](std::string_view name) const {
  return element_at(get_field(*record_, name), index_);
}

Value RecordView::to_value() const {
  const auto& r = record();
  RecordValue out;
  out.keys = r.names();
  out.values.reserve(r.contents().size());
  for (const auto& child : r.contents())
    out.values.push_back(ragged::to_value(element_at(child, index_)));
  return Value(std::move(out));
}

RecordView get_record(const NodePtr& node, std::int64_t i) { return RecordView(node, i); }

Element element_at(const NodePtr& node, std::int64_t i) {
  switch (node->kind()) {
    case NodeKind::Primitive:
      return node->as_primitive().at(i);
    case NodeKind::ListOffset:
      return get_list(*node, i);
    case NodeKind::Record:
      return get_record(node, i);
  }
  throw LayoutError("unknown node kind");
}

Value to_value(const Element& e) {
  return std::visit(
      [](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Scalar>)
          return Value(x);
        else if constexpr (std::is_same_v<T, NodePtr>)
          return to_list(*x);
        else
          return x.to_value();
      },
      e);
}

Value to_list(const ArrayNode& node) {
  auto n = node.length();
  ListValue out;
  out.reserve(static_cast<std::size_t>(n));

  if (const auto* p = node.get_if<PrimitiveArray>()) {
    for (std::int64_t i = 0; i < n; ++i) out.emplace_back(decode(*p, i));
  } else if (const auto* l = node.get_if<ListOffsetArray>()) {
    // Materialize the content once and cut it, rather than slicing per list.
    auto start = n > 0 ? l->offset(0) : 0;
    auto stop = n > 0 ? l->offset(n) : 0;
    auto flat = to_list(*slice(l->content(), start, stop)).as_list();
    for (std::int64_t i = 0; i < n; ++i) {
      auto b = flat.begin() + (l->offset(i) - start);
      auto e = flat.begin() + (l->offset(i + 1) - start);
      out.emplace_back(ListValue(b, e));
    }
  } else {
    const auto& r = node.as_record();
    std::vector<ListValue> columns;
    for (const auto& child : r.contents()) columns.push_back(to_list(*child).as_list());
    for (std::int64_t i = 0; i < n; ++i) {
      RecordValue row;
      row.keys = r.names();
      for (auto& col : columns) row.values.push_back(std::move(col[static_cast<std::size_t>(i)]));
      out.emplace_back(std::move(row));
    }
  }
  return Value(std::move(out));
}

std::optional<ValidationIssue> validate(const ArrayNode& node) { return validate_at(node, "$"); }

void ensure_valid(const ArrayNode& node) {
  if (auto issue = validate(node)) throw ValidationError(std::move(*issue));
}

}  // namespace ragged
