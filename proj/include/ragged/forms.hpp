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

#include <string>
#include <string_view>
#include <vector>

#include "ragged/dtype.hpp"
#include "ragged/layout.hpp"

namespace ragged {

/// Schema of an ArrayNode tree: node kinds, dtypes and field names, with a
/// form_key per node that names its buffers.
class Form {
 public:
  static Form primitive(DType dtype, std::string form_key);
  static Form list_offset(Form content, std::string form_key);
  static Form record(std::vector<std::string> names, std::vector<Form> contents,
                     std::string form_key);

  NodeKind kind() const noexcept { return kind_; }
  DType dtype() const noexcept { return dtype_; }
  const Form& content() const { return children_.at(0); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<Form>& contents() const noexcept { return children_; }
  const std::string& form_key() const noexcept { return form_key_; }

  bool operator==(const Form& other) const = default;

 private:
  Form() = default;

  NodeKind kind_ = NodeKind::Primitive;
  DType dtype_ = DType::Float64;
  std::vector<std::string> names_;
  std::vector<Form> children_;
  std::string form_key_;
};

/// Derives the form of `node`, keying nodes "<prefix>0", "<prefix>1", ... in
/// pre-order.
Form form_of(const ArrayNode& node, std::string_view key_prefix = "node");

/// Parses the JSON form document. Unknown keys are ignored.
///
/// Throws ParseError on malformed JSON, UnsupportedLayoutError for classes,
/// dtypes or offset types outside the supported set, and SchemaError for a
/// missing or mistyped required key or a duplicated form_key.
Form parse_form(std::string_view text);

/// Serializes with keys in the order class, offsets, primitive, fields,
/// content/contents, form_key.
std::string emit_form(const Form& form);

/// Names of the buffers a form refers to, in pre-order.
std::vector<std::string> buffer_names(const Form& form);

std::string offsets_buffer_name(const std::string& form_key);
std::string data_buffer_name(const std::string& form_key);

}  // namespace ragged
