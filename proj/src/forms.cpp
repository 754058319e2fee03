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

#include "ragged/forms.hpp"

#include <nlohmann/json.hpp>
#include <unordered_set>

namespace ragged {

namespace {

using json = nlohmann::ordered_json;

constexpr std::string_view kPrimitiveClass = "NumpyArray";
constexpr std::string_view kListOffsetClass = "ListOffsetArray";
constexpr std::string_view kRecordClass = "RecordArray";

Form derive(const ArrayNode& node, std::string_view prefix, int& counter) {
  std::string key = std::string(prefix) + std::to_string(counter++);
  switch (node.kind()) {
    case NodeKind::Primitive:
      return Form::primitive(node.as_primitive().dtype(), std::move(key));
    case NodeKind::ListOffset:
      return Form::list_offset(derive(*node.as_list_offset().content(), prefix, counter),
                               std::move(key));
    case NodeKind::Record: {
      const auto& r = node.as_record();
      std::vector<Form> children;
      for (const auto& child : r.contents()) children.push_back(derive(*child, prefix, counter));
      return Form::record(r.names(), std::move(children), std::move(key));
    }
  }
  throw LayoutError("unknown node kind");
}

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) {
    throw SchemaError(key, std::string("form is missing required key \"") + key + "\"");
  }
  return *it;
}

std::string require_string(const json& obj, const char* key) {
  const auto& v = require(obj, key);
  if (!v.is_string()) {
    throw SchemaError(key, std::string("form key \"") + key + "\" must be a string");
  }
  return v.get<std::string>();
}

Form from_json(const json& j, std::unordered_set<std::string>& keys) {
  if (!j.is_object()) throw SchemaError("class", "form node must be a JSON object");
  auto cls = require_string(j, "class");

  Form out = [&] {
    if (cls == kPrimitiveClass) {
      auto prim = require_string(j, "primitive");
      auto dtype = parse_dtype(prim);
      if (!dtype) throw UnsupportedLayoutError("unsupported primitive \"" + prim + "\"");
      if (auto it = j.find("inner_shape"); it != j.end() && it->is_array() && !it->empty()) {
        throw UnsupportedLayoutError("NumpyArray with non-empty inner_shape is not supported");
      }
      return Form::primitive(*dtype, require_string(j, "form_key"));
    }
    if (cls == kListOffsetClass) {
      const auto& content = require(j, "content");
      auto offsets = require_string(j, "offsets");
      if (offsets != "i64") {
        throw UnsupportedLayoutError("unsupported offsets type \"" + offsets + "\"");
      }
      auto child = from_json(content, keys);
      return Form::list_offset(std::move(child), require_string(j, "form_key"));
    }
    if (cls == kRecordClass) {
      const auto& contents = require(j, "contents");
      std::vector<std::string> names;
      std::vector<Form> children;
      if (contents.is_object()) {
        for (const auto& [name, child] : contents.items()) {
          names.push_back(name);
          children.push_back(from_json(child, keys));
        }
      } else if (contents.is_array()) {
        auto it = j.find("fields");
        if (it == j.end() || it->is_null()) {
          throw UnsupportedLayoutError("RecordArray without field names (tuple) is not supported");
        }
        if (!it->is_array() || it->size() != contents.size()) {
          throw SchemaError("fields", "\"fields\" must list one name per content");
        }
        for (const auto& name : *it) {
          if (!name.is_string()) throw SchemaError("fields", "field names must be strings");
          names.push_back(name.get<std::string>());
        }
        for (const auto& child : contents) children.push_back(from_json(child, keys));
      } else {
        throw SchemaError("contents", "\"contents\" must be an array or object");
      }
      return Form::record(std::move(names), std::move(children), require_string(j, "form_key"));
    }
    throw UnsupportedLayoutError("unsupported layout class \"" + cls + "\"");
  }();

  if (!keys.insert(out.form_key()).second) {
    throw SchemaError("form_key", "duplicate form_key \"" + out.form_key() + "\"");
  }
  return out;
}

json to_json(const Form& f) {
  json j;
  switch (f.kind()) {
    case NodeKind::Primitive:
      j["class"] = kPrimitiveClass;
      j["primitive"] = dtype_name(f.dtype());
      break;
    case NodeKind::ListOffset:
      j["class"] = kListOffsetClass;
      j["offsets"] = "i64";
      j["content"] = to_json(f.content());
      break;
    case NodeKind::Record: {
      j["class"] = kRecordClass;
      j["fields"] = f.names();
      json contents = json::array();
      for (const auto& child : f.contents()) contents.push_back(to_json(child));
      j["contents"] = std::move(contents);
      break;
    }
  }
  j["form_key"] = f.form_key();
  return j;
}

void collect_names(const Form& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case NodeKind::Primitive:
      out.push_back(data_buffer_name(f.form_key()));
      break;
    case NodeKind::ListOffset:
      out.push_back(offsets_buffer_name(f.form_key()));
      collect_names(f.content(), out);
      break;
    case NodeKind::Record:
      for (const auto& child : f.contents()) collect_names(child, out);
      break;
  }
}

}  // namespace

Form Form::primitive(DType dtype, std::string form_key) {
  Form f;
  f.kind_ = NodeKind::Primitive;
  f.dtype_ = dtype;
  f.form_key_ = std::move(form_key);
  return f;
}

Form Form::list_offset(Form content, std::string form_key) {
  Form f;
  f.kind_ = NodeKind::ListOffset;
  f.children_.push_back(std::move(content));
  f.form_key_ = std::move(form_key);
  return f;
}

Form Form::record(std::vector<std::string> names, std::vector<Form> contents,
                  std::string form_key) {
  if (names.size() != contents.size()) {
    throw SchemaError("fields", "record form needs one name per content");
  }
  Form f;
  f.kind_ = NodeKind::Record;
  f.names_ = std::move(names);
  f.children_ = std::move(contents);
  f.form_key_ = std::move(form_key);
  return f;
}

Form form_of(const ArrayNode& node, std::string_view key_prefix) {
  int counter = 0;
  return derive(node, key_prefix, counter);
}

Form parse_form(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
  std::unordered_set<std::string> keys;
  return from_json(j, keys);
}

std::string emit_form(const Form& form) { return to_json(form).dump(); }

std::vector<std::string> buffer_names(const Form& form) {
  std::vector<std::string> out;
  collect_names(form, out);
  return out;
}

std::string offsets_buffer_name(const std::string& form_key) { return form_key + "-offsets"; }
std::string data_buffer_name(const std::string& form_key) { return form_key + "-data"; }

}  // namespace ragged
