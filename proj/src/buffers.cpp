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

#include "ragged/buffers.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace ragged {

namespace fs = std::filesystem;

namespace {

void collect(const ArrayNode& node, const Form& form, BufferSet& out) {
  switch (node.kind()) {
    case NodeKind::Primitive:
      out.insert(data_buffer_name(form.form_key()), node.as_primitive().data());
      break;
    case NodeKind::ListOffset: {
      const auto& l = node.as_list_offset();
      out.insert(offsets_buffer_name(form.form_key()), l.offsets());
      collect(*l.content(), form.content(), out);
      break;
    }
    case NodeKind::Record: {
      const auto& r = node.as_record();
      for (std::size_t i = 0; i < r.contents().size(); ++i) {
        collect(*r.contents()[i], form.contents()[i], out);
      }
      break;
    }
  }
}

const Buffer& sized(const BufferSet& buffers, const std::string& name, std::size_t need) {
  const auto& b = buffers.at(name);
  if (b.size() < need) throw SizeError("buffer \"" + name + "\" too short", need, b.size());
  return b;
}

NodePtr build(const Form& form, std::int64_t length, const BufferSet& buffers,
              const std::string& path) {
  if (length < 0) throw ValidationError({path, "non-negative length", std::to_string(length)});
  switch (form.kind()) {
    case NodeKind::Primitive: {
      auto name = data_buffer_name(form.form_key());
      auto need = static_cast<std::size_t>(length) * width(form.dtype());
      return std::make_shared<const ArrayNode>(
          PrimitiveArray(form.dtype(), sized(buffers, name, need), length));
    }
    case NodeKind::ListOffset: {
      auto name = offsets_buffer_name(form.form_key());
      auto need = static_cast<std::size_t>(length + 1) * sizeof(std::int64_t);
      Buffer offsets = sized(buffers, name, need).slice(0, need);
      auto content_length = offsets.read<std::int64_t>(static_cast<std::size_t>(length));
      if (content_length < 0) {
        throw ValidationError(
            {path, "non-negative first offset", "final offset " + std::to_string(content_length)});
      }
      auto content = build(form.content(), content_length, buffers, path + ".content");
      return std::make_shared<const ArrayNode>(
          ListOffsetArray(std::move(offsets), std::move(content), length));
    }
    case NodeKind::Record: {
      std::vector<NodePtr> contents;
      for (std::size_t i = 0; i < form.contents().size(); ++i) {
        contents.push_back(
            build(form.contents()[i], length, buffers, path + "." + form.names()[i]));
      }
      return std::make_shared<const ArrayNode>(
          RecordArray(form.names(), std::move(contents), length));
    }
  }
  throw LayoutError("unknown form kind");
}

void write_file(const fs::path& path, std::span<const std::byte> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError(path.string(), "write failed");
}

void write_text(const fs::path& path, std::string_view text) {
  write_file(path, std::as_bytes(std::span(text.data(), text.size())));
}

std::vector<std::byte> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open for reading");
  in.seekg(0, std::ios::end);
  auto size = static_cast<std::size_t>(in.tellg());
  in.seekg(0, std::ios::beg);
  std::vector<std::byte> bytes(size);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(size));
  if (!in && size > 0) throw IoError(path.string(), "read failed");
  return bytes;
}

std::string read_text(const fs::path& path) {
  auto bytes = read_file(path);
  return std::string(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

std::int64_t parse_length(std::string_view text, const fs::path& path) {
  auto first = text.find_first_not_of(" \t\r\n");
  auto last = text.find_last_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw FormatError("empty length: " + path.string());
  text = text.substr(first, last - first + 1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0) {
    throw FormatError("length is not a non-negative integer (\"" + std::string(text) +
                      "\"): " + path.string());
  }
  return value;
}

}  // namespace

void BufferSet::insert(std::string name, Buffer buffer) {
  if (contains(name)) throw FormatError("duplicate buffer name \"" + name + "\"");
  entries_.emplace(std::move(name), std::move(buffer));
}

const Buffer& BufferSet::at(std::string_view name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw MissingBufferError(std::string(name));
  return it->second;
}

Buffer BufferSet::copy(std::string_view name) const {
  const auto& src = at(name);
  std::vector<std::byte> bytes(src.bytes().begin(), src.bytes().end());
  copied_->fetch_add(bytes.size());
  return Buffer(std::move(bytes));
}

Container to_buffers(const ArrayNode& node, std::string_view key_prefix) {
  ensure_valid(node);
  Container c{form_of(node, key_prefix), node.length(), {}};
  collect(node, c.form, c.buffers);
  return c;
}

NodePtr from_buffers(const Form& form, std::int64_t length, const BufferSet& buffers) {
  auto node = build(form, length, buffers, "$");
  ensure_valid(*node);
  return node;
}

NodePtr from_buffers(const Container& c) { return from_buffers(c.form, c.length, c.buffers); }

void write_container(const Container& c, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir / "buffers", ec);
  if (ec) throw IoError(dir.string(), "cannot create container directory (" + ec.message() + ")");
  write_text(dir / "form.json", emit_form(c.form));
  write_text(dir / "length.txt", std::to_string(c.length) + "\n");
  for (const auto& [name, buffer] : c.buffers.entries()) {
    write_file(dir / "buffers" / name, buffer.bytes());
  }
}

Container read_container(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw FormatError("not a container directory: " + dir.string());
  auto form_path = dir / "form.json";
  auto length_path = dir / "length.txt";
  if (!fs::exists(form_path)) throw FormatError("missing form.json in " + dir.string());
  if (!fs::exists(length_path)) throw FormatError("missing length.txt in " + dir.string());

  Container c{
      parse_form(read_text(form_path)), parse_length(read_text(length_path), length_path), {}};
  for (const auto& name : buffer_names(c.form)) {
    auto path = dir / "buffers" / name;
    if (!fs::exists(path)) throw MissingBufferError(name);
    c.buffers.insert(name, Buffer(read_file(path)));
  }
  return c;
}

}  // namespace ragged
