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

#include <array>
#include <charconv>

#include "ragged/buffer.hpp"
#include "ragged/dtype.hpp"
#include "ragged/error.hpp"

namespace ragged {

namespace {

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

constexpr std::array<std::string_view, 11> kDTypeNames = {
    "bool",   "int8",   "int16",  "int32",   "int64",   "uint8",
    "uint16", "uint32", "uint64", "float32", "float64",
};

}  // namespace

FieldError::FieldError(const std::string& name, std::vector<std::string> available)
    : LayoutError("no field \"" + name + "\"; available fields: [" + join(available) + "]"),
      available_(std::move(available)) {}

std::string ValidationIssue::message() const {
  std::string out = "ValidationError at " + path + ": " + rule;
  if (!detail.empty()) out += " (" + detail + ")";
  return out;
}

NoRuleError::NoRuleError(std::string type_key, std::vector<int> tiers_tried)
    : Error([&] {
        std::string msg = "no conversion rule accepted \"" + type_key + "\"; tiers tried: [";
        for (std::size_t i = 0; i < tiers_tried.size(); ++i) {
          if (i) msg += ", ";
          msg += std::to_string(tiers_tried[i]);
        }
        return msg + "]";
      }()),
      type_key_(std::move(type_key)),
      tiers_tried_(std::move(tiers_tried)) {}

std::string_view dtype_name(DType t) { return kDTypeNames[static_cast<std::size_t>(t)]; }

std::optional<DType> parse_dtype(std::string_view name) {
  for (std::size_t i = 0; i < kDTypeNames.size(); ++i) {
    if (kDTypeNames[i] == name) return static_cast<DType>(i);
  }
  return std::nullopt;
}

Buffer::Buffer(std::vector<std::byte> bytes) {
  auto owner = std::make_shared<const std::vector<std::byte>>(std::move(bytes));
  data_ = owner->data();
  size_ = owner->size();
  owner_ = std::move(owner);
}

Buffer Buffer::slice(std::size_t offset, std::size_t length) const {
  if (offset > size_ || length > size_ - offset) {
    throw BoundsError(static_cast<std::int64_t>(offset + length), static_cast<std::int64_t>(size_));
  }
  return Buffer(owner_, data_ + offset, length);
}

}  // namespace ragged
