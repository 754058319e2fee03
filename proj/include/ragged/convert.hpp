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
#include <functional>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <variant>
#include <vector>

#include "ragged/buffers.hpp"
#include "ragged/layout.hpp"

namespace ragged {

/// Type key carried by exported arrays, "<module path>:<type name>".
inline constexpr std::string_view kArrayTypeKey = "awkward.highlevel:Array";

/// Opaque foreign object that can hand over its contents as a Container.
class ForeignHandle {
 public:
  virtual ~ForeignHandle() = default;
  virtual Container to_container() const = 0;
};

struct ForeignValue {
  std::string type_key;
  std::shared_ptr<const ForeignHandle> payload;
};

/// Dispatch tiers; higher values are tried first.
enum class Priority : int {
  Fallback = 100,
  Standard = 200,
  Array = 300,
  Canonical = 400,
};

struct Unconverted {};

/// A converter either produces a node or passes with Unconverted.
using ConvertResult = std::variant<Unconverted, NodePtr>;

inline ConvertResult converted(NodePtr node) { return ConvertResult(std::move(node)); }
inline ConvertResult unconverted() { return ConvertResult(Unconverted{}); }

struct ConversionRule {
  std::string type_key;
  /// Layout kind the rule produces; nullopt accepts any.
  std::optional<NodeKind> target_kind;
  std::function<ConvertResult(const ForeignValue&)> converter;
  Priority priority = Priority::Standard;
};

/// Rules are tried by priority (descending), then most recent registration
/// first. Registration takes an exclusive lock; convert() works on a
/// snapshot of the matching rules taken under a shared lock.
class Registry {
 public:
  void register_rule(ConversionRule rule);

  /// Structure-directed dispatch: the payload's form kind selects which
  /// target kinds match. Throws NoRuleError if every matching rule passes.
  NodePtr convert(const ForeignValue& value) const;

  /// Same, with an explicit target kind instead of the payload's.
  NodePtr convert(const ForeignValue& value, std::optional<NodeKind> target) const;

  /// Matching rules for (key, target) in dispatch order.
  std::vector<ConversionRule> candidates(std::string_view type_key,
                                         std::optional<NodeKind> target) const;

  std::size_t size() const;

 private:
  struct Entry {
    ConversionRule rule;
    std::uint64_t sequence;
  };

  mutable std::shared_mutex mutex_;
  std::vector<Entry> entries_;
  std::uint64_t next_sequence_ = 0;
};

/// Wraps a valid node as a foreign value keyed kArrayTypeKey. The payload
/// aliases the node's buffers.
ForeignValue export_array(const ArrayNode& node);

/// Registers the converter for kArrayTypeKey at the Array tier: payload ->
/// Container -> from_buffers.
void register_builtin_rules(Registry& registry);

}  // namespace ragged
