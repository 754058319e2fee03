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

#include "ragged/convert.hpp"

#include <algorithm>
#include <mutex>

namespace ragged {

namespace {

class ContainerHandle final : public ForeignHandle {
 public:
  explicit ContainerHandle(Container c) : container_(std::move(c)) {}
  Container to_container() const override { return container_; }

 private:
  Container container_;
};

}  // namespace

void Registry::register_rule(ConversionRule rule) {
  std::unique_lock lock(mutex_);
  entries_.push_back({std::move(rule), next_sequence_++});
}

std::size_t Registry::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

std::vector<ConversionRule> Registry::candidates(std::string_view type_key,
                                                 std::optional<NodeKind> target) const {
  std::vector<Entry> matching;
  {
    std::shared_lock lock(mutex_);
    for (const auto& e : entries_) {
      if (e.rule.type_key != type_key) continue;
      if (target && e.rule.target_kind && *e.rule.target_kind != *target) continue;
      matching.push_back(e);
    }
  }
  std::sort(matching.begin(), matching.end(), [](const Entry& a, const Entry& b) {
    if (a.rule.priority != b.rule.priority) return a.rule.priority > b.rule.priority;
    return a.sequence > b.sequence;
  });
  std::vector<ConversionRule> out;
  out.reserve(matching.size());
  for (auto& e : matching) out.push_back(std::move(e.rule));
  return out;
}

NodePtr Registry::convert(const ForeignValue& value) const {
  std::optional<NodeKind> target;
  if (value.payload) target = value.payload->to_container().form.kind();
  return convert(value, target);
}

NodePtr Registry::convert(const ForeignValue& value, std::optional<NodeKind> target) const {
  std::vector<int> tiers;
  for (const auto& rule : candidates(value.type_key, target)) {
    auto tier = static_cast<int>(rule.priority);
    if (tiers.empty() || tiers.back() != tier) tiers.push_back(tier);
    auto result = rule.converter(value);
    if (auto* node = std::get_if<NodePtr>(&result)) return *node;
  }
  throw NoRuleError(value.type_key, std::move(tiers));
}

ForeignValue export_array(const ArrayNode& node) {
  return {std::string(kArrayTypeKey), std::make_shared<ContainerHandle>(to_buffers(node))};
}

void register_builtin_rules(Registry& registry) {
  registry.register_rule({std::string(kArrayTypeKey), std::nullopt,
                          [](const ForeignValue& v) -> ConvertResult {
                            if (!v.payload) return unconverted();
                            return converted(from_buffers(v.payload->to_container()));
                          },
                          Priority::Array});
}

}  // namespace ragged
