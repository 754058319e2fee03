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

#include "ragged/layout.hpp"

namespace ragged {

/// Index convention: the first valid index is `base` (0 or 1).
class Convention {
 public:
  /// Throws std::invalid_argument unless base is 0 or 1.
  explicit Convention(int base);

  int base() const noexcept { return base_; }
  bool operator==(const Convention&) const = default;

 private:
  int base_;
};

inline const Convention kZeroBased{0};
inline const Convention kOneBased{1};

std::int64_t first_index(const ArrayNode& node, Convention c) noexcept;
std::int64_t last_index(const ArrayNode& node, Convention c) noexcept;

/// Element at index `i` in convention `c`, i.e. zero-based element
/// i - c.base(). Valid exactly for first_index <= i <= last_index; anything
/// else (including negative indices) raises BoundsError reporting the element
/// count and the index as given.
Element get(const NodePtr& node, std::int64_t i, Convention c);

}  // namespace ragged
