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

#include "ragged/indexing.hpp"

#include <stdexcept>

namespace ragged {

Convention::Convention(int base) : base_(base) {
  if (base != 0 && base != 1) throw std::invalid_argument("index base must be 0 or 1");
}

std::int64_t first_index(const ArrayNode&, Convention c) noexcept { return c.base(); }

std::int64_t last_index(const ArrayNode& node, Convention c) noexcept {
  return first_index(node, c) + node.length() - 1;
}

Element get(const NodePtr& node, std::int64_t i, Convention c) {
  auto n = node->length();
  if (i < c.base() || i >= c.base() + n) throw BoundsError(i, n, c.base());
  return element_at(node, i - c.base());
}

}  // namespace ragged
