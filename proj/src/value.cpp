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

#include "ragged/value.hpp"

#include <charconv>
#include <cmath>

#include "ragged/error.hpp"

namespace ragged {

namespace {

void append_double(std::string& out, double d) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), d);
  std::string_view text(buf, static_cast<std::size_t>(end - buf));
  out += text;
  // Keep floats visibly distinct from integers: 1.0 prints as "1.0".
  if (std::isfinite(d) && text.find_first_of(".e") == std::string_view::npos) out += ".0";
}

void append(std::string& out, const Value& v) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          out += x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, double>) {
          append_double(out, x);
        } else if constexpr (std::is_same_v<T, ListValue>) {
          out += '[';
          for (std::size_t i = 0; i < x.size(); ++i) {
            if (i) out += ", ";
            append(out, x[i]);
          }
          out += ']';
        } else if constexpr (std::is_same_v<T, RecordValue>) {
          out += '{';
          for (std::size_t i = 0; i < x.keys.size(); ++i) {
            if (i) out += ", ";
            out += x.keys[i];
            out += ": ";
            append(out, x.values[i]);
          }
          out += '}';
        } else {
          out += std::to_string(x);
        }
      },
      v.variant());
}

}  // namespace

const Value& RecordValue::at(std::string_view key) const {
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (keys[i] == key) return values[i];
  }
  throw FieldError(std::string(key), keys);
}

bool RecordValue::operator==(const RecordValue& other) const {
  return keys == other.keys && values == other.values;
}

Value::Value(const Scalar& s) : v_(std::visit([](auto x) -> decltype(v_) { return x; }, s)) {}

Value Value::record(std::initializer_list<std::pair<std::string, Value>> fields) {
  RecordValue rec;
  for (const auto& [k, v] : fields) {
    rec.keys.push_back(k);
    rec.values.push_back(v);
  }
  return Value(std::move(rec));
}

double Value::as_double() const {
  return std::visit(
      [](const auto& x) -> double {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ListValue> || std::is_same_v<T, RecordValue>) {
          throw std::bad_variant_access();
        } else {
          return static_cast<double>(x);
        }
      },
      v_);
}

std::string Value::to_string() const {
  std::string out;
  append(out, *this);
  return out;
}

}  // namespace ragged
