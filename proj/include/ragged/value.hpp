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

#include <concepts>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace ragged {

/// A single decoded element. Signed integers widen to int64, unsigned to
/// uint64, float32 to double.
using Scalar = std::variant<bool, std::int64_t, std::uint64_t, double>;

class Value;

using ListValue = std::vector<Value>;

struct RecordValue {
  std::vector<std::string> keys;
  std::vector<Value> values;

  /// Throws FieldError for an unknown key.
  const Value& at(std::string_view key) const;
  bool operator==(const RecordValue& other) const;
};

/// Plain nested data: what `to_list` materializes and what tests compare.
class Value {
 public:
  Value() : v_(ListValue{}) {}
  Value(bool b) : v_(b) {}
  template <std::signed_integral T>
  Value(T i) : v_(static_cast<std::int64_t>(i)) {}
  template <std::unsigned_integral T>
    requires(!std::same_as<T, bool>)
  Value(T u) : v_(static_cast<std::uint64_t>(u)) {}
  template <std::floating_point T>
  Value(T d) : v_(static_cast<double>(d)) {}
  Value(const Scalar& s);
  Value(ListValue list) : v_(std::move(list)) {}
  Value(RecordValue rec) : v_(std::move(rec)) {}

  static Value list(std::initializer_list<Value> items) { return Value(ListValue(items)); }
  static Value record(std::initializer_list<std::pair<std::string, Value>> fields);

  bool is_list() const { return std::holds_alternative<ListValue>(v_); }
  bool is_record() const { return std::holds_alternative<RecordValue>(v_); }
  bool is_scalar() const { return !is_list() && !is_record(); }

  const ListValue& as_list() const { return std::get<ListValue>(v_); }
  const RecordValue& as_record() const { return std::get<RecordValue>(v_); }
  /// Numeric value as double; throws std::bad_variant_access for containers.
  double as_double() const;

  const auto& variant() const { return v_; }

  /// Compact text form: [[1.1, 2.2], []] and {a: 1, b: 1.1}.
  std::string to_string() const;

  friend bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }

 private:
  std::variant<bool, std::int64_t, std::uint64_t, double, ListValue, RecordValue> v_;
};

}  // namespace ragged
