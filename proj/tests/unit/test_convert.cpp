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

#include <gtest/gtest.h>

#include <algorithm>
#include <thread>

#include "ragged/convert.hpp"
#include "support/generators.hpp"

namespace ragged {
namespace {

constexpr Priority kTiers[] = {Priority::Fallback, Priority::Standard, Priority::Array,
                               Priority::Canonical};

// Converter that logs its id and then either passes or returns `result`.
ConversionRule logging_rule(std::string key, Priority p, int id, std::vector<int>* log,
                            NodePtr result = nullptr) {
  return {std::move(key), std::nullopt,
          [=](const ForeignValue&) -> ConvertResult {
            log->push_back(id);
            return result ? converted(result) : unconverted();
          },
          p};
}

ForeignValue keyed(std::string key) { return {std::move(key), nullptr}; }

TEST(Registry, RegisteredConverterIsCalled) {
  Registry reg;
  int calls = 0;
  reg.register_rule({std::string(kArrayTypeKey), NodeKind::ListOffset,
                     [&](const ForeignValue& v) -> ConvertResult {
                       ++calls;
                       return converted(from_buffers(v.payload->to_container()));
                     },
                     Priority::Array});
  auto node = reg.convert(export_array(*testing::example_lists()));
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(node->kind(), NodeKind::ListOffset);
  EXPECT_EQ(to_list(*node), testing::example_lists_value());
}

TEST(Registry, RecencyBreaksTies) {
  Registry reg;
  std::vector<int> log;
  reg.register_rule(logging_rule("k:T", Priority::Array, 1, &log));
  reg.register_rule(logging_rule("k:T", Priority::Array, 2, &log));
  EXPECT_THROW(reg.convert(keyed("k:T")), NoRuleError);
  EXPECT_EQ(log, (std::vector<int>{2, 1}));
}

TEST(Registry, TiersOrderDispatch) {
  Registry reg;
  std::vector<int> log;
  reg.register_rule(logging_rule("k:T", Priority::Fallback, 1, &log));
  reg.register_rule(logging_rule("k:T", Priority::Canonical, 2, &log));
  reg.register_rule(logging_rule("k:T", Priority::Standard, 3, &log));
  reg.register_rule(logging_rule("k:T", Priority::Array, 4, &log));
  EXPECT_THROW(reg.convert(keyed("k:T")), NoRuleError);
  EXPECT_EQ(log, (std::vector<int>{2, 4, 3, 1}));
}

TEST(Registry, UnconvertedFallsThrough) {
  Registry reg;
  std::vector<int> log;
  auto sentinel = make_primitive(std::vector<std::int64_t>{42});
  reg.register_rule(logging_rule("k:T", Priority::Standard, 1, &log, sentinel));
  reg.register_rule(logging_rule("k:T", Priority::Canonical, 2, &log));
  EXPECT_EQ(reg.convert(keyed("k:T")), sentinel);
  EXPECT_EQ(log, (std::vector<int>{2, 1}));
}

TEST(Registry, NoRuleOnEmptyRegistry) {
  Registry reg;
  try {
    reg.convert(keyed("unknown:Type"));
    FAIL() << "expected NoRuleError";
  } catch (const NoRuleError& e) {
    EXPECT_EQ(e.type_key(), "unknown:Type");
    EXPECT_TRUE(e.tiers_tried().empty());
  }
}

TEST(Registry, NoRuleReportsTiersTried) {
  Registry reg;
  std::vector<int> log;
  reg.register_rule(logging_rule("k:T", Priority::Array, 1, &log));
  reg.register_rule(logging_rule("k:T", Priority::Fallback, 2, &log));
  reg.register_rule(logging_rule("other:T", Priority::Canonical, 3, &log));
  try {
    reg.convert(keyed("k:T"));
    FAIL();
  } catch (const NoRuleError& e) {
    EXPECT_EQ(e.tiers_tried(), (std::vector<int>{300, 100}));
  }
}

TEST(Registry, TargetKindFilters) {
  Registry reg;
  std::vector<int> log;
  auto sentinel = make_primitive(std::vector<std::int64_t>{1});
  ConversionRule records_only =
      logging_rule(std::string(kArrayTypeKey), Priority::Canonical, 1, &log, sentinel);
  records_only.target_kind = NodeKind::Record;
  reg.register_rule(records_only);
  register_builtin_rules(reg);

  auto lists = reg.convert(export_array(*testing::example_lists()));
  EXPECT_EQ(lists->kind(), NodeKind::ListOffset);
  EXPECT_TRUE(log.empty());

  EXPECT_EQ(reg.convert(export_array(*testing::example_record())), sentinel);
  EXPECT_EQ(log, std::vector<int>{1});
}

TEST(Export, CarriesTypeKeyAndAliasesBuffers) {
  auto a = testing::example_lists();
  auto v = export_array(*a);
  EXPECT_EQ(v.type_key, "awkward.highlevel:Array");
  auto c = v.payload->to_container();
  EXPECT_EQ(c.length, 3);
  EXPECT_TRUE(c.buffers.at("node0-offsets").aliases(a->as_list_offset().offsets()));
  EXPECT_EQ(c.buffers.copy_counter(), 0u);
  EXPECT_EQ(to_list(*from_buffers(c)), testing::example_lists_value());
}

TEST(Export, EmptyPrimitive) {
  auto v = export_array(*make_primitive(std::vector<double>{}));
  EXPECT_EQ(v.payload->to_container().length, 0);
}

// ---------------------------------------------------------------------------

TEST(RegistryProperty, DispatchOrderMatchesSortOracle) {
  testing::ArrayGenerator gen(41);
  for (int trial = 0; trial < 200; ++trial) {
    Registry reg;
    std::vector<int> log;
    struct Registered {
      int priority;
      int index;
    };
    std::vector<Registered> oracle;
    int n = static_cast<int>(gen.uniform(0, 12));
    for (int i = 0; i < n; ++i) {
      auto p = kTiers[gen.uniform(0, 3)];
      reg.register_rule(logging_rule("k:T", p, i, &log));
      oracle.push_back({static_cast<int>(p), i});
    }
    std::sort(oracle.begin(), oracle.end(), [](const Registered& a, const Registered& b) {
      return std::tie(a.priority, a.index) > std::tie(b.priority, b.index);
    });
    std::vector<int> expected;
    for (const auto& r : oracle) expected.push_back(r.index);

    EXPECT_THROW(reg.convert(keyed("k:T")), NoRuleError);
    ASSERT_EQ(log, expected);
  }
}

TEST(RegistryProperty, LowerTierRulesNeverChangeWinner) {
  testing::ArrayGenerator gen(42);
  for (int trial = 0; trial < 100; ++trial) {
    Registry reg;
    std::vector<int> log;
    auto winner = make_primitive(std::vector<std::int64_t>{trial});
    auto tier = gen.uniform(1, 3);
    reg.register_rule(logging_rule("k:T", kTiers[tier], 0, &log, winner));
    ASSERT_EQ(reg.convert(keyed("k:T")), winner);
    for (int i = 1; i <= 5; ++i) {
      auto loser = make_primitive(std::vector<std::int64_t>{-i});
      reg.register_rule(logging_rule("k:T", kTiers[gen.uniform(0, tier - 1)], i, &log, loser));
      ASSERT_EQ(reg.convert(keyed("k:T")), winner);
    }
  }
}

TEST(RegistryProperty, ExportThenConvertIsIdentity) {
  Registry reg;
  register_builtin_rules(reg);
  testing::ArrayGenerator gen(43);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = gen.array(3);
    auto v = export_array(*g.node);
    auto back = reg.convert(v);
    ASSERT_EQ(to_list(*back), g.expected);
    // Deterministic for a fixed registry.
    ASSERT_EQ(to_list(*reg.convert(v)), g.expected);
    ASSERT_EQ(v.payload->to_container().buffers.copy_counter(), 0u);
  }
}

TEST(Registry, ConcurrentLookupsDuringRegistration) {
  Registry reg;
  register_builtin_rules(reg);
  auto v = export_array(*testing::example_lists());
  std::vector<std::thread> readers;
  std::atomic<int> ok{0};
  for (int t = 0; t < 4; ++t) {
    readers.emplace_back([&] {
      for (int i = 0; i < 200; ++i) {
        if (to_list(*reg.convert(v)) == testing::example_lists_value()) ++ok;
      }
    });
  }
  std::vector<int> log;
  for (int i = 0; i < 200; ++i)
    reg.register_rule(logging_rule("other:T", Priority::Fallback, i, &log));
  for (auto& t : readers) t.join();
  EXPECT_EQ(ok.load(), 800);
  EXPECT_EQ(reg.size(), 201u);
}

}  // namespace
}  // namespace ragged
