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

#include <filesystem>
#include <fstream>

#include "ragged/buffers.hpp"
#include "support/generators.hpp"

namespace ragged {
namespace {

namespace fs = std::filesystem;

const fs::path kGolden = RAGGED_GOLDEN_DIR;

std::vector<std::byte> file_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::vector<char> chars((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<std::byte> out(chars.size());
  std::memcpy(out.data(), chars.data(), chars.size());
  return out;
}

std::vector<std::byte> bytes_of(const Buffer& b) { return {b.bytes().begin(), b.bytes().end()}; }

class TempDir : public ::testing::Test {
 protected:
  fs::path dir_;
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ragged_buffers_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
};

TEST(Buffers, ToBuffersListOffset) {
  auto a = testing::example_lists();
  auto c = to_buffers(*a);
  EXPECT_EQ(c.length, 3);
  ASSERT_EQ(c.buffers.size(), 2u);
  std::vector<std::int64_t> offsets{0, 3, 3, 5};
  std::vector<double> data{1.1, 2.2, 3.3, 4.4, 5.5};
  EXPECT_EQ(c.buffers.at("node0-offsets"), Buffer::from_vector(offsets));
  EXPECT_EQ(c.buffers.at("node1-data"), Buffer::from_vector(data));
  EXPECT_EQ(c.buffers.at("node0-offsets").size(), 32u);
  EXPECT_EQ(c.buffers.at("node1-data").size(), 40u);
  // Aliases the node's memory.
  EXPECT_TRUE(c.buffers.at("node0-offsets").aliases(a->as_list_offset().offsets()));
  EXPECT_EQ(c.buffers.copy_counter(), 0u);
}

// Byte-for-byte against buffers written by the reference implementation.
TEST(Buffers, MatchesReferenceBytes) {
  struct Case {
    const char* dir;
    NodePtr node;
  } cases[] = {
      {"list_offset", testing::example_lists()},
      {"from_python", testing::example_lists()},
      {"record", testing::example_record()},
      {"empty_primitive", make_primitive(std::vector<double>{})},
  };
  for (const auto& k : cases) {
    SCOPED_TRACE(k.dir);
    auto c = to_buffers(*k.node);
    std::vector<std::string> golden_names;
    for (const auto& e : fs::directory_iterator(kGolden / k.dir / "buffers")) {
      golden_names.push_back(e.path().filename().string());
    }
    std::sort(golden_names.begin(), golden_names.end());
    std::vector<std::string> names;
    for (const auto& [name, _] : c.buffers.entries()) names.push_back(name);
    EXPECT_EQ(names, golden_names);
    for (const auto& [name, buf] : c.buffers.entries()) {
      EXPECT_EQ(bytes_of(buf), file_bytes(kGolden / k.dir / "buffers" / name)) << name;
    }
  }
}

TEST(Buffers, EmptyPrimitive) {
  auto c = to_buffers(*make_primitive(std::vector<double>{}));
  EXPECT_EQ(c.length, 0);
  EXPECT_EQ(c.buffers.at("node0-data").size(), 0u);
  EXPECT_EQ(to_list(*from_buffers(c)), Value::list({}));
}

TEST(Buffers, RecordBuffers) {
  auto c = to_buffers(*testing::example_record());
  EXPECT_EQ(c.length, 5);
  EXPECT_EQ(c.buffers.at("node1-data").size(), 40u);
  EXPECT_EQ(c.buffers.at("node2-data").size(), 40u);
  EXPECT_FALSE(c.buffers.contains("node0-data"));
}

TEST(Buffers, FromBuffersRoundTripZeroCopy) {
  auto c = to_buffers(*testing::example_lists());
  auto node = from_buffers(c.form, c.length, c.buffers);
  EXPECT_EQ(to_list(*node), testing::example_lists_value());
  EXPECT_TRUE(node->as_list_offset().offsets().aliases(c.buffers.at("node0-offsets")));
  EXPECT_TRUE(
      node->as_list_offset().content()->as_primitive().data().aliases(c.buffers.at("node1-data")));
  EXPECT_EQ(c.buffers.copy_counter(), 0u);
}

TEST(Buffers, FromBuffersMissingBuffer) {
  auto c = to_buffers(*testing::example_lists());
  BufferSet partial;
  partial.insert("node1-data", c.buffers.at("node1-data"));
  try {
    from_buffers(c.form, 3, partial);
    FAIL() << "expected MissingBufferError";
  } catch (const MissingBufferError& e) {
    EXPECT_EQ(e.name(), "node0-offsets");
  }
}

TEST(Buffers, FromBuffersTooShort) {
  auto c = to_buffers(*testing::example_lists());
  // Length 4 needs five offsets; the buffer holds four.
  EXPECT_THROW(from_buffers(c.form, 4, c.buffers), SizeError);

  BufferSet truncated;
  truncated.insert("node0-offsets", c.buffers.at("node0-offsets"));
  truncated.insert("node1-data", c.buffers.at("node1-data").slice(0, 32));
  EXPECT_THROW(from_buffers(c.form, 3, truncated), SizeError);
}

TEST(Buffers, FromBuffersRejectsBadOffsets) {
  BufferSet set;
  set.insert("node0-offsets", Buffer::from_vector(std::vector<std::int64_t>{0, 5, 3}));
  set.insert("node1-data", Buffer::from_vector(std::vector<double>{1, 2, 3, 4, 5}));
  auto form = Form::list_offset(Form::primitive(DType::Float64, "node1"), "node0");
  try {
    from_buffers(form, 2, set);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.issue().rule, "monotonic offsets");
  }
}

TEST(Buffers, FromBuffersNarrowsLongBuffers) {
  BufferSet set;
  set.insert("node0-data", Buffer::from_vector(std::vector<double>{1, 2, 3, 4}));
  auto node = from_buffers(Form::primitive(DType::Float64, "node0"), 2, set);
  EXPECT_EQ(to_list(*node), Value::list({1.0, 2.0}));
  EXPECT_EQ(node->as_primitive().data().data(), set.at("node0-data").data());
}

TEST(Buffers, ExplicitCopyIsCounted) {
  auto c = to_buffers(*testing::example_lists());
  auto dup = c.buffers.copy("node1-data");
  EXPECT_EQ(dup, c.buffers.at("node1-data"));
  EXPECT_FALSE(dup.aliases(c.buffers.at("node1-data")));
  EXPECT_EQ(c.buffers.copy_counter(), 40u);
}

TEST_F(TempDir, WriteContainerLayout) {
  auto c = to_buffers(*testing::example_lists());
  write_container(c, dir_);
  EXPECT_TRUE(fs::exists(dir_ / "form.json"));
  std::ifstream len(dir_ / "length.txt");
  std::string text((std::istreambuf_iterator<char>(len)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text, "3\n");
  EXPECT_EQ(fs::file_size(dir_ / "buffers" / "node0-offsets"), 32u);
  EXPECT_EQ(fs::file_size(dir_ / "buffers" / "node1-data"), 40u);
  EXPECT_EQ(read_container(dir_), c);
}

TEST_F(TempDir, EmptyPrimitiveContainer) {
  write_container(to_buffers(*make_primitive(std::vector<double>{})), dir_);
  EXPECT_EQ(fs::file_size(dir_ / "buffers" / "node0-data"), 0u);
  EXPECT_EQ(read_container(dir_).length, 0);
}

TEST_F(TempDir, UnwritablePath) {
  fs::create_directories(dir_);
  std::ofstream(dir_ / "blocker") << "x";
  auto target = dir_ / "blocker" / "inner";
  try {
    write_container(to_buffers(*testing::example_lists()), target);
    FAIL() << "expected IoError";
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find(target.string()), std::string::npos);
  }
}

TEST_F(TempDir, ReadContainerErrors) {
  write_container(to_buffers(*testing::example_lists()), dir_);
  fs::remove(dir_ / "buffers" / "node1-data");
  EXPECT_THROW(read_container(dir_), MissingBufferError);

  write_container(to_buffers(*testing::example_lists()), dir_);
  std::ofstream(dir_ / "length.txt", std::ios::trunc) << "abc";
  EXPECT_THROW(read_container(dir_), FormatError);

  std::ofstream(dir_ / "length.txt", std::ios::trunc) << "-2\n";
  EXPECT_THROW(read_container(dir_), FormatError);

  fs::remove(dir_ / "length.txt");
  EXPECT_THROW(read_container(dir_), FormatError);

  fs::remove(dir_ / "form.json");
  EXPECT_THROW(read_container(dir_), FormatError);
}

TEST(Buffers, ReadsReferenceContainers) {
  auto c = read_container(kGolden / "list_offset");
  EXPECT_EQ(to_list(*from_buffers(c)), testing::example_lists_value());
  auto r = read_container(kGolden / "record");
  EXPECT_EQ(to_list(*from_buffers(r)), to_list(*testing::example_record()));
}

// ---------------------------------------------------------------------------

TEST(BuffersProperty, RoundTripPreservesValuesWithoutCopies) {
  testing::ArrayGenerator gen(31);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = gen.array(3);
    auto c = to_buffers(*g.node);
    auto back = from_buffers(c);
    ASSERT_EQ(to_list(*back), g.expected);
    ASSERT_EQ(c.buffers.copy_counter(), 0u);
    auto again = to_buffers(*back);
    for (const auto& [name, buf] : again.buffers.entries()) {
      // Same memory; narrowed when the content had unused trailing elements.
      const auto& src = c.buffers.at(name);
      ASSERT_TRUE(buf.size() == 0 || buf.data() == src.data()) << name;
      ASSERT_LE(buf.size(), src.size()) << name;
    }
  }
}

TEST(BuffersProperty, ReserializationIsByteIdentical) {
  testing::ArrayGenerator gen(32);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = gen.array(3);
    ASSERT_EQ(to_buffers(*g.node), to_buffers(*g.node));
    // Unused content is dropped on the first pass, after which serialization
    // is a fixed point.
    auto once = to_buffers(*from_buffers(to_buffers(*g.node)));
    ASSERT_EQ(to_buffers(*from_buffers(once)), once);
  }
}

}  // namespace
}  // namespace ragged
