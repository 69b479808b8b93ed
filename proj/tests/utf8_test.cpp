// Copyright 2026 The morphoseg Authors
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

#include "morphoseg/utf8.hpp"

#include <gtest/gtest.h>

#include <string>

namespace morphoseg {
namespace {

TEST(Utf8Test, DecodesAndEncodesScalars) {
  const std::string s = "ã€𝄞a";
  const std::u32string cps = utf8::decode(s);
  ASSERT_EQ(cps.size(), 4u);
  EXPECT_EQ(cps[0], U'ã');
  EXPECT_EQ(cps[2], U'\U0001D11E');
  EXPECT_EQ(utf8::encode(cps), s);
  EXPECT_EQ(utf8::length(s), 4u);
}

TEST(Utf8Test, ScalarOffsetsIncludeBothEnds) {
  const auto offsets = utf8::scalar_offsets("ãb");
  EXPECT_EQ(offsets, (std::vector<std::size_t>{0, 2, 3}));
}

TEST(Utf8Test, ReportsByteOffsetOfBadSequence) {
  const std::string bad = std::string("ab") + '\xC3' + 'x';
  try {
    utf8::validate(bad);
    FAIL() << "expected DecodingError";
  } catch (const DecodingError& e) {
    EXPECT_EQ(e.offset(), 3u);
  }
}

TEST(Utf8Test, RejectsOverlongSurrogateAndTruncated) {
  EXPECT_THROW(utf8::validate("\xC0\xAF"), DecodingError);
  EXPECT_THROW(utf8::validate("\xED\xA0\x80"), DecodingError);
  EXPECT_THROW(utf8::validate("\xE2\x82"), DecodingError);
  EXPECT_THROW(utf8::validate("\xF5\x80\x80\x80"), DecodingError);
}

}  // namespace
}  // namespace morphoseg
