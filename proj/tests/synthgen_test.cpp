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

#include "morphoseg/synthgen.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <sstream>
#include <string>

#include "morphoseg/evaluation.hpp"

namespace morphoseg {
namespace {

GrammarSpec ma_li(std::int64_t budget = 10) {
  GrammarSpec spec;
  spec.roots = {"ma"};
  spec.suffix_slots = {{"", "li"}};
  spec.word_budget = budget;
  spec.seed = 3;
  return spec;
}

TEST(GenerateTest, SingleRootSingleSlot) {
  const SynthCorpus out = generate(ma_li());
  for (const auto& e : out.corpus.entries) EXPECT_TRUE(e.form == "ma" || e.form == "mali");
  EXPECT_EQ(out.gold.at("mali"), (Morphs{"ma", "li"}));
  EXPECT_EQ(out.gold.at("ma"), Morphs{"ma"});
  EXPECT_EQ(out.corpus.token_count, 10);
}

GrammarSpec agglutinative(std::uint64_t seed) {
  GrammarSpec spec;
  spec.roots = {"lung", "cham", "thing", "kajui", "phaning", "ãram"};
  spec.suffix_slots = {{"", "li", "wui"}, {"", "la", "da", "na"}, {"", "sa"}};
  spec.word_budget = 5000;
  spec.seed = seed;
  return spec;
}

TEST(GenerateTest, GoldSpellsEveryWordAndCountsHitTheBudget) {
  const SynthCorpus out = generate(agglutinative(9));
  EXPECT_EQ(out.corpus.type_count, 6 * 3 * 4 * 2);
  std::int64_t sum = 0;
  for (const auto& e : out.corpus.entries) {
    EXPECT_GE(e.count, 1);
    sum += e.count;
    ASSERT_TRUE(spells(e.form, out.gold.at(e.form))) << e.form;
  }
  EXPECT_EQ(sum, 5000);
  EXPECT_EQ(out.corpus.token_count, 5000);
  const EvalReport self = evaluate(out.gold, out.gold);
  EXPECT_DOUBLE_EQ(self.boundary_f1, 1.0);
  EXPECT_DOUBLE_EQ(self.exact_match_rate, 1.0);
}

TEST(GenerateTest, CountsAreHeadHeavy) {
  const SynthCorpus out = generate(agglutinative(9));
  // rank 1 gets 1 + 4856 / H(144, 1.1) tokens, far above the tail.
  EXPECT_GT(out.corpus.entries.front().count, 50 * out.corpus.entries.back().count);
}

TEST(GenerateTest, DeterministicPerSeed) {
  const SynthCorpus a = generate(agglutinative(4));
  const SynthCorpus b = generate(agglutinative(4));
  const SynthCorpus c = generate(agglutinative(5));
  EXPECT_EQ(a.corpus, b.corpus);
  EXPECT_EQ(a.gold, b.gold);
  EXPECT_NE(a.corpus, c.corpus);
}

TEST(GenerateTest, Errors) {
  EXPECT_THROW(generate(ma_li(1)), InputError);
  GrammarSpec no_roots = ma_li();
  no_roots.roots.clear();
  EXPECT_THROW(generate(no_roots), InputError);
  GrammarSpec ambiguous = ma_li();
  ambiguous.roots = {"ma", "mal"};
  ambiguous.suffix_slots = {{"", "li", "i"}};
  EXPECT_THROW(generate(ambiguous), InputError);
  GrammarSpec spaced = ma_li();
  spaced.roots = {"m a"};
  EXPECT_THROW(generate(spaced), InputError);
}

TEST(LargestRemainderTest, SumsExactly) {
  for (std::int64_t total : {0, 1, 7, 1000, 12345}) {
    const auto parts = detail::largest_remainder({5.0, 1.0, 1.0, 0.3, 0.3}, total);
    EXPECT_EQ(std::accumulate(parts.begin(), parts.end(), std::int64_t{0}), total);
  }
  EXPECT_EQ(detail::largest_remainder({1.0, 1.0, 1.0}, 2), (std::vector<std::int64_t>{1, 1, 0}));
}

TEST(GrammarFilesTest, ReadsRootsAndSlots) {
  std::istringstream roots("lung\n\ncham\n");
  EXPECT_EQ(read_roots(roots), (std::vector<std::string>{"lung", "cham"}));
  std::istringstream slots("∅\tli\twui\n\tla\n");
  const auto parsed = read_slots(slots);
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(parsed[0], (std::vector<std::string>{"", "li", "wui"}));
  EXPECT_EQ(parsed[1], (std::vector<std::string>{"", "la"}));
}

}  // namespace
}  // namespace morphoseg
