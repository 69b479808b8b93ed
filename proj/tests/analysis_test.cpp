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

#include "morphoseg/analysis.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>

namespace morphoseg {
namespace {

CorpusSummary table_two_head() {
  CorpusSummary s;
  s.entries = {{"eina", 708}, {"hi", 367}, {"chi", 358}, {"kaji", 122}, {"ãkha", 122}, {"kala", 336}};
  sort_entries(s.entries);
  for (const auto& e : s.entries) s.token_count += e.count;
  s.type_count = static_cast<std::int64_t>(s.entries.size());
  return s;
}

TEST(TopFrequentTest, HeadOfTheRanking) {
  EXPECT_EQ(top_frequent(table_two_head(), 2),
            (std::vector<WordCount>{{"eina", 708}, {"hi", 367}}));
}

TEST(TopFrequentTest, TruncatesToAvailableTypes) {
  EXPECT_EQ(top_frequent(table_two_head(), 100).size(), 6u);
}

TEST(TopFrequentTest, EqualCountsOrderLexicographically) {
  const auto rows = top_frequent(table_two_head(), 6);
  EXPECT_EQ(rows[4], (WordCount{"kaji", 122}));
  EXPECT_EQ(rows[5], (WordCount{"ãkha", 122}));
}

TEST(TopFrequentTest, PrefixProperty) {
  const CorpusSummary s = table_two_head();
  for (std::size_t n = 1; n < 7; ++n) {
    const auto shorter = top_frequent(s, n);
    const auto longer = top_frequent(s, n + 1);
    EXPECT_TRUE(std::equal(shorter.begin(), shorter.end(), longer.begin()));
  }
  EXPECT_THROW(top_frequent(s, 0), InputError);
}

TEST(AffixHistogramTest, NoAndOneAffix) {
  const SegmentationTable table = {{"ãkhana", {"ãkhana"}}, {"advocatela", {"advocate", "la"}}};
  EXPECT_EQ(affix_histogram(table), (AffixHistogram{{0, 1}, {1, 1}}));
}

TEST(AffixHistogramTest, SevenMorphsIsSixAffixes) {
  const SegmentationTable table = {{"khangapeobinglila", {"kha", "nga", "p", "eo", "bing", "li", "la"}}};
  EXPECT_EQ(affix_histogram(table), (AffixHistogram{{6, 1}}));
}

TEST(AffixHistogramTest, EmptyAndUnsplitTables) {
  EXPECT_TRUE(affix_histogram({}).empty());
  const SegmentationTable unsplit = {{"eina", {"eina"}}, {"hi", {"hi"}}, {"chi", {"chi"}}};
  EXPECT_EQ(affix_histogram(unsplit), (AffixHistogram{{0, 3}}));
}

TEST(AffixHistogramTest, ReportRowsFollowTableThree) {
  const SegmentationTable table = {{"ãkhana", {"ãkhana"}},
                                   {"advocatela", {"advocate", "la"}},
                                   {"ãthingreirawui", {"ã", "thingreira", "wui"}},
                                   {"kajuikhanem", {"kajui", "kha", "nem"}},
                                   {"abc", {"abc"}}};
  std::ostringstream out;
  write_affix_histogram(out, table);
  EXPECT_EQ(out.str(),
            "affixes\tcount\texample\n"
            "words with no affix\t2\tabc\n"
            "words with one affix\t1\tadvocate+la\n"
            "words with two affixes\t2\tkajui+kha+nem\n");
}

TEST(CaseMarkerTest, DefaultMarkers) {
  const SegmentationTable table = {{"manipurli", {"manipur", "li"}},
                                   {"khipana", {"khipa", "na"}},
                                   {"avichi", {"avi", "chi"}},
                                   {"ãwui", {"ã", "wui"}},
                                   {"li", {"li"}},
                                   {"kala", {"ka", "la"}}};
  const auto tags = tag_case_markers(table);
  ASSERT_EQ(tags.size(), table.size());
  std::map<std::string, CaseLabel> by_word;
  for (const auto& t : tags) by_word[t.word] = t.label;
  EXPECT_EQ(by_word["manipurli"], CaseLabel::kLocative);
  EXPECT_EQ(by_word["khipana"], CaseLabel::kNominative);
  EXPECT_EQ(by_word["avichi"], CaseLabel::kGenitive);
  EXPECT_EQ(by_word["ãwui"], CaseLabel::kLocative);
  EXPECT_EQ(by_word["li"], CaseLabel::kNone);
  EXPECT_EQ(by_word["kala"], CaseLabel::kNone);
  for (const auto& t : tags) {
    if (t.label != CaseLabel::kNone) {
      EXPECT_TRUE(default_case_markers().count(t.final_morph));
    }
  }
  EXPECT_THROW(tag_case_markers(table, {}), InputError);
}

TEST(CaseMarkerTest, ReadsMarkerFile) {
  std::istringstream in("# custom\nli\tlocative\nle\tgenitive\n");
  const CaseMarkers markers = read_case_markers(in);
  EXPECT_EQ(markers.size(), 2u);
  EXPECT_EQ(markers.at("le"), CaseLabel::kGenitive);
  std::istringstream bad("li\tablative\n");
  EXPECT_THROW(read_case_markers(bad), FormatError);
}

TEST(LoanWordTest, FlagsBasicLatinWords) {
  const SegmentationTable table = {{"activities", {"activ", "ities"}},
                                   {"administrationwui", {"administra", "tion", "wui"}},
                                   {"ãkhana", {"ãkhana"}}};
  const auto flags = flag_loan_words(table);
  ASSERT_EQ(flags.size(), 3u);
  EXPECT_TRUE(flags[0].flagged);
  EXPECT_EQ(join_morphs(flags[0].morphs), "activ+ities");
  EXPECT_TRUE(flags[1].flagged);
  EXPECT_EQ(join_morphs(flags[1].morphs), "administra+tion+wui");
  EXPECT_FALSE(flags[2].flagged);
}

TEST(FrequencyReportTest, Layout) {
  std::ostringstream out;
  write_top_frequent(out, top_frequent(table_two_head(), 2));
  EXPECT_EQ(out.str(), "rank\tword\tfrequency\n1\teina\t708\n2\thi\t367\n");
}

}  // namespace
}  // namespace morphoseg
