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

#include "morphoseg/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace morphoseg {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("morphoseg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "morphoseg");
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  static long lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, StatsTopTenHasRankWordFrequencyColumns) {
  std::string text;
  for (int i = 0; i < 12; ++i) {
    for (int k = 0; k <= i; ++k) text += "w" + std::string(1, static_cast<char>('a' + i)) + " ";
  }
  write("c.txt", text);
  ASSERT_EQ(run({"stats", "--corpus", path("c.txt"), "--top", "10"}), 0) << err_.str();
  const std::string report = out_.str();
  const auto start = report.find("rank\tword\tfrequency\n");
  ASSERT_NE(start, std::string::npos);
  std::istringstream rows(report.substr(start));
  std::string line;
  std::getline(rows, line);
  int n = 0;
  while (std::getline(rows, line) && !line.empty()) {
    ++n;
    EXPECT_EQ(std::count(line.begin(), line.end(), '\t'), 2) << line;
    EXPECT_EQ(line.substr(0, line.find('\t')), std::to_string(n));
  }
  EXPECT_EQ(n, 10);
  EXPECT_NE(report.find("1\twl\t12\n"), std::string::npos);
}

TEST_F(CliTest, SegmentWritesPlusJoinedMorphs) {
  write("m.tsv", "#morphoseg-model v1\n#tokens\t8\n#types\t2\n5\tma\n3\tphaning\n");
  write("w.txt", "maphaning\nMaphaning\n\n");
  ASSERT_EQ(run({"segment", "--model", path("m.tsv"), "--words", path("w.txt"), "--out", path("o.tsv")}), 0)
      << err_.str();
  EXPECT_EQ(read("o.tsv"), "maphaning\tma+phaning\nmaphaning\tma+phaning\n");
  ASSERT_EQ(run({"segment", "--model", path("m.tsv"), "--words", path("w.txt"), "--out", path("o.tsv"),
                 "--with-cost"}),
            0);
  EXPECT_EQ(read("o.tsv").substr(0, 29), "maphaning\tma+phaning\t2.093109");
}

TEST_F(CliTest, SegmentReportsBadLinesButKeepsGoing) {
  write("m.tsv", "#morphoseg-model v1\n#tokens\t8\n#types\t2\n5\tma\n3\tphaning\n");
  write("w.txt", "ma phaning\nmaphaning\n...\n");
  EXPECT_EQ(run({"segment", "--model", path("m.tsv"), "--words", path("w.txt"), "--out", path("o.tsv")}), 1);
  EXPECT_EQ(read("o.tsv"), "maphaning\tma+phaning\n");
  EXPECT_NE(err_.str().find("w.txt:1"), std::string::npos);
  EXPECT_NE(err_.str().find("w.txt:3"), std::string::npos);
}

TEST_F(CliTest, TrainThenSegmentTrainingWords) {
  write("c.txt", "kajuikhanem kajui kajuikhanem khanem kha nem kajuikha ãlungthungli lungli li");
  ASSERT_EQ(run({"train", "--corpus", path("c.txt"), "--model-out", path("m.tsv"), "--seg-out",
                 path("s.tsv"), "--trace-out", path("t.tsv"), "--seed", "7"}),
            0)
      << err_.str();
  EXPECT_EQ(read("m.tsv").rfind("#morphoseg-model v1\n", 0), 0u);
  EXPECT_FALSE(read("t.tsv").empty());
  std::istringstream seg(read("s.tsv"));
  const SegmentationTable table = read_segmentation_table(seg);
  EXPECT_EQ(table.size(), 9u);

  write("w.txt", "kajuikhanem\nlungli\n");
  ASSERT_EQ(run({"segment", "--model", path("m.tsv"), "--words", path("w.txt"), "--out", path("o.tsv")}), 0);
  std::istringstream o(read("o.tsv"));
  std::string line;
  while (std::getline(o, line)) {
    const auto tab = line.find('\t');
    ASSERT_NE(tab, std::string::npos);
    EXPECT_EQ(concatenate(split_morphs(line.substr(tab + 1))), line.substr(0, tab));
  }
}

TEST_F(CliTest, EvalPrintsScores) {
  write("gold.tsv", "ãkãkharewui\tã+kã+kha+re+wui\nãmathenpaira\tã+ma+then+pai+ra\n"
                    "ãngasãmkhuiya\tã+nga+sãm+khui+ya\n");
  write("pred.tsv", "ãkãkharewui\tã+kã+khare+wui\nãmathenpaira\tã+mathen+pai+ra\n"
                    "ãngasãmkhuiya\tã+ngasãm+khuiya\n");
  ASSERT_EQ(run({"eval", "--gold", path("gold.tsv"), "--pred", path("pred.tsv")}), 0) << err_.str();
  EXPECT_EQ(out_.str().substr(0, 40), "precision\t1.000\nrecall\t0.667\nf1\t0.800\nex");
}

TEST_F(CliTest, SynthWritesReadableArtifacts) {
  write("roots.txt", "lung\ncham\n");
  write("slots.txt", "∅\tli\twui\n");
  ASSERT_EQ(run({"synth", "--roots", path("roots.txt"), "--slots", path("slots.txt"), "--budget", "100",
                 "--seed", "1", "--corpus-out", path("c.tsv"), "--gold-out", path("g.tsv")}),
            0)
      << err_.str();
  std::istringstream c(read("c.tsv"));
  EXPECT_EQ(read_word_list(c).token_count, 100);
  std::istringstream g(read("g.tsv"));
  EXPECT_EQ(read_segmentation_table(g).at("chamwui"), (Morphs{"cham", "wui"}));
}

TEST_F(CliTest, ErrorsAreOneLineDiagnostics) {
  EXPECT_NE(run({"train", "--bogus"}), 0);
  EXPECT_EQ(lines(err_.str()), 1);

  EXPECT_NE(run({"eval", "--gold", path("nope.tsv"), "--pred", path("nope.tsv")}), 0);
  EXPECT_NE(err_.str().find("nope.tsv"), std::string::npos);

  write("bad.tsv", "hi\thi\nkala\tka+le\n");
  write("ok.tsv", "hi\thi\nkala\tka+la\n");
  EXPECT_NE(run({"eval", "--gold", path("bad.tsv"), "--pred", path("ok.tsv")}), 0);
  EXPECT_NE(err_.str().find("bad.tsv:2"), std::string::npos);
  EXPECT_EQ(lines(err_.str()), 1);

  EXPECT_NE(run({"stats", "--corpus", path("ok.tsv"), "--flag-loans"}), 0);
  EXPECT_NE(run({}), 0);
}

TEST_F(CliTest, StatsWithSegmentationsEmitsAllSections) {
  write("c.txt", "Manipurli khipana advocatela activities ãkhana");
  write("s.tsv", "manipurli\tmanipur+li\nkhipana\tkhipa+na\nadvocatela\tadvocate+la\n"
                 "activities\tactiv+ities\nãkhana\tãkhana\n");
  ASSERT_EQ(run({"stats", "--corpus", path("c.txt"), "--segmentations", path("s.tsv"), "--flag-loans"}), 0)
      << err_.str();
  const std::string r = out_.str();
  EXPECT_NE(r.find("words with no affix\t1\tãkhana\n"), std::string::npos);
  EXPECT_NE(r.find("words with one affix\t4\tactiv+ities\n"), std::string::npos);
  EXPECT_NE(r.find("manipurli\tli\tlocative\n"), std::string::npos);
  EXPECT_NE(r.find("activities\tactiv+ities\tyes\n"), std::string::npos);
  EXPECT_NE(r.find("ãkhana\tãkhana\tno\n"), std::string::npos);
}

}  // namespace
}  // namespace morphoseg
