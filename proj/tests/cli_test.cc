// Copyright 2026 The segcomb Authors
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

// End-to-end checks of the segcomb binary: exit codes, file formats and a
// full augmentation pipeline.

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "segcomb/subprocess.h"
#include "test_util.h"

namespace segcomb {
namespace {

using testing::read_file;
using testing::TempDir;
using testing::write_file;

std::string quote(const std::string& arg) {
  std::string out = "'";
  for (char c : arg) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

ProcessResult cli(const std::vector<std::string>& args,
                  std::string_view input = "") {
  std::string command = quote(SEGCOMB_CLI_PATH);
  for (const std::string& arg : args) command += " " + quote(arg);
  return run_process(command, input);
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

class CliTest : public ::testing::Test {
 protected:
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string put(const std::string& name, const std::string& contents) {
    write_file(dir_ / name, contents);
    return path(name);
  }
  std::string get(const std::string& name) const {
    return read_file(dir_ / name);
  }

  TempDir dir_;
};

TEST_F(CliTest, HelpAndUsageErrors) {
  EXPECT_EQ(cli({"--help"}).exit_code, 0);
  EXPECT_EQ(cli({}).exit_code, 1);
  EXPECT_EQ(cli({"frobnicate"}).exit_code, 1);
  const std::string in = put("in.txt", "abab\n");
  EXPECT_EQ(cli({"learn-bpe", "--input", in, "--merges", "0", "--output",
                 path("m.txt")})
                .exit_code,
            1);
  EXPECT_EQ(cli({"learn-bpe", "--input", in, "--merges", "3", "--min-freq",
                 "1", "--output", path("m.txt")})
                .exit_code,
            1);
  EXPECT_EQ(cli({"segment", "--method", "longest", "--input", in, "--output",
                 "-"})
                .exit_code,
            1);
  EXPECT_EQ(cli({"chrf", "--hyp", in, "--ref", in, "--beta", "0"}).exit_code,
            1);
}

TEST_F(CliTest, DataErrorsNameTheProblem) {
  const std::string bad = put("bad.txt", "ok\n\xFF\xFE\n");
  const ProcessResult r = cli({"segment", "--method", "char", "--input", bad,
                               "--output", path("o.txt")});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("bad.txt:2"), std::string::npos) << r.err;

  EXPECT_EQ(cli({"stats", "--input", path("missing.txt")}).exit_code, 2);
  const std::string sentinel = put("s.txt", "a\xE2\x96\x81" "b\n");
  EXPECT_EQ(cli({"learn-bpe", "--input", sentinel, "--merges", "2",
                 "--output", path("m.txt")})
                .exit_code,
            2);
  const std::string table = put("table.txt", "not a merge table\n");
  EXPECT_EQ(cli({"apply-bpe", "--merges", table, "--input", sentinel,
                 "--output", "-"})
                .exit_code,
            2);
}

TEST_F(CliTest, ExternalFailureExitsThree) {
  const std::string in = put("in.txt", "มากที่\n");
  const ProcessResult r =
      cli({"segment", "--method", "external", "--cmd",
           std::string(FAKE_SEGMENTER_PATH) + " fail", "--input", in,
           "--output", "-"});
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.err.find("model file not found"), std::string::npos) << r.err;
}

TEST_F(CliTest, LearnAndApplyBpe) {
  const std::string in = put("in.txt", "abab\nabab\n");
  const ProcessResult learn = cli({"learn-bpe", "--input", in, "--merges",
                                   "10", "--output", path("m.txt")});
  ASSERT_EQ(learn.exit_code, 0) << learn.err;
  EXPECT_EQ(get("m.txt"),
            "#segcomb merges v1 mode=line requested=10\na b\nab ab\n");
  EXPECT_NE(learn.err.find("learned 2 of 10 merges"), std::string::npos);

  const ProcessResult apply =
      cli({"apply-bpe", "--merges", path("m.txt"), "--input", "-",
           "--output", "-"},
          "abab ab\nba\n");
  ASSERT_EQ(apply.exit_code, 0) << apply.err;
  EXPECT_EQ(apply.out, "abab ▁ ab\nb a\n");
}

TEST_F(CliTest, WordModeTable) {
  const std::string in = put("in.txt", "low lower lowest\nlow low\n");
  ASSERT_EQ(cli({"learn-bpe", "--input", in, "--merges", "50", "--mode",
                 "word", "--output", path("m.txt")})
                .exit_code,
            0);
  const std::vector<std::string> table = lines_of(get("m.txt"));
  ASSERT_FALSE(table.empty());
  EXPECT_EQ(table[0], "#segcomb merges v1 mode=word requested=50");
  EXPECT_LE(table.size() - 1, 50u);
  const ProcessResult apply = cli(
      {"apply-bpe", "--merges", path("m.txt"), "--input", in, "--output", "-"});
  ASSERT_EQ(apply.exit_code, 0) << apply.err;
  EXPECT_EQ(lines_of(apply.out)[1], "low▁ low");
}

TEST_F(CliTest, SegmentMethods) {
  const std::string in = put("in.txt", "มากที่ abc\n");
  ProcessResult r = cli({"segment", "--method", "char", "--input", in,
                         "--output", "-"});
  EXPECT_EQ(r.out, "ม า ก ท ี ่ ▁ a b c\n");
  r = cli({"segment", "--method", "char", "--granularity", "grapheme",
           "--input", in, "--output", "-"});
  EXPECT_EQ(r.out, "ม า ก ที่ ▁ a b c\n");

  const std::string dict = put("dict.txt", "มาก\nที่\nมากที่\nab\n");
  r = cli({"segment", "--method", "longest", "--dict", dict, "--input", in,
           "--output", "-"});
  EXPECT_EQ(r.out, "มากที่ ▁ ab c\n");
  r = cli({"segment", "--method", "maximal", "--dict", dict, "--input", in,
           "--output", "-"});
  EXPECT_EQ(r.out, "มากที่ ▁ ab c\n");

  r = cli({"segment", "--method", "external", "--cmd",
           std::string(FAKE_SEGMENTER_PATH) + " chunk 3", "--name", "fake",
           "--input", in, "--output", "-"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, "มาก ที่ ▁ab c\n");

  r = cli({"segment", "--method", "word", "--lowercase", "--input", "-",
           "--output", "-"},
          "Hello,  World!\n");
  EXPECT_EQ(r.out, "hello , world !\n");
}

TEST_F(CliTest, CombineMultipliesTheCorpus) {
  const std::string src = put("src.txt", "a b\nc\nd e f\n");
  std::vector<std::string> args{"combine", "--source", src};
  for (int k = 0; k < 4; ++k) {
    args.push_back("--target");
    args.push_back(put("t" + std::to_string(k) + ".txt",
                       "x" + std::to_string(k) + "\ny\nz\n"));
  }
  for (const std::string& out : {"--out-source", "--out-target", "--manifest"}) {
    args.push_back(out);
    args.push_back(path(out.substr(2) + ".txt"));
  }
  const ProcessResult r = cli(args);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(lines_of(get("out-source.txt")).size(), 12u);
  const std::vector<std::string> target = lines_of(get("out-target.txt"));
  ASSERT_EQ(target.size(), 12u);
  EXPECT_EQ(target[3], "x1");
  EXPECT_EQ(lines_of(get("manifest.txt")).size(), 4u);
  EXPECT_EQ(lines_of(get("manifest.txt"))[2], path("t2.txt") + "\t3");

  const ProcessResult stats = cli({"stats", "--input", path("out-source.txt")});
  EXPECT_NE(stats.out.find("sentences\t12\n"), std::string::npos);
  EXPECT_NE(stats.out.find("duplication_factor\t4.0000\n"), std::string::npos);
}

TEST_F(CliTest, CombineMismatchNamesTheFile) {
  const std::string src = put("src.txt", "a\nb\n");
  const std::string good = put("good.txt", "x\ny\n");
  const std::string short_file = put("short.txt", "x\n");
  const ProcessResult r =
      cli({"combine", "--source", src, "--target", good, "--target",
           short_file, "--out-source", path("s"), "--out-target", path("t")});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("short.txt"), std::string::npos) << r.err;
}

TEST_F(CliTest, Chrf) {
  const std::string ref = put("ref.txt", "มากที่สุด\nhello world\n");
  ProcessResult r = cli({"chrf", "--hyp", ref, "--ref", ref});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "chrf3 = 100.00\n");

  const std::string hyp = put("hyp.txt", "ab\n");
  const std::string ref2 = put("ref2.txt", "abc\n");
  r = cli({"chrf", "--hyp", hyp, "--ref", ref2, "--segments", path("seg.tsv")});
  EXPECT_EQ(r.out, "chrf3 = 40.58\n");
  EXPECT_EQ(get("seg.tsv"), "segment\tchrf3\n1\t40.5797\n");

  r = cli({"chrf", "--hyp", hyp, "--ref", ref});
  EXPECT_EQ(r.exit_code, 2);
}

TEST_F(CliTest, StatsOfStdin) {
  const ProcessResult r = cli({"stats", "--input", "-"}, "a b\na c\n");
  EXPECT_EQ(r.out,
            "sentences\t2\ntokens\t4\ntypes\t3\n"
            "mean_tokens_per_sentence\t2.0000\nduplication_factor\t1.0000\n");
}

// Raw Thai text through an external segmenter and BPE at several sizes,
// then combined into one training corpus.
TEST_F(CliTest, AugmentationPipeline) {
  const std::string raw = put("train.th",
                              "ฉันชอบกินข้าว\nเขาไปโรงเรียน\n"
                              "วันนี้อากาศดีมาก\nฉันไปตลาด\n");
  const std::string src = put("train.en",
                              "i like eating rice\nhe goes to school\n"
                              "the weather is nice today\ni go to market\n");
  std::vector<std::string> combine_args{"combine", "--source", src};
  for (int merges : {5, 20, 80}) {
    const std::string table = path("bpe" + std::to_string(merges));
    ASSERT_EQ(cli({"learn-bpe", "--input", raw, "--merges",
                   std::to_string(merges), "--min-freq", "2", "--output", table})
                  .exit_code,
              0);
    const std::string out = path("train.bpe" + std::to_string(merges));
    ASSERT_EQ(cli({"apply-bpe", "--merges", table, "--input", raw, "--output",
                   out})
                  .exit_code,
              0);
    combine_args.insert(combine_args.end(),
                        {"--target", out, "--label", "bpe" + std::to_string(merges)});
  }
  const std::string ext = path("train.ext");
  ASSERT_EQ(cli({"segment", "--method", "external", "--cmd",
                 std::string(FAKE_SEGMENTER_PATH) + " chunk 2", "--input", raw,
                 "--output", ext})
                .exit_code,
            0);
  combine_args.insert(combine_args.end(),
                      {"--target", ext, "--label", "external:fake",
                       "--out-source", path("all.en"), "--out-target",
                       path("all.th"), "--manifest", path("manifest.tsv")});
  const ProcessResult r = cli(combine_args);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(get("manifest.tsv"),
            "bpe5\t4\nbpe20\t4\nbpe80\t4\nexternal:fake\t4\n");
  const std::vector<std::string> target = lines_of(get("all.th"));
  ASSERT_EQ(target.size(), 16u);
  const std::vector<std::string> raw_lines = lines_of(read_file(raw));
  for (std::size_t i = 0; i < target.size(); ++i) {
    std::string joined;
    for (char c : target[i]) {
      if (c != ' ') joined += c;
    }
    EXPECT_EQ(joined, raw_lines[i % 4]);
  }
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
  const std::string raw =
      put("raw.txt", "ฉันชอบกินข้าว มาก\nเขาไปโรงเรียน\nฉันชอบ\n");
  const std::string dict = put("dict.txt", "ฉัน\nชอบ\nกิน\nข้าว\n");
  const std::vector<std::vector<std::string>> runs = {
      {"learn-bpe", "--input", raw, "--merges", "30", "--output", "-"},
      {"segment", "--method", "maximal", "--dict", dict, "--input", raw,
       "--output", "-"},
      {"chrf", "--hyp", raw, "--ref", raw},
  };
  for (const auto& args : runs) {
    const ProcessResult first = cli(args);
    const ProcessResult second = cli(args);
    ASSERT_EQ(first.exit_code, 0) << first.err;
    EXPECT_EQ(first.out, second.out);
  }
}

}  // namespace
}  // namespace segcomb
