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

#include "segcomb/segmenters.h"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "oracles/segmentation_oracle.h"
#include "segcomb/error.h"
#include "test_util.h"

namespace segcomb {
namespace {

using Tokens = std::vector<std::string>;

TrieDictionary dict_of(std::initializer_list<std::string> words) {
  return TrieDictionary::from_words(std::vector<std::string>(words));
}

Tokens texts(const std::vector<SegmentToken>& tokens) {
  Tokens out;
  for (const SegmentToken& t : tokens) out.push_back(t.text);
  return out;
}

TEST(CharSegmentTest, CodePoints) {
  const SegmentedLine seg = char_segment("มาก");
  EXPECT_EQ(seg.tokens, (Tokens{"ม", "า", "ก"}));
  EXPECT_EQ(seg.scheme, SchemeId::character());
  EXPECT_TRUE(char_segment("").tokens.empty());
  EXPECT_EQ(char_segment("a▁b").tokens, (Tokens{"a", "▁", "b"}));
}

TEST(CharSegmentTest, GraphemeModes) {
  EXPECT_EQ(char_segment("น้ำ", Granularity::kGrapheme).tokens,
            (Tokens{"น้ำ"}));
  EXPECT_EQ(char_segment("น้ำ", Granularity::kLegacyGrapheme).tokens,
            (Tokens{"น้", "ำ"}));
  EXPECT_EQ(char_segment("ที่▁นี่", Granularity::kGrapheme).tokens,
            (Tokens{"ที่", "▁", "นี่"}));
  EXPECT_TRUE(char_segment("", Granularity::kGrapheme).tokens.empty());
}

TEST(CharSegmentTest, RejectsUnencodedInput) {
  EXPECT_THROW(char_segment("a b"), DataError);
  EXPECT_THROW(char_segment("\xFF"), DataError);
}

TEST(CharSegmentTest, TokenCountEqualsCodePointCount) {
  std::mt19937 rng(77);
  for (int i = 0; i < 2000; ++i) {
    const std::string line = sentinel_encode(testing::random_text(rng, 30));
    EXPECT_EQ(char_segment(line).tokens.size(),
              testing::code_points(line).size());
  }
}

TEST(TrieDictionaryTest, InsertAndLookup) {
  TrieDictionary dict = dict_of({"ab", "abc", "d", "ab"});
  EXPECT_EQ(dict.size(), 3u);
  EXPECT_EQ(dict.max_word_len(), 3u);
  EXPECT_TRUE(dict.contains("ab"));
  EXPECT_TRUE(dict.contains("abc"));
  EXPECT_FALSE(dict.contains("a"));
  EXPECT_FALSE(dict.contains(""));
  EXPECT_THROW(dict.insert(""), DataError);
  const std::u32string text = U"abcd";
  EXPECT_EQ(dict.prefix_lengths(text, 0), (std::vector<std::size_t>{2, 3}));
  EXPECT_TRUE(dict.prefix_lengths(text, 1).empty());
  EXPECT_EQ(dict.prefix_lengths(text, 3), (std::vector<std::size_t>{1}));
}

TEST(TrieDictionaryTest, ReadsWordListFormat) {
  std::istringstream in("มาก\n\nที่\nมาก\nice cream\n");
  const TrieDictionary dict = read_dictionary(in, "mem");
  EXPECT_EQ(dict.size(), 3u);
  EXPECT_TRUE(dict.contains("ice▁cream"));
  std::istringstream bad("ok\nx▁y\n");
  EXPECT_THROW(read_dictionary(bad, "mem"), DataError);
}

TEST(LongestMatchTest, Examples) {
  const auto tokens = longest_match_tokens("abcd", dict_of({"ab", "abc", "d"}));
  EXPECT_EQ(texts(tokens), (Tokens{"abc", "d"}));

  const auto unknown = longest_match_tokens("abx", dict_of({"ab"}));
  ASSERT_EQ(unknown.size(), 2u);
  EXPECT_EQ(unknown[0], (SegmentToken{"ab", false}));
  EXPECT_EQ(unknown[1], (SegmentToken{"x", true}));

  EXPECT_TRUE(longest_match_segment("", TrieDictionary()).tokens.empty());
  EXPECT_EQ(longest_match_segment("abcd", dict_of({"ab"})).scheme,
            SchemeId::longest_match());
}

TEST(LongestMatchTest, GreedyWithoutBacktracking) {
  // Greedy takes "abc" and strands "d"; the two-word split ab|cd is never
  // revisited.
  const TrieDictionary dict = dict_of({"ab", "abc", "cd"});
  const auto tokens = longest_match_tokens("abcd", dict);
  EXPECT_EQ(texts(tokens), (Tokens{"abc", "d"}));
  EXPECT_TRUE(tokens[1].unknown);
}

TEST(LongestMatchTest, ProbeCountIsLinearInLength) {
  std::mt19937 rng(5);
  const TrieDictionary dict = dict_of({"ab", "abc", "aab", "b", "cab", "abca"});
  for (int i = 0; i < 500; ++i) {
    const std::string line = testing::random_symbol_line(rng, 3, 60);
    std::size_t probes = 0;
    longest_match_tokens(line, dict, &probes);
    const std::size_t len = testing::code_points(line).size();
    EXPECT_LE(probes, len * (dict.max_word_len() + 1));
  }
}

TEST(MaximalMatchTest, Examples) {
  EXPECT_EQ(texts(maximal_match_tokens("aaa", dict_of({"a", "aa"}))),
            (Tokens{"aa", "a"}));
  EXPECT_EQ(
      texts(maximal_match_tokens("abcd", dict_of({"ab", "abc", "cd", "d"}))),
      (Tokens{"abc", "d"}));
  const auto tokens = maximal_match_tokens("ab", dict_of({"a"}));
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_EQ(tokens[0], (SegmentToken{"a", false}));
  EXPECT_EQ(tokens[1], (SegmentToken{"b", true}));
  EXPECT_TRUE(maximal_match_segment("", TrieDictionary()).tokens.empty());
}

TEST(MaximalMatchTest, BeatsGreedyWhereGreedyStrands) {
  const TrieDictionary dict = dict_of({"ab", "abc", "cd"});
  const auto tokens = maximal_match_tokens("abcd", dict);
  EXPECT_EQ(texts(tokens), (Tokens{"ab", "cd"}));
}

TEST(MaximalMatchTest, PrefersFewerUnknowns) {
  // Both [ab][c?] and [a][bc] have two tokens; the second has no unknowns.
  const auto tokens = maximal_match_tokens("abc", dict_of({"a", "ab", "bc"}));
  EXPECT_EQ(texts(tokens), (Tokens{"a", "bc"}));
}

TEST(MaximalMatchTest, MatchesExhaustiveOracle) {
  std::mt19937 rng(31337);
  const std::vector<std::string> alphabet = {"a", "b", "ก"};
  for (int trial = 0; trial < 200; ++trial) {
    std::set<std::string> words;
    const int n_words = std::uniform_int_distribution<int>(0, 8)(rng);
    for (int w = 0; w < n_words; ++w) {
      words.insert(testing::random_symbol_line(rng, 3, 4));
    }
    words.erase("");
    const TrieDictionary dict = TrieDictionary::from_words(
        std::vector<std::string>(words.begin(), words.end()));
    for (int s = 0; s < 20; ++s) {
      std::string text;
      const int len = std::uniform_int_distribution<int>(0, 10)(rng);
      for (int i = 0; i < len; ++i) text += alphabet[rng() % 3];
      const auto got = maximal_match_tokens(text, dict);
      const testing::OracleSegmentation want =
          testing::oracle_maximal(text, words);
      ASSERT_EQ(got.size(), want.size()) << text;
      for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_EQ(got[i].text, want[i].text) << text;
        EXPECT_EQ(got[i].unknown, want[i].unknown) << text;
      }
      EXPECT_LE(got.size(), longest_match_tokens(text, dict).size());
    }
  }
}

TEST(WordSegmentTest, Examples) {
  EXPECT_EQ(word_segment("The train.", true).tokens,
            (Tokens{"the", "train", "."}));
  EXPECT_EQ(word_segment("a  b", false).tokens, (Tokens{"a", "b"}));
  EXPECT_TRUE(word_segment("", false).tokens.empty());
  EXPECT_EQ(word_segment("", false).scheme, SchemeId::word());
}

TEST(WordSegmentTest, PunctuationAndCase) {
  EXPECT_EQ(word_segment("(Hello), World!", false).tokens,
            (Tokens{"(", "Hello", ")", ",", "World", "!"}));
  EXPECT_EQ(word_segment("  don't  ", false).tokens, (Tokens{"don't"}));
  EXPECT_EQ(word_segment("...", false).tokens, (Tokens{".", ".", "."}));
  EXPECT_EQ(word_segment("ÉCOLE Kyoto", true).tokens,
            (Tokens{"école", "kyoto"}));
  EXPECT_EQ(word_segment("ÉCOLE", false).tokens, (Tokens{"ÉCOLE"}));
}

TEST(GranularityTest, Parse) {
  EXPECT_EQ(parse_granularity("codepoint"), Granularity::kCodePoint);
  EXPECT_EQ(parse_granularity("grapheme"), Granularity::kGrapheme);
  EXPECT_EQ(parse_granularity("legacy-grapheme"), Granularity::kLegacyGrapheme);
  EXPECT_THROW(parse_granularity("byte"), UsageError);
}

TEST(SegmentersPropertyTest, LosslessOnRandomText) {
  std::mt19937 rng(424242);
  const TrieDictionary dict = dict_of({"ก", "กข", "มาก", "ที่", "a▁b", "ab"});
  for (int i = 0; i < 3000; ++i) {
    const std::string raw = testing::random_text(rng, 25);
    const std::string line = sentinel_encode(raw);
    for (Granularity g : {Granularity::kCodePoint, Granularity::kGrapheme,
                          Granularity::kLegacyGrapheme}) {
      const SegmentedLine seg = char_segment(line, g);
      ASSERT_NO_THROW(validate_tokens(seg.tokens));
      ASSERT_EQ(detokenize(seg), raw);
    }
    ASSERT_EQ(detokenize(longest_match_segment(line, dict)), raw);
    ASSERT_EQ(detokenize(maximal_match_segment(line, dict)), raw);
  }
}

}  // namespace
}  // namespace segcomb
