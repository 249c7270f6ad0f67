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

#ifndef SEGCOMB_CORPUS_H_
#define SEGCOMB_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace segcomb {

// Literal spaces are replaced by U+2581 before segmentation so that token
// boundaries can be written as plain spaces. Raw input must not contain it.
inline constexpr char32_t kSentinel = 0x2581;
inline constexpr std::string_view kSentinelUtf8 = "\xE2\x96\x81";

enum class SchemeKind {
  kCharacter,
  kBpe,
  kLongestMatch,
  kMaximalMatch,
  kWord,
  kExternal,
};

// Identifies the segmentation strategy that produced a token sequence.
class SchemeId {
 public:
  SchemeId() = default;  // character

  static SchemeId character();
  static SchemeId bpe(int n_merges);
  static SchemeId longest_match();
  static SchemeId maximal_match();
  static SchemeId word();
  static SchemeId external(std::string name);

  // Returns a copy carrying a free-form label that overrides label().
  SchemeId with_label(std::string label) const;

  SchemeKind kind() const { return kind_; }
  // Merge-operation count; 0 unless kind() == kBpe.
  int n_merges() const { return n_merges_; }
  // External tool name; empty unless kind() == kExternal.
  const std::string& name() const { return name_; }

  // "character", "bpe5000", "longest_match", "maximal_match", "word",
  // "external:<name>", or the explicit label.
  std::string label() const;

  friend bool operator==(const SchemeId&, const SchemeId&) = default;

 private:
  SchemeId(SchemeKind kind, int n_merges, std::string name)
      : kind_(kind), n_merges_(n_merges), name_(std::move(name)) {}

  SchemeKind kind_ = SchemeKind::kCharacter;
  int n_merges_ = 0;
  std::string name_;
  std::string label_;
};

// One sentence split into tokens. Tokens are non-empty, contain no U+0020,
// and detokenize back to the original sentence.
struct SegmentedLine {
  std::vector<std::string> tokens;
  SchemeId scheme;

  friend bool operator==(const SegmentedLine&, const SegmentedLine&) = default;
};

enum class Side { kSource, kTarget };

struct SentencePair {
  SegmentedLine source;
  SegmentedLine target;

  friend bool operator==(const SentencePair&, const SentencePair&) = default;
};

// Aligned source/target pairs; pair i is line i of both sides.
class ParallelCorpus {
 public:
  ParallelCorpus() = default;

  // Throws DataError if the sides differ in length.
  static ParallelCorpus from_sides(std::vector<SegmentedLine> source,
                                   std::vector<SegmentedLine> target);

  void add(SegmentedLine source, SegmentedLine target);

  std::span<const SentencePair> pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const SentencePair& operator[](std::size_t i) const { return pairs_[i]; }

  std::vector<SegmentedLine> side(Side which) const;

  friend bool operator==(const ParallelCorpus&,
                         const ParallelCorpus&) = default;

 private:
  std::vector<SentencePair> pairs_;
};

// Replaces every U+0020 with the sentinel. Throws DataError if the text
// already contains the sentinel.
std::string sentinel_encode(std::string_view text);
std::string sentinel_decode(std::string_view text);

// Concatenates tokens and maps the sentinel back to U+0020.
std::string detokenize(std::span<const std::string> tokens);
std::string detokenize(const SegmentedLine& line);

// Throws DataError if a token is empty or contains U+0020.
void validate_tokens(std::span<const std::string> tokens);

// Tokens joined by a single U+0020.
std::string join_tokens(std::span<const std::string> tokens);

// Splits a segmented-file line on single spaces. Throws DataError on empty
// tokens (leading, trailing or doubled spaces).
std::vector<std::string> split_tokens(std::string_view line);

// Reads UTF-8 lines. `origin` names the stream in error messages. Errors
// carry 1-based line numbers.
std::vector<std::string> read_text_lines(std::istream& in,
                                         std::string_view origin);
// As read_text_lines, and additionally rejects the sentinel and CR.
std::vector<std::string> read_corpus(std::istream& in,
                                     std::string_view origin);
std::vector<std::string> load_corpus(const std::filesystem::path& path);

std::vector<SegmentedLine> read_segmented(std::istream& in,
                                          std::string_view origin,
                                          const SchemeId& scheme = {});
std::vector<SegmentedLine> load_segmented(const std::filesystem::path& path,
                                          const SchemeId& scheme = {});

// One line per sentence, tokens joined by one space, last line terminated.
void write_segmented(std::span<const SegmentedLine> corpus, std::ostream& out);
void save_segmented(std::span<const SegmentedLine> corpus,
                    const std::filesystem::path& path);

void write_lines(std::span<const std::string> lines, std::ostream& out);

}  // namespace segcomb

#endif  // SEGCOMB_CORPUS_H_
