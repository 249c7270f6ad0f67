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

#ifndef SEGCOMB_SEGMENTERS_H_
#define SEGCOMB_SEGMENTERS_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "segcomb/corpus.h"
#include "segcomb/trie.h"

namespace segcomb {

// Unless noted otherwise, segmenters take sentinel-encoded lines and throw
// DataError on invalid UTF-8 or a literal space.

enum class Granularity {
  kCodePoint,
  kGrapheme,        // extended grapheme clusters
  kLegacyGrapheme,  // legacy grapheme clusters
};

// "codepoint", "grapheme" or "legacy-grapheme"; UsageError otherwise.
Granularity parse_granularity(std::string_view name);

SegmentedLine char_segment(std::string_view line,
                           Granularity granularity = Granularity::kCodePoint);

struct SegmentToken {
  std::string text;
  // Set for single code points that are not dictionary words.
  bool unknown = false;

  friend bool operator==(const SegmentToken&, const SegmentToken&) = default;
};

// Greedy left-to-right: the longest dictionary word at each position, or a
// single unknown code point when nothing matches. `probes` counts trie child
// lookups.
std::vector<SegmentToken> longest_match_tokens(std::string_view line,
                                               const TrieDictionary& dict,
                                               std::size_t* probes = nullptr);
SegmentedLine longest_match_segment(std::string_view line,
                                    const TrieDictionary& dict);

// Fewest tokens overall. Any single code point is admissible (flagged
// unknown unless it is itself a word). Ties: fewest unknown tokens, then the
// longest token at the leftmost position where optimal solutions diverge.
std::vector<SegmentToken> maximal_match_tokens(std::string_view line,
                                               const TrieDictionary& dict);
SegmentedLine maximal_match_segment(std::string_view line,
                                    const TrieDictionary& dict);

// Whitespace tokenizer for the English side. Takes raw (not encoded) text,
// splits on runs of U+0020 and detaches leading and trailing ASCII
// punctuation one character per token. Not lossless.
SegmentedLine word_segment(std::string_view line, bool lowercase);

std::vector<SegmentedLine> to_segmented(
    std::span<const std::vector<SegmentToken>> lines, const SchemeId& scheme);

struct ExternalCommand {
  // Run through /bin/sh -c.
  std::string command;
  // Scheme name; defaults to "external" when empty.
  std::string name;
};

// Feeds raw lines, sentinel-encoded, to a child process one per line and
// reads back one space-delimited token sequence per line.
//
// Throws ExternalError if the child exits abnormally, DataError if the line
// count differs or a line's tokens do not concatenate to its input.
std::vector<SegmentedLine> external_segment(std::span<const std::string> lines,
                                            const ExternalCommand& command);

}  // namespace segcomb

#endif  // SEGCOMB_SEGMENTERS_H_
