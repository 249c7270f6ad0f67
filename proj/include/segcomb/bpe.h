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

#ifndef SEGCOMB_BPE_H_
#define SEGCOMB_BPE_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "segcomb/corpus.h"

namespace segcomb {

// kLine learns over the code points of whole sentinel-encoded lines.
// kWord splits lines on the sentinel, appends kEndOfWord to every word, and
// never merges across words.
enum class BpeMode { kLine, kWord };

inline constexpr std::string_view kEndOfWord = "</w>";

std::string_view to_string(BpeMode mode);
// Accepts "line" or "word"; throws UsageError otherwise.
BpeMode parse_bpe_mode(std::string_view name);

struct MergePair {
  std::string left;
  std::string right;
  int rank = 0;

  std::string merged() const { return left + right; }

  friend bool operator==(const MergePair&, const MergePair&) = default;
};

// Learned merges in priority order. Immutable once built.
class MergeTable {
 public:
  MergeTable() = default;
  // Throws DataError unless ranks are 0..n-1 in order, sides are non-empty,
  // pairs are unique and merges.size() <= n_requested.
  MergeTable(BpeMode mode, int n_requested, std::vector<MergePair> merges);

  BpeMode mode() const { return mode_; }
  int n_requested() const { return n_requested_; }
  int n_performed() const { return static_cast<int>(merges_.size()); }
  std::span<const MergePair> merges() const { return merges_; }

  friend bool operator==(const MergeTable&, const MergeTable&) = default;

 private:
  BpeMode mode_ = BpeMode::kLine;
  int n_requested_ = 0;
  std::vector<MergePair> merges_;
};

struct BpeOptions {
  int n_merges = 0;
  BpeMode mode = BpeMode::kLine;
  // Learning stops once the best pair occurs fewer times than this.
  int min_frequency = 2;
};

struct BpeLearnResult {
  MergeTable table;
  // Final tokens of every training line, rendered as apply_bpe would.
  std::vector<std::vector<std::string>> segmentations;
};

// Learns up to options.n_merges merges over sentinel-encoded lines.
//
// Every iteration merges the pair with the highest adjacency count; all
// adjacent positions are counted, including overlapping ones ("aaa" counts
// (a,a) twice). Ties go to the lexicographically smallest (left, right) in
// code-point order. Replacement runs left to right without overlap.
//
// Throws UsageError if n_merges < 1 or min_frequency < 2, DataError if a line
// is not valid UTF-8 or still contains a literal space.
MergeTable learn_bpe(std::span<const std::string> corpus,
                     const BpeOptions& options);
BpeLearnResult learn_bpe_detailed(std::span<const std::string> corpus,
                                  const BpeOptions& options);

// Applies a merge table by replaying merges strictly in rank order. Each
// replayed merge rewrites every current occurrence left to right.
//
// In word mode the end-of-word marker is removed from the output; it becomes
// the sentinel on every word but the last so detokenization is lossless.
class BpeApplier {
 public:
  explicit BpeApplier(MergeTable table);

  const MergeTable& table() const { return table_; }

  SegmentedLine apply(std::string_view line) const;
  // Batch form; memoizes repeated words or lines.
  std::vector<SegmentedLine> apply_all(std::span<const std::string> lines) const;

 private:
  struct MergeInfo {
    int rank;
    int merged;
  };

  std::vector<std::string> apply_unit(std::string_view text,
                                      bool end_of_word) const;

  MergeTable table_;
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, int> ids_;
  std::unordered_map<std::uint64_t, MergeInfo> merges_;
};

SegmentedLine apply_bpe(std::string_view line, const MergeTable& table);

// File format:
//   #segcomb merges v1 mode=<line|word> requested=<n>
//   <left> <right>        (one per merge, in rank order)
void write_merge_table(const MergeTable& table, std::ostream& out);
void save_merge_table(const MergeTable& table,
                      const std::filesystem::path& path);
MergeTable read_merge_table(std::istream& in, std::string_view origin);
MergeTable load_merge_table(const std::filesystem::path& path);

}  // namespace segcomb

#endif  // SEGCOMB_BPE_H_
