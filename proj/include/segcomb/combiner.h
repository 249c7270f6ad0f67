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

#ifndef SEGCOMB_COMBINER_H_
#define SEGCOMB_COMBINER_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "segcomb/corpus.h"

namespace segcomb {

struct TargetVariant {
  SchemeId scheme;
  std::vector<SegmentedLine> lines;
};

struct ManifestEntry {
  SchemeId scheme;
  std::size_t pair_count = 0;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

// Training pairs built by appending one block per target segmentation.
// The manifest lists the blocks in append order.
struct CombinedCorpus {
  ParallelCorpus pairs;
  std::vector<ManifestEntry> manifest;

  friend bool operator==(const CombinedCorpus&,
                         const CombinedCorpus&) = default;
};

// Appends (source[i], variant.lines[i]) for every i. Throws DataError when
// the variant's length differs from the source's.
void append_block(std::span<const SegmentedLine> source,
                  const TargetVariant& variant, CombinedCorpus* combined);

// Concatenates one block per variant, in list order. The source side is
// repeated unchanged for every block; nothing is shuffled or deduplicated.
// Throws UsageError for an empty variant list.
CombinedCorpus combine(std::span<const SegmentedLine> source,
                       std::span<const TargetVariant> variants);

struct CorpusStats {
  std::uint64_t sentence_count = 0;
  std::uint64_t token_count = 0;
  std::uint64_t distinct_type_count = 0;
  double mean_tokens_per_sentence = 0.0;
  // Sentences per unique sentence (per unique source sentence for a
  // combined corpus).
  double duplication_factor = 0.0;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

CorpusStats compute_stats(std::span<const SegmentedLine> corpus);
// Token statistics of one side; duplication is measured on the source side.
CorpusStats compute_stats(const CombinedCorpus& combined, Side side);

// One "label<TAB>pair_count" record per block.
void write_manifest(std::span<const ManifestEntry> manifest, std::ostream& out);
void write_stats(const CorpusStats& stats, std::ostream& out);

}  // namespace segcomb

#endif  // SEGCOMB_COMBINER_H_
