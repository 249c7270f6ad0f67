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

#include "segcomb/combiner.h"

#include <cstdio>
#include <ostream>
#include <string>
#include <unordered_set>

#include "segcomb/error.h"

namespace segcomb {
namespace {

std::uint64_t unique_lines(std::span<const SegmentedLine> lines) {
  std::unordered_set<std::string> seen;
  for (const SegmentedLine& line : lines) seen.insert(join_tokens(line.tokens));
  return seen.size();
}

std::string format_fixed(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.4f", value);
  return buffer;
}

}  // namespace

void append_block(std::span<const SegmentedLine> source,
                  const TargetVariant& variant, CombinedCorpus* combined) {
  if (variant.lines.size() != source.size()) {
    throw DataError("target variant '" + variant.scheme.label() + "' has " +
                    std::to_string(variant.lines.size()) +
                    " lines but the source has " +
                    std::to_string(source.size()));
  }
  for (std::size_t i = 0; i < source.size(); ++i) {
    combined->pairs.add(source[i], variant.lines[i]);
  }
  combined->manifest.push_back({variant.scheme, source.size()});
}

CombinedCorpus combine(std::span<const SegmentedLine> source,
                       std::span<const TargetVariant> variants) {
  if (variants.empty()) {
    throw UsageError("combine needs at least one target variant");
  }
  // Validate every block before building any of them.
  for (const TargetVariant& variant : variants) {
    if (variant.lines.size() != source.size()) {
      throw DataError("target variant '" + variant.scheme.label() + "' has " +
                      std::to_string(variant.lines.size()) +
                      " lines but the source has " +
                      std::to_string(source.size()));
    }
  }
  CombinedCorpus combined;
  for (const TargetVariant& variant : variants) {
    append_block(source, variant, &combined);
  }
  return combined;
}

CorpusStats compute_stats(std::span<const SegmentedLine> corpus) {
  CorpusStats stats;
  stats.sentence_count = corpus.size();
  std::unordered_set<std::string_view> types;
  for (const SegmentedLine& line : corpus) {
    stats.token_count += line.tokens.size();
    for (const std::string& token : line.tokens) types.insert(token);
  }
  stats.distinct_type_count = types.size();
  if (stats.sentence_count > 0) {
    stats.mean_tokens_per_sentence =
        static_cast<double>(stats.token_count) / stats.sentence_count;
    stats.duplication_factor =
        static_cast<double>(stats.sentence_count) / unique_lines(corpus);
  }
  return stats;
}

CorpusStats compute_stats(const CombinedCorpus& combined, Side side) {
  const std::vector<SegmentedLine> lines = combined.pairs.side(side);
  CorpusStats stats = compute_stats(lines);
  if (side == Side::kTarget && stats.sentence_count > 0) {
    const std::vector<SegmentedLine> sources =
        combined.pairs.side(Side::kSource);
    stats.duplication_factor =
        static_cast<double>(stats.sentence_count) / unique_lines(sources);
  }
  return stats;
}

void write_manifest(std::span<const ManifestEntry> manifest,
                    std::ostream& out) {
  for (const ManifestEntry& entry : manifest) {
    out << entry.scheme.label() << '\t' << entry.pair_count << '\n';
  }
}

void write_stats(const CorpusStats& stats, std::ostream& out) {
  out << "sentences\t" << stats.sentence_count << '\n'
      << "tokens\t" << stats.token_count << '\n'
      << "types\t" << stats.distinct_type_count << '\n'
      << "mean_tokens_per_sentence\t"
      << format_fixed(stats.mean_tokens_per_sentence) << '\n'
      << "duplication_factor\t" << format_fixed(stats.duplication_factor)
      << '\n';
}

}  // namespace segcomb
