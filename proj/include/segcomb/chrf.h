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

#ifndef SEGCOMB_CHRF_H_
#define SEGCOMB_CHRF_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace segcomb {

enum class WhitespacePolicy {
  kStrip,  // remove every U+0020 from both sides before counting
  kKeep,
};

WhitespacePolicy parse_whitespace_policy(std::string_view name);

struct ChrfOptions {
  double beta = 3.0;
  int max_order = 6;
  WhitespacePolicy whitespace = WhitespacePolicy::kStrip;
};

// Character n-gram multisets for orders 1..max_order; orders[n - 1] holds
// the n-grams.
struct NgramProfile {
  std::vector<std::map<std::u32string, std::int64_t>> orders;
};

NgramProfile ngram_profile(std::u32string_view text, int max_order);

struct NgramStats {
  std::int64_t matches = 0;
  std::int64_t hyp_count = 0;
  std::int64_t ref_count = 0;
};

// Sufficient statistics; sums over segments give corpus statistics.
struct ChrfStats {
  std::vector<NgramStats> orders;

  ChrfStats& operator+=(const ChrfStats& other);
};

ChrfStats chrf_stats(std::string_view hypothesis, std::string_view reference,
                     const ChrfOptions& options = {});

// Score in [0, 100]. Orders where hypothesis and reference both have no
// n-grams are skipped; if every order is skipped the score is 100.
double chrf_from_stats(const ChrfStats& stats, double beta);

double chrf_score(std::string_view hypothesis, std::string_view reference,
                  const ChrfOptions& options = {});

struct ChrfReport {
  double beta = 3.0;
  int max_order = 6;
  std::vector<double> segment_scores;
  double corpus_score = 0.0;
  // Summed per-order statistics behind corpus_score.
  ChrfStats totals;
};

// Corpus score from statistics summed over all segments. Throws DataError if
// the line counts differ.
ChrfReport corpus_chrf(std::span<const std::string> hypotheses,
                       std::span<const std::string> references,
                       const ChrfOptions& options = {});

}  // namespace segcomb

#endif  // SEGCOMB_CHRF_H_
