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

#include "segcomb/chrf.h"

#include <algorithm>
#include <cmath>
#include <optional>

#include "segcomb/error.h"
#include "segcomb/utf8.h"

namespace segcomb {
namespace {

void check_options(const ChrfOptions& options) {
  if (!(options.beta > 0.0) || !std::isfinite(options.beta)) {
    throw UsageError("beta must be a positive number");
  }
  if (options.max_order < 1) throw UsageError("n-gram order must be >= 1");
}

std::u32string prepare(std::string_view text, WhitespacePolicy whitespace) {
  std::optional<std::u32string> cps = utf8::decode(text);
  if (!cps) throw DataError("text is not valid UTF-8");
  if (whitespace == WhitespacePolicy::kStrip) std::erase(*cps, U' ');
  return std::move(*cps);
}

}  // namespace

WhitespacePolicy parse_whitespace_policy(std::string_view name) {
  if (name == "strip") return WhitespacePolicy::kStrip;
  if (name == "keep") return WhitespacePolicy::kKeep;
  throw UsageError("unknown whitespace policy '" + std::string(name) +
                   "' (expected strip or keep)");
}

NgramProfile ngram_profile(std::u32string_view text, int max_order) {
  NgramProfile profile;
  profile.orders.resize(static_cast<std::size_t>(std::max(max_order, 0)));
  for (int n = 1; n <= max_order; ++n) {
    auto& grams = profile.orders[n - 1];
    for (std::size_t i = 0; i + n <= text.size(); ++i) {
      ++grams[std::u32string(text.substr(i, n))];
    }
  }
  return profile;
}

ChrfStats& ChrfStats::operator+=(const ChrfStats& other) {
  if (orders.size() < other.orders.size()) orders.resize(other.orders.size());
  for (std::size_t n = 0; n < other.orders.size(); ++n) {
    orders[n].matches += other.orders[n].matches;
    orders[n].hyp_count += other.orders[n].hyp_count;
    orders[n].ref_count += other.orders[n].ref_count;
  }
  return *this;
}

ChrfStats chrf_stats(std::string_view hypothesis, std::string_view reference,
                     const ChrfOptions& options) {
  check_options(options);
  const NgramProfile hyp =
      ngram_profile(prepare(hypothesis, options.whitespace), options.max_order);
  const NgramProfile ref =
      ngram_profile(prepare(reference, options.whitespace), options.max_order);
  ChrfStats stats;
  stats.orders.resize(options.max_order);
  for (int n = 0; n < options.max_order; ++n) {
    NgramStats& s = stats.orders[n];
    for (const auto& [gram, count] : hyp.orders[n]) {
      s.hyp_count += count;
      const auto it = ref.orders[n].find(gram);
      if (it != ref.orders[n].end()) s.matches += std::min(count, it->second);
    }
    for (const auto& [gram, count] : ref.orders[n]) s.ref_count += count;
  }
  return stats;
}

double chrf_from_stats(const ChrfStats& stats, double beta) {
  double precision_sum = 0.0;
  double recall_sum = 0.0;
  int effective = 0;
  for (const NgramStats& s : stats.orders) {
    if (s.hyp_count == 0 && s.ref_count == 0) continue;
    ++effective;
    if (s.hyp_count > 0) {
      precision_sum += static_cast<double>(s.matches) / s.hyp_count;
    }
    if (s.ref_count > 0) {
      recall_sum += static_cast<double>(s.matches) / s.ref_count;
    }
  }
  if (effective == 0) return 100.0;
  const double precision = precision_sum / effective;
  const double recall = recall_sum / effective;
  const double beta2 = beta * beta;
  const double denominator = beta2 * precision + recall;
  if (denominator <= 0.0) return 0.0;
  return 100.0 * (1.0 + beta2) * precision * recall / denominator;
}

double chrf_score(std::string_view hypothesis, std::string_view reference,
                  const ChrfOptions& options) {
  return chrf_from_stats(chrf_stats(hypothesis, reference, options),
                         options.beta);
}

ChrfReport corpus_chrf(std::span<const std::string> hypotheses,
                       std::span<const std::string> references,
                       const ChrfOptions& options) {
  check_options(options);
  if (hypotheses.size() != references.size()) {
    throw DataError("hypothesis has " + std::to_string(hypotheses.size()) +
                    " lines but reference has " +
                    std::to_string(references.size()));
  }
  ChrfReport report;
  report.beta = options.beta;
  report.max_order = options.max_order;
  report.totals.orders.resize(options.max_order);
  report.segment_scores.reserve(hypotheses.size());
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    ChrfStats stats;
    try {
      stats = chrf_stats(hypotheses[i], references[i], options);
    } catch (const DataError& e) {
      throw DataError("line " + std::to_string(i + 1) + ": " + e.what());
    }
    report.segment_scores.push_back(chrf_from_stats(stats, options.beta));
    report.totals += stats;
  }
  report.corpus_score = chrf_from_stats(report.totals, options.beta);
  return report;
}

}  // namespace segcomb
