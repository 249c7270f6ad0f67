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

#ifndef SEGCOMB_TESTS_ORACLES_SEGMENTATION_ORACLE_H_
#define SEGCOMB_TESTS_ORACLES_SEGMENTATION_ORACLE_H_

// Exhaustive enumeration of dictionary segmentations. A piece is either a
// dictionary word or a single code point (unknown unless it is a word).

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "test_util.h"

namespace segcomb::testing {

struct OraclePiece {
  std::string text;
  bool unknown;
};
using OracleSegmentation = std::vector<OraclePiece>;

inline void enumerate_segmentations(const std::vector<std::string>& cps,
                                    std::size_t pos,
                                    const std::set<std::string>& dict,
                                    OracleSegmentation* prefix,
                                    std::vector<OracleSegmentation>* out) {
  if (pos == cps.size()) {
    out->push_back(*prefix);
    return;
  }
  std::string piece;
  for (std::size_t end = pos; end < cps.size(); ++end) {
    piece += cps[end];
    const bool known = dict.contains(piece);
    if (known || end == pos) {
      prefix->push_back({piece, !known});
      enumerate_segmentations(cps, end + 1, dict, prefix, out);
      prefix->pop_back();
    }
  }
}

inline std::vector<OracleSegmentation> all_segmentations(
    const std::string& text, const std::set<std::string>& dict) {
  std::vector<OracleSegmentation> out;
  OracleSegmentation prefix;
  enumerate_segmentations(code_points(text), 0, dict, &prefix, &out);
  return out;
}

inline std::size_t unknown_count(const OracleSegmentation& seg) {
  return static_cast<std::size_t>(std::count_if(
      seg.begin(), seg.end(), [](const OraclePiece& p) { return p.unknown; }));
}

// Fewest tokens, then fewest unknowns, then the longest piece at the first
// position where candidates differ.
inline OracleSegmentation oracle_maximal(const std::string& text,
                                         const std::set<std::string>& dict) {
  const std::vector<OracleSegmentation> all = all_segmentations(text, dict);
  const auto lengths = [](const OracleSegmentation& seg) {
    std::vector<std::size_t> out;
    for (const OraclePiece& p : seg) out.push_back(code_points(p.text).size());
    return out;
  };
  const OracleSegmentation* best = nullptr;
  for (const OracleSegmentation& seg : all) {
    if (best == nullptr) {
      best = &seg;
      continue;
    }
    if (seg.size() != best->size()) {
      if (seg.size() < best->size()) best = &seg;
      continue;
    }
    const std::size_t u = unknown_count(seg), bu = unknown_count(*best);
    if (u != bu) {
      if (u < bu) best = &seg;
      continue;
    }
    if (lengths(seg) > lengths(*best)) best = &seg;
  }
  return *best;
}

inline std::size_t oracle_min_tokens(const std::string& text,
                                     const std::set<std::string>& dict) {
  std::size_t best = static_cast<std::size_t>(-1);
  for (const OracleSegmentation& seg : all_segmentations(text, dict)) {
    best = std::min(best, seg.size());
  }
  return best;
}

}  // namespace segcomb::testing

#endif  // SEGCOMB_TESTS_ORACLES_SEGMENTATION_ORACLE_H_
