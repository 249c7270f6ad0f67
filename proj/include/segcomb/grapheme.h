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

#ifndef SEGCOMB_GRAPHEME_H_
#define SEGCOMB_GRAPHEME_H_

#include <cstddef>
#include <string_view>
#include <vector>

namespace segcomb {

enum class ClusterKind {
  kExtended,  // UAX #29 extended grapheme clusters
  kLegacy,    // legacy clusters: no SpacingMark or Prepend attachment
};

// Returns the code-point offsets where clusters start, plus text.size() as
// the final entry. Empty text yields {0}.
std::vector<std::size_t> grapheme_boundaries(std::u32string_view text,
                                             ClusterKind kind);

}  // namespace segcomb

#endif  // SEGCOMB_GRAPHEME_H_
