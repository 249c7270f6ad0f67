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

#include "segcomb/grapheme.h"

#include <unicode/uchar.h>
#include <unicode/uscript.h>

namespace segcomb {
namespace {

// Role in an Indic conjunct: consonant (virama) consonant.
enum class Conjunct { kNone, kLinker, kVirama, kExtend };

struct Props {
  int gcb;
  bool pictographic;
  Conjunct conjunct;
};

bool in_conjunct_script(UChar32 c) {
  UErrorCode status = U_ZERO_ERROR;
  switch (uscript_getScript(c, &status)) {
    case USCRIPT_BENGALI:
    case USCRIPT_DEVANAGARI:
    case USCRIPT_GUJARATI:
    case USCRIPT_MALAYALAM:
    case USCRIPT_ORIYA:
    case USCRIPT_TELUGU:
      return true;
    default:
      return false;
  }
}

Props props_of(char32_t cp) {
  const UChar32 c = static_cast<UChar32>(cp);
  const int gcb = u_getIntPropertyValue(c, UCHAR_GRAPHEME_CLUSTER_BREAK);
  Conjunct conjunct = Conjunct::kNone;
  const int ccc = u_getCombiningClass(c);
  if (in_conjunct_script(c) && ccc == 9) {
    conjunct = Conjunct::kVirama;
  } else if (in_conjunct_script(c) &&
             u_getIntPropertyValue(c, UCHAR_INDIC_SYLLABIC_CATEGORY) ==
                 U_INSC_CONSONANT) {
    conjunct = Conjunct::kLinker;
  } else if (gcb == U_GCB_ZWJ || (gcb == U_GCB_EXTEND && ccc != 0)) {
    conjunct = Conjunct::kExtend;
  }
  return {gcb, u_hasBinaryProperty(c, UCHAR_EXTENDED_PICTOGRAPHIC) != 0,
          conjunct};
}

bool is_control(int gcb) {
  return gcb == U_GCB_CONTROL || gcb == U_GCB_CR || gcb == U_GCB_LF;
}

bool is_extend(int gcb) {
  return gcb == U_GCB_EXTEND || gcb == U_GCB_E_MODIFIER;
}

}  // namespace

std::vector<std::size_t> grapheme_boundaries(std::u32string_view text,
                                             ClusterKind kind) {
  std::vector<std::size_t> bounds{0};
  if (text.empty()) return bounds;

  Props prev = props_of(text[0]);
  // Regional indicators in the current run, ending at prev.
  int ri_run = prev.gcb == U_GCB_REGIONAL_INDICATOR ? 1 : 0;
  // 1: after ExtPict Extend*; 2: after ExtPict Extend* ZWJ.
  int emoji = prev.pictographic ? 1 : 0;
  // 1: after Linker Extend*; 2: after Linker Extend* Virama Extend*.
  int conjunct = prev.conjunct == Conjunct::kLinker ? 1 : 0;

  for (std::size_t i = 1; i < text.size(); ++i) {
    const Props cur = props_of(text[i]);
    bool join;
    if (prev.gcb == U_GCB_CR && cur.gcb == U_GCB_LF) {
      join = true;  // GB3
    } else if (is_control(prev.gcb) || is_control(cur.gcb)) {
      join = false;  // GB4, GB5
    } else if (prev.gcb == U_GCB_L &&
               (cur.gcb == U_GCB_L || cur.gcb == U_GCB_V ||
                cur.gcb == U_GCB_LV || cur.gcb == U_GCB_LVT)) {
      join = true;  // GB6
    } else if ((prev.gcb == U_GCB_LV || prev.gcb == U_GCB_V) &&
               (cur.gcb == U_GCB_V || cur.gcb == U_GCB_T)) {
      join = true;  // GB7
    } else if ((prev.gcb == U_GCB_LVT || prev.gcb == U_GCB_T) &&
               cur.gcb == U_GCB_T) {
      join = true;  // GB8
    } else if (is_extend(cur.gcb) || cur.gcb == U_GCB_ZWJ) {
      join = true;  // GB9
    } else if (kind == ClusterKind::kExtended &&
               (cur.gcb == U_GCB_SPACING_MARK || prev.gcb == U_GCB_PREPEND)) {
      join = true;  // GB9a, GB9b
    } else if (kind == ClusterKind::kExtended && conjunct == 2 &&
               cur.conjunct == Conjunct::kLinker) {
      join = true;  // GB9c
    } else if (emoji == 2 && cur.pictographic) {
      join = true;  // GB11
    } else if (prev.gcb == U_GCB_REGIONAL_INDICATOR &&
               cur.gcb == U_GCB_REGIONAL_INDICATOR) {
      join = ri_run % 2 == 1;  // GB12, GB13
    } else {
      join = false;  // GB999
    }
    if (!join) bounds.push_back(i);

    ri_run = cur.gcb == U_GCB_REGIONAL_INDICATOR ? ri_run + 1 : 0;
    if (cur.pictographic) {
      emoji = 1;
    } else if (emoji == 1 && is_extend(cur.gcb)) {
      emoji = 1;
    } else if (emoji == 1 && cur.gcb == U_GCB_ZWJ) {
      emoji = 2;
    } else {
      emoji = 0;
    }
    if (cur.conjunct == Conjunct::kLinker) {
      conjunct = 1;
    } else if (conjunct != 0 && cur.conjunct == Conjunct::kVirama) {
      conjunct = 2;
    } else if (conjunct == 0 || cur.conjunct != Conjunct::kExtend) {
      conjunct = 0;
    }
    prev = cur;
  }
  bounds.push_back(text.size());
  return bounds;
}

}  // namespace segcomb
