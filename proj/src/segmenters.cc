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

#include "segcomb/segmenters.h"

#include <unicode/uchar.h>

#include <optional>
#include <utility>

#include "segcomb/error.h"
#include "segcomb/grapheme.h"
#include "segcomb/subprocess.h"
#include "segcomb/utf8.h"

namespace segcomb {
namespace {

std::u32string decode_encoded(std::string_view line) {
  std::optional<std::u32string> cps = utf8::decode(line);
  if (!cps) throw DataError("line is not valid UTF-8");
  if (line.find(' ') != std::string_view::npos) {
    throw DataError("line contains a literal space; sentinel-encode it first");
  }
  return std::move(*cps);
}

std::string slice(std::u32string_view text, std::size_t pos, std::size_t len) {
  return utf8::encode(text.substr(pos, len));
}

bool is_ascii_punct(char32_t cp) {
  return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
         (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
}

void add_word_tokens(std::u32string_view word, std::vector<std::string>* out) {
  std::size_t begin = 0;
  std::size_t end = word.size();
  while (begin < end && is_ascii_punct(word[begin])) {
    out->push_back(utf8::encode(word[begin]));
    ++begin;
  }
  std::size_t core_end = end;
  while (core_end > begin && is_ascii_punct(word[core_end - 1])) --core_end;
  if (core_end > begin) out->push_back(slice(word, begin, core_end - begin));
  for (std::size_t i = core_end; i < end; ++i) {
    out->push_back(utf8::encode(word[i]));
  }
}

}  // namespace

Granularity parse_granularity(std::string_view name) {
  if (name == "codepoint") return Granularity::kCodePoint;
  if (name == "grapheme") return Granularity::kGrapheme;
  if (name == "legacy-grapheme") return Granularity::kLegacyGrapheme;
  throw UsageError("unknown granularity '" + std::string(name) +
                   "' (expected codepoint, grapheme or legacy-grapheme)");
}

SegmentedLine char_segment(std::string_view line, Granularity granularity) {
  const std::u32string cps = decode_encoded(line);
  SegmentedLine result{{}, SchemeId::character()};
  if (granularity == Granularity::kCodePoint) {
    result.tokens.reserve(cps.size());
    for (char32_t cp : cps) result.tokens.push_back(utf8::encode(cp));
    return result;
  }
  const ClusterKind kind = granularity == Granularity::kGrapheme
                               ? ClusterKind::kExtended
                               : ClusterKind::kLegacy;
  const std::vector<std::size_t> bounds = grapheme_boundaries(cps, kind);
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    result.tokens.push_back(slice(cps, bounds[i], bounds[i + 1] - bounds[i]));
  }
  return result;
}

std::vector<SegmentToken> longest_match_tokens(std::string_view line,
                                               const TrieDictionary& dict,
                                               std::size_t* probes) {
  const std::u32string cps = decode_encoded(line);
  std::vector<SegmentToken> tokens;
  std::size_t pos = 0;
  while (pos < cps.size()) {
    const std::vector<std::size_t> lengths =
        dict.prefix_lengths(cps, pos, probes);
    if (lengths.empty()) {
      tokens.push_back({utf8::encode(cps[pos]), true});
      ++pos;
    } else {
      tokens.push_back({slice(cps, pos, lengths.back()), false});
      pos += lengths.back();
    }
  }
  return tokens;
}

SegmentedLine longest_match_segment(std::string_view line,
                                    const TrieDictionary& dict) {
  SegmentedLine result{{}, SchemeId::longest_match()};
  for (SegmentToken& token : longest_match_tokens(line, dict)) {
    result.tokens.push_back(std::move(token.text));
  }
  return result;
}

std::vector<SegmentToken> maximal_match_tokens(std::string_view line,
                                               const TrieDictionary& dict) {
  const std::u32string cps = decode_encoded(line);
  const std::size_t n = cps.size();

  // Optimal (tokens, unknowns) for each suffix, and the first token length
  // that achieves it.
  struct Cost {
    std::size_t tokens = 0;
    std::size_t unknowns = 0;
    bool operator<(const Cost& other) const {
      return tokens != other.tokens ? tokens < other.tokens
                                    : unknowns < other.unknowns;
    }
  };
  std::vector<Cost> best(n + 1);
  std::vector<std::size_t> choice(n + 1, 0);
  std::vector<char> choice_unknown(n + 1, 0);

  for (std::size_t i = n; i-- > 0;) {
    const std::vector<std::size_t> lengths = dict.prefix_lengths(cps, i);
    const bool single_known = !lengths.empty() && lengths.front() == 1;
    bool have = false;
    // Longest first; only strictly better costs replace, so ties keep the
    // longer token.
    for (auto it = lengths.rbegin(); it != lengths.rend(); ++it) {
      const Cost cost{best[i + *it].tokens + 1, best[i + *it].unknowns};
      if (!have || cost < best[i]) {
        best[i] = cost;
        choice[i] = *it;
        choice_unknown[i] = 0;
        have = true;
      }
    }
    if (!single_known) {
      const Cost cost{best[i + 1].tokens + 1, best[i + 1].unknowns + 1};
      if (!have || cost < best[i]) {
        best[i] = cost;
        choice[i] = 1;
        choice_unknown[i] = 1;
      }
    }
  }

  std::vector<SegmentToken> tokens;
  tokens.reserve(best[0].tokens);
  for (std::size_t pos = 0; pos < n; pos += choice[pos]) {
    tokens.push_back({slice(cps, pos, choice[pos]), choice_unknown[pos] != 0});
  }
  return tokens;
}

SegmentedLine maximal_match_segment(std::string_view line,
                                    const TrieDictionary& dict) {
  SegmentedLine result{{}, SchemeId::maximal_match()};
  for (SegmentToken& token : maximal_match_tokens(line, dict)) {
    result.tokens.push_back(std::move(token.text));
  }
  return result;
}

SegmentedLine word_segment(std::string_view line, bool lowercase) {
  std::optional<std::u32string> cps = utf8::decode(line);
  if (!cps) throw DataError("line is not valid UTF-8");
  if (lowercase) {
    for (char32_t& cp : *cps) {
      cp = static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp)));
    }
  }
  SegmentedLine result{{}, SchemeId::word()};
  const std::u32string_view text = *cps;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == U' ') {
      ++pos;
      continue;
    }
    std::size_t end = text.find(U' ', pos);
    if (end == std::u32string_view::npos) end = text.size();
    add_word_tokens(text.substr(pos, end - pos), &result.tokens);
    pos = end;
  }
  return result;
}

std::vector<SegmentedLine> to_segmented(
    std::span<const std::vector<SegmentToken>> lines, const SchemeId& scheme) {
  std::vector<SegmentedLine> out;
  out.reserve(lines.size());
  for (const std::vector<SegmentToken>& line : lines) {
    SegmentedLine seg{{}, scheme};
    for (const SegmentToken& token : line) seg.tokens.push_back(token.text);
    out.push_back(std::move(seg));
  }
  return out;
}

std::vector<SegmentedLine> external_segment(std::span<const std::string> lines,
                                            const ExternalCommand& command) {
  const std::string name = command.name.empty() ? "external" : command.name;
  if (command.command.empty()) {
    throw UsageError("external segmenter command is empty");
  }
  std::vector<std::string> encoded;
  encoded.reserve(lines.size());
  std::string input;
  for (const std::string& line : lines) {
    if (line.find('\n') != std::string::npos ||
        line.find('\r') != std::string::npos) {
      throw DataError("line contains a line terminator");
    }
    encoded.push_back(sentinel_encode(line));
    input += encoded.back();
    input.push_back('\n');
  }
  if (lines.empty()) return {};

  const ProcessResult run = run_process(command.command, input);
  if (run.exit_code != 0) {
    std::string what = "external segmenter '" + name + "' ";
    what += run.exit_code < 0
                ? "was killed by signal " + std::to_string(run.term_signal)
                : "exited with status " + std::to_string(run.exit_code);
    if (!run.err.empty()) what += ": " + run.err;
    while (!what.empty() && (what.back() == '\n' || what.back() == '\r')) {
      what.pop_back();
    }
    throw ExternalError(what);
  }

  std::vector<std::string_view> out_lines;
  std::string_view rest = run.out;
  while (!rest.empty()) {
    const std::size_t nl = rest.find('\n');
    out_lines.push_back(rest.substr(0, nl));
    if (nl == std::string_view::npos) break;
    rest.remove_prefix(nl + 1);
  }
  if (out_lines.size() != lines.size()) {
    throw DataError("external segmenter '" + name + "' returned " +
                    std::to_string(out_lines.size()) + " lines for " +
                    std::to_string(lines.size()) + " inputs");
  }

  const SchemeId scheme = SchemeId::external(name);
  std::vector<SegmentedLine> result;
  result.reserve(lines.size());
  for (std::size_t i = 0; i < out_lines.size(); ++i) {
    const std::string line_ref = "line " + std::to_string(i + 1) + ": ";
    if (!utf8::is_valid(out_lines[i])) {
      throw DataError("external segmenter '" + name + "' " + line_ref +
                      "invalid UTF-8 in output");
    }
    SegmentedLine seg{{}, scheme};
    std::string joined;
    std::size_t pos = 0;
    const std::string_view out_line = out_lines[i];
    while (pos < out_line.size()) {
      if (out_line[pos] == ' ') {
        ++pos;
        continue;
      }
      std::size_t end = out_line.find(' ', pos);
      if (end == std::string_view::npos) end = out_line.size();
      seg.tokens.emplace_back(out_line.substr(pos, end - pos));
      joined += seg.tokens.back();
      pos = end;
    }
    if (joined != encoded[i]) {
      throw DataError("external segmenter '" + name + "' " + line_ref +
                      "tokens do not reproduce the input sentence");
    }
    result.push_back(std::move(seg));
  }
  return result;
}

}  // namespace segcomb
