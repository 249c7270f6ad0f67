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

#include "segcomb/corpus.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <utility>

#include "segcomb/error.h"
#include "segcomb/utf8.h"

namespace segcomb {
namespace {

std::string at_line(std::string_view origin, std::size_t line_no) {
  return std::string(origin) + ":" + std::to_string(line_no) + ": ";
}

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string() + " for reading");
  return in;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  return out;
}

void check_written(const std::ostream& out, const std::filesystem::path& path) {
  if (!out) throw DataError("failed writing " + path.string());
}

}  // namespace

SchemeId SchemeId::character() { return SchemeId(SchemeKind::kCharacter, 0, ""); }

SchemeId SchemeId::bpe(int n_merges) {
  if (n_merges <= 0) throw UsageError("bpe scheme needs a positive merge count");
  return SchemeId(SchemeKind::kBpe, n_merges, "");
}

SchemeId SchemeId::longest_match() {
  return SchemeId(SchemeKind::kLongestMatch, 0, "");
}

SchemeId SchemeId::maximal_match() {
  return SchemeId(SchemeKind::kMaximalMatch, 0, "");
}

SchemeId SchemeId::word() { return SchemeId(SchemeKind::kWord, 0, ""); }

SchemeId SchemeId::external(std::string name) {
  return SchemeId(SchemeKind::kExternal, 0, std::move(name));
}

SchemeId SchemeId::with_label(std::string label) const {
  SchemeId copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

std::string SchemeId::label() const {
  if (!label_.empty()) return label_;
  switch (kind_) {
    case SchemeKind::kCharacter:
      return "character";
    case SchemeKind::kBpe:
      return "bpe" + std::to_string(n_merges_);
    case SchemeKind::kLongestMatch:
      return "longest_match";
    case SchemeKind::kMaximalMatch:
      return "maximal_match";
    case SchemeKind::kWord:
      return "word";
    case SchemeKind::kExternal:
      return "external:" + name_;
  }
  return "unknown";
}

ParallelCorpus ParallelCorpus::from_sides(std::vector<SegmentedLine> source,
                                          std::vector<SegmentedLine> target) {
  if (source.size() != target.size()) {
    throw DataError("parallel sides differ in length: " +
                    std::to_string(source.size()) + " source vs " +
                    std::to_string(target.size()) + " target lines");
  }
  ParallelCorpus corpus;
  corpus.pairs_.reserve(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    corpus.add(std::move(source[i]), std::move(target[i]));
  }
  return corpus;
}

void ParallelCorpus::add(SegmentedLine source, SegmentedLine target) {
  pairs_.push_back({std::move(source), std::move(target)});
}

std::vector<SegmentedLine> ParallelCorpus::side(Side which) const {
  std::vector<SegmentedLine> out;
  out.reserve(pairs_.size());
  for (const SentencePair& pair : pairs_) {
    out.push_back(which == Side::kSource ? pair.source : pair.target);
  }
  return out;
}

std::string sentinel_encode(std::string_view text) {
  if (text.find(kSentinelUtf8) != std::string_view::npos) {
    throw DataError("input contains the reserved character U+2581");
  }
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == ' ') {
      out.append(kSentinelUtf8);
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string sentinel_decode(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text.compare(pos, kSentinelUtf8.size(), kSentinelUtf8) == 0) {
      out.push_back(' ');
      pos += kSentinelUtf8.size();
    } else {
      out.push_back(text[pos++]);
    }
  }
  return out;
}

std::string detokenize(std::span<const std::string> tokens) {
  std::string joined;
  for (const std::string& token : tokens) joined += token;
  return sentinel_decode(joined);
}

std::string detokenize(const SegmentedLine& line) {
  return detokenize(line.tokens);
}

void validate_tokens(std::span<const std::string> tokens) {
  for (const std::string& token : tokens) {
    if (token.empty()) throw DataError("empty token");
    if (token.find(' ') != std::string::npos) {
      throw DataError("token contains a space: '" + token + "'");
    }
  }
}

std::string join_tokens(std::span<const std::string> tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  if (line.empty()) return tokens;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(' ', start);
    const std::string_view token = line.substr(start, end - start);
    if (token.empty()) throw DataError("empty token (stray space)");
    tokens.emplace_back(token);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return tokens;
}

std::vector<std::string> read_text_lines(std::istream& in,
                                         std::string_view origin) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!utf8::is_valid(line)) {
      throw DataError(at_line(origin, lines.size() + 1) + "invalid UTF-8");
    }
    lines.push_back(std::move(line));
  }
  if (in.bad()) throw DataError(std::string(origin) + ": read error");
  return lines;
}

std::vector<std::string> read_corpus(std::istream& in,
                                     std::string_view origin) {
  std::vector<std::string> lines = read_text_lines(in, origin);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].find('\r') != std::string::npos) {
      throw DataError(at_line(origin, i + 1) + "carriage return in line");
    }
    if (lines[i].find(kSentinelUtf8) != std::string::npos) {
      throw DataError(at_line(origin, i + 1) +
                      "reserved character U+2581 in raw input");
    }
  }
  return lines;
}

std::vector<std::string> load_corpus(const std::filesystem::path& path) {
  std::ifstream in = open_for_read(path);
  return read_corpus(in, path.string());
}

std::vector<SegmentedLine> read_segmented(std::istream& in,
                                          std::string_view origin,
                                          const SchemeId& scheme) {
  std::vector<std::string> lines = read_text_lines(in, origin);
  std::vector<SegmentedLine> corpus;
  corpus.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      corpus.push_back({split_tokens(lines[i]), scheme});
    } catch (const DataError& e) {
      throw DataError(at_line(origin, i + 1) + e.what());
    }
  }
  return corpus;
}

std::vector<SegmentedLine> load_segmented(const std::filesystem::path& path,
                                          const SchemeId& scheme) {
  std::ifstream in = open_for_read(path);
  return read_segmented(in, path.string(), scheme);
}

void write_segmented(std::span<const SegmentedLine> corpus, std::ostream& out) {
  for (const SegmentedLine& line : corpus) {
    out << join_tokens(line.tokens) << '\n';
  }
}

void save_segmented(std::span<const SegmentedLine> corpus,
                    const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  write_segmented(corpus, out);
  out.flush();
  check_written(out, path);
}

void write_lines(std::span<const std::string> lines, std::ostream& out) {
  for (const std::string& line : lines) out << line << '\n';
}

}  // namespace segcomb
