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

#include "segcomb/trie.h"

#include <algorithm>
#include <fstream>
#include <optional>

#include "segcomb/corpus.h"
#include "segcomb/error.h"
#include "segcomb/utf8.h"

namespace segcomb {

TrieDictionary TrieDictionary::from_words(std::span<const std::string> words) {
  TrieDictionary dict;
  for (const std::string& word : words) dict.insert(word);
  return dict;
}

void TrieDictionary::insert(std::string_view word) {
  if (word.empty()) throw DataError("dictionary words must be non-empty");
  const std::optional<std::u32string> cps = utf8::decode(word);
  if (!cps) throw DataError("dictionary word is not valid UTF-8");
  int node = 0;
  for (char32_t cp : *cps) {
    auto it = nodes_[node].children.find(cp);
    if (it == nodes_[node].children.end()) {
      const int child = static_cast<int>(nodes_.size());
      nodes_[node].children.emplace(cp, child);
      nodes_.emplace_back();
      node = child;
    } else {
      node = it->second;
    }
  }
  if (!nodes_[node].terminal) {
    nodes_[node].terminal = true;
    ++size_;
    max_word_len_ = std::max(max_word_len_, cps->size());
  }
}

int TrieDictionary::find(std::u32string_view word) const {
  int node = 0;
  for (char32_t cp : word) {
    const auto it = nodes_[node].children.find(cp);
    if (it == nodes_[node].children.end()) return -1;
    node = it->second;
  }
  return node;
}

bool TrieDictionary::contains(std::string_view word) const {
  if (word.empty()) return false;
  const std::optional<std::u32string> cps = utf8::decode(word);
  if (!cps) return false;
  const int node = find(*cps);
  return node >= 0 && nodes_[node].terminal;
}

std::vector<std::size_t> TrieDictionary::prefix_lengths(
    std::u32string_view text, std::size_t pos, std::size_t* probes) const {
  std::vector<std::size_t> lengths;
  int node = 0;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (probes != nullptr) ++*probes;
    const auto it = nodes_[node].children.find(text[i]);
    if (it == nodes_[node].children.end()) break;
    node = it->second;
    if (nodes_[node].terminal) lengths.push_back(i - pos + 1);
  }
  return lengths;
}

TrieDictionary read_dictionary(std::istream& in, std::string_view origin) {
  TrieDictionary dict;
  const std::vector<std::string> lines = read_corpus(in, origin);
  for (const std::string& line : lines) {
    if (!line.empty()) dict.insert(sentinel_encode(line));
  }
  return dict;
}

TrieDictionary load_dictionary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string() + " for reading");
  return read_dictionary(in, path.string());
}

}  // namespace segcomb
