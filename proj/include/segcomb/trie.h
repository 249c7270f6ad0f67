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

#ifndef SEGCOMB_TRIE_H_
#define SEGCOMB_TRIE_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace segcomb {

// Code-point trie over a word list.
class TrieDictionary {
 public:
  TrieDictionary() = default;

  static TrieDictionary from_words(std::span<const std::string> words);

  // Adds a UTF-8 word; duplicates are ignored. Throws DataError on an empty
  // word or invalid UTF-8.
  void insert(std::string_view word);
  bool contains(std::string_view word) const;

  // Code-point lengths of every word that starts at text[pos], shortest
  // first. When `probes` is given it is incremented once per child lookup.
  std::vector<std::size_t> prefix_lengths(std::u32string_view text,
                                          std::size_t pos,
                                          std::size_t* probes = nullptr) const;

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::size_t max_word_len() const { return max_word_len_; }

 private:
  struct Node {
    std::map<char32_t, int> children;
    bool terminal = false;
  };

  int find(std::u32string_view word) const;

  std::vector<Node> nodes_{1};
  std::size_t size_ = 0;
  std::size_t max_word_len_ = 0;
};

// One word per line; empty lines are skipped, duplicates ignored. Spaces in
// entries are sentinel-encoded so they match encoded input.
TrieDictionary read_dictionary(std::istream& in, std::string_view origin);
TrieDictionary load_dictionary(const std::filesystem::path& path);

}  // namespace segcomb

#endif  // SEGCOMB_TRIE_H_
