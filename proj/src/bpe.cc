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

#include "segcomb/bpe.h"

#include <cassert>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <tuple>
#include <unordered_set>
#include <utility>

#include "segcomb/error.h"
#include "segcomb/utf8.h"

namespace segcomb {
namespace {

constexpr std::string_view kHeaderMagic = "#segcomb merges v1";

std::uint64_t pair_key(int left, int right) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(left)) << 32) |
         static_cast<std::uint32_t>(right);
}

int key_left(std::uint64_t key) { return static_cast<int>(key >> 32); }
int key_right(std::uint64_t key) {
  return static_cast<int>(key & 0xFFFFFFFFu);
}

void check_encoded(std::string_view line) {
  if (!utf8::is_valid(line)) throw DataError("line is not valid UTF-8");
  if (line.find(' ') != std::string_view::npos) {
    throw DataError("line contains a literal space; sentinel-encode it first");
  }
}

// Splits a sentinel-encoded line into words. Always returns at least one
// (possibly empty) word.
std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(kSentinelUtf8, start);
    words.push_back(line.substr(start, end - start));
    if (end == std::string_view::npos) break;
    start = end + kSentinelUtf8.size();
  }
  return words;
}

// Turns one word's symbols (last one ending in the marker) into output
// tokens and appends them to `out`.
void render_word(std::vector<std::string> symbols, bool last_word,
                 std::vector<std::string>* out) {
  assert(!symbols.empty());
  std::string& tail = symbols.back();
  assert(tail.ends_with(kEndOfWord));
  tail.resize(tail.size() - kEndOfWord.size());
  if (!last_word) tail.append(kSentinelUtf8);
  for (std::string& symbol : symbols) {
    if (!symbol.empty()) out->push_back(std::move(symbol));
  }
}

class Learner {
 public:
  Learner(std::span<const std::string> corpus, const BpeOptions& options)
      : options_(options), queue_(EntryLess{&vocab_}) {
    build_units(corpus);
    count_initial_pairs();
  }

  BpeLearnResult run(bool keep_segmentations) {
    std::vector<MergePair> merges;
    std::vector<int> stamp(units_.size(), -1);
    std::unordered_map<std::uint64_t, std::int64_t> delta;
    for (int iter = 0; iter < options_.n_merges; ++iter) {
      if (queue_.empty()) break;
      const Entry best = *queue_.begin();
      if (best.count < options_.min_frequency) break;

      const int left = best.left;
      const int right = best.right;
      const int merged = intern(vocab_[left] + vocab_[right]);
      merges.push_back({vocab_[left], vocab_[right], iter});

      const std::uint64_t key = pair_key(left, right);
      std::vector<int> candidates = std::move(where_[key]);
      where_.erase(key);
      delta.clear();
      for (int unit : candidates) {
        if (stamp[unit] == iter) continue;
        stamp[unit] = iter;
        merge_in_unit(unit, left, right, merged, &delta);
      }
      for (const auto& [pair, change] : delta) {
        if (change != 0) adjust_count(pair, change);
      }
      assert(!counts_.contains(key));
    }

    BpeLearnResult result{
        MergeTable(options_.mode, options_.n_merges, std::move(merges)), {}};
    if (keep_segmentations) result.segmentations = render_lines();
    return result;
  }

 private:
  struct Unit {
    std::vector<int> symbols;
    std::int64_t weight = 0;
  };

  struct Entry {
    std::int64_t count;
    int left;
    int right;
  };

  // Highest count first, then (left, right) by code-point order. UTF-8 byte
  // order coincides with code-point order.
  struct EntryLess {
    const std::vector<std::string>* vocab;
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.count != b.count) return a.count > b.count;
      if (a.left != b.left) {
        const int c = (*vocab)[a.left].compare((*vocab)[b.left]);
        if (c != 0) return c < 0;
      }
      if (a.right != b.right) {
        return (*vocab)[a.right].compare((*vocab)[b.right]) < 0;
      }
      return false;
    }
  };

  int intern(const std::string& symbol) {
    auto [it, inserted] =
        ids_.try_emplace(symbol, static_cast<int>(vocab_.size()));
    if (inserted) vocab_.push_back(symbol);
    return it->second;
  }

  int add_unit(std::string_view text, bool end_of_word) {
    std::string key(text);
    auto [it, inserted] =
        unit_ids_.try_emplace(std::move(key), static_cast<int>(units_.size()));
    if (inserted) {
      Unit unit;
      for (const std::string& cp : utf8::split_code_points(text)) {
        unit.symbols.push_back(intern(cp));
      }
      if (end_of_word) unit.symbols.push_back(intern(std::string(kEndOfWord)));
      units_.push_back(std::move(unit));
    }
    units_[it->second].weight += 1;
    return it->second;
  }

  void build_units(std::span<const std::string> corpus) {
    line_units_.reserve(corpus.size());
    for (const std::string& line : corpus) {
      check_encoded(line);
      std::vector<int> ids;
      if (options_.mode == BpeMode::kLine) {
        ids.push_back(add_unit(line, false));
      } else {
        for (std::string_view word : split_words(line)) {
          ids.push_back(add_unit(word, true));
        }
      }
      line_units_.push_back(std::move(ids));
    }
  }

  void count_initial_pairs() {
    for (int u = 0; u < static_cast<int>(units_.size()); ++u) {
      const Unit& unit = units_[u];
      for (std::size_t i = 0; i + 1 < unit.symbols.size(); ++i) {
        const std::uint64_t key = pair_key(unit.symbols[i], unit.symbols[i + 1]);
        counts_[key] += unit.weight;
        std::vector<int>& list = where_[key];
        if (list.empty() || list.back() != u) list.push_back(u);
      }
    }
    for (const auto& [key, count] : counts_) {
      queue_.insert({count, key_left(key), key_right(key)});
    }
  }

  void adjust_count(std::uint64_t key, std::int64_t change) {
    auto it = counts_.find(key);
    const std::int64_t old_count = it == counts_.end() ? 0 : it->second;
    const std::int64_t new_count = old_count + change;
    assert(new_count >= 0);
    const int left = key_left(key);
    const int right = key_right(key);
    if (old_count > 0) queue_.erase({old_count, left, right});
    if (new_count > 0) {
      queue_.insert({new_count, left, right});
      if (it == counts_.end()) {
        counts_.emplace(key, new_count);
      } else {
        it->second = new_count;
      }
    } else if (it != counts_.end()) {
      counts_.erase(it);
    }
  }

  // Rewrites one unit and records the pair-count changes. Only pairs that
  // touch a rewritten position change; every other adjacency survives
  // unchanged on both sides.
  void merge_in_unit(int u, int left, int right, int merged,
                     std::unordered_map<std::uint64_t, std::int64_t>* delta) {
    Unit& unit = units_[u];
    const std::vector<int>& old_symbols = unit.symbols;
    const std::size_t n = old_symbols.size();

    std::vector<int> new_symbols;
    std::vector<char> touched(n, 0);
    std::vector<char> fresh;
    new_symbols.reserve(n);
    fresh.reserve(n);
    bool any = false;
    for (std::size_t i = 0; i < n;) {
      if (i + 1 < n && old_symbols[i] == left && old_symbols[i + 1] == right) {
        touched[i] = touched[i + 1] = 1;
        new_symbols.push_back(merged);
        fresh.push_back(1);
        any = true;
        i += 2;
      } else {
        new_symbols.push_back(old_symbols[i]);
        fresh.push_back(0);
        ++i;
      }
    }
    if (!any) return;

    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (touched[j] || touched[j + 1]) {
        (*delta)[pair_key(old_symbols[j], old_symbols[j + 1])] -= unit.weight;
      }
    }
    for (std::size_t k = 0; k + 1 < new_symbols.size(); ++k) {
      if (fresh[k] || fresh[k + 1]) {
        const std::uint64_t key = pair_key(new_symbols[k], new_symbols[k + 1]);
        (*delta)[key] += unit.weight;
        where_[key].push_back(u);
      }
    }
    unit.symbols = std::move(new_symbols);
  }

  std::vector<std::string> unit_strings(int u) const {
    std::vector<std::string> out;
    for (int id : units_[u].symbols) out.push_back(vocab_[id]);
    return out;
  }

  std::vector<std::vector<std::string>> render_lines() const {
    std::vector<std::vector<std::string>> lines;
    lines.reserve(line_units_.size());
    for (const std::vector<int>& ids : line_units_) {
      std::vector<std::string> tokens;
      if (options_.mode == BpeMode::kLine) {
        tokens = unit_strings(ids.front());
      } else {
        for (std::size_t w = 0; w < ids.size(); ++w) {
          render_word(unit_strings(ids[w]), w + 1 == ids.size(), &tokens);
        }
      }
      lines.push_back(std::move(tokens));
    }
    return lines;
  }

  BpeOptions options_;
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, int> ids_;
  std::vector<Unit> units_;
  std::unordered_map<std::string, int> unit_ids_;
  std::vector<std::vector<int>> line_units_;
  std::unordered_map<std::uint64_t, std::int64_t> counts_;
  std::set<Entry, EntryLess> queue_;
  // Units that may contain a pair. Entries can be stale; the merge step
  // rescans each candidate.
  std::unordered_map<std::uint64_t, std::vector<int>> where_;
};

void check_options(const BpeOptions& options) {
  if (options.n_merges < 1) {
    throw UsageError("number of merges must be a positive integer");
  }
  if (options.min_frequency < 2) {
    throw UsageError("minimum pair frequency must be at least 2");
  }
}

int parse_positive(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value <= 0) {
    return -1;
  }
  return value;
}

}  // namespace

std::string_view to_string(BpeMode mode) {
  return mode == BpeMode::kLine ? "line" : "word";
}

BpeMode parse_bpe_mode(std::string_view name) {
  if (name == "line") return BpeMode::kLine;
  if (name == "word") return BpeMode::kWord;
  throw UsageError("unknown BPE mode '" + std::string(name) +
                   "' (expected line or word)");
}

MergeTable::MergeTable(BpeMode mode, int n_requested,
                       std::vector<MergePair> merges)
    : mode_(mode), n_requested_(n_requested), merges_(std::move(merges)) {
  if (n_requested_ < 1) throw DataError("requested merge count must be >= 1");
  if (merges_.size() > static_cast<std::size_t>(n_requested_)) {
    throw DataError("merge table holds more merges than requested");
  }
  std::set<std::pair<std::string_view, std::string_view>> seen;
  for (std::size_t i = 0; i < merges_.size(); ++i) {
    const MergePair& pair = merges_[i];
    if (pair.rank != static_cast<int>(i)) {
      throw DataError("merge ranks must be contiguous from 0");
    }
    if (pair.left.empty() || pair.right.empty()) {
      throw DataError("merge " + std::to_string(i) + " has an empty side");
    }
    if (!seen.emplace(pair.left, pair.right).second) {
      throw DataError("duplicate merge (" + pair.left + ", " + pair.right + ")");
    }
  }
}

MergeTable learn_bpe(std::span<const std::string> corpus,
                     const BpeOptions& options) {
  check_options(options);
  return Learner(corpus, options).run(false).table;
}

BpeLearnResult learn_bpe_detailed(std::span<const std::string> corpus,
                                  const BpeOptions& options) {
  check_options(options);
  return Learner(corpus, options).run(true);
}

BpeApplier::BpeApplier(MergeTable table) : table_(std::move(table)) {
  const auto intern = [this](const std::string& symbol) {
    auto [it, inserted] =
        ids_.try_emplace(symbol, static_cast<int>(vocab_.size()));
    if (inserted) vocab_.push_back(symbol);
    return it->second;
  };
  for (const MergePair& pair : table_.merges()) {
    const int left = intern(pair.left);
    const int right = intern(pair.right);
    const int merged = intern(pair.merged());
    merges_.emplace(pair_key(left, right), MergeInfo{pair.rank, merged});
  }
}

std::vector<std::string> BpeApplier::apply_unit(std::string_view text,
                                                bool end_of_word) const {
  std::vector<std::string> symbols = utf8::split_code_points(text);
  if (end_of_word) symbols.emplace_back(kEndOfWord);
  const int n = static_cast<int>(symbols.size());
  if (n < 2 || merges_.empty()) return symbols;

  std::vector<int> id(n), prev(n), next(n);
  std::vector<char> alive(n, 1);
  for (int i = 0; i < n; ++i) {
    const auto it = ids_.find(symbols[i]);
    id[i] = it == ids_.end() ? -1 : it->second;
    prev[i] = i - 1;
    next[i] = i + 1 < n ? i + 1 : -1;
  }

  // (rank, position, left id, right id); smallest rank first, then leftmost.
  using Candidate = std::tuple<int, int, int, int>;
  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> heap;
  const auto push = [&](int pos) {
    if (pos < 0 || next[pos] < 0) return;
    const int l = id[pos];
    const int r = id[next[pos]];
    if (l < 0 || r < 0) return;
    const auto it = merges_.find(pair_key(l, r));
    if (it != merges_.end()) heap.emplace(it->second.rank, pos, l, r);
  };
  for (int i = 0; i + 1 < n; ++i) push(i);

  int current_rank = -1;
  while (!heap.empty()) {
    const auto [rank, pos, l, r] = heap.top();
    heap.pop();
    // Strict replay: a pair whose rank has already been passed never fires.
    if (rank < current_rank) continue;
    if (!alive[pos] || id[pos] != l) continue;
    const int right_pos = next[pos];
    if (right_pos < 0 || id[right_pos] != r) continue;

    current_rank = rank;
    id[pos] = merges_.at(pair_key(l, r)).merged;
    alive[right_pos] = 0;
    next[pos] = next[right_pos];
    if (next[pos] >= 0) prev[next[pos]] = pos;
    push(prev[pos]);
    push(pos);
  }

  std::vector<std::string> out;
  for (int i = 0; i != -1; i = next[i]) {
    out.push_back(id[i] >= 0 ? vocab_[id[i]] : std::move(symbols[i]));
  }
  return out;
}

SegmentedLine BpeApplier::apply(std::string_view line) const {
  check_encoded(line);
  SegmentedLine result{{}, SchemeId::bpe(table_.n_requested())};
  if (table_.mode() == BpeMode::kLine) {
    result.tokens = apply_unit(line, false);
    return result;
  }
  const std::vector<std::string_view> words = split_words(line);
  for (std::size_t w = 0; w < words.size(); ++w) {
    render_word(apply_unit(words[w], true), w + 1 == words.size(),
                &result.tokens);
  }
  return result;
}

std::vector<SegmentedLine> BpeApplier::apply_all(
    std::span<const std::string> lines) const {
  std::vector<SegmentedLine> out;
  out.reserve(lines.size());
  const SchemeId scheme = SchemeId::bpe(table_.n_requested());
  std::unordered_map<std::string_view, std::vector<std::string>> cache;
  for (const std::string& line : lines) {
    check_encoded(line);
    SegmentedLine result{{}, scheme};
    if (table_.mode() == BpeMode::kLine) {
      auto it = cache.find(line);
      if (it == cache.end()) it = cache.emplace(line, apply_unit(line, false)).first;
      result.tokens = it->second;
    } else {
      const std::vector<std::string_view> words = split_words(line);
      for (std::size_t w = 0; w < words.size(); ++w) {
        auto it = cache.find(words[w]);
        if (it == cache.end()) {
          it = cache.emplace(words[w], apply_unit(words[w], true)).first;
        }
        render_word(it->second, w + 1 == words.size(), &result.tokens);
      }
    }
    out.push_back(std::move(result));
  }
  return out;
}

SegmentedLine apply_bpe(std::string_view line, const MergeTable& table) {
  return BpeApplier(table).apply(line);
}

void write_merge_table(const MergeTable& table, std::ostream& out) {
  out << kHeaderMagic << " mode=" << to_string(table.mode())
      << " requested=" << table.n_requested() << '\n';
  for (const MergePair& pair : table.merges()) {
    out << pair.left << ' ' << pair.right << '\n';
  }
}

void save_merge_table(const MergeTable& table,
                      const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  write_merge_table(table, out);
  out.flush();
  if (!out) throw DataError("failed writing " + path.string());
}

MergeTable read_merge_table(std::istream& in, std::string_view origin) {
  const auto fail = [&](std::size_t line_no, const std::string& what) {
    return DataError(std::string(origin) + ":" + std::to_string(line_no) +
                     ": " + what);
  };

  std::string line;
  if (!std::getline(in, line)) throw fail(1, "missing merge-table header");
  const std::string_view header = line;
  if (!header.starts_with(kHeaderMagic)) {
    throw fail(1, "missing merge-table header");
  }
  std::string_view rest = header.substr(kHeaderMagic.size());
  constexpr std::string_view kMode = " mode=";
  constexpr std::string_view kRequested = " requested=";
  if (!rest.starts_with(kMode)) throw fail(1, "malformed header: no mode");
  rest.remove_prefix(kMode.size());
  const std::size_t space = rest.find(' ');
  if (space == std::string_view::npos) throw fail(1, "malformed header");
  BpeMode mode;
  const std::string_view mode_name = rest.substr(0, space);
  if (mode_name == "line") {
    mode = BpeMode::kLine;
  } else if (mode_name == "word") {
    mode = BpeMode::kWord;
  } else {
    throw fail(1, "malformed header: unknown mode '" + std::string(mode_name) +
                      "'");
  }
  rest.remove_prefix(space);
  if (!rest.starts_with(kRequested)) {
    throw fail(1, "malformed header: no requested count");
  }
  rest.remove_prefix(kRequested.size());
  const int requested = parse_positive(rest);
  if (requested < 0) throw fail(1, "malformed header: bad requested count");

  std::vector<MergePair> merges;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!utf8::is_valid(line)) throw fail(line_no, "invalid UTF-8");
    const std::size_t sep = line.find(' ');
    if (sep == std::string::npos || line.find(' ', sep + 1) != std::string::npos) {
      throw fail(line_no, "expected exactly one space separator");
    }
    if (sep == 0 || sep + 1 == line.size()) {
      throw fail(line_no, "empty merge side");
    }
    merges.push_back({line.substr(0, sep), line.substr(sep + 1),
                      static_cast<int>(merges.size())});
  }
  try {
    return MergeTable(mode, requested, std::move(merges));
  } catch (const DataError& e) {
    throw DataError(std::string(origin) + ": " + e.what());
  }
}

MergeTable load_merge_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string() + " for reading");
  return read_merge_table(in, path.string());
}

}  // namespace segcomb
