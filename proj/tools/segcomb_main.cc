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

// segcomb: build multi-segmentation training data and score translations.
//
//   segcomb learn-bpe --input thai.txt --merges 5000 --output bpe5000.merges
//   segcomb apply-bpe --merges bpe5000.merges --input thai.txt --output out.txt
//   segcomb segment --method char --input thai.txt --output char.txt
//   segcomb combine --source en.bpe --target char.txt --target out.txt
//       --out-source train.en --out-target train.th --manifest train.tsv
//   segcomb chrf --hyp hyp.txt --ref ref.txt
//   segcomb stats --input train.th
//
// Exit status: 0 success, 1 usage error, 2 data error, 3 external tool error.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "segcomb/bpe.h"
#include "segcomb/chrf.h"
#include "segcomb/combiner.h"
#include "segcomb/corpus.h"
#include "segcomb/error.h"
#include "segcomb/segmenters.h"
#include "segcomb/trie.h"

namespace {

using namespace segcomb;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitExternal = 3;

std::vector<std::string> read_raw(const std::string& path) {
  if (path == "-") return read_corpus(std::cin, "<stdin>");
  return load_corpus(path);
}

std::vector<std::string> read_plain(const std::string& path) {
  if (path == "-") return read_text_lines(std::cin, "<stdin>");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path + " for reading");
  return read_text_lines(in, path);
}

std::vector<SegmentedLine> read_tokens(const std::string& path,
                                       const SchemeId& scheme = {}) {
  if (path == "-") return read_segmented(std::cin, "<stdin>", scheme);
  return load_segmented(path, scheme);
}

std::vector<std::string> encode_all(const std::vector<std::string>& lines,
                                    const std::string& origin) {
  std::vector<std::string> encoded;
  encoded.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      encoded.push_back(sentinel_encode(lines[i]));
    } catch (const DataError& e) {
      throw DataError(origin + ":" + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return encoded;
}

// Writes through `emit` to a file, or to stdout for "-".
void write_output(const std::string& path,
                  const std::function<void(std::ostream&)>& emit) {
  if (path == "-") {
    emit(std::cout);
    std::cout.flush();
    if (!std::cout) throw DataError("failed writing to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open " + path + " for writing");
  emit(out);
  out.flush();
  if (!out) throw DataError("failed writing " + path);
}

// Runs `fn` with per-line context added to DataErrors from the library.
template <typename Fn>
auto with_line_context(const std::string& origin, std::size_t line, Fn&& fn) {
  try {
    return fn();
  } catch (const DataError& e) {
    throw DataError(origin + ":" + std::to_string(line + 1) + ": " + e.what());
  }
}

std::string format_beta(double beta) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%g", beta);
  return buffer;
}

struct LearnArgs {
  std::string input;
  int merges = 0;
  std::string mode = "line";
  int min_freq = 2;
  std::string output;
};

void run_learn(const LearnArgs& args) {
  BpeOptions options;
  options.n_merges = args.merges;
  options.mode = parse_bpe_mode(args.mode);
  options.min_frequency = args.min_freq;
  if (options.n_merges < 1) {
    throw UsageError("--merges must be a positive integer");
  }
  const std::vector<std::string> lines =
      encode_all(read_raw(args.input), args.input);
  const MergeTable table = learn_bpe(lines, options);
  write_output(args.output,
               [&](std::ostream& out) { write_merge_table(table, out); });
  std::cerr << "learned " << table.n_performed() << " of "
            << table.n_requested() << " merges\n";
}

struct ApplyArgs {
  std::string merges;
  std::string input;
  std::string output;
};

void run_apply(const ApplyArgs& args) {
  const BpeApplier applier(load_merge_table(args.merges));
  const std::vector<std::string> lines =
      encode_all(read_raw(args.input), args.input);
  const std::vector<SegmentedLine> segmented = applier.apply_all(lines);
  write_output(args.output,
               [&](std::ostream& out) { write_segmented(segmented, out); });
}

struct SegmentArgs {
  std::string method;
  std::string granularity = "codepoint";
  std::string dict;
  std::string cmd;
  std::string name;
  bool lowercase = false;
  std::string input;
  std::string output;
};

void run_segment(const SegmentArgs& args) {
  const std::vector<std::string> raw = read_raw(args.input);
  std::vector<SegmentedLine> segmented;
  segmented.reserve(raw.size());

  if (args.method == "external") {
    if (args.cmd.empty()) throw UsageError("--method external needs --cmd");
    segmented = external_segment(raw, {args.cmd, args.name});
  } else if (args.method == "word") {
    for (std::size_t i = 0; i < raw.size(); ++i) {
      segmented.push_back(with_line_context(
          args.input, i, [&] { return word_segment(raw[i], args.lowercase); }));
    }
  } else if (args.method == "char") {
    const Granularity granularity = parse_granularity(args.granularity);
    const std::vector<std::string> lines = encode_all(raw, args.input);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      segmented.push_back(with_line_context(
          args.input, i, [&] { return char_segment(lines[i], granularity); }));
    }
  } else if (args.method == "longest" || args.method == "maximal") {
    if (args.dict.empty()) {
      throw UsageError("--method " + args.method + " needs --dict");
    }
    const TrieDictionary dict = load_dictionary(args.dict);
    const std::vector<std::string> lines = encode_all(raw, args.input);
    const bool longest = args.method == "longest";
    for (std::size_t i = 0; i < lines.size(); ++i) {
      segmented.push_back(with_line_context(args.input, i, [&] {
        return longest ? longest_match_segment(lines[i], dict)
                       : maximal_match_segment(lines[i], dict);
      }));
    }
  } else {
    throw UsageError("unknown --method '" + args.method + "'");
  }
  write_output(args.output,
               [&](std::ostream& out) { write_segmented(segmented, out); });
}

struct CombineArgs {
  std::string source;
  std::vector<std::string> targets;
  std::vector<std::string> labels;
  std::string out_source;
  std::string out_target;
  std::string manifest;
};

void run_combine(const CombineArgs& args) {
  if (!args.labels.empty() && args.labels.size() != args.targets.size()) {
    throw UsageError("--label must be given once per --target");
  }
  const std::vector<SegmentedLine> source = read_tokens(args.source);
  std::vector<TargetVariant> variants;
  for (std::size_t i = 0; i < args.targets.size(); ++i) {
    const std::string& path = args.targets[i];
    const SchemeId scheme = SchemeId::external("file").with_label(
        args.labels.empty() ? path : args.labels[i]);
    TargetVariant variant{scheme, read_tokens(path, scheme)};
    if (variant.lines.size() != source.size()) {
      throw DataError("target " + path + " has " +
                      std::to_string(variant.lines.size()) +
                      " lines but source " + args.source + " has " +
                      std::to_string(source.size()));
    }
    variants.push_back(std::move(variant));
  }
  const CombinedCorpus combined = combine(source, variants);
  const std::vector<SegmentedLine> sources = combined.pairs.side(Side::kSource);
  const std::vector<SegmentedLine> targets = combined.pairs.side(Side::kTarget);
  write_output(args.out_source,
               [&](std::ostream& out) { write_segmented(sources, out); });
  write_output(args.out_target,
               [&](std::ostream& out) { write_segmented(targets, out); });
  if (!args.manifest.empty()) {
    write_output(args.manifest, [&](std::ostream& out) {
      write_manifest(combined.manifest, out);
    });
  }
}

struct ChrfArgs {
  std::string hyp;
  std::string ref;
  double beta = 3.0;
  int order = 6;
  std::string whitespace = "strip";
  std::string segments;
};

void run_chrf(const ChrfArgs& args) {
  ChrfOptions options;
  options.beta = args.beta;
  options.max_order = args.order;
  options.whitespace = parse_whitespace_policy(args.whitespace);
  const std::vector<std::string> hyp = read_plain(args.hyp);
  const std::vector<std::string> ref = read_plain(args.ref);
  const ChrfReport report = corpus_chrf(hyp, ref, options);
  char line[64];
  std::snprintf(line, sizeof(line), "%.2f", report.corpus_score);
  std::cout << "chrf" << format_beta(options.beta) << " = " << line << '\n';
  if (!args.segments.empty()) {
    write_output(args.segments, [&](std::ostream& out) {
      out << "segment\tchrf" << format_beta(options.beta) << '\n';
      for (std::size_t i = 0; i < report.segment_scores.size(); ++i) {
        char score[32];
        std::snprintf(score, sizeof(score), "%.4f", report.segment_scores[i]);
        out << i + 1 << '\t' << score << '\n';
      }
    });
  }
}

struct StatsArgs {
  std::string input;
};

void run_stats(const StatsArgs& args) {
  const std::vector<SegmentedLine> corpus = read_tokens(args.input);
  write_stats(compute_stats(corpus), std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-segmentation corpus tools for low-resource MT"};
  app.require_subcommand(1);
  std::function<void()> action;

  LearnArgs learn;
  auto* learn_cmd = app.add_subcommand("learn-bpe", "Learn a BPE merge table");
  learn_cmd->add_option("--input", learn.input, "Raw text, one sentence per line")
      ->required();
  learn_cmd->add_option("--merges", learn.merges, "Number of merge operations")
      ->required();
  learn_cmd->add_option("--mode", learn.mode, "line or word")
      ->check(CLI::IsMember({"line", "word"}));
  learn_cmd->add_option("--min-freq", learn.min_freq,
                        "Stop when the best pair is rarer than this");
  learn_cmd->add_option("--output", learn.output, "Merge table path")->required();
  learn_cmd->callback([&] { action = [&] { run_learn(learn); }; });

  ApplyArgs apply;
  auto* apply_cmd = app.add_subcommand("apply-bpe", "Segment text with a merge table");
  apply_cmd->add_option("--merges", apply.merges, "Merge table path")->required();
  apply_cmd->add_option("--input", apply.input, "Raw text")->required();
  apply_cmd->add_option("--output", apply.output, "Segmented output")->required();
  apply_cmd->callback([&] { action = [&] { run_apply(apply); }; });

  SegmentArgs segment;
  auto* segment_cmd = app.add_subcommand("segment", "Segment text without BPE");
  segment_cmd->add_option("--method", segment.method,
                          "char, longest, maximal, external or word")
      ->required()
      ->check(CLI::IsMember({"char", "longest", "maximal", "external", "word"}));
  segment_cmd->add_option("--granularity", segment.granularity,
                          "codepoint, grapheme or legacy-grapheme")
      ->check(CLI::IsMember({"codepoint", "grapheme", "legacy-grapheme"}));
  segment_cmd->add_option("--dict", segment.dict, "Word list for longest/maximal");
  segment_cmd->add_option("--cmd", segment.cmd, "External segmenter command");
  segment_cmd->add_option("--name", segment.name, "External segmenter name");
  segment_cmd->add_flag("--lowercase", segment.lowercase, "Lowercase (word method)");
  segment_cmd->add_option("--input", segment.input, "Raw text")->required();
  segment_cmd->add_option("--output", segment.output, "Segmented output")
      ->required();
  segment_cmd->callback([&] { action = [&] { run_segment(segment); }; });

  CombineArgs comb;
  auto* combine_cmd = app.add_subcommand(
      "combine", "Append target segmentations into one training set");
  combine_cmd->add_option("--source", comb.source, "Segmented source side")
      ->required();
  combine_cmd->add_option("--target", comb.targets,
                          "Segmented target side; repeat once per variant")
      ->required()
      ->allow_extra_args(false);
  combine_cmd->add_option("--label", comb.labels,
                          "Manifest label for each --target, in order")
      ->allow_extra_args(false);
  combine_cmd->add_option("--out-source", comb.out_source)->required();
  combine_cmd->add_option("--out-target", comb.out_target)->required();
  combine_cmd->add_option("--manifest", comb.manifest, "Block manifest (TSV)");
  combine_cmd->callback([&] { action = [&] { run_combine(comb); }; });

  ChrfArgs chrf;
  auto* chrf_cmd = app.add_subcommand("chrf", "Character n-gram F-score");
  chrf_cmd->add_option("--hyp", chrf.hyp, "Hypothesis lines")->required();
  chrf_cmd->add_option("--ref", chrf.ref, "Reference lines")->required();
  chrf_cmd->add_option("--beta", chrf.beta, "Recall weight");
  chrf_cmd->add_option("--order", chrf.order, "Maximum n-gram order");
  chrf_cmd->add_option("--whitespace", chrf.whitespace, "strip or keep")
      ->check(CLI::IsMember({"strip", "keep"}));
  chrf_cmd->add_option("--segments", chrf.segments, "Per-segment scores (TSV)");
  chrf_cmd->callback([&] { action = [&] { run_chrf(chrf); }; });

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Token statistics of a segmented file");
  stats_cmd->add_option("--input", stats.input, "Segmented text")->required();
  stats_cmd->callback([&] { action = [&] { run_stats(stats); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    action();
  } catch (const UsageError& e) {
    std::cerr << "segcomb: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    std::cerr << "segcomb: " << e.what() << '\n';
    return kExitData;
  } catch (const ExternalError& e) {
    std::cerr << "segcomb: " << e.what() << '\n';
    return kExitExternal;
  }
  return kExitOk;
}
