// Copyright 2026 The morphoseg Authors
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

#ifndef MORPHOSEG_CLI_HPP
#define MORPHOSEG_CLI_HPP

// `morphoseg` command line: train, segment, stats, eval, synth.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "morphoseg/analysis.hpp"
#include "morphoseg/corpus.hpp"
#include "morphoseg/decoder.hpp"
#include "morphoseg/errors.hpp"
#include "morphoseg/evaluation.hpp"
#include "morphoseg/model.hpp"
#include "morphoseg/segmentation.hpp"
#include "morphoseg/synthgen.hpp"
#include "morphoseg/trainer.hpp"

namespace morphoseg::cli {

namespace detail {

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  return in;
}

template <typename Writer>
void write_file(const std::string& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  writer(out);
  out.flush();
  if (!out) throw Error("write to '" + path + "' failed");
}

// True when every non-blank line is `digits<TAB>form`.
inline bool looks_like_word_list(std::string_view text) {
  bool any = false;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == 0 || tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) {
      return false;
    }
    for (char c : line.substr(0, tab)) {
      if (c < '0' || c > '9') return false;
    }
    any = true;
  }
  return any;
}

inline CorpusSummary load_corpus(const std::string& path, const std::string& format) {
  const std::string text = slurp(path);
  if (format == "wordlist" || (format == "auto" && looks_like_word_list(text))) {
    std::istringstream in(text);
    return read_word_list(in, path);
  }
  try {
    return count_words(tokenize(text));
  } catch (const DecodingError& e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace detail

/// Runs one command. `args[0]` is the program name. Data goes to files or
/// `out`; diagnostics go to `err`, one line each.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"Unsupervised morphological segmentation by minimum description length", "morphoseg"};
  app.require_subcommand(1);

  // train
  std::string corpus_path, corpus_format = "auto", model_out, seg_out, trace_out;
  std::uint64_t seed = 0;
  std::string count_mode = "tokens";
  double threshold = 0.0;
  int max_epochs = 15;
  auto* train_cmd = app.add_subcommand("train", "Learn a morph lexicon from a corpus");
  train_cmd->add_option("--corpus", corpus_path, "Raw UTF-8 text or count<TAB>form word list")->required();
  train_cmd->add_option("--corpus-format", corpus_format, "auto, text or wordlist")
      ->check(CLI::IsMember({"auto", "text", "wordlist"}));
  train_cmd->add_option("--model-out", model_out, "Model file to write")->required();
  train_cmd->add_option("--seg-out", seg_out, "Segmentation table of the training words");
  train_cmd->add_option("--seed", seed, "Seed for the word visiting order");
  train_cmd->add_option("--count-mode", count_mode, "tokens or types")
      ->check(CLI::IsMember({"tokens", "types"}));
  auto* threshold_opt = train_cmd->add_option("--threshold", threshold,
                                              "Per-epoch improvement floor in bits (default 0.005 per type)")
                            ->check(CLI::PositiveNumber);
  train_cmd->add_option("--max-epochs", max_epochs, "Epoch limit")->check(CLI::Range(1, 1000000));
  train_cmd->add_option("--trace-out", trace_out, "epoch<TAB>total_bits trace file");

  // segment
  std::string model_path, words_path, seg_path;
  double penalty = kDefaultUnknownPenaltyBits;
  bool with_cost = false;
  auto* segment_cmd = app.add_subcommand("segment", "Segment words with a trained model");
  segment_cmd->add_option("--model", model_path, "Model file")->required();
  segment_cmd->add_option("--words", words_path, "One word per line")->required();
  segment_cmd->add_option("--out", seg_path, "Segmentation table to write")->required();
  segment_cmd->add_option("--penalty", penalty, "Extra bits per unknown morph")
      ->check(CLI::NonNegativeNumber);
  segment_cmd->add_flag("--with-cost", with_cost, "Append a cost_bits column");

  // stats
  std::string stats_corpus, stats_corpus_format = "auto", segmentations_path, markers_path;
  std::size_t top = 10;
  bool flag_loans = false;
  auto* stats_cmd = app.add_subcommand("stats", "Corpus frequency and affix tables");
  stats_cmd->add_option("--corpus", stats_corpus, "Raw UTF-8 text or word list")->required();
  stats_cmd->add_option("--corpus-format", stats_corpus_format, "auto, text or wordlist")
      ->check(CLI::IsMember({"auto", "text", "wordlist"}));
  stats_cmd->add_option("--top", top, "Rows in the frequency table")->check(CLI::Range(1, 1000000000));
  stats_cmd->add_option("--segmentations", segmentations_path, "Segmentation table for affix tables");
  stats_cmd->add_option("--markers", markers_path, "suffix<TAB>label case-marker file");
  stats_cmd->add_flag("--flag-loans", flag_loans, "List words that look borrowed");

  // eval
  std::string gold_path, pred_path;
  bool detail_flag = false;
  auto* eval_cmd = app.add_subcommand("eval", "Boundary precision/recall against gold");
  eval_cmd->add_option("--gold", gold_path, "Gold segmentation table")->required();
  eval_cmd->add_option("--pred", pred_path, "Predicted segmentation table")->required();
  eval_cmd->add_flag("--detail", detail_flag, "Per-word boundary detail");

  // synth
  std::string roots_path, slots_path, synth_corpus_out, gold_out;
  std::int64_t budget = 0;
  std::uint64_t synth_seed = 0;
  double zipf = 1.1;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic corpus with gold segmentations");
  synth_cmd->add_option("--roots", roots_path, "One root per line")->required();
  synth_cmd->add_option("--slots", slots_path, "One suffix slot per line, tab-separated, ∅ for none")
      ->required();
  synth_cmd->add_option("--budget", budget, "Total token count")->required()->check(CLI::PositiveNumber);
  synth_cmd->add_option("--seed", synth_seed, "Generator seed")->required();
  synth_cmd->add_option("--zipf", zipf, "Zipf exponent")->check(CLI::PositiveNumber);
  synth_cmd->add_option("--corpus-out", synth_corpus_out, "Word list to write")->required();
  synth_cmd->add_option("--gold-out", gold_out, "Gold segmentation table to write")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    for (char& c : msg) c = c == '\n' ? ' ' : c;
    err << "morphoseg: " << msg << '\n';
    return 2;
  }

  try {
    if (*train_cmd) {
      TrainConfig config;
      config.seed = seed;
      config.max_epochs = max_epochs;
      config.count_mode = count_mode == "types" ? CountMode::kTypes : CountMode::kTokens;
      if (threshold_opt->count() > 0) config.convergence_threshold_bits = threshold;
      const CorpusSummary summary = detail::load_corpus(corpus_path, corpus_format);
      const TrainResult result = train(summary, config);
      detail::write_file(model_out, [&](std::ostream& o) { write_model(o, result.state.lexicon); });
      if (!seg_out.empty()) {
        detail::write_file(seg_out, [&](std::ostream& o) { write_segmentation_table(o, result.state.table); });
      }
      if (!trace_out.empty()) {
        detail::write_file(trace_out, [&](std::ostream& o) { write_trace(o, result.trace); });
      }
      err << "morphoseg: trained on " << summary.type_count << " types in " << result.trace.size()
          << " epochs, " << result.state.lexicon.type_count() << " morphs, total "
          << format_bits(result.trace.back()) << " bits\n";
      return 0;
    }

    if (*segment_cmd) {
      auto model_in = detail::open_in(model_path);
      const MorphLexicon lex = read_model(model_in, model_path);
      std::vector<std::string> words;
      std::vector<std::size_t> linenos;
      std::vector<std::string> bad;
      auto words_in = detail::open_in(words_path);
      std::string line;
      for (std::size_t lineno = 1; std::getline(words_in, line); ++lineno) {
        morphoseg::detail::strip_cr(line);
        if (line.empty()) continue;
        std::vector<std::string> tokens;
        try {
          tokens = tokenize(line);
        } catch (const DecodingError& e) {
          bad.push_back(words_path + ":" + std::to_string(lineno) + ": " + e.what());
          continue;
        }
        if (tokens.size() != 1) {
          bad.push_back(words_path + ":" + std::to_string(lineno) + ": expected exactly one word, got " +
                        std::to_string(tokens.size()));
          continue;
        }
        words.push_back(std::move(tokens.front()));
        linenos.push_back(lineno);
      }
      const auto results = segment_batch(words, lex, penalty);
      detail::write_file(seg_path, [&](std::ostream& o) {
        for (const auto& item : results) {
          if (!item.segmentation) {
            bad.push_back(words_path + ":" + std::to_string(linenos[item.index]) + ": " + item.error);
            continue;
          }
          const Segmentation& s = *item.segmentation;
          write_segmentation_line(o, s.word, s.morphs,
                                  with_cost ? std::optional<double>(s.cost_bits) : std::nullopt);
        }
      });
      for (const auto& b : bad) err << "morphoseg: " << b << '\n';
      return bad.empty() ? 0 : 1;
    }

    if (*stats_cmd) {
      if (flag_loans && segmentations_path.empty()) throw InputError("--flag-loans needs --segmentations");
      if (!markers_path.empty() && segmentations_path.empty()) {
        throw InputError("--markers needs --segmentations");
      }
      const CorpusSummary summary = detail::load_corpus(stats_corpus, stats_corpus_format);
      out << "# corpus\n";
      out << "tokens\t" << summary.token_count << '\n';
      out << "types\t" << summary.type_count << '\n';
      out << "\n# top frequent words\n";
      write_top_frequent(out, top_frequent(summary, top));
      if (!segmentations_path.empty()) {
        auto seg_in = detail::open_in(segmentations_path);
        const SegmentationTable table = read_segmentation_table(seg_in, segmentations_path);
        CaseMarkers markers = default_case_markers();
        if (!markers_path.empty()) {
          auto markers_in = detail::open_in(markers_path);
          markers = read_case_markers(markers_in, markers_path);
        }
        out << "\n# affix distribution\n";
        write_affix_histogram(out, table);
        out << "\n# case markers\n";
        write_case_markers(out, tag_case_markers(table, markers));
        if (flag_loans) {
          out << "\n# loan words\n";
          write_loan_flags(out, flag_loan_words(table));
        }
      }
      return 0;
    }

    if (*eval_cmd) {
      auto gold_in = detail::open_in(gold_path);
      const SegmentationTable gold = read_segmentation_table(gold_in, gold_path);
      auto pred_in = detail::open_in(pred_path);
      const SegmentationTable pred = read_segmentation_table(pred_in, pred_path);
      write_eval_report(out, evaluate(pred, gold), detail_flag);
      return 0;
    }

    if (*synth_cmd) {
      GrammarSpec spec;
      auto roots_in = detail::open_in(roots_path);
      spec.roots = read_roots(roots_in, roots_path);
      auto slots_in = detail::open_in(slots_path);
      spec.suffix_slots = read_slots(slots_in, slots_path);
      spec.word_budget = budget;
      spec.seed = synth_seed;
      spec.zipf_exponent = zipf;
      const SynthCorpus synth = generate(spec);
      detail::write_file(synth_corpus_out, [&](std::ostream& o) { write_word_list(o, synth.corpus); });
      detail::write_file(gold_out, [&](std::ostream& o) { write_segmentation_table(o, synth.gold); });
      return 0;
    }
  } catch (const std::exception& e) {
    err << "morphoseg: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace morphoseg::cli

#endif  // MORPHOSEG_CLI_HPP
