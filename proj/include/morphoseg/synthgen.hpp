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

#ifndef MORPHOSEG_SYNTHGEN_HPP
#define MORPHOSEG_SYNTHGEN_HPP

// Synthetic suffixing corpora with known gold segmentations.

#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "morphoseg/corpus.hpp"
#include "morphoseg/errors.hpp"
#include "morphoseg/rng.hpp"
#include "morphoseg/segmentation.hpp"

namespace morphoseg {

struct GrammarSpec {
  std::vector<std::string> roots;
  /// One set per slot, in surface order. An empty string is the null suffix.
  std::vector<std::vector<std::string>> suffix_slots;
  double zipf_exponent = 1.1;
  std::int64_t word_budget = 0;
  std::uint64_t seed = 0;
};

struct SynthCorpus {
  CorpusSummary corpus;
  SegmentationTable gold;
};

namespace detail {

inline void check_piece(const std::string& s, const char* what) {
  utf8::validate(s);
  if (has_separator(s)) throw InputError(std::string("generate: ") + what + " '" + s + "' contains white space or '+'");
}

/// Splits `total` into parts proportional to `weights`, exactly, by
/// largest remainder. Remainder ties go to the lower index.
inline std::vector<std::int64_t> largest_remainder(const std::vector<double>& weights,
                                                   std::int64_t total) {
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  std::vector<std::int64_t> parts(weights.size());
  std::vector<std::pair<double, std::size_t>> remainders;
  std::int64_t assigned = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double quota = static_cast<double>(total) * weights[i] / sum;
    parts[i] = static_cast<std::int64_t>(std::floor(quota));
    assigned += parts[i];
    remainders.emplace_back(quota - static_cast<double>(parts[i]), i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; assigned < total; ++k, ++assigned) ++parts[remainders[k % remainders.size()].second];
  return parts;
}

}  // namespace detail

/// Composes every root with every combination of slot choices, ranks the
/// word types by a seeded shuffle and gives rank r a share of the budget
/// proportional to r^-s on top of one guaranteed token per type.
inline SynthCorpus generate(const GrammarSpec& spec) {
  if (spec.roots.empty()) throw InputError("generate: no roots");
  if (!(spec.zipf_exponent > 0.0)) throw InputError("generate: zipf exponent must be positive");
  for (const auto& r : spec.roots) {
    if (r.empty()) throw InputError("generate: empty root");
    detail::check_piece(r, "root");
  }
  for (const auto& slot : spec.suffix_slots) {
    if (slot.empty()) throw InputError("generate: slot with no choices");
    for (const auto& s : slot) detail::check_piece(s, "suffix");
  }

  std::vector<std::pair<std::string, Morphs>> types;
  std::map<std::string, std::size_t> index;
  for (const auto& root : spec.roots) {
    std::vector<std::size_t> choice(spec.suffix_slots.size(), 0);
    for (;;) {
      Morphs morphs{root};
      for (std::size_t s = 0; s < choice.size(); ++s) {
        const std::string& suffix = spec.suffix_slots[s][choice[s]];
        if (!suffix.empty()) morphs.push_back(suffix);
      }
      std::string word = concatenate(morphs);
      const auto [it, inserted] = index.emplace(word, types.size());
      if (inserted) {
        types.emplace_back(std::move(word), std::move(morphs));
      } else if (types[it->second].second != morphs) {
        throw InputError("generate: '" + word + "' has two different derivations");
      }
      // Odometer over slot choices, last slot fastest.
      std::size_t s = choice.size();
      while (s > 0 && ++choice[s - 1] == spec.suffix_slots[s - 1].size()) choice[--s] = 0;
      if (s == 0) break;
    }
  }

  const auto n_types = static_cast<std::int64_t>(types.size());
  if (spec.word_budget < n_types) {
    throw InputError("generate: budget " + std::to_string(spec.word_budget) + " is below the " +
                     std::to_string(n_types) + " generated word types");
  }

  std::vector<std::size_t> ranked(types.size());
  std::iota(ranked.begin(), ranked.end(), 0);
  SplitMix64 rng(spec.seed);
  shuffle(ranked, rng);

  std::vector<double> weights(types.size());
  for (std::size_t r = 0; r < weights.size(); ++r) {
    weights[r] = std::pow(static_cast<double>(r + 1), -spec.zipf_exponent);
  }
  const auto extra = detail::largest_remainder(weights, spec.word_budget - n_types);

  SynthCorpus out;
  std::vector<WordCount> entries;
  for (std::size_t r = 0; r < ranked.size(); ++r) {
    auto& [word, morphs] = types[ranked[r]];
    entries.push_back({word, 1 + extra[r]});
    out.gold.emplace(word, morphs);
  }
  sort_entries(entries);
  out.corpus.entries = std::move(entries);
  out.corpus.token_count = spec.word_budget;
  out.corpus.type_count = n_types;
  return out;
}

/// One root per line; blank lines ignored.
inline std::vector<std::string> read_roots(std::istream& in, const std::string& source = "roots") {
  std::vector<std::string> roots;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    detail::strip_cr(line);
    if (line.empty()) continue;
    if (line.find('\t') != std::string::npos) throw FormatError(source, lineno, "one root per line");
    try {
      utf8::validate(line);
    } catch (const DecodingError& e) {
      throw FormatError(source, lineno, e.what());
    }
    roots.push_back(line);
  }
  if (roots.empty()) throw FormatError(source, 0, "no roots");
  return roots;
}

/// One slot per line, suffixes separated by tabs. `∅` or an empty field
/// is the null suffix.
inline std::vector<std::vector<std::string>> read_slots(std::istream& in,
                                                        const std::string& source = "slots") {
  std::vector<std::vector<std::string>> slots;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    detail::strip_cr(line);
    if (line.empty()) continue;
    try {
      utf8::validate(line);
    } catch (const DecodingError& e) {
      throw FormatError(source, lineno, e.what());
    }
    std::vector<std::string> slot;
    for (auto field : detail::split_tabs(line)) {
      slot.emplace_back(field == "∅" ? std::string_view() : field);
    }
    slots.push_back(std::move(slot));
  }
  return slots;
}

}  // namespace morphoseg

#endif  // MORPHOSEG_SYNTHGEN_HPP
