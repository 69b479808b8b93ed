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

#ifndef MORPHOSEG_DECODER_HPP
#define MORPHOSEG_DECODER_HPP

// Minimum-cost segmentation of arbitrary words against a frozen lexicon.
//
// A known morph m costs -log2(count(m) / N). Any other substring is spelled
// out under the lexicon's character distribution with add-one smoothing
// over the observed alphabet, the word's own characters and the end marker,
// plus a flat penalty per unknown morph.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "morphoseg/errors.hpp"
#include "morphoseg/model.hpp"
#include "morphoseg/segmentation.hpp"
#include "morphoseg/utf8.hpp"

namespace morphoseg {

inline constexpr double kDefaultUnknownPenaltyBits = 20.0;

/// Per-scalar code lengths for spelling unknown substrings of one word.
class UnknownCharModel {
 public:
  UnknownCharModel(const MorphLexicon& lex, std::u32string_view word_chars) {
    std::set<char32_t> alphabet;
    for (const auto& [c, n] : lex.char_counts()) alphabet.insert(c);
    alphabet.insert(word_chars.begin(), word_chars.end());
    alphabet.insert(kEndMarker);
    denominator_ = static_cast<double>(lex.char_total()) + static_cast<double>(alphabet.size());
    lex_ = &lex;
  }

  double bits(char32_t c) const {
    return -std::log2((static_cast<double>(lex_->char_count(c)) + 1.0) / denominator_);
  }

  double end_bits() const { return bits(kEndMarker); }

 private:
  const MorphLexicon* lex_ = nullptr;
  double denominator_ = 1.0;
};

inline Segmentation viterbi_segment(std::string_view word, const MorphLexicon& lex,
                                    double unknown_penalty_bits = kDefaultUnknownPenaltyBits) {
  if (word.empty()) throw InputError("viterbi_segment: empty word");
  if (lex.empty()) throw ModelStateError("viterbi_segment: empty lexicon");

  const std::u32string chars = utf8::decode(word);
  const std::vector<std::size_t> offsets = utf8::scalar_offsets(word);
  const std::size_t len = chars.size();
  const UnknownCharModel unknown(lex, chars);
  const double log2_total = std::log2(static_cast<double>(lex.total_tokens()));

  // spell[i] = code length of chars[0..i) under the unknown-character model.
  std::vector<double> spell(len + 1, 0.0);
  for (std::size_t i = 0; i < len; ++i) spell[i + 1] = spell[i] + unknown.bits(chars[i]);
  const double unknown_fixed = unknown.end_bits() + unknown_penalty_bits;

  struct Cell {
    double bits = INFINITY;
    std::size_t morphs = 0;
    std::vector<std::size_t> starts;
  };
  std::vector<Cell> best(len + 1);
  best[0].bits = 0.0;

  for (std::size_t to = 1; to <= len; ++to) {
    for (std::size_t from = 0; from < to; ++from) {
      const Cell& prev = best[from];
      const std::string_view piece = word.substr(offsets[from], offsets[to] - offsets[from]);
      const std::int64_t n = lex.count(piece);
      const double arc = n > 0 ? log2_total - std::log2(static_cast<double>(n))
                               : spell[to] - spell[from] + unknown_fixed;
      const double bits = prev.bits + arc;
      Cell& cell = best[to];
      const double slack = 1e-12 * std::max(1.0, std::abs(bits));
      bool take = !std::isfinite(cell.bits) || bits < cell.bits - slack;
      if (!take && bits <= cell.bits + slack) {
        // Tie: fewer morphs, then leftmost boundaries.
        if (prev.morphs + 1 != cell.morphs) {
          take = prev.morphs + 1 < cell.morphs;
        } else {
          std::vector<std::size_t> starts = prev.starts;
          starts.push_back(from);
          take = starts < cell.starts;
        }
      }
      if (take) {
        cell.bits = bits;
        cell.morphs = prev.morphs + 1;
        cell.starts = prev.starts;
        cell.starts.push_back(from);
      }
    }
  }

  Segmentation seg;
  seg.word = std::string(word);
  seg.cost_bits = best[len].bits;
  const auto& starts = best[len].starts;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const std::size_t from = starts[i];
    const std::size_t to = i + 1 < starts.size() ? starts[i + 1] : len;
    seg.morphs.emplace_back(word.substr(offsets[from], offsets[to] - offsets[from]));
  }
  return seg;
}

struct BatchItem {
  std::size_t index = 0;
  std::optional<Segmentation> segmentation;
  std::string error;  // set when segmentation is empty
};

/// Segments every word independently; a failing word is reported in its
/// own slot and the rest of the batch still runs. Output order matches
/// input order for any worker count.
inline std::vector<BatchItem> segment_batch(const std::vector<std::string>& words,
                                            const MorphLexicon& lex,
                                            double unknown_penalty_bits = kDefaultUnknownPenaltyBits,
                                            unsigned workers = 1) {
  std::vector<BatchItem> out(words.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      out[i].index = i;
      try {
        out[i].segmentation = viterbi_segment(words[i], lex, unknown_penalty_bits);
      } catch (const std::exception& e) {
        out[i].error = e.what();
      }
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(words.size())));
  if (workers <= 1) {
    work(0, words.size());
    return out;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (words.size() + workers - 1) / workers;
  for (std::size_t begin = 0; begin < words.size(); begin += chunk) {
    pool.emplace_back(work, begin, std::min(words.size(), begin + chunk));
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace morphoseg

#endif  // MORPHOSEG_DECODER_HPP
