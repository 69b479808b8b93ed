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

#ifndef MORPHOSEG_MODEL_HPP
#define MORPHOSEG_MODEL_HPP

// Morph lexicon and its two-part code length.
//
// Corpus cost is the unigram code of the morph tokens:
//     C_corpus = -sum_m count(m) log2(count(m) / N)
//              = N log2 N - sum_m count(m) log2 count(m)
// Lexicon cost spells every morph type with a maximum-likelihood character
// code estimated over the type inventory itself, one end marker per type:
//     C_lexicon = -sum_c n(c) log2(n(c) / T) = T log2 T - sum_c n(c) log2 n(c)
// Both closed forms are maintained incrementally through the two
// sum-of-x-log-x accumulators, so a single add/remove is O(|morph|).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "morphoseg/corpus.hpp"
#include "morphoseg/errors.hpp"
#include "morphoseg/utf8.hpp"

namespace morphoseg {

/// Distinguished end-of-morph symbol. Lies outside the Unicode code space.
inline constexpr char32_t kEndMarker = 0x110000;

inline constexpr std::string_view kModelHeader = "#morphoseg-model v1";

struct CostBreakdown {
  double corpus_cost_bits = 0.0;
  double lexicon_cost_bits = 0.0;
  double total_bits = 0.0;
};

namespace detail {

inline double xlog2x(std::int64_t x) {
  return x <= 0 ? 0.0 : static_cast<double>(x) * std::log2(static_cast<double>(x));
}

// Neumaier compensated sum; keeps drift well below 1e-9 bits over millions
// of add/remove updates.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }
  void reset() { sum_ = comp_ = 0.0; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

}  // namespace detail

using CharCounts = std::map<char32_t, std::int64_t>;

class MorphLexicon {
 public:
  using CountMap = std::unordered_map<std::string, std::int64_t, detail::StringHash, std::equal_to<>>;

  MorphLexicon() = default;

  /// Builds a lexicon from a morph -> count map.
  static MorphLexicon from_counts(const std::map<std::string, std::int64_t>& counts) {
    MorphLexicon lex;
    for (const auto& [morph, count] : counts) lex.add_morph(morph, count);
    return lex;
  }

  bool empty() const { return counts_.empty(); }
  std::size_t type_count() const { return counts_.size(); }
  std::int64_t total_tokens() const { return total_tokens_; }
  std::int64_t char_total() const { return char_total_; }
  const CountMap& morph_counts() const { return counts_; }

  std::int64_t count(std::string_view morph) const {
    const auto it = counts_.find(morph);
    return it == counts_.end() ? 0 : it->second;
  }
  bool contains(std::string_view morph) const { return counts_.find(morph) != counts_.end(); }

  /// Cached character distribution over the type inventory.
  CharCounts char_counts() const { return CharCounts(char_counts_.begin(), char_counts_.end()); }
  std::int64_t char_count(char32_t c) const {
    const auto it = char_counts_.find(c);
    return it == char_counts_.end() ? 0 : it->second;
  }
  std::size_t alphabet_size() const { return char_counts_.size(); }

  void add_morph(std::string_view morph, std::int64_t delta) {
    if (delta <= 0) throw BookkeepingError("add_morph: delta must be positive");
    if (morph.empty()) throw InputError("add_morph: empty morph");
    auto it = counts_.find(morph);
    if (it == counts_.end()) {
      it = counts_.emplace(std::string(morph), 0).first;
      for (char32_t c : utf8::decode(morph)) bump_char(c, +1);
      bump_char(kEndMarker, +1);
    }
    token_sum_.add(detail::xlog2x(it->second + delta) - detail::xlog2x(it->second));
    it->second += delta;
    total_tokens_ += delta;
  }

  void remove_morph(std::string_view morph, std::int64_t delta) {
    if (delta <= 0) throw BookkeepingError("remove_morph: delta must be positive");
    const auto it = counts_.find(morph);
    if (it == counts_.end() || it->second < delta) {
      throw BookkeepingError("remove_morph: removing " + std::to_string(delta) + " of '" +
                             std::string(morph) + "' but only " +
                             std::to_string(it == counts_.end() ? 0 : it->second) +
                             " present");
    }
    token_sum_.add(detail::xlog2x(it->second - delta) - detail::xlog2x(it->second));
    it->second -= delta;
    total_tokens_ -= delta;
    if (it->second == 0) {
      counts_.erase(it);
      for (char32_t c : utf8::decode(morph)) bump_char(c, -1);
      bump_char(kEndMarker, -1);
    }
  }

  /// Incrementally maintained corpus cost in bits.
  double corpus_cost() const {
    require_non_empty("corpus_cost");
    if (counts_.size() == 1) return 0.0;
    return std::max(0.0, detail::xlog2x(total_tokens_) - token_sum_.value());
  }

  /// Incrementally maintained lexicon cost in bits.
  double lexicon_cost() const {
    require_non_empty("lexicon_cost");
    return std::max(0.0, detail::xlog2x(char_total_) - char_sum_.value());
  }

  CostBreakdown total_cost() const {
    CostBreakdown cost;
    cost.corpus_cost_bits = corpus_cost();
    cost.lexicon_cost_bits = lexicon_cost();
    cost.total_bits = cost.corpus_cost_bits + cost.lexicon_cost_bits;
    return cost;
  }

  /// Sum of both costs without the breakdown; the trainer's hot path.
  double total_bits() const {
    if (counts_.empty()) return 0.0;
    return corpus_cost() + lexicon_cost();
  }

  /// Morph types in canonical order: descending count, ascending morph.
  std::vector<std::pair<std::string, std::int64_t>> sorted_entries() const {
    std::vector<std::pair<std::string, std::int64_t>> out(counts_.begin(), counts_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    return out;
  }

 private:
  void require_non_empty(const char* op) const {
    if (counts_.empty()) throw ModelStateError(std::string(op) + ": empty lexicon");
  }

  void bump_char(char32_t c, int delta) {
    auto& n = char_counts_[c];
    char_sum_.add(detail::xlog2x(n + delta) - detail::xlog2x(n));
    n += delta;
    char_total_ += delta;
    if (n == 0) char_counts_.erase(c);
  }

  CountMap counts_;
  std::unordered_map<char32_t, std::int64_t> char_counts_;
  std::int64_t total_tokens_ = 0;
  std::int64_t char_total_ = 0;
  detail::CompensatedSum token_sum_;
  detail::CompensatedSum char_sum_;
};

inline double corpus_cost(const MorphLexicon& lex) { return lex.corpus_cost(); }
inline double lexicon_cost(const MorphLexicon& lex) { return lex.lexicon_cost(); }
inline CostBreakdown total_cost(const MorphLexicon& lex) { return lex.total_cost(); }

/// Character multiset of a type inventory, end markers included.
inline CharCounts recount_chars(const MorphLexicon& lex) {
  CharCounts counts;
  for (const auto& [morph, n] : lex.morph_counts()) {
    for (char32_t c : utf8::decode(morph)) ++counts[c];
    ++counts[kEndMarker];
  }
  return counts;
}

/// Costs evaluated term by term from the count map, ignoring every cache.
inline CostBreakdown recompute_cost(const MorphLexicon& lex) {
  if (lex.empty()) throw ModelStateError("recompute_cost: empty lexicon");
  CostBreakdown cost;
  std::int64_t n = 0;
  for (const auto& [morph, c] : lex.morph_counts()) n += c;
  for (const auto& [morph, c] : lex.morph_counts()) {
    cost.corpus_cost_bits -= static_cast<double>(c) * std::log2(static_cast<double>(c) / n);
  }
  const CharCounts chars = recount_chars(lex);
  std::int64_t t = 0;
  for (const auto& [c, k] : chars) t += k;
  for (const auto& [c, k] : chars) {
    cost.lexicon_cost_bits -= static_cast<double>(k) * std::log2(static_cast<double>(k) / t);
  }
  cost.total_bits = cost.corpus_cost_bits + cost.lexicon_cost_bits;
  return cost;
}

inline void write_model(std::ostream& out, const MorphLexicon& lex) {
  out << kModelHeader << '\n';
  out << "#tokens\t" << lex.total_tokens() << '\n';
  out << "#types\t" << lex.type_count() << '\n';
  for (const auto& [morph, count] : lex.sorted_entries()) out << count << '\t' << morph << '\n';
}

/// Loads a model file. The `#tokens` and `#types` totals must agree with
/// the recomputed content.
inline MorphLexicon read_model(std::istream& in, const std::string& source = "model") {
  std::string line;
  std::size_t lineno = 0;
  auto next = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++lineno;
    detail::strip_cr(line);
    return true;
  };
  if (!next() || line != kModelHeader) {
    throw FormatError(source, 1, "missing header '" + std::string(kModelHeader) + "'");
  }
  std::int64_t declared_tokens = -1;
  std::int64_t declared_types = -1;
  std::map<std::string, std::int64_t> counts;
  while (next()) {
    if (line.empty()) continue;
    try {
      utf8::validate(line);
    } catch (const DecodingError& e) {
      throw FormatError(source, lineno, e.what());
    }
    const auto fields = detail::split_tabs(line);
    if (fields.size() != 2) throw FormatError(source, lineno, "expected two tab-separated fields");
    if (line.front() == '#') {
      std::int64_t value = 0;
      if (!detail::parse_positive(fields[1], value)) {
        throw FormatError(source, lineno, "total must be a positive integer");
      }
      if (fields[0] == "#tokens") {
        declared_tokens = value;
      } else if (fields[0] == "#types") {
        declared_types = value;
      } else {
        throw FormatError(source, lineno, "unknown directive '" + std::string(fields[0]) + "'");
      }
      continue;
    }
    std::int64_t count = 0;
    if (!detail::parse_positive(fields[0], count)) {
      throw FormatError(source, lineno, "count must be a positive integer");
    }
    if (fields[1].empty() || detail::has_separator(fields[1])) {
      throw FormatError(source, lineno, "morph must be non-empty without white space or '+'");
    }
    if (!counts.emplace(std::string(fields[1]), count).second) {
      throw FormatError(source, lineno, "duplicate morph '" + std::string(fields[1]) + "'");
    }
  }
  if (counts.empty()) throw FormatError(source, 0, "model holds no morphs");
  if (declared_tokens < 0 || declared_types < 0) {
    throw FormatError(source, 0, "missing #tokens or #types total");
  }
  MorphLexicon lex = MorphLexicon::from_counts(counts);
  if (lex.total_tokens() != declared_tokens) {
    throw FormatError(source, 0,
                      "#tokens says " + std::to_string(declared_tokens) + " but counts sum to " +
                          std::to_string(lex.total_tokens()));
  }
  if (static_cast<std::int64_t>(lex.type_count()) != declared_types) {
    throw FormatError(source, 0,
                      "#types says " + std::to_string(declared_types) + " but file lists " +
                          std::to_string(lex.type_count()));
  }
  return lex;
}

}  // namespace morphoseg

#endif  // MORPHOSEG_MODEL_HPP
