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

#ifndef MORPHOSEG_TRAINER_HPP
#define MORPHOSEG_TRAINER_HPP

// Greedy resegmentation minimizing the two-part cost.
//
// A word visit takes the word out of the model and puts it back under the
// segmentation that minimizes the total cost, holding every other word
// fixed. Each morph of the result is then optimized the same way as a
// shared unit: all of its tokens, across every word that uses it, are
// resegmented together. That second step is what lets a frequent chunk
// such as root+suffix break apart once its pieces are established.
//
// Both moves search the segmentations of their unit with a depth-first
// branch and bound: adding morph tokens never lowers the total cost
// (x log x has increasing forward differences), so the cost of a partial
// segmentation bounds all of its completions. The search is seeded with
// the recursive binary split (whole unit versus every split point,
// recursing into both halves of the winner) and is exhaustive for units of
// up to 18 scalars. Longer units stop after kSearchNodeBudget nodes and keep
// the best segmentation found so far.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "morphoseg/corpus.hpp"
#include "morphoseg/errors.hpp"
#include "morphoseg/model.hpp"
#include "morphoseg/rng.hpp"
#include "morphoseg/segmentation.hpp"
#include "morphoseg/utf8.hpp"

namespace morphoseg {

enum class CountMode { kTokens, kTypes };

struct TrainConfig {
  std::uint64_t seed = 0;
  /// Stop once an epoch improves the total by less than this. Unset means
  /// 0.005 bits per word type.
  std::optional<double> convergence_threshold_bits;
  int max_epochs = 15;
  CountMode count_mode = CountMode::kTokens;
};

/// Lexicon plus the segmentation and weight of every training word.
struct TrainingState {
  MorphLexicon lexicon;
  SegmentationTable table;
  std::unordered_map<std::string, std::int64_t, detail::StringHash, std::equal_to<>> weights;
  /// morph -> word -> occurrences of the morph in that word's segmentation.
  std::unordered_map<std::string, std::map<std::string, int, std::less<>>, detail::StringHash,
                     std::equal_to<>>
      users;
};

struct TrainResult {
  TrainingState state;
  double initial_bits = 0.0;
  std::vector<double> trace;  // total bits after each epoch
  bool converged = false;
};

/// Called after every epoch with the 1-based epoch number.
using EpochObserver = std::function<void(int, const TrainingState&)>;

inline double default_threshold(std::size_t type_count) {
  return 0.005 * static_cast<double>(type_count);
}

inline TrainingState initialize(const CorpusSummary& summary, const TrainConfig& config) {
  if (summary.entries.empty()) throw InputError("initialize: empty corpus");
  TrainingState state;
  for (const auto& e : summary.entries) {
    if (e.count <= 0) throw InputError("initialize: non-positive count for '" + e.form + "'");
    const std::int64_t w = config.count_mode == CountMode::kTokens ? e.count : 1;
    if (!state.weights.emplace(e.form, w).second) {
      throw InputError("initialize: duplicate form '" + e.form + "'");
    }
    state.lexicon.add_morph(e.form, w);
    state.table.emplace(e.form, Morphs{e.form});
    state.users[e.form][e.form] = 1;
  }
  return state;
}

/// Search nodes per unit; 2^18 - 1 covers every segmentation of 18 scalars.
inline constexpr std::uint64_t kSearchNodeBudget = std::uint64_t{1} << 18;

namespace detail {

// Absolute slack under which two totals count as tied. Scales with the
// magnitude so round-off in large models is never mistaken for a gain.
inline double tie_slack(double bits) { return 1e-12 * std::max(1.0, std::abs(bits)); }

// Candidate ordering: cost, then fewer morphs, then leftmost boundaries.
struct Candidate {
  double bits = 0.0;
  std::vector<std::size_t> ends;  // scalar end offset of every morph

  bool better_than(const Candidate& other) const {
    const double slack = tie_slack(other.bits);
    if (bits < other.bits - slack) return true;
    if (bits > other.bits + slack) return false;
    if (ends.size() != other.ends.size()) return ends.size() < other.ends.size();
    return ends < other.ends;
  }
};

class SplitSearch {
 public:
  SplitSearch(MorphLexicon& lex, std::string_view word, std::int64_t weight)
      : lex_(lex), word_(word), offsets_(utf8::scalar_offsets(word)), weight_(weight) {}

  std::size_t length() const { return offsets_.size() - 1; }

  std::string_view piece(std::size_t from, std::size_t to) const {
    return word_.substr(offsets_[from], offsets_[to] - offsets_[from]);
  }

  double evaluate(const std::vector<std::size_t>& ends) {
    std::size_t from = 0;
    for (std::size_t to : ends) lex_.add_morph(piece(from, to), weight_), from = to;
    const double bits = lex_.total_bits();
    from = 0;
    for (std::size_t to : ends) lex_.remove_morph(piece(from, to), weight_), from = to;
    return bits;
  }

  void search(Candidate& best) {
    best_ = &best;
    path_.clear();
    nodes_ = 0;
    descend(0);
  }

  /// Recursive binary splitting; returns the chosen morph ends.
  std::vector<std::size_t> binary_split() {
    std::vector<std::size_t> ends;
    split_node(0, length(), ends);
    std::size_t from = 0;
    for (std::size_t to : ends) lex_.remove_morph(piece(from, to), weight_), from = to;
    return ends;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  // On entry [a, b) is not in the lexicon; on exit its chosen pieces are.
  void split_node(std::size_t a, std::size_t b, std::vector<std::size_t>& ends) {
    lex_.add_morph(piece(a, b), weight_);
    double best = lex_.total_bits();
    lex_.remove_morph(piece(a, b), weight_);
    std::size_t best_k = 0;
    for (std::size_t k = a + 1; k < b; ++k) {
      lex_.add_morph(piece(a, k), weight_);
      lex_.add_morph(piece(k, b), weight_);
      const double bits = lex_.total_bits();
      lex_.remove_morph(piece(k, b), weight_);
      lex_.remove_morph(piece(a, k), weight_);
      if (bits < best - tie_slack(best)) best = bits, best_k = k;
    }
    if (best_k == 0) {
      lex_.add_morph(piece(a, b), weight_);
      ends.push_back(b);
      return;
    }
    // The right half stays in place as a whole while the left is refined.
    lex_.add_morph(piece(best_k, b), weight_);
    split_node(a, best_k, ends);
    lex_.remove_morph(piece(best_k, b), weight_);
    split_node(best_k, b, ends);
  }

  void descend(std::size_t from) {
    for (std::size_t to = from + 1; to <= length(); ++to) {
      if (nodes_ >= kSearchNodeBudget) return;
      ++nodes_;
      const std::string_view m = piece(from, to);
      lex_.add_morph(m, weight_);
      const double bits = lex_.total_bits();
      if (bits <= best_->bits + tie_slack(best_->bits)) {
        path_.push_back(to);
        if (to == length()) {
          Candidate c{bits, path_};
          if (c.better_than(*best_)) *best_ = std::move(c);
        } else {
          descend(to);
        }
        path_.pop_back();
      }
      lex_.remove_morph(m, weight_);
    }
  }

  MorphLexicon& lex_;
  std::string_view word_;
  std::vector<std::size_t> offsets_;
  std::int64_t weight_;
  std::vector<std::size_t> path_;
  Candidate* best_ = nullptr;
  std::uint64_t nodes_ = 0;
};

inline std::vector<std::size_t> morph_ends(const Morphs& morphs) {
  std::vector<std::size_t> ends;
  std::size_t pos = 0;
  for (const auto& m : morphs) ends.push_back(pos += utf8::length(m));
  return ends;
}

// Best segmentation of `unit` added with `weight` on top of the current
// lexicon (which must not hold these tokens). Returns the morphs, not yet
// added. Never worse than `previous`.
inline Morphs best_segmentation(MorphLexicon& lex, std::string_view unit, std::int64_t weight,
                                const Morphs& previous_morphs) {
  SplitSearch search(lex, unit, weight);
  const std::size_t len = search.length();
  Candidate previous{0.0, morph_ends(previous_morphs)};
  previous.bits = search.evaluate(previous.ends);
  Candidate best{0.0, {len}};
  best.bits = search.evaluate(best.ends);
  if (previous.better_than(best)) best = previous;
  if (len > 1) {
    Candidate binary{0.0, search.binary_split()};
    binary.bits = search.evaluate(binary.ends);
    if (binary.better_than(best)) best = std::move(binary);
    search.search(best);
  }
  // Never trade a strict cost increase for a tie-break preference.
  if (best.bits > previous.bits) best = previous;

  Morphs chosen;
  std::size_t from = 0;
  for (std::size_t to : best.ends) {
    chosen.emplace_back(search.piece(from, to));
    from = to;
  }
  return chosen;
}

inline void unlink(TrainingState& state, const std::string& word, const Morphs& morphs) {
  for (const auto& m : morphs) {
    const auto it = state.users.find(m);
    if (it == state.users.end()) throw BookkeepingError("unlink: no users for '" + m + "'");
    if (--it->second[word] == 0) it->second.erase(word);
    if (it->second.empty()) state.users.erase(it);
  }
}

inline void link(TrainingState& state, const std::string& word, const Morphs& morphs) {
  for (const auto& m : morphs) ++state.users[m][word];
}

}  // namespace detail

/// Re-optimizes one word's segmentation with the rest of the model fixed.
/// The committed total is never above that of the previous segmentation.
inline void resplit_word(std::string_view word, TrainingState& state) {
  const auto weight_it = state.weights.find(word);
  const auto table_it = state.table.find(word);
  if (weight_it == state.weights.end() || table_it == state.table.end()) {
    throw BookkeepingError("resplit_word: '" + std::string(word) + "' is not a training word");
  }
  const std::int64_t weight = weight_it->second;
  Morphs& current = table_it->second;
  for (const auto& m : current) state.lexicon.remove_morph(m, weight);
  Morphs chosen = detail::best_segmentation(state.lexicon, word, weight, current);
  for (const auto& m : chosen) state.lexicon.add_morph(m, weight);
  if (chosen != current) {
    detail::unlink(state, table_it->first, current);
    detail::link(state, table_it->first, chosen);
    current = std::move(chosen);
  }
}

/// Re-optimizes a morph as a unit: all of its tokens are resegmented
/// together and every word using it is rewritten. Pieces of a split are
/// optimized in turn with their new aggregate counts. Returns whether the
/// morph was split.
inline bool resplit_morph(std::string_view morph, TrainingState& state) {
  const std::int64_t count = state.lexicon.count(morph);
  if (count == 0) throw BookkeepingError("resplit_morph: '" + std::string(morph) + "' is not in the lexicon");
  if (utf8::length(morph) < 2) return false;
  const std::string unit(morph);
  state.lexicon.remove_morph(unit, count);
  const Morphs pieces = detail::best_segmentation(state.lexicon, unit, count, Morphs{unit});
  for (const auto& m : pieces) state.lexicon.add_morph(m, count);
  if (pieces.size() == 1) return false;

  const auto users = state.users.find(unit);
  if (users == state.users.end()) throw BookkeepingError("resplit_morph: no users for '" + unit + "'");
  const auto words = std::move(users->second);
  state.users.erase(users);
  for (const auto& [word, occurrences] : words) {
    Morphs& seg = state.table.find(word)->second;
    Morphs rewritten;
    for (auto& m : seg) {
      if (m == unit) {
        rewritten.insert(rewritten.end(), pieces.begin(), pieces.end());
      } else {
        rewritten.push_back(std::move(m));
      }
    }
    seg = std::move(rewritten);
    for (const auto& p : pieces) state.users[p][word] += occurrences;
  }
  for (const auto& p : pieces) {
    if (state.lexicon.contains(p)) resplit_morph(p, state);
  }
  return true;
}

inline TrainResult train(const CorpusSummary& summary, const TrainConfig& config,
                         const EpochObserver& observer = {}) {
  if (config.max_epochs < 1) throw InputError("train: max_epochs must be at least 1");
  const double threshold =
      config.convergence_threshold_bits.value_or(default_threshold(summary.entries.size()));
  if (!(threshold > 0.0)) throw InputError("train: convergence threshold must be positive");

  TrainResult result;
  result.state = initialize(summary, config);
  result.initial_bits = result.state.lexicon.total_bits();

  std::vector<std::string_view> order;
  order.reserve(summary.entries.size());
  for (const auto& e : summary.entries) order.push_back(e.form);

  const SplitMix64 root(config.seed);
  double previous = result.initial_bits;
  for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
    SplitMix64 rng = root.split(static_cast<std::uint64_t>(epoch));
    shuffle(order, rng);
    for (std::string_view word : order) {
      resplit_word(word, result.state);
      const Morphs morphs = result.state.table.find(word)->second;
      if (morphs.size() < 2) continue;
      for (const auto& m : morphs) {
        if (result.state.lexicon.contains(m)) resplit_morph(m, result.state);
      }
    }
    const double bits = result.state.lexicon.total_bits();
    result.trace.push_back(bits);
    if (observer) observer(epoch, result.state);
    if (previous - bits < threshold) {
      result.converged = true;
      break;
    }
    previous = bits;
  }
  return result;
}

inline void write_trace(std::ostream& out, const std::vector<double>& trace) {
  for (std::size_t i = 0; i < trace.size(); ++i) out << (i + 1) << '\t' << format_bits(trace[i]) << '\n';
}

}  // namespace morphoseg

#endif  // MORPHOSEG_TRAINER_HPP
