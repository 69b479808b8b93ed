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

#ifndef MORPHOSEG_EVALUATION_HPP
#define MORPHOSEG_EVALUATION_HPP

// Boundary precision/recall/F1 and exact match against gold segmentations.
// Scores are micro-averaged: boundary counts are pooled over all words.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

#include "morphoseg/errors.hpp"
#include "morphoseg/segmentation.hpp"
#include "morphoseg/utf8.hpp"

namespace morphoseg {

/// Sorted internal junction positions, in Unicode scalars from word start.
using BoundarySet = std::vector<std::size_t>;

inline BoundarySet boundaries(const Morphs& morphs) {
  BoundarySet out;
  std::size_t pos = 0;
  for (std::size_t i = 0; i + 1 < morphs.size(); ++i) out.push_back(pos += utf8::length(morphs[i]));
  return out;
}

inline BoundarySet boundaries(const Segmentation& seg) { return boundaries(seg.morphs); }

struct WordDetail {
  std::string word;
  BoundarySet predicted;
  BoundarySet gold;
  bool exact = false;
};

struct EvalReport {
  double boundary_precision = 0.0;
  double boundary_recall = 0.0;
  double boundary_f1 = 0.0;
  double exact_match_rate = 0.0;
  // Pooled counts behind the rates.
  std::int64_t correct_boundaries = 0;
  std::int64_t predicted_boundaries = 0;
  std::int64_t gold_boundaries = 0;
  std::int64_t exact_matches = 0;
  std::int64_t words = 0;
  std::vector<WordDetail> per_word;

  /// A rate with an empty denominator is vacuously 1 and reported as undefined.
  bool precision_defined() const { return predicted_boundaries > 0; }
  bool recall_defined() const { return gold_boundaries > 0; }
};

inline EvalReport evaluate(const SegmentationTable& pred, const SegmentationTable& gold) {
  std::vector<std::string> missing;
  for (const auto& [word, morphs] : gold) {
    if (pred.find(word) == pred.end()) missing.push_back("missing from prediction: " + word);
  }
  for (const auto& [word, morphs] : pred) {
    if (gold.find(word) == gold.end()) missing.push_back("missing from gold: " + word);
  }
  if (!missing.empty()) {
    std::string msg = "evaluate: word sets differ (" + std::to_string(missing.size()) + ")";
    for (const auto& m : missing) msg += "; " + m;
    throw InputError(msg);
  }

  EvalReport report;
  for (const auto& [word, gold_morphs] : gold) {
    const Morphs& pred_morphs = pred.find(word)->second;
    if (!spells(word, pred_morphs) || !spells(word, gold_morphs)) {
      throw InputError("evaluate: morphs do not spell '" + word + "'");
    }
    WordDetail d{word, boundaries(pred_morphs), boundaries(gold_morphs), pred_morphs == gold_morphs};
    BoundarySet common;
    std::set_intersection(d.predicted.begin(), d.predicted.end(), d.gold.begin(), d.gold.end(),
                          std::back_inserter(common));
    report.correct_boundaries += static_cast<std::int64_t>(common.size());
    report.predicted_boundaries += static_cast<std::int64_t>(d.predicted.size());
    report.gold_boundaries += static_cast<std::int64_t>(d.gold.size());
    report.exact_matches += d.exact;
    ++report.words;
    report.per_word.push_back(std::move(d));
  }

  const auto ratio = [](std::int64_t num, std::int64_t den) {
    return den == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  report.boundary_precision = ratio(report.correct_boundaries, report.predicted_boundaries);
  report.boundary_recall = ratio(report.correct_boundaries, report.gold_boundaries);
  const double p = report.boundary_precision;
  const double r = report.boundary_recall;
  report.boundary_f1 = p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
  report.exact_match_rate = ratio(report.exact_matches, report.words);
  return report;
}

namespace detail {

inline std::string format_rate(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", value);
  return buf;
}

inline std::string format_boundaries(const BoundarySet& b) {
  std::string out;
  for (std::size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i]);
  return out.empty() ? "-" : out;
}

}  // namespace detail

/// Key/value TSV; optional per-word lines `word<TAB>predicted<TAB>gold<TAB>exact`.
inline void write_eval_report(std::ostream& out, const EvalReport& report, bool detail = false) {
  out << "precision\t"
      << (report.precision_defined() ? detail::format_rate(report.boundary_precision) : "NA") << '\n';
  out << "recall\t" << (report.recall_defined() ? detail::format_rate(report.boundary_recall) : "NA")
      << '\n';
  out << "f1\t" << detail::format_rate(report.boundary_f1) << '\n';
  out << "exact_match\t" << report.exact_matches << '/' << report.words << '\n';
  out << "exact_match_rate\t" << detail::format_rate(report.exact_match_rate) << '\n';
  out << "boundaries_correct\t" << report.correct_boundaries << '\n';
  out << "boundaries_predicted\t" << report.predicted_boundaries << '\n';
  out << "boundaries_gold\t" << report.gold_boundaries << '\n';
  if (!detail) return;
  out << "# word\tpredicted\tgold\texact\n";
  for (const auto& d : report.per_word) {
    out << d.word << '\t' << detail::format_boundaries(d.predicted) << '\t'
        << detail::format_boundaries(d.gold) << '\t' << (d.exact ? "yes" : "no") << '\n';
  }
}

}  // namespace morphoseg

#endif  // MORPHOSEG_EVALUATION_HPP
