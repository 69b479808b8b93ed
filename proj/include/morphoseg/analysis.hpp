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

#ifndef MORPHOSEG_ANALYSIS_HPP
#define MORPHOSEG_ANALYSIS_HPP

// Descriptive corpus tables: frequency ranking, affix-count histogram,
// case-marker tagging and loan-word flagging.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "morphoseg/corpus.hpp"
#include "morphoseg/errors.hpp"
#include "morphoseg/segmentation.hpp"

namespace morphoseg {

enum class CaseLabel { kNone, kLocative, kGenitive, kNominative };

inline std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::kLocative: return "locative";
    case CaseLabel::kGenitive: return "genitive";
    case CaseLabel::kNominative: return "nominative";
    case CaseLabel::kNone: break;
  }
  return "none";
}

inline std::optional<CaseLabel> parse_case_label(std::string_view s) {
  if (s == "locative") return CaseLabel::kLocative;
  if (s == "genitive") return CaseLabel::kGenitive;
  if (s == "nominative") return CaseLabel::kNominative;
  return std::nullopt;
}

using CaseMarkers = std::map<std::string, CaseLabel, std::less<>>;

/// li/wui locative, chi genitive, na nominative.
inline CaseMarkers default_case_markers() {
  return {{"li", CaseLabel::kLocative},
          {"wui", CaseLabel::kLocative},
          {"chi", CaseLabel::kGenitive},
          {"na", CaseLabel::kNominative}};
}

/// Affix count (morphs - 1) -> number of word types.
using AffixHistogram = std::map<std::size_t, std::int64_t>;

struct CaseMarkerTag {
  std::string word;
  std::string final_morph;
  CaseLabel label = CaseLabel::kNone;
};

struct LoanFlag {
  std::string word;
  Morphs morphs;
  bool flagged = false;
};

inline std::vector<WordCount> top_frequent(const CorpusSummary& summary, std::size_t n) {
  if (n == 0) throw InputError("top_frequent: n must be at least 1");
  std::vector<WordCount> entries = summary.entries;
  sort_entries(entries);
  if (entries.size() > n) entries.resize(n);
  return entries;
}

inline AffixHistogram affix_histogram(const SegmentationTable& table) {
  AffixHistogram hist;
  for (const auto& [word, morphs] : table) {
    if (morphs.empty()) throw InputError("affix_histogram: empty segmentation for '" + word + "'");
    ++hist[morphs.size() - 1];
  }
  return hist;
}

/// Lexicographically smallest word in every occupied bucket.
inline std::map<std::size_t, std::string> histogram_examples(const SegmentationTable& table) {
  std::map<std::size_t, std::string> examples;
  // Table iteration is ascending, so the first word seen per bucket wins.
  for (const auto& [word, morphs] : table) examples.emplace(morphs.size() - 1, word);
  return examples;
}

inline std::vector<CaseMarkerTag> tag_case_markers(const SegmentationTable& table,
                                                   const CaseMarkers& markers = default_case_markers()) {
  if (markers.empty()) throw InputError("tag_case_markers: empty marker set");
  std::vector<CaseMarkerTag> tags;
  tags.reserve(table.size());
  for (const auto& [word, morphs] : table) {
    CaseMarkerTag tag{word, morphs.empty() ? std::string() : morphs.back(), CaseLabel::kNone};
    if (morphs.size() > 1) {
      if (const auto it = markers.find(tag.final_morph); it != markers.end()) tag.label = it->second;
    }
    tags.push_back(std::move(tag));
  }
  return tags;
}

/// Basic Latin letters only: a crude proxy for English borrowings.
inline bool looks_borrowed(std::string_view word) {
  return !word.empty() && std::all_of(word.begin(), word.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  });
}

inline std::vector<LoanFlag> flag_loan_words(const SegmentationTable& table) {
  std::vector<LoanFlag> out;
  out.reserve(table.size());
  for (const auto& [word, morphs] : table) out.push_back({word, morphs, looks_borrowed(word)});
  return out;
}

/// Reads `suffix<TAB>label` lines; labels are locative, genitive or nominative.
inline CaseMarkers read_case_markers(std::istream& in, const std::string& source = "markers") {
  CaseMarkers markers;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    detail::strip_cr(line);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = detail::split_tabs(line);
    if (fields.size() != 2 || fields[0].empty()) {
      throw FormatError(source, lineno, "expected suffix<TAB>label");
    }
    const auto label = parse_case_label(fields[1]);
    if (!label) {
      throw FormatError(source, lineno, "unknown case label '" + std::string(fields[1]) + "'");
    }
    markers[std::string(fields[0])] = *label;
  }
  if (markers.empty()) throw FormatError(source, 0, "no markers defined");
  return markers;
}

namespace detail {

inline std::string affix_row_label(std::size_t k) {
  static constexpr std::string_view kNames[] = {"no",  "one",   "two",   "three", "four", "five",
                                                "six", "seven", "eight", "nine",  "ten"};
  const std::string count = k < std::size(kNames) ? std::string(kNames[k]) : std::to_string(k);
  return "words with " + count + (k == 0 ? " affix" : k == 1 ? " affix" : " affixes");
}

}  // namespace detail

/// Frequency table: `rank<TAB>word<TAB>frequency`.
inline void write_top_frequent(std::ostream& out, const std::vector<WordCount>& rows) {
  out << "rank\tword\tfrequency\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << (i + 1) << '\t' << rows[i].form << '\t' << rows[i].count << '\n';
  }
}

/// Affix table, one row per occupied bucket: `words with k affixes<TAB>count<TAB>example`,
/// the example being the smallest word in the bucket shown segmented.
inline void write_affix_histogram(std::ostream& out, const SegmentationTable& table) {
  const AffixHistogram hist = affix_histogram(table);
  const auto examples = histogram_examples(table);
  out << "affixes\tcount\texample\n";
  for (const auto& [k, n] : hist) {
    const std::string& word = examples.at(k);
    out << detail::affix_row_label(k) << '\t' << n << '\t' << join_morphs(table.find(word)->second)
        << '\n';
  }
}

inline void write_case_markers(std::ostream& out, const std::vector<CaseMarkerTag>& tags) {
  out << "word\tfinal_morph\tcase\n";
  for (const auto& t : tags) out << t.word << '\t' << t.final_morph << '\t' << to_string(t.label) << '\n';
}

inline void write_loan_flags(std::ostream& out, const std::vector<LoanFlag>& flags) {
  out << "word\tsegmentation\tflagged\n";
  for (const auto& f : flags) {
    out << f.word << '\t' << join_morphs(f.morphs) << '\t' << (f.flagged ? "yes" : "no") << '\n';
  }
}

}  // namespace morphoseg

#endif  // MORPHOSEG_ANALYSIS_HPP
