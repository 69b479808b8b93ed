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

#ifndef MORPHOSEG_CORPUS_HPP
#define MORPHOSEG_CORPUS_HPP

// Raw-text ingestion: tokenization, normalization and word/frequency
// inventories, plus the `count<TAB>form` word-list format.

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "morphoseg/errors.hpp"
#include "morphoseg/utf8.hpp"

namespace morphoseg {

/// Morph separator in every segmentation file. Never part of a word.
inline constexpr char32_t kMorphSeparator = U'+';

struct NormalizationConfig {
  bool strip_punctuation = true;  // general category P*
  bool strip_symbols = true;      // general category S*
  bool case_fold = true;          // full Unicode case folding
  bool drop_digit_tokens = true;
  /// Extra scalars stripped from token edges on top of the categories.
  std::u32string extra_strip;
};

struct WordCount {
  std::string form;
  std::int64_t count = 0;

  friend bool operator==(const WordCount&, const WordCount&) = default;
};

struct CorpusSummary {
  std::int64_t token_count = 0;
  std::int64_t type_count = 0;
  std::vector<WordCount> entries;

  friend bool operator==(const CorpusSummary&, const CorpusSummary&) = default;
};

namespace detail {

inline bool in_strip_set(char32_t cp, const NormalizationConfig& config) {
  const auto mask = U_GET_GC_MASK(static_cast<UChar32>(cp));
  if (config.strip_punctuation && (mask & U_GC_P_MASK)) return true;
  if (config.strip_symbols && (mask & U_GC_S_MASK)) return true;
  return config.extra_strip.find(cp) != std::u32string::npos;
}

inline bool is_separator(char32_t cp) {
  return cp == kMorphSeparator || u_isUWhiteSpace(static_cast<UChar32>(cp));
}

inline const icu::Normalizer2& nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* instance = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || instance == nullptr) {
    throw Error(std::string("ICU NFC normalizer unavailable: ") + u_errorName(status));
  }
  return *instance;
}

inline std::string nfc_fold(std::string_view raw, bool fold) {
  const icu::Normalizer2& norm = nfc();
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
  icu::UnicodeString out = norm.normalize(text, status);
  if (fold) {
    out.foldCase(U_FOLD_CASE_DEFAULT);
    // Folding can produce non-NFC sequences (e.g. U+0130).
    out = norm.normalize(out, status);
  }
  if (U_FAILURE(status)) throw Error(std::string("normalization failed: ") + u_errorName(status));
  std::string result;
  out.toUTF8String(result);
  return result;
}

}  // namespace detail

/// Normalizes a single token: NFC, case folding, edge stripping. Returns an
/// empty string when nothing survives (including digit-only tokens).
/// `raw` must be valid UTF-8.
inline std::string normalize_word(std::string_view raw, const NormalizationConfig& config = {}) {
  const std::u32string cps = utf8::decode(detail::nfc_fold(raw, config.case_fold));
  std::size_t begin = 0;
  std::size_t end = cps.size();
  while (begin < end && detail::in_strip_set(cps[begin], config)) ++begin;
  while (end > begin && detail::in_strip_set(cps[end - 1], config)) --end;
  if (begin == end) return {};
  if (config.drop_digit_tokens &&
      std::all_of(cps.begin() + begin, cps.begin() + end,
                  [](char32_t c) { return u_isdigit(static_cast<UChar32>(c)) != 0; })) {
    return {};
  }
  return utf8::encode(std::u32string_view(cps).substr(begin, end - begin));
}

/// Splits on Unicode white space (and the reserved `+` morph separator)
/// and normalizes each token. Throws DecodingError on malformed input.
inline std::vector<std::string> tokenize(std::string_view text,
                                         const NormalizationConfig& config = {}) {
  const std::u32string cps = utf8::decode(text);
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && detail::is_separator(cps[i])) ++i;
    const std::size_t start = i;
    while (i < cps.size() && !detail::is_separator(cps[i])) ++i;
    if (start == i) continue;
    std::string token = normalize_word(
        utf8::encode(std::u32string_view(cps).substr(start, i - start)), config);
    if (!token.empty()) tokens.push_back(std::move(token));
  }
  return tokens;
}

/// Orders entries by descending count, then ascending form (bytewise).
inline void sort_entries(std::vector<WordCount>& entries) {
  std::sort(entries.begin(), entries.end(), [](const WordCount& a, const WordCount& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.form < b.form;
  });
}

inline CorpusSummary count_words(const std::vector<std::string>& tokens) {
  std::unordered_map<std::string_view, std::int64_t> counts;
  for (const auto& t : tokens) ++counts[t];
  CorpusSummary summary;
  summary.token_count = static_cast<std::int64_t>(tokens.size());
  summary.type_count = static_cast<std::int64_t>(counts.size());
  summary.entries.reserve(counts.size());
  for (const auto& [form, count] : counts) summary.entries.push_back({std::string(form), count});
  sort_entries(summary.entries);
  return summary;
}

/// Merges summaries from independently processed files (sum counts, re-sort).
inline CorpusSummary merge(const std::vector<CorpusSummary>& parts) {
  std::map<std::string, std::int64_t> counts;
  for (const auto& part : parts) {
    for (const auto& e : part.entries) counts[e.form] += e.count;
  }
  CorpusSummary summary;
  for (auto& [form, count] : counts) {
    summary.entries.push_back({form, count});
    summary.token_count += count;
  }
  summary.type_count = static_cast<std::int64_t>(summary.entries.size());
  sort_entries(summary.entries);
  return summary;
}

namespace detail {

inline std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

inline bool parse_positive(std::string_view field, std::int64_t& value) {
  if (field.empty()) return false;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  return ec == std::errc() && ptr == field.data() + field.size() && value > 0;
}

inline bool has_separator(std::string_view s) {
  for (char32_t c : utf8::decode(s)) {
    if (is_separator(c)) return true;
  }
  return false;
}

inline void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace detail

inline void write_word_list(std::ostream& out, const CorpusSummary& summary) {
  for (const auto& e : summary.entries) out << e.count << '\t' << e.form << '\n';
}

/// Reads `count<TAB>form` lines. Entries are re-sorted into canonical
/// order; duplicates, non-positive counts and bad UTF-8 are rejected.
inline CorpusSummary read_word_list(std::istream& in, const std::string& source = "word list") {
  CorpusSummary summary;
  std::unordered_map<std::string, std::size_t> seen;
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
    const auto fields = detail::split_tabs(line);
    std::int64_t count = 0;
    if (fields.size() != 2) throw FormatError(source, lineno, "expected count<TAB>form");
    if (!detail::parse_positive(fields[0], count)) {
      throw FormatError(source, lineno, "count must be a positive integer");
    }
    if (fields[1].empty() || detail::has_separator(fields[1])) {
      throw FormatError(source, lineno, "form must be non-empty without white space or '+'");
    }
    if (!seen.emplace(std::string(fields[1]), lineno).second) {
      throw FormatError(source, lineno, "duplicate form '" + std::string(fields[1]) + "'");
    }
    summary.entries.push_back({std::string(fields[1]), count});
    summary.token_count += count;
  }
  summary.type_count = static_cast<std::int64_t>(summary.entries.size());
  sort_entries(summary.entries);
  return summary;
}

}  // namespace morphoseg

#endif  // MORPHOSEG_CORPUS_HPP
