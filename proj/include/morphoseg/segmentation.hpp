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

#ifndef MORPHOSEG_SEGMENTATION_HPP
#define MORPHOSEG_SEGMENTATION_HPP

// Segmentations and the `word<TAB>m1+m2+...` table format.

#include <charconv>
#include <cstdio>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "morphoseg/corpus.hpp"
#include "morphoseg/errors.hpp"
#include "morphoseg/utf8.hpp"

namespace morphoseg {

using Morphs = std::vector<std::string>;

struct Segmentation {
  std::string word;
  Morphs morphs;
  double cost_bits = 0.0;
};

/// Word form -> ordered morph sequence, iterated in ascending word order.
using SegmentationTable = std::map<std::string, Morphs, std::less<>>;

inline std::string join_morphs(const Morphs& morphs) {
  std::string out;
  for (std::size_t i = 0; i < morphs.size(); ++i) {
    if (i) out.push_back('+');
    out += morphs[i];
  }
  return out;
}

inline Morphs split_morphs(std::string_view joined) {
  Morphs morphs;
  std::size_t start = 0;
  for (;;) {
    const std::size_t plus = joined.find('+', start);
    morphs.emplace_back(joined.substr(start, plus == std::string_view::npos ? plus : plus - start));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return morphs;
}

inline std::string concatenate(const Morphs& morphs) {
  std::string out;
  for (const auto& m : morphs) out += m;
  return out;
}

/// True when the morphs are non-empty and spell the word exactly.
inline bool spells(std::string_view word, const Morphs& morphs) {
  if (morphs.empty()) return false;
  std::size_t pos = 0;
  for (const auto& m : morphs) {
    if (m.empty() || word.substr(pos, m.size()) != m) return false;
    pos += m.size();
  }
  return pos == word.size();
}

inline std::string format_bits(double bits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", bits);
  return buf;
}

inline void write_segmentation_line(std::ostream& out, std::string_view word, const Morphs& morphs,
                                    std::optional<double> cost_bits = std::nullopt) {
  out << word << '\t' << join_morphs(morphs);
  if (cost_bits) out << '\t' << format_bits(*cost_bits);
  out << '\n';
}

inline void write_segmentation_table(std::ostream& out, const SegmentationTable& table) {
  for (const auto& [word, morphs] : table) write_segmentation_line(out, word, morphs);
}

/// Reads `word<TAB>m1+m2+...[<TAB>cost]` lines, checking that the morphs
/// spell the word. A trailing cost column is accepted and ignored.
inline SegmentationTable read_segmentation_table(std::istream& in,
                                                 const std::string& source = "segmentations") {
  SegmentationTable table;
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
    if (fields.size() != 2 && fields.size() != 3) {
      throw FormatError(source, lineno, "expected word<TAB>morph+morph[<TAB>cost]");
    }
    const std::string_view word = fields[0];
    if (word.empty() || detail::has_separator(word)) {
      throw FormatError(source, lineno, "word must be non-empty without white space or '+'");
    }
    Morphs morphs = split_morphs(fields[1]);
    if (!spells(word, morphs)) {
      throw FormatError(source, lineno,
                        "morphs '" + std::string(fields[1]) + "' do not spell '" +
                            std::string(word) + "'");
    }
    if (!table.emplace(std::string(word), std::move(morphs)).second) {
      throw FormatError(source, lineno, "duplicate word '" + std::string(word) + "'");
    }
  }
  return table;
}

}  // namespace morphoseg

#endif  // MORPHOSEG_SEGMENTATION_HPP
