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

#ifndef MORPHOSEG_UTF8_HPP
#define MORPHOSEG_UTF8_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "morphoseg/errors.hpp"

namespace morphoseg::utf8 {

namespace detail {

// Decodes one scalar starting at `pos`; advances `pos`. Throws on any
// ill-formed sequence (overlong, surrogate, out of range, truncated).
inline char32_t decode_one(std::string_view s, std::size_t& pos) {
  const std::size_t start = pos;
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) {
    ++pos;
    return b0;
  }
  int len;
  char32_t cp;
  char32_t min;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2, cp = b0 & 0x1F, min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3, cp = b0 & 0x0F, min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4, cp = b0 & 0x07, min = 0x10000;
  } else {
    throw DecodingError(start, "unexpected lead byte");
  }
  if (start + len > s.size()) throw DecodingError(start, "truncated sequence");
  for (int i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[start + i]);
    if ((b & 0xC0) != 0x80) throw DecodingError(start + i, "expected continuation byte");
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min) throw DecodingError(start, "overlong encoding");
  if (cp > 0x10FFFF) throw DecodingError(start, "code point beyond U+10FFFF");
  if (cp >= 0xD800 && cp <= 0xDFFF) throw DecodingError(start, "surrogate code point");
  pos += len;
  return cp;
}

}  // namespace detail

inline void validate(std::string_view s) {
  for (std::size_t pos = 0; pos < s.size();) detail::decode_one(s, pos);
}

inline std::u32string decode(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  for (std::size_t pos = 0; pos < s.size();) out.push_back(detail::decode_one(s, pos));
  return out;
}

inline void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string encode(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append(out, cp);
  return out;
}

/// Number of Unicode scalars in a well-formed string.
inline std::size_t length(std::string_view s) {
  std::size_t n = 0;
  for (char c : s) n += (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  return n;
}

/// Byte offsets of every scalar boundary, including 0 and s.size().
inline std::vector<std::size_t> scalar_offsets(std::string_view s) {
  std::vector<std::size_t> offsets;
  offsets.reserve(s.size() + 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) offsets.push_back(i);
  }
  offsets.push_back(s.size());
  return offsets;
}

}  // namespace morphoseg::utf8

#endif  // MORPHOSEG_UTF8_HPP
