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

#ifndef MORPHOSEG_ERRORS_HPP
#define MORPHOSEG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace morphoseg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed UTF-8. `offset()` is the byte offset of the first bad byte.
class DecodingError : public Error {
 public:
  DecodingError(std::size_t offset, const std::string& what)
      : Error("invalid UTF-8 at byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An operation needed a non-empty or otherwise consistent model.
class ModelStateError : public Error {
 public:
  using Error::Error;
};

/// Counts went out of sync. Always a programming error in the caller.
class BookkeepingError : public Error {
 public:
  using Error::Error;
};

/// Caller-supplied data violates a precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A file could not be parsed. `line()` is 1-based, 0 when not line-specific.
class FormatError : public Error {
 public:
  FormatError(std::string source, std::size_t line, const std::string& what)
      : Error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace morphoseg

#endif  // MORPHOSEG_ERRORS_HPP
