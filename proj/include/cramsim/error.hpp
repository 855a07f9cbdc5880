/*
 * Copyright 2026 The cram-sim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cramsim {

/// Error categories. The numeric values double as CLI exit codes and C API
/// status codes.
enum class ErrorKind : int {
  input = 1,   ///< malformed or out-of-range input data
  config = 2,  ///< invalid configuration value
  guard = 3,   ///< internal guard tripped (e.g. probe non-termination)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorKind::config, what) {}
};

class GuardError : public Error {
 public:
  explicit GuardError(const std::string& what) : Error(ErrorKind::guard, what) {}
};

// File parse failure; offset is the byte position where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::input, what + " (at byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// An event fell outside the frame; index is its position in the input stream.
class EventRangeError : public Error {
 public:
  EventRangeError(std::size_t index, const std::string& what)
      : Error(ErrorKind::input, what + " (event index " + std::to_string(index) + ")"),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace cramsim
