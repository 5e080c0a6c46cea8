// Copyright 2026 The ppa Authors.
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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ppa/schema.hpp"

namespace ppa::csv {

/// Appends one record terminated by '\n'. Null cells are written as an empty
/// unquoted field; empty strings as "" so the two stay distinguishable.
void append_row(std::string& out, const std::vector<Cell>& cells);
void append_row(std::string& out, const std::vector<std::string>& fields);

/// Streaming RFC-4180 reader with LF or CRLF record separators.
class Reader {
 public:
  explicit Reader(std::string_view data) : data_(data) {}

  /// Reads the next record; returns false at end of input. Throws StorageError
  /// on an unterminated quote or garbage after a closing quote.
  bool next(std::vector<Cell>& out);
  /// Same as next() with nulls flattened to empty strings.
  bool next(std::vector<std::string>& out);

  /// 1-based line on which the last returned record started.
  std::size_t line() const noexcept { return record_line_; }

 private:
  std::string_view data_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t record_line_ = 0;
};

/// Parses a whole document.
std::vector<std::vector<std::string>> parse(std::string_view data);

}  // namespace ppa::csv
