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

#include "ppa/csv.hpp"

#include "ppa/error.hpp"

namespace ppa::csv {

namespace {

bool needs_quotes(std::string_view v) {
  return v.empty() || v.find_first_of(",\"\r\n") != std::string_view::npos;
}

void append_field(std::string& out, std::string_view v) {
  if (!needs_quotes(v)) {
    out += v;
    return;
  }
  out += '"';
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

}  // namespace

void append_row(std::string& out, const std::vector<Cell>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += ',';
    if (cells[i]) append_field(out, *cells[i]);
  }
  out += '\n';
}

void append_row(std::string& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    // plain string rows never carry nulls, so only quote when required
    if (fields[i].empty()) continue;
    append_field(out, fields[i]);
  }
  out += '\n';
}

bool Reader::next(std::vector<Cell>& out) {
  out.clear();
  if (pos_ >= data_.size()) return false;
  record_line_ = line_;
  for (;;) {
    // start of a field
    if (pos_ < data_.size() && data_[pos_] == '"') {
      ++pos_;
      std::string value;
      for (;;) {
        if (pos_ >= data_.size()) throw StorageError("CSV line " + std::to_string(record_line_) + ": unterminated quote");
        char c = data_[pos_++];
        if (c == '"') {
          if (pos_ < data_.size() && data_[pos_] == '"') {
            value += '"';
            ++pos_;
            continue;
          }
          break;
        }
        if (c == '\n') ++line_;
        value += c;
      }
      out.emplace_back(std::move(value));
    } else {
      std::size_t start = pos_;
      while (pos_ < data_.size() && data_[pos_] != ',' && data_[pos_] != '\n' &&
             !(data_[pos_] == '\r' && pos_ + 1 < data_.size() && data_[pos_ + 1] == '\n')) {
        if (data_[pos_] == '"') {
          throw StorageError("CSV line " + std::to_string(line_) + ": quote inside unquoted field");
        }
        ++pos_;
      }
      if (pos_ == start) out.emplace_back(std::nullopt);
      else out.emplace_back(std::string(data_.substr(start, pos_ - start)));
    }
    // field separator or record end
    if (pos_ >= data_.size()) return true;
    char c = data_[pos_];
    if (c == ',') {
      ++pos_;
      continue;
    }
    if (c == '\r' && pos_ + 1 < data_.size() && data_[pos_ + 1] == '\n') ++pos_;
    if (data_[pos_] == '\n') {
      ++pos_;
      ++line_;
      return true;
    }
    throw StorageError("CSV line " + std::to_string(line_) + ": unexpected character after quoted field");
  }
}

bool Reader::next(std::vector<std::string>& out) {
  std::vector<Cell> cells;
  if (!next(cells)) return false;
  out.clear();
  out.reserve(cells.size());
  for (auto& c : cells) out.push_back(c.value_or(std::string()));
  return true;
}

std::vector<std::vector<std::string>> parse(std::string_view data) {
  Reader reader(data);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  while (reader.next(row)) rows.push_back(row);
  return rows;
}

}  // namespace ppa::csv
