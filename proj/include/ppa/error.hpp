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
#include <stdexcept>
#include <string>

namespace ppa {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigSpaceError : public Error {
 public:
  using Error::Error;
};

class LabelError : public Error {
 public:
  using Error::Error;
};

class ConfigFileError : public Error {
 public:
  using Error::Error;
};

/// Malformed N-Triples input; `line()` is 1-based.
class NTriplesError : public Error {
 public:
  NTriplesError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class PlanError : public Error {
 public:
  using Error::Error;
};

class StorageError : public Error {
 public:
  using Error::Error;
};

/// SQL text that does not match the grammar; `offset()` is a byte offset.
class SqlSyntaxError : public Error {
 public:
  SqlSyntaxError(std::size_t offset, const std::string& what)
      : Error("syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Unknown alias, table or column.
class SqlResolveError : public Error {
 public:
  using Error::Error;
};

/// Invalid performance log content; `row()` is the 1-based data row (header excluded).
class LogError : public Error {
 public:
  LogError(std::size_t row, const std::string& what)
      : Error("data row " + std::to_string(row) + " (line " + std::to_string(row + 1) + "): " + what),
        row_(row) {}
  explicit LogError(const std::string& what) : Error(what), row_(0) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class MatrixError : public Error {
 public:
  using Error::Error;
};

class CriterionError : public Error {
 public:
  using Error::Error;
};

class EvaluationError : public Error {
 public:
  using Error::Error;
};

}  // namespace ppa
