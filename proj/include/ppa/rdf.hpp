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
#include <filesystem>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace ppa {

enum class TermKind { kIri, kBlankNode, kLiteral };

/// An RDF term. `value` holds the IRI (without angle brackets), the blank node
/// label (without "_:") or the literal's lexical form.
struct Term {
  TermKind kind = TermKind::kIri;
  std::string value;
  std::string datatype;  // literals only, may be empty
  std::string language;  // literals only, may be empty

  static Term iri(std::string v) { return {TermKind::kIri, std::move(v), {}, {}}; }
  static Term blank(std::string v) { return {TermKind::kBlankNode, std::move(v), {}, {}}; }
  static Term literal(std::string v, std::string dt = {}, std::string lang = {}) {
    return {TermKind::kLiteral, std::move(v), std::move(dt), std::move(lang)};
  }

  /// Value stored in relational cells: IRI text, "_:label", or the lexical form.
  std::string cell() const;

  bool operator==(const Term&) const = default;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  bool operator==(const Triple&) const = default;
};

struct ParseStats {
  std::size_t triples_parsed = 0;
  std::size_t lines_skipped = 0;
  std::size_t comment_lines = 0;
  std::size_t blank_lines = 0;
  std::size_t total_lines = 0;
  std::size_t distinct_predicates = 0;
};

enum class ParseMode { kStrict, kLenient };

/// Parses one N-Triples line. Returns nullopt for blank and comment lines.
/// Throws NTriplesError (tagged with `line_no`) when the line is malformed.
std::optional<Triple> parse_ntriples_line(std::string_view line, std::size_t line_no);

/// Pull-based reader over a line-oriented stream. In strict mode the first
/// malformed line throws; in lenient mode it is counted in `lines_skipped`.
class NTriplesReader {
 public:
  NTriplesReader(std::istream& in, ParseMode mode);

  std::optional<Triple> next();
  /// `distinct_predicates` is only final once next() has returned nullopt.
  const ParseStats& stats() const noexcept { return stats_; }
  /// 1-based line numbers of skipped lines (lenient mode).
  const std::vector<std::size_t>& skipped_lines() const noexcept { return skipped_; }

 private:
  std::istream& in_;
  ParseMode mode_;
  ParseStats stats_;
  std::vector<std::size_t> skipped_;
  std::unordered_set<std::string> predicates_seen_;
  std::string line_;
};

std::vector<Triple> parse_ntriples(std::istream& in, ParseMode mode, ParseStats* stats = nullptr);

/// Reads a `.nt` file; gzip input is detected by its magic bytes.
std::vector<Triple> read_ntriples_file(const std::filesystem::path& path, ParseMode mode,
                                       ParseStats* stats = nullptr);

/// Predicate IRIs, deduplicated and sorted.
std::vector<std::string> distinct_predicates(const std::vector<Triple>& triples);

}  // namespace ppa
