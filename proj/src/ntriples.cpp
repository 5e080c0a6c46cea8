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

#include "ppa/rdf.hpp"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <set>
#include <streambuf>

#include "ppa/error.hpp"

namespace ppa {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r'; }

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line_no) : text_(text), line_no_(line_no) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw NTriplesError(line_no_, what + " (column " + std::to_string(pos_ + 1) + ")");
  }

  void skip_ws() {
    while (pos_ < text_.size() && is_ws(text_[pos_])) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::uint32_t hex_escape(std::size_t digits) {
    if (pos_ + digits > text_.size()) fail("truncated unicode escape");
    std::uint32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      char c = text_[pos_++];
      cp <<= 4;
      if (c >= '0' && c <= '9') cp |= static_cast<std::uint32_t>(c - '0');
      else if (c >= 'a' && c <= 'f') cp |= static_cast<std::uint32_t>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') cp |= static_cast<std::uint32_t>(c - 'A' + 10);
      else fail("bad hex digit in unicode escape");
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail("invalid code point in escape");
    return cp;
  }

  std::string iri() {
    if (peek() != '<') fail("expected '<'");
    ++pos_;
    std::string out;
    for (;;) {
      if (at_end()) fail("unterminated IRI");
      char c = text_[pos_++];
      if (c == '>') break;
      if (c == '\\') {
        if (at_end()) fail("dangling escape in IRI");
        char e = text_[pos_++];
        if (e == 'u') append_utf8(out, hex_escape(4));
        else if (e == 'U') append_utf8(out, hex_escape(8));
        else fail("bad escape in IRI");
        continue;
      }
      if (c == ' ' || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' ||
          c == '`' || static_cast<unsigned char>(c) <= 0x20) {
        fail("illegal character in IRI");
      }
      out += c;
    }
    if (out.empty()) fail("empty IRI");
    return out;
  }

  std::string blank_label() {
    if (text_.substr(pos_, 2) != "_:") fail("expected blank node");
    pos_ += 2;
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      unsigned char c = static_cast<unsigned char>(text_[pos_]);
      if (std::isalnum(c) || c == '_' || c == '-' || c == '.' || c >= 0x80) ++pos_;
      else break;
    }
    // a label never ends with '.', which belongs to the statement terminator
    while (pos_ > start && text_[pos_ - 1] == '.') --pos_;
    if (pos_ == start) fail("empty blank node label");
    return std::string(text_.substr(start, pos_ - start));
  }

  Term literal() {
    ++pos_;  // opening quote
    std::string lex;
    for (;;) {
      if (at_end()) fail("unterminated literal");
      char c = text_[pos_++];
      if (c == '"') break;
      if (c == '\\') {
        if (at_end()) fail("dangling escape");
        char e = text_[pos_++];
        switch (e) {
          case 't': lex += '\t'; break;
          case 'b': lex += '\b'; break;
          case 'n': lex += '\n'; break;
          case 'r': lex += '\r'; break;
          case 'f': lex += '\f'; break;
          case '"': lex += '"'; break;
          case '\'': lex += '\''; break;
          case '\\': lex += '\\'; break;
          case 'u': append_utf8(lex, hex_escape(4)); break;
          case 'U': append_utf8(lex, hex_escape(8)); break;
          default: fail(std::string("unknown escape \\") + e);
        }
        continue;
      }
      if (c == '\n') fail("raw newline in literal");
      lex += c;
    }
    if (text_.substr(pos_, 2) == "^^") {
      pos_ += 2;
      return Term::literal(std::move(lex), iri());
    }
    if (peek() == '@') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
        ++pos_;
      }
      if (pos_ == start) fail("empty language tag");
      return Term::literal(std::move(lex), {}, std::string(text_.substr(start, pos_ - start)));
    }
    return Term::literal(std::move(lex));
  }

  // statement terminator, optionally followed by whitespace and a comment
  void finish() {
    if (peek() != '.') fail("expected '.'");
    ++pos_;
    skip_ws();
    if (!at_end() && peek() != '#') fail("trailing content after '.'");
  }

  Term subject_or_object(bool allow_literal) {
    char c = peek();
    if (c == '<') return Term::iri(iri());
    if (c == '_') return Term::blank(blank_label());
    if (c == '"' && allow_literal) return literal();
    fail(allow_literal ? "expected IRI, blank node or literal" : "expected IRI or blank node");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_;
};

// Minimal input streambuf over a gzFile handle.
class GzStreamBuf : public std::streambuf {
 public:
  explicit GzStreamBuf(const std::filesystem::path& path) : file_(gzopen(path.c_str(), "rb")) {
    if (file_ == nullptr) throw Error("cannot open " + path.string());
  }
  ~GzStreamBuf() override {
    if (file_ != nullptr) gzclose(file_);
  }
  GzStreamBuf(const GzStreamBuf&) = delete;
  GzStreamBuf& operator=(const GzStreamBuf&) = delete;

 protected:
  int_type underflow() override {
    int n = gzread(file_, buffer_.data(), static_cast<unsigned>(buffer_.size()));
    if (n < 0) throw Error("gzip decode failure");
    if (n == 0) return traits_type::eof();
    setg(buffer_.data(), buffer_.data(), buffer_.data() + n);
    return traits_type::to_int_type(buffer_[0]);
  }

 private:
  gzFile file_;
  std::array<char, 1 << 16> buffer_{};
};

bool has_gzip_magic(const std::filesystem::path& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw Error("cannot open " + path.string());
  unsigned char magic[2] = {0, 0};
  probe.read(reinterpret_cast<char*>(magic), 2);
  return probe.gcount() == 2 && magic[0] == 0x1F && magic[1] == 0x8B;
}

}  // namespace

std::string Term::cell() const {
  if (kind == TermKind::kBlankNode) return "_:" + value;
  return value;
}

std::optional<Triple> parse_ntriples_line(std::string_view line, std::size_t line_no) {
  LineCursor cur(line, line_no);
  cur.skip_ws();
  if (cur.at_end() || cur.peek() == '#') return std::nullopt;

  Triple t;
  t.subject = cur.subject_or_object(false);
  cur.skip_ws();
  t.predicate = Term::iri(cur.iri());
  cur.skip_ws();
  t.object = cur.subject_or_object(true);
  cur.skip_ws();
  cur.finish();
  return t;
}

NTriplesReader::NTriplesReader(std::istream& in, ParseMode mode) : in_(in), mode_(mode) {}

std::optional<Triple> NTriplesReader::next() {
  while (std::getline(in_, line_)) {
    ++stats_.total_lines;
    std::string_view view(line_);
    std::size_t first = view.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
      ++stats_.blank_lines;
      continue;
    }
    if (view[first] == '#') {
      ++stats_.comment_lines;
      continue;
    }
    try {
      auto triple = parse_ntriples_line(view, stats_.total_lines);
      ++stats_.triples_parsed;
      if (predicates_seen_.insert(triple->predicate.value).second) {
        stats_.distinct_predicates = predicates_seen_.size();
      }
      return triple;
    } catch (const NTriplesError&) {
      if (mode_ == ParseMode::kStrict) throw;
      ++stats_.lines_skipped;
      skipped_.push_back(stats_.total_lines);
    }
  }
  return std::nullopt;
}

std::vector<Triple> parse_ntriples(std::istream& in, ParseMode mode, ParseStats* stats) {
  NTriplesReader reader(in, mode);
  std::vector<Triple> out;
  while (auto t = reader.next()) out.push_back(std::move(*t));
  if (stats != nullptr) *stats = reader.stats();
  return out;
}

std::vector<Triple> read_ntriples_file(const std::filesystem::path& path, ParseMode mode,
                                       ParseStats* stats) {
  if (has_gzip_magic(path)) {
    GzStreamBuf buf(path);
    std::istream in(&buf);
    return parse_ntriples(in, mode, stats);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return parse_ntriples(in, mode, stats);
}

std::vector<std::string> distinct_predicates(const std::vector<Triple>& triples) {
  std::set<std::string> unique;
  for (const auto& t : triples) unique.insert(t.predicate.value);
  return {unique.begin(), unique.end()};
}

}  // namespace ppa
