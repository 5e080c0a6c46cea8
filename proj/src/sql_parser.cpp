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

#include <cctype>
#include <set>

#include "ppa/error.hpp"
#include "ppa/sql.hpp"

namespace ppa::sql {

namespace {

enum class Tok { kIdent, kString, kNumber, kComma, kDot, kStar, kOp, kSemicolon, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

bool is_keyword(std::string_view word) {
  static const std::set<std::string> kKeywords = {"SELECT", "FROM", "AS", "JOIN", "INNER",
                                                  "ON", "WHERE", "AND"};
  return kKeywords.count(upper(word)) > 0;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      out.push_back({Tok::kIdent, std::string(text.substr(start, i - start)), start});
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '-' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      ++i;
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.')) ++i;
      out.push_back({Tok::kNumber, std::string(text.substr(start, i - start)), start});
    } else if (c == '\'') {
      std::string value;
      ++i;
      for (;;) {
        if (i >= text.size()) throw SqlSyntaxError(start, "unterminated string literal");
        if (text[i] == '\'') {
          if (i + 1 < text.size() && text[i + 1] == '\'') {
            value += '\'';
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        value += text[i++];
      }
      out.push_back({Tok::kString, std::move(value), start});
    } else if (c == ',') {
      out.push_back({Tok::kComma, ",", i++});
    } else if (c == '.') {
      out.push_back({Tok::kDot, ".", i++});
    } else if (c == '*') {
      out.push_back({Tok::kStar, "*", i++});
    } else if (c == ';') {
      out.push_back({Tok::kSemicolon, ";", i++});
    } else if (c == '=' || c == '<' || c == '>' || c == '!') {
      std::string op(1, c);
      ++i;
      if (i < text.size() && (text[i] == '=' || (c == '<' && text[i] == '>'))) op += text[i++];
      if (op == "!") throw SqlSyntaxError(start, "expected '!='");
      out.push_back({Tok::kOp, op, start});
    } else {
      throw SqlSyntaxError(start, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::kEnd, "", text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  QueryAst query() {
    QueryAst ast;
    expect_keyword("SELECT");
    if (peek().kind == Tok::kStar) {
      ast.star = true;
      advance();
    } else {
      ast.projections.push_back(column("expected column list or '*'"));
      while (peek().kind == Tok::kComma) {
        advance();
        ast.projections.push_back(column("expected column"));
      }
    }
    expect_keyword("FROM");
    ast.base = table_ref();
    for (;;) {
      if (at_keyword("INNER")) {
        advance();
        if (!at_keyword("JOIN")) fail("expected JOIN after INNER");
      }
      if (!at_keyword("JOIN")) break;
      advance();
      JoinClause join;
      join.table = table_ref();
      expect_keyword("ON");
      join.left = column("expected join column");
      if (peek().kind != Tok::kOp || peek().text != "=") fail("joins only support '='");
      advance();
      join.right = column("expected join column");
      ast.joins.push_back(std::move(join));
    }
    if (at_keyword("WHERE")) {
      advance();
      ast.filters.push_back(predicate());
      while (at_keyword("AND")) {
        advance();
        ast.filters.push_back(predicate());
      }
    }
    if (peek().kind == Tok::kSemicolon) advance();
    if (peek().kind != Tok::kEnd) fail("unexpected '" + peek().text + "'");
    return ast;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const { throw SqlSyntaxError(peek().offset, what); }

  bool at_keyword(std::string_view kw) const {
    return peek().kind == Tok::kIdent && upper(peek().text) == kw;
  }
  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) fail("expected " + std::string(kw));
    advance();
  }
  bool at_identifier() const { return peek().kind == Tok::kIdent && !is_keyword(peek().text); }
  std::string identifier(const std::string& what) {
    if (!at_identifier()) fail(what);
    return advance().text;
  }

  ColumnRef column(const std::string& what) {
    ColumnRef ref;
    ref.offset = peek().offset;
    std::string first = identifier(what);
    if (peek().kind == Tok::kDot) {
      advance();
      ref.qualifier = std::move(first);
      ref.column = identifier("expected column name after '.'");
    } else {
      ref.column = std::move(first);
    }
    return ref;
  }

  TableRef table_ref() {
    TableRef ref;
    ref.table = identifier("expected table name");
    if (at_keyword("AS")) {
      advance();
      ref.alias = identifier("expected alias after AS");
    } else if (at_identifier()) {
      ref.alias = advance().text;
    } else {
      ref.alias = ref.table;
    }
    return ref;
  }

  Filter predicate() {
    Filter f;
    f.column = column("expected column in predicate");
    if (peek().kind != Tok::kOp) fail("expected comparison operator");
    const std::string op = advance().text;
    if (op == "=") f.op = CompareOp::kEq;
    else if (op == "!=" || op == "<>") f.op = CompareOp::kNe;
    else if (op == "<") f.op = CompareOp::kLt;
    else if (op == "<=") f.op = CompareOp::kLe;
    else if (op == ">") f.op = CompareOp::kGt;
    else if (op == ">=") f.op = CompareOp::kGe;
    else fail("unknown operator '" + op + "'");
    if (peek().kind != Tok::kString && peek().kind != Tok::kNumber) fail("expected literal");
    f.literal = advance().text;
    return f;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view to_string(CompareOp op) {
  switch (op) {
    case CompareOp::kEq: return "=";
    case CompareOp::kNe: return "!=";
    case CompareOp::kLt: return "<";
    case CompareOp::kLe: return "<=";
    case CompareOp::kGt: return ">";
    case CompareOp::kGe: return ">=";
  }
  return "?";
}

QueryAst parse_sql(std::string_view text) { return Parser(tokenize(text)).query(); }

void check_aliases(const QueryAst& ast) {
  std::set<std::string> aliases{ast.base.alias};
  for (const auto& j : ast.joins) {
    if (!aliases.insert(j.table.alias).second) throw SqlResolveError("duplicate alias '" + j.table.alias + "'");
  }
  auto check = [&](const ColumnRef& ref) {
    if (!ref.qualifier.empty() && !aliases.count(ref.qualifier)) {
      throw SqlResolveError("unknown alias '" + ref.qualifier + "' at offset " + std::to_string(ref.offset));
    }
  };
  for (const auto& p : ast.projections) check(p);
  for (const auto& j : ast.joins) {
    check(j.left);
    check(j.right);
  }
  for (const auto& f : ast.filters) check(f.column);
}

}  // namespace ppa::sql
