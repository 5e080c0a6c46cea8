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

#include "ppa/schema.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "ppa/error.hpp"

namespace ppa {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

void require_st(const RelTable& st) {
  if (st.columns != std::vector<std::string>{"s", "p", "o"}) {
    throw SchemaError("table '" + st.name + "' is not a triples table (s, p, o)");
  }
}

// Predicate IRIs of an ST table, sorted.
std::vector<std::string> st_predicates(const RelTable& st) {
  std::vector<std::string> preds;
  std::unordered_set<std::string> seen;
  for (const auto& row : st.rows) {
    if (row[1] && seen.insert(*row[1]).second) preds.push_back(*row[1]);
  }
  std::sort(preds.begin(), preds.end());
  return preds;
}

}  // namespace

std::optional<std::size_t> RelTable::column_index(std::string_view column) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == column) return i;
  }
  return std::nullopt;
}

void RelTable::check_shape() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != columns.size()) {
      throw SchemaError("table '" + name + "' row " + std::to_string(i) + " has " +
                        std::to_string(rows[i].size()) + " values, expected " +
                        std::to_string(columns.size()));
    }
  }
}

std::string_view to_string(SchemaKind kind) {
  switch (kind) {
    case SchemaKind::kST: return "st";
    case SchemaKind::kVP: return "vp";
    case SchemaKind::kWPT: return "wpt";
    case SchemaKind::kExtVP: return "extvp";
  }
  return "?";
}

SchemaKind parse_schema_kind(std::string_view code) {
  const auto c = lower(code);
  if (c == "st") return SchemaKind::kST;
  if (c == "vp") return SchemaKind::kVP;
  if (c == "wpt") return SchemaKind::kWPT;
  if (c == "extvp") return SchemaKind::kExtVP;
  if (c == "pt") throw SchemaError("PT generation unsupported");
  throw SchemaError("unknown schema '" + std::string(code) + "'");
}

const RelTable* SchemaSet::find(std::string_view name) const {
  for (const auto& t : tables) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

std::size_t SchemaSet::total_rows() const {
  std::size_t n = 0;
  for (const auto& t : tables) n += t.rows.size();
  return n;
}

std::string_view to_string(JoinKind kind) {
  switch (kind) {
    case JoinKind::kSS: return "SS";
    case JoinKind::kOS: return "OS";
    case JoinKind::kSO: return "SO";
  }
  return "?";
}

JoinKind parse_join_kind(std::string_view text) {
  const auto c = lower(text);
  if (c == "ss") return JoinKind::kSS;
  if (c == "os") return JoinKind::kOS;
  if (c == "so") return JoinKind::kSO;
  throw SchemaError("unknown ExtVP join kind '" + std::string(text) + "'");
}

void ExtVpParams::validate() const {
  if (join_kinds.empty()) throw SchemaError("ExtVP needs at least one join kind");
  if (!(selectivity_threshold > 0.0 && selectivity_threshold <= 1.0)) {
    throw SchemaError("ExtVP selectivity threshold must be in (0, 1]");
  }
}

std::string sanitize_name(std::string_view iri) {
  if (!iri.empty() && iri.front() == '<') iri.remove_prefix(1);
  if (!iri.empty() && iri.back() == '>') iri.remove_suffix(1);
  auto cut = iri.find_last_of("/#");
  std::string_view local = cut == std::string_view::npos ? iri : iri.substr(cut + 1);
  // IRIs ending in a separator fall back to the whole IRI
  if (local.empty()) local = iri;
  std::string out;
  out.reserve(local.size() + 1);
  for (char c : local) {
    out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  }
  if (out.empty()) out = "_";
  if (std::isdigit(static_cast<unsigned char>(out.front()))) out.insert(out.begin(), '_');
  return out;
}

void NameRegistry::reserve(std::string name) { taken_[std::move(name)] = true; }

const std::string& NameRegistry::assign(const std::string& key, std::string_view base) {
  if (auto it = by_key_.find(key); it != by_key_.end()) return manifest_[it->second].second;
  std::string candidate(base);
  for (std::size_t suffix = 1; taken_.count(candidate); ++suffix) {
    candidate = std::string(base) + "_" + std::to_string(suffix);
  }
  taken_[candidate] = true;
  by_key_[key] = manifest_.size();
  manifest_.emplace_back(key, std::move(candidate));
  return manifest_.back().second;
}

RelTable gen_st(const std::vector<Triple>& triples) {
  RelTable st{"st", {"s", "p", "o"}, {}};
  st.rows.reserve(triples.size());
  for (const auto& t : triples) {
    st.rows.push_back({t.subject.cell(), t.predicate.cell(), t.object.cell()});
  }
  return st;
}

SchemaSet gen_vp(const RelTable& st) {
  require_st(st);
  SchemaSet out{SchemaKind::kVP, {}, {}};
  NameRegistry names;
  std::unordered_map<std::string, std::size_t> table_of;
  for (const auto& pred : st_predicates(st)) {
    table_of[pred] = out.tables.size();
    out.tables.push_back(RelTable{names.assign(pred, sanitize_name(pred)), {"s", "o"}, {}});
  }
  for (const auto& row : st.rows) {
    out.tables[table_of.at(*row[1])].rows.push_back({row[0], row[2]});
  }
  out.name_manifest = names.manifest();
  return out;
}

SchemaSet gen_wpt(const RelTable& st) {
  require_st(st);
  const auto preds = st_predicates(st);
  NameRegistry names;
  names.reserve("s");
  RelTable wpt{"wpt", {"s"}, {}};
  std::unordered_map<std::string, std::size_t> col_of;
  for (const auto& pred : preds) {
    col_of[pred] = wpt.columns.size();
    wpt.columns.push_back(names.assign(pred, sanitize_name(pred)));
  }

  // subject -> per-column object lists, subjects in first-appearance order
  std::vector<std::string> subjects;
  std::unordered_map<std::string, std::vector<std::vector<std::string>>> values;
  for (const auto& row : st.rows) {
    auto [it, inserted] = values.try_emplace(*row[0]);
    if (inserted) {
      subjects.push_back(*row[0]);
      it->second.resize(wpt.columns.size());
    }
    it->second[col_of.at(*row[1])].push_back(row[2].value_or(std::string()));
  }

  for (const auto& subject : subjects) {
    const auto& cols = values.at(subject);
    std::size_t height = 0;
    for (const auto& v : cols) height = std::max(height, v.size());
    for (std::size_t k = 0; k < height; ++k) {
      Row r(wpt.columns.size());
      r[0] = subject;
      for (std::size_t c = 1; c < cols.size(); ++c) {
        if (k < cols[c].size()) r[c] = cols[c][k];
      }
      wpt.rows.push_back(std::move(r));
    }
  }
  return SchemaSet{SchemaKind::kWPT, {std::move(wpt)}, names.manifest()};
}

SchemaSet gen_extvp(const SchemaSet& vp, const ExtVpParams& params) {
  params.validate();
  if (vp.kind != SchemaKind::kVP) throw SchemaError("ExtVP generation needs a VP schema");
  if (vp.name_manifest.size() != vp.tables.size()) throw SchemaError("VP manifest does not match its tables");

  // key sets per VP table, by column (0 = s, 1 = o)
  std::vector<std::array<std::unordered_set<std::string>, 2>> keys(vp.tables.size());
  for (std::size_t t = 0; t < vp.tables.size(); ++t) {
    for (const auto& row : vp.tables[t].rows) {
      keys[t][0].insert(row[0].value_or(""));
      keys[t][1].insert(row[1].value_or(""));
    }
  }

  NameRegistry names;
  for (const auto& t : vp.tables) names.reserve(t.name);
  SchemaSet out{SchemaKind::kExtVP, {}, {}};
  for (std::size_t a = 0; a < vp.tables.size(); ++a) {
    const auto& left = vp.tables[a];
    if (left.rows.empty()) continue;
    for (std::size_t b = 0; b < vp.tables.size(); ++b) {
      for (JoinKind kind : params.join_kinds) {
        if (kind == JoinKind::kSS && a == b) continue;
        // column of the left table and key set of the right table
        std::size_t left_col = kind == JoinKind::kOS ? 1 : 0;
        const auto& right_keys = keys[b][kind == JoinKind::kSO ? 1 : 0];
        RelTable reduced{{}, {"s", "o"}, {}};
        for (const auto& row : left.rows) {
          if (row[left_col] && right_keys.count(*row[left_col])) reduced.rows.push_back(row);
        }
        if (reduced.rows.empty()) continue;
        if (params.selectivity_threshold < 1.0 &&
            static_cast<double>(reduced.rows.size()) / static_cast<double>(left.rows.size()) >
                params.selectivity_threshold) {
          continue;
        }
        const std::string kind_name(to_string(kind));
        const std::string key = vp.name_manifest[a].first + "|" + kind_name + "|" + vp.name_manifest[b].first;
        reduced.name = names.assign(key, left.name + "__" + lower(kind_name) + "__" + vp.tables[b].name);
        out.tables.push_back(std::move(reduced));
      }
    }
  }
  out.name_manifest = names.manifest();
  return out;
}

SchemaSet build_schema(SchemaKind kind, const std::vector<Triple>& triples, const ExtVpParams& params) {
  RelTable st = gen_st(triples);
  switch (kind) {
    case SchemaKind::kST:
      return SchemaSet{SchemaKind::kST, {std::move(st)}, {}};
    case SchemaKind::kVP:
      return gen_vp(st);
    case SchemaKind::kWPT:
      return gen_wpt(st);
    case SchemaKind::kExtVP: {
      SchemaSet vp = gen_vp(st);
      SchemaSet ext = gen_extvp(vp, params);
      SchemaSet merged{SchemaKind::kExtVP, std::move(vp.tables), std::move(vp.name_manifest)};
      for (auto& t : ext.tables) merged.tables.push_back(std::move(t));
      for (auto& entry : ext.name_manifest) merged.name_manifest.push_back(std::move(entry));
      return merged;
    }
  }
  throw SchemaError("unknown schema kind");
}

}  // namespace ppa
