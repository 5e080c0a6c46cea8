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

#include "ppa/storage.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <limits>

#include "ppa/csv.hpp"
#include "ppa/error.hpp"

namespace ppa {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kMagic = "PCOL1";
constexpr std::uint32_t kNullLength = 0xFFFFFFFFu;

void put_u16(std::string& out, std::uint16_t v) {
  out += static_cast<char>(v & 0xFF);
  out += static_cast<char>((v >> 8) & 0xFF);
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out += static_cast<char>((v >> (8 * i)) & 0xFF);
}

class ByteReader {
 public:
  ByteReader(std::string_view data, const std::string& name) : data_(data), name_(name) {}

  std::string_view take(std::size_t n) {
    if (data_.size() - pos_ < n) throw StorageError("cols-bin '" + name_ + "': truncated input");
    auto out = data_.substr(pos_, n);
    pos_ += n;
    return out;
  }
  std::uint16_t u16() {
    auto b = take(2);
    return static_cast<std::uint16_t>(static_cast<unsigned char>(b[0]) |
                                      (static_cast<unsigned char>(b[1]) << 8));
  }
  std::uint32_t u32() {
    auto b = take(4);
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(b[i]);
    return v;
  }
  bool done() const { return pos_ == data_.size(); }

 private:
  std::string_view data_;
  const std::string& name_;
  std::size_t pos_ = 0;
};

std::string lower(std::string_view text) {
  std::string out(text);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string_view to_string(StorageFormat format) {
  return format == StorageFormat::kRowsCsv ? "rows-csv" : "cols-bin";
}

StorageFormat parse_storage_format(std::string_view name) {
  const auto n = lower(name);
  if (n == "rows-csv" || n == "csv" || n == "avro") return StorageFormat::kRowsCsv;
  if (n == "cols-bin" || n == "pcol" || n == "orc" || n == "parquet") return StorageFormat::kColsBin;
  throw StorageError("no native serializer bound to storage format '" + std::string(name) + "'");
}

std::string_view file_extension(StorageFormat format) {
  return format == StorageFormat::kRowsCsv ? "csv" : "pcol";
}

std::string encode_rows_csv(const RelTable& table) {
  table.check_shape();
  std::string out;
  csv::append_row(out, table.columns);
  for (const auto& row : table.rows) csv::append_row(out, row);
  return out;
}

RelTable decode_rows_csv(std::string_view data, std::string name) {
  RelTable table{std::move(name), {}, {}};
  csv::Reader reader(data);
  std::vector<Cell> record;
  if (!reader.next(record)) throw StorageError("rows-csv '" + table.name + "': missing header");
  for (auto& c : record) table.columns.push_back(c.value_or(std::string()));
  while (reader.next(record)) {
    if (record.size() != table.columns.size()) {
      throw StorageError("rows-csv '" + table.name + "' line " + std::to_string(reader.line()) +
                         ": expected " + std::to_string(table.columns.size()) + " fields");
    }
    table.rows.push_back(record);
  }
  return table;
}

std::string encode_cols_bin(const RelTable& table) {
  table.check_shape();
  if (table.columns.size() > std::numeric_limits<std::uint32_t>::max() ||
      table.rows.size() >= kNullLength) {
    throw StorageError("table '" + table.name + "' too large for cols-bin");
  }
  std::string out(kMagic);
  put_u32(out, static_cast<std::uint32_t>(table.columns.size()));
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    const auto& name = table.columns[c];
    if (name.size() > 0xFFFF) throw StorageError("column name too long for cols-bin");
    put_u16(out, static_cast<std::uint16_t>(name.size()));
    out += name;
    put_u32(out, static_cast<std::uint32_t>(table.rows.size()));
    for (const auto& row : table.rows) {
      const auto& cell = row[c];
      if (!cell) {
        put_u32(out, kNullLength);
        continue;
      }
      if (cell->size() >= kNullLength) throw StorageError("value too long for cols-bin");
      put_u32(out, static_cast<std::uint32_t>(cell->size()));
      out += *cell;
    }
  }
  return out;
}

RelTable decode_cols_bin(std::string_view data, std::string name) {
  RelTable table{std::move(name), {}, {}};
  ByteReader in(data, table.name);
  if (data.size() < kMagic.size() || in.take(kMagic.size()) != kMagic) {
    throw StorageError("cols-bin '" + table.name + "': bad magic");
  }
  const std::uint32_t columns = in.u32();
  std::vector<std::vector<Cell>> values(columns);
  for (std::uint32_t c = 0; c < columns; ++c) {
    const std::uint16_t len = in.u16();
    table.columns.emplace_back(in.take(len));
    const std::uint32_t rows = in.u32();
    if (c > 0 && rows != values[0].size()) {
      throw StorageError("cols-bin '" + table.name + "': columns disagree on row count");
    }
    values[c].reserve(rows);
    for (std::uint32_t r = 0; r < rows; ++r) {
      const std::uint32_t vlen = in.u32();
      if (vlen == kNullLength) values[c].emplace_back(std::nullopt);
      else values[c].emplace_back(std::string(in.take(vlen)));
    }
  }
  if (!in.done()) throw StorageError("cols-bin '" + table.name + "': trailing bytes");
  const std::size_t rows = columns == 0 ? 0 : values[0].size();
  table.rows.assign(rows, Row(columns));
  for (std::uint32_t c = 0; c < columns; ++c) {
    for (std::size_t r = 0; r < rows; ++r) table.rows[r][c] = std::move(values[c][r]);
  }
  return table;
}

std::string encode_table(const RelTable& table, StorageFormat format) {
  return format == StorageFormat::kRowsCsv ? encode_rows_csv(table) : encode_cols_bin(table);
}

RelTable decode_table(std::string_view data, StorageFormat format, std::string name) {
  return format == StorageFormat::kRowsCsv ? decode_rows_csv(data, std::move(name))
                                           : decode_cols_bin(data, std::move(name));
}

std::size_t StorageEntry::total_rows() const {
  std::size_t n = 0;
  for (auto r : rows) n += r;
  return n;
}

const StorageEntry* StorageManifest::find(std::string_view table) const {
  for (const auto& e : entries) {
    if (e.table == table) return &e;
  }
  return nullptr;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StorageError("cannot open " + path.string());
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw StorageError("read failure on " + path.string());
  return data;
}

void write_file(const fs::path& path, std::string_view data) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw StorageError("cannot write " + path.string());
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw StorageError("write failure on " + path.string());
}

StorageEntry write_partitioned(const PartitionedTable& table, StorageFormat format, const fs::path& dir) {
  StorageEntry entry{table.source, format, {}, {}};
  for (std::size_t k = 0; k < table.partitions.size(); ++k) {
    RelTable part{table.source, table.columns, table.partitions[k]};
    std::string rel = table.source + "/part-" + std::to_string(k) + "." + std::string(file_extension(format));
    write_file(dir / rel, encode_table(part, format));
    entry.files.push_back(std::move(rel));
    entry.rows.push_back(part.rows.size());
  }
  return entry;
}

StorageManifest write_tables(const std::vector<PartitionedTable>& tables, StorageFormat format,
                             const fs::path& dir) {
  StorageManifest manifest{dir, {}};
  for (const auto& t : tables) manifest.entries.push_back(write_partitioned(t, format, dir));
  write_manifest_file(manifest);
  return manifest;
}

void write_manifest_file(const StorageManifest& manifest) {
  std::string out;
  csv::append_row(out, std::vector<std::string>{"table", "format", "partition", "path", "rows"});
  for (const auto& e : manifest.entries) {
    for (std::size_t k = 0; k < e.files.size(); ++k) {
      csv::append_row(out, std::vector<std::string>{e.table, std::string(to_string(e.format)),
                                                    std::to_string(k), e.files[k], std::to_string(e.rows[k])});
    }
  }
  write_file(manifest.root / "manifest.csv", out);
}

StorageManifest read_manifest(const fs::path& dir) {
  const auto path = dir / "manifest.csv";
  if (!fs::exists(path)) throw StorageError("no manifest at " + path.string());
  auto rows = csv::parse(read_file(path));
  if (rows.empty() || rows[0] != std::vector<std::string>{"table", "format", "partition", "path", "rows"}) {
    throw StorageError("bad manifest header in " + path.string());
  }
  StorageManifest manifest{dir, {}};
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() != 5) throw StorageError("bad manifest row " + std::to_string(i) + " in " + path.string());
    std::size_t part = 0;
    std::size_t count = 0;
    try {
      part = std::stoul(r[2]);
      count = std::stoul(r[4]);
    } catch (const std::exception&) {
      throw StorageError("bad manifest row " + std::to_string(i) + " in " + path.string());
    }
    if (manifest.entries.empty() || manifest.entries.back().table != r[0]) {
      manifest.entries.push_back(StorageEntry{r[0], parse_storage_format(r[1]), {}, {}});
    }
    auto& entry = manifest.entries.back();
    if (part != entry.files.size()) throw StorageError("manifest partitions out of order for " + r[0]);
    entry.files.push_back(r[3]);
    entry.rows.push_back(count);
  }
  return manifest;
}

PartitionedTable read_partitioned(const StorageManifest& manifest, std::string_view table) {
  const StorageEntry* entry = manifest.find(table);
  if (entry == nullptr) throw StorageError("table '" + std::string(table) + "' not in manifest");
  PartitionedTable out{entry->table, {}, {}};
  for (std::size_t k = 0; k < entry->files.size(); ++k) {
    RelTable part = decode_table(read_file(manifest.root / entry->files[k]), entry->format, entry->table);
    if (k == 0) out.columns = part.columns;
    else if (part.columns != out.columns) throw StorageError("partition columns differ for " + entry->table);
    if (part.rows.size() != entry->rows[k]) {
      throw StorageError("row count mismatch in " + entry->files[k]);
    }
    out.partitions.push_back(std::move(part.rows));
  }
  return out;
}

RelTable read_table(const StorageManifest& manifest, std::string_view table) {
  return read_partitioned(manifest, table).concatenated();
}

}  // namespace ppa
