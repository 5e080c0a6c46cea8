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

#include "ppa/config_space.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "ppa/error.hpp"

namespace ppa {

namespace {

constexpr std::array<std::string_view, 20> kRoman = {
    "i",  "ii",  "iii",  "iv",  "v",  "vi",  "vii",  "viii",  "ix",  "x",
    "xi", "xii", "xiii", "xiv", "xv", "xvi", "xvii", "xviii", "xix", "xx"};

enum class Alphabet { kLower, kRoman, kArabic, kUpper };

Alphabet alphabet_for(std::size_t position) {
  return static_cast<Alphabet>(position % 4);
}

// Bijective base-26: 0 -> a, 25 -> z, 26 -> aa.
std::string letters(std::size_t index, char base) {
  std::string out;
  std::size_t n = index + 1;
  while (n > 0) {
    --n;
    out.insert(out.begin(), static_cast<char>(base + n % 26));
    n /= 26;
  }
  return out;
}

std::optional<std::size_t> parse_letters(std::string_view token, char base) {
  if (token.empty() || token.size() > 8) return std::nullopt;
  std::size_t n = 0;
  for (char c : token) {
    if (c < base || c > base + 25) return std::nullopt;
    n = n * 26 + static_cast<std::size_t>(c - base) + 1;
  }
  return n - 1;
}

std::optional<std::size_t> parse_decimal(std::string_view token) {
  if (token.empty() || (token.size() > 1 && token[0] == '0')) return std::nullopt;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

std::string position_prefix(std::size_t position) {
  if (position < 4) return {};
  return std::to_string(position + 1) + "_";
}

std::vector<std::string_view> split_dots(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto dot = text.find('.', start);
    parts.push_back(text.substr(start, dot == std::string_view::npos ? dot : dot - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return parts;
}

}  // namespace

std::optional<std::size_t> DimensionSpec::option_index(std::string_view code) const {
  auto it = std::find(options.begin(), options.end(), code);
  if (it == options.end()) return std::nullopt;
  return static_cast<std::size_t>(it - options.begin());
}

ConfigSpace::ConfigSpace(std::vector<DimensionSpec> dimensions) : dimensions_(std::move(dimensions)) {
  std::set<std::string> names;
  for (const auto& dim : dimensions_) {
    if (dim.name.empty()) throw ConfigSpaceError("dimension with empty name");
    if (!names.insert(dim.name).second) throw ConfigSpaceError("duplicate dimension '" + dim.name + "'");
    std::set<std::string> seen;
    for (const auto& opt : dim.options) {
      if (!seen.insert(opt).second) {
        throw ConfigSpaceError("duplicate option '" + opt + "' in dimension '" + dim.name + "'");
      }
    }
  }
}

std::optional<std::size_t> ConfigSpace::dimension_index(std::string_view name) const {
  for (std::size_t i = 0; i < dimensions_.size(); ++i) {
    if (dimensions_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t ConfigSpace::require_dimension(std::string_view name) const {
  auto idx = dimension_index(name);
  if (!idx) throw ConfigSpaceError("unknown dimension '" + std::string(name) + "'");
  return *idx;
}

std::size_t ConfigSpace::size() const noexcept {
  if (dimensions_.empty()) return 0;
  std::size_t n = 1;
  for (const auto& dim : dimensions_) n *= dim.options.size();
  return n;
}

bool ConfigSpace::contains(const Configuration& config) const noexcept {
  if (config.choices.size() != dimensions_.size()) return false;
  for (std::size_t i = 0; i < dimensions_.size(); ++i) {
    if (config.choices[i] >= dimensions_[i].options.size()) return false;
  }
  return true;
}

const std::string& ConfigSpace::option_of(const Configuration& config, std::size_t dim) const {
  return dimensions_.at(dim).options.at(config.choices.at(dim));
}

bool ConfigSpace::operator==(const ConfigSpace& other) const {
  if (dimensions_.size() != other.dimensions_.size()) return false;
  for (std::size_t i = 0; i < dimensions_.size(); ++i) {
    if (dimensions_[i].name != other.dimensions_[i].name ||
        dimensions_[i].options != other.dimensions_[i].options) {
      return false;
    }
  }
  return true;
}

std::vector<Configuration> enumerate(const ConfigSpace& space) {
  if (space.dimension_count() == 0) throw ConfigSpaceError("configuration space has no dimensions");
  for (const auto& dim : space.dimensions()) {
    if (dim.options.empty()) throw ConfigSpaceError("dimension '" + dim.name + "' has no options");
  }
  std::vector<Configuration> out;
  out.reserve(space.size());
  Configuration current{std::vector<std::size_t>(space.dimension_count(), 0)};
  for (;;) {
    out.push_back(current);
    // odometer increment, rightmost dimension fastest
    std::size_t pos = space.dimension_count();
    while (pos > 0) {
      --pos;
      if (++current.choices[pos] < space.dimension(pos).options.size()) break;
      current.choices[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

std::string label_token(std::size_t position, std::size_t option_index) {
  std::string token = position_prefix(position);
  switch (alphabet_for(position)) {
    case Alphabet::kLower:
      token += letters(option_index, 'a');
      break;
    case Alphabet::kRoman:
      if (option_index < kRoman.size()) {
        token += kRoman[option_index];
      } else {
        token += "r" + std::to_string(option_index + 1);
      }
      break;
    case Alphabet::kArabic:
      token += std::to_string(option_index + 1);
      break;
    case Alphabet::kUpper:
      token += letters(option_index, 'A');
      break;
  }
  return token;
}

std::optional<std::size_t> parse_label_token(std::size_t position, std::string_view token) {
  const std::string prefix = position_prefix(position);
  if (token.substr(0, prefix.size()) != prefix) return std::nullopt;
  token.remove_prefix(prefix.size());
  switch (alphabet_for(position)) {
    case Alphabet::kLower:
      return parse_letters(token, 'a');
    case Alphabet::kRoman: {
      if (!token.empty() && token[0] == 'r') {
        auto n = parse_decimal(token.substr(1));
        if (!n || *n <= kRoman.size()) return std::nullopt;
        return *n - 1;
      }
      auto it = std::find(kRoman.begin(), kRoman.end(), token);
      if (it == kRoman.end()) return std::nullopt;
      return static_cast<std::size_t>(it - kRoman.begin());
    }
    case Alphabet::kArabic: {
      auto n = parse_decimal(token);
      if (!n || *n == 0) return std::nullopt;
      return *n - 1;
    }
    case Alphabet::kUpper:
      return parse_letters(token, 'A');
  }
  return std::nullopt;
}

Label encode_label(const ConfigSpace& space, const Configuration& config) {
  if (!space.contains(config)) throw LabelError("configuration is not part of the space");
  std::string text;
  for (std::size_t i = 0; i < config.choices.size(); ++i) {
    if (i > 0) text += '.';
    text += label_token(i, config.choices[i]);
  }
  return Label(std::move(text));
}

Configuration decode_label(const ConfigSpace& space, std::string_view label) {
  auto tokens = split_dots(label);
  if (tokens.size() != space.dimension_count()) {
    throw LabelError("label '" + std::string(label) + "' has " + std::to_string(tokens.size()) +
                     " tokens, space has " + std::to_string(space.dimension_count()) + " dimensions");
  }
  Configuration config;
  config.choices.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto idx = parse_label_token(i, tokens[i]);
    if (!idx || *idx >= space.dimension(i).options.size()) {
      throw LabelError("label '" + std::string(label) + "': token '" + std::string(tokens[i]) +
                       "' is not an option of dimension '" + space.dimension(i).name + "'");
    }
    config.choices.push_back(*idx);
  }
  return config;
}

void validate_filter(const ConfigSpace& space, const SpaceFilter& filter) {
  auto check_refs = [&](const std::map<std::string, std::vector<std::string>>& lists) {
    for (const auto& [name, codes] : lists) {
      const auto& dim = space.dimension(space.require_dimension(name));
      for (const auto& code : codes) {
        if (!dim.option_index(code)) {
          throw ConfigSpaceError("filter references unknown option '" + code + "' of dimension '" + name + "'");
        }
      }
    }
  };
  check_refs(filter.include);
  check_refs(filter.exclude);
  for (const auto& name : filter.remove) space.require_dimension(name);
}

ConfigSpace filter_space(const ConfigSpace& space, const SpaceFilter& filter) {
  std::vector<DimensionSpec> dims;
  for (const auto& dim : space.dimensions()) {
    if (filter.remove.count(dim.name)) continue;
    DimensionSpec reduced{dim.name, {}};
    auto inc = filter.include.find(dim.name);
    auto exc = filter.exclude.find(dim.name);
    for (const auto& opt : dim.options) {
      if (inc != filter.include.end() &&
          std::find(inc->second.begin(), inc->second.end(), opt) == inc->second.end()) {
        continue;
      }
      if (exc != filter.exclude.end() &&
          std::find(exc->second.begin(), exc->second.end(), opt) != exc->second.end()) {
        continue;
      }
      reduced.options.push_back(opt);
    }
    if (reduced.options.empty()) {
      throw ConfigSpaceError("filter leaves dimension '" + dim.name + "' without options");
    }
    dims.push_back(std::move(reduced));
  }
  if (dims.empty()) throw ConfigSpaceError("filter removes every dimension");
  return ConfigSpace(std::move(dims));
}

std::optional<Configuration> translate(const ConfigSpace& from, const Configuration& config,
                                       const ConfigSpace& to) {
  if (from.dimension_count() != to.dimension_count()) {
    throw ConfigSpaceError("cannot translate between spaces with different dimensions");
  }
  Configuration out;
  for (std::size_t i = 0; i < from.dimension_count(); ++i) {
    if (from.dimension(i).name != to.dimension(i).name) {
      throw ConfigSpaceError("cannot translate between spaces with different dimensions");
    }
    auto idx = to.dimension(i).option_index(from.option_of(config, i));
    if (!idx) return std::nullopt;
    out.choices.push_back(*idx);
  }
  return out;
}

}  // namespace ppa
