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

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ppa {

/// One experimental dimension (schema, partitioning, storage, ...). Option order
/// is significant: it fixes the label token of every option.
struct DimensionSpec {
  std::string name;
  std::vector<std::string> options;

  std::optional<std::size_t> option_index(std::string_view code) const;
};

/// A point in the configuration space: one option index per dimension.
struct Configuration {
  std::vector<std::size_t> choices;

  auto operator<=>(const Configuration&) const = default;
};

/// Dot-joined label such as "a.ii.3". Only meaningful relative to its space.
class Label {
 public:
  Label() = default;
  explicit Label(std::string text) : text_(std::move(text)) {}

  const std::string& str() const noexcept { return text_; }

  auto operator<=>(const Label&) const = default;

 private:
  std::string text_;
};

/// Ordered list of dimensions whose Cartesian product is the experiment space.
class ConfigSpace {
 public:
  ConfigSpace() = default;
  /// Throws ConfigSpaceError on duplicate dimension names or duplicate options.
  explicit ConfigSpace(std::vector<DimensionSpec> dimensions);

  const std::vector<DimensionSpec>& dimensions() const noexcept { return dimensions_; }
  std::size_t dimension_count() const noexcept { return dimensions_.size(); }
  const DimensionSpec& dimension(std::size_t i) const { return dimensions_.at(i); }
  std::optional<std::size_t> dimension_index(std::string_view name) const;
  /// Throws ConfigSpaceError when the dimension does not exist.
  std::size_t require_dimension(std::string_view name) const;

  /// Product of option counts (0 when any dimension is empty).
  std::size_t size() const noexcept;

  bool contains(const Configuration& config) const noexcept;
  /// Option code chosen by `config` in dimension `dim`.
  const std::string& option_of(const Configuration& config, std::size_t dim) const;

  bool operator==(const ConfigSpace& other) const;

 private:
  std::vector<DimensionSpec> dimensions_;
};

/// Every configuration exactly once, leftmost dimension varying slowest.
std::vector<Configuration> enumerate(const ConfigSpace& space);

/// Token alphabet by dimension position: letters, roman numerals, arabic
/// numerals, uppercase letters; positions past the fourth repeat the cycle with
/// a "<position>_" prefix (position is 1-based).
std::string label_token(std::size_t position, std::size_t option_index);
std::optional<std::size_t> parse_label_token(std::size_t position, std::string_view token);

Label encode_label(const ConfigSpace& space, const Configuration& config);
/// Throws LabelError on wrong token count or tokens outside the dimension.
Configuration decode_label(const ConfigSpace& space, std::string_view label);

/// Per-dimension include/exclude lists (option codes) plus dimensions to drop.
struct SpaceFilter {
  std::map<std::string, std::vector<std::string>> include;
  std::map<std::string, std::vector<std::string>> exclude;
  std::set<std::string> remove;

  bool empty() const noexcept { return include.empty() && exclude.empty() && remove.empty(); }
};

/// Throws ConfigSpaceError when the filter names a dimension or option the
/// space does not have.
void validate_filter(const ConfigSpace& space, const SpaceFilter& filter);

/// Reduced space; surviving options keep their original relative order.
/// References to absent dimensions/options are ignored, so applying a filter
/// twice equals applying it once. Throws ConfigSpaceError when a dimension
/// would be left without options or every dimension is removed.
ConfigSpace filter_space(const ConfigSpace& space, const SpaceFilter& filter);

/// Maps a configuration of `from` onto `to` by option codes. `to` must have the
/// same dimension names; returns nullopt when an option is not present in `to`.
std::optional<Configuration> translate(const ConfigSpace& from, const Configuration& config,
                                       const ConfigSpace& to);

}  // namespace ppa
