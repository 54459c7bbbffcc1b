// Copyright 2026 The fullerene-gate Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fgate {

/// Rejection of a configuration value. `key()` names the offending entry.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Flat `key = value` document. Lines starting with '#' are comments.
///
/// Entries are consumed by the loaders as they are interpreted, so anything
/// left over at the end is an unknown key.
class KeyValueDocument {
 public:
  static KeyValueDocument parse(std::string_view text);

  bool contains(std::string_view key) const;
  std::optional<std::string> take(std::string_view key);
  std::optional<double> take_number(std::string_view key);
  std::optional<bool> take_bool(std::string_view key);

  /// Keys not yet taken, in document order.
  std::vector<std::string> remaining_keys() const;
  void reject_remaining() const;

 private:
  struct Entry {
    std::string key;
    std::string value;
    bool taken = false;
  };
  std::vector<Entry> entries_;
};

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);
/// Strict full-string parse; nullopt on any trailing garbage.
std::optional<double> parse_double(std::string_view text);

}  // namespace fgate
