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

#include "fgate/config_text.hpp"

#include <charconv>
#include <cmath>

namespace fgate {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

KeyValueDocument KeyValueDocument::parse(std::string_view text) {
  KeyValueDocument doc;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("", "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) {
      throw ConfigError("", "line " + std::to_string(line_no) + ": empty key");
    }
    if (doc.contains(key)) throw ConfigError(key, "duplicate key");
    doc.entries_.push_back({std::move(key), std::move(value), false});
  }
  return doc;
}

bool KeyValueDocument::contains(std::string_view key) const {
  for (const auto& e : entries_) {
    if (e.key == key) return true;
  }
  return false;
}

std::optional<std::string> KeyValueDocument::take(std::string_view key) {
  for (auto& e : entries_) {
    if (e.key == key) {
      e.taken = true;
      return e.value;
    }
  }
  return std::nullopt;
}

std::optional<double> KeyValueDocument::take_number(std::string_view key) {
  auto raw = take(key);
  if (!raw) return std::nullopt;
  auto v = parse_double(*raw);
  if (!v || !std::isfinite(*v)) {
    throw ConfigError(std::string(key), "expected a finite number, got '" + *raw + "'");
  }
  return v;
}

std::optional<bool> KeyValueDocument::take_bool(std::string_view key) {
  auto raw = take(key);
  if (!raw) return std::nullopt;
  if (*raw == "true" || *raw == "1") return true;
  if (*raw == "false" || *raw == "0") return false;
  throw ConfigError(std::string(key), "expected true or false, got '" + *raw + "'");
}

std::vector<std::string> KeyValueDocument::remaining_keys() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) {
    if (!e.taken) out.push_back(e.key);
  }
  return out;
}

void KeyValueDocument::reject_remaining() const {
  for (const auto& e : entries_) {
    if (!e.taken) throw ConfigError(e.key, "unknown key");
  }
}

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::optional<double> parse_double(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

}  // namespace fgate
