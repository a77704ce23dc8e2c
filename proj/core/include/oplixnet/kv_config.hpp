// Copyright 2026 The OplixNet Authors
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

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace oplixnet {

/// Value in a TOML-style `key = value` file: a quoted string, a number,
/// true/false, or a bracketed list of those.
struct KvValue {
  enum class Type { String, Number, Bool, List };
  Type type = Type::String;
  std::string text;
  double number = 0.0;
  bool boolean = false;
  std::vector<KvValue> items;

  const std::string& as_string(const std::string& key) const;
  double as_number(const std::string& key) const;
  int as_int(const std::string& key) const;
  bool as_bool(const std::string& key) const;
  const std::vector<KvValue>& as_list(const std::string& key) const;
};

using KvTable = std::map<std::string, KvValue>;

/// Parses `key = value` lines; `#` starts a comment; blank lines ignored.
/// Section headers like `[model]` are accepted and prefix keys as
/// "model.key". Throws ConfigError with the offending line number.
KvTable parse_kv(const std::string& text);
KvTable read_kv_file(const std::filesystem::path& path);

}  // namespace oplixnet
