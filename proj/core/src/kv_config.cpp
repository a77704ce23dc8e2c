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

#include "oplixnet/kv_config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "oplixnet/errors.hpp"

namespace oplixnet {
namespace {

class ValueParser {
 public:
  ValueParser(std::string_view s, int line) : s_(s), line_(line) {}

  KvValue parse_all() {
    KvValue v = parse_value();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return v;
  }

 private:
  KvValue parse_value() {
    skip_ws();
    if (pos_ >= s_.size()) fail("missing value");
    const char c = s_[pos_];
    if (c == '"' || c == '\'') return parse_string();
    if (c == '[') return parse_list();
    return parse_bare();
  }

  KvValue parse_string() {
    const char quote = s_[pos_++];
    KvValue v;
    v.type = KvValue::Type::String;
    while (pos_ < s_.size() && s_[pos_] != quote) {
      if (s_[pos_] == '\\' && pos_ + 1 < s_.size()) ++pos_;
      v.text.push_back(s_[pos_++]);
    }
    if (pos_ >= s_.size()) fail("unterminated string");
    ++pos_;
    return v;
  }

  KvValue parse_list() {
    ++pos_;
    KvValue v;
    v.type = KvValue::Type::List;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ']') {
      ++pos_;
      return v;
    }
    while (true) {
      v.items.push_back(parse_value());
      skip_ws();
      if (pos_ >= s_.size()) fail("unterminated list");
      if (s_[pos_] == ',') {
        ++pos_;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ']') {
          ++pos_;
          return v;
        }
        continue;
      }
      if (s_[pos_] == ']') {
        ++pos_;
        return v;
      }
      fail("expected ',' or ']' in list");
    }
  }

  KvValue parse_bare() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ']' &&
           !std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
    const std::string_view tok = s_.substr(start, pos_ - start);
    KvValue v;
    if (tok == "true" || tok == "false") {
      v.type = KvValue::Type::Bool;
      v.boolean = tok == "true";
      return v;
    }
    double d = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), d);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(d)) {
      fail("cannot parse value '" + std::string(tok) + "'");
    }
    v.type = KvValue::Type::Number;
    v.number = d;
    v.text = std::string(tok);
    return v;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ConfigError("config line " + std::to_string(line_) + ": " + msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
};

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Drops a trailing '#' comment that is not inside quotes.
std::string strip_comment(const std::string& line) {
  char quote = 0;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quote) {
      if (c == quote) quote = 0;
    } else if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '#') {
      return line.substr(0, i);
    }
  }
  return line;
}

}  // namespace

const std::string& KvValue::as_string(const std::string& key) const {
  if (type != Type::String) throw ConfigError("config key '" + key + "' must be a string");
  return text;
}

double KvValue::as_number(const std::string& key) const {
  if (type != Type::Number) throw ConfigError("config key '" + key + "' must be a number");
  return number;
}

int KvValue::as_int(const std::string& key) const {
  const double d = as_number(key);
  if (d != std::floor(d)) throw ConfigError("config key '" + key + "' must be an integer");
  return static_cast<int>(d);
}

bool KvValue::as_bool(const std::string& key) const {
  if (type != Type::Bool) throw ConfigError("config key '" + key + "' must be true/false");
  return boolean;
}

const std::vector<KvValue>& KvValue::as_list(const std::string& key) const {
  if (type != Type::List) throw ConfigError("config key '" + key + "' must be a list");
  return items;
}

KvTable parse_kv(const std::string& text) {
  KvTable table;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']' &&
        line.find('=') == std::string::npos) {
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    std::string key = trim(std::string_view(line).substr(0, eq));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    }
    if (!section.empty()) key = section + "." + key;
    ValueParser p(std::string_view(line).substr(eq + 1), line_no);
    table[key] = p.parse_all();
  }
  return table;
}

KvTable read_kv_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_kv(ss.str());
}

}  // namespace oplixnet
