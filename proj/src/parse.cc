// Copyright 2026 The Subcheck Authors
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

#include "subcheck/parse.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "subcheck/errors.h"

namespace subcheck {
namespace {

enum class Tok { kLBrace, kRBrace, kComma, kTilde, kSlash, kColon, kName, kNewline, kEnd };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::kLBrace: return "'{'";
    case Tok::kRBrace: return "'}'";
    case Tok::kComma: return "','";
    case Tok::kTilde: return "'~'";
    case Tok::kSlash: return "'/'";
    case Tok::kColon: return "':'";
    case Tok::kName: return "name";
    case Tok::kNewline: return "end of line";
    case Tok::kEnd: return "end of input";
  }
  return "token";
}

bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blanks();
    const std::size_t line = line_;
    const std::size_t column = column_;
    if (pos_ >= text_.size()) return {Tok::kEnd, {}, line, column};

    const char c = text_[pos_];
    auto single = [&](Tok kind) {
      Token t{kind, text_.substr(pos_, 1), line, column};
      advance();
      return t;
    };
    switch (c) {
      case '{': return single(Tok::kLBrace);
      case '}': return single(Tok::kRBrace);
      case ',': return single(Tok::kComma);
      case '~': return single(Tok::kTilde);
      case '/': return single(Tok::kSlash);
      case ':': return single(Tok::kColon);
      case '\n': return single(Tok::kNewline);
      default: break;
    }
    if (is_name_char(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_name_char(text_[pos_])) advance();
      return {Tok::kName, text_.substr(start, pos_ - start), line, column};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, column);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blanks() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  PreferenceList run() {
    skip_newlines();
    if (cur_.kind == Tok::kName) parse_header();

    skip_newlines();
    std::vector<std::vector<AltSet>> classes;
    bool saw_empty = false;
    for (;;) {
      classes.push_back(parse_class());
      for (const AltSet& s : classes.back()) saw_empty |= s.empty();

      bool separated = false;
      bool slash = false;
      while (cur_.kind == Tok::kNewline || cur_.kind == Tok::kSlash) {
        if (cur_.kind == Tok::kSlash) {
          if (slash) throw error("empty class between separators");
          slash = true;
        }
        separated = true;
        shift();
      }
      if (cur_.kind == Tok::kEnd) {
        if (slash) throw error("expected a set after '/'");
        break;
      }
      if (!separated) throw error("expected '~', '/' or end of line");
    }
    if (!saw_empty) classes.push_back({AltSet{}});
    if (!header_) sort_inferred_names(classes);

    return PreferenceList(Universe(std::move(names_)), std::move(classes));
  }

 private:
  void shift() { cur_ = lexer_.next(); }

  void skip_newlines() {
    while (cur_.kind == Tok::kNewline) shift();
  }

  ParseError error(const std::string& what) const {
    return ParseError(what + ", found " + describe(cur_.kind), cur_.line,
                      cur_.column);
  }

  Token expect(Tok kind) {
    if (cur_.kind != kind) throw error(std::string("expected ") + describe(kind));
    Token t = cur_;
    shift();
    return t;
  }

  void parse_header() {
    if (cur_.text != "universe") throw error("expected '{' or a universe header");
    shift();
    expect(Tok::kColon);
    header_ = true;
    if (cur_.kind == Tok::kNewline || cur_.kind == Tok::kEnd) return;
    for (;;) {
      Token name = expect(Tok::kName);
      std::string key(name.text);
      if (index_.contains(key)) {
        throw ValidationError(position(name) + "duplicate alternative '" + key +
                              "' in universe header");
      }
      index_.emplace(key, names_.size());
      names_.push_back(std::move(key));
      if (cur_.kind != Tok::kComma) break;
      shift();
    }
    if (cur_.kind != Tok::kNewline && cur_.kind != Tok::kEnd) {
      throw error("expected ',' or end of line in universe header");
    }
  }

  std::vector<AltSet> parse_class() {
    std::vector<AltSet> sets;
    sets.push_back(parse_set());
    while (cur_.kind == Tok::kTilde) {
      shift();
      sets.push_back(parse_set());
    }
    return sets;
  }

  AltSet parse_set() {
    expect(Tok::kLBrace);
    AltSet set;
    if (cur_.kind == Tok::kRBrace) {
      shift();
      return set;
    }
    for (;;) {
      Token name = expect(Tok::kName);
      const std::size_t i = resolve(name);
      if (set.contains(i)) {
        throw ValidationError(position(name) + "alternative '" +
                              std::string(name.text) + "' repeated within a set");
      }
      set.insert(i);
      if (cur_.kind == Tok::kRBrace) break;
      expect(Tok::kComma);
    }
    shift();
    return set;
  }

  // Without a header, alternatives are indexed in sorted name order.
  void sort_inferred_names(std::vector<std::vector<AltSet>>& classes) {
    std::vector<std::size_t> order(names_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return names_[x] < names_[y]; });
    std::vector<std::size_t> remap(names_.size());
    std::vector<std::string> sorted;
    sorted.reserve(names_.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      remap[order[i]] = i;
      sorted.push_back(std::move(names_[order[i]]));
    }
    names_ = std::move(sorted);
    for (auto& cls : classes) {
      for (AltSet& s : cls) {
        AltSet mapped;
        s.for_each([&](std::size_t i) { mapped.insert(remap[i]); });
        s = mapped;
      }
    }
  }

  std::size_t resolve(const Token& name) {
    std::string key(name.text);
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    if (header_) {
      throw ValidationError(position(name) + "unknown alternative '" + key +
                            "' (not in universe header)");
    }
    if (names_.size() == kMaxAlternatives) {
      throw ValidationError(position(name) + "more than " +
                            std::to_string(kMaxAlternatives) + " alternatives");
    }
    index_.emplace(key, names_.size());
    names_.push_back(std::move(key));
    return names_.size() - 1;
  }

  static std::string position(const Token& t) {
    return std::to_string(t.line) + ":" + std::to_string(t.column) + ": ";
  }

  Lexer lexer_;
  Token cur_{Tok::kEnd, {}, 1, 1};
  bool header_ = false;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace

PreferenceList parse_preference_list(std::string_view text) {
  return Parser(text).run();
}

PreferenceList read_preference_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_preference_list(buf.str());
}

std::string canonical_form(const PreferenceList& pref) {
  const Universe& universe = pref.universe();
  std::string body;
  std::vector<bool> mentioned(universe.size(), false);

  for (std::size_t k = 0; k < pref.num_classes(); ++k) {
    if (k > 0) body += " / ";
    bool first = true;
    for (const AltSet& s : pref.classes()[k]) {
      if (!first) body += " ~ ";
      first = false;
      body += universe.format(s);
      s.for_each([&](std::size_t i) { mentioned[i] = true; });
    }
  }

  // The header is needed only if inference would give a different universe.
  const auto& names = universe.names();
  const bool inferable = std::find(mentioned.begin(), mentioned.end(), false) == mentioned.end() &&
                         std::is_sorted(names.begin(), names.end());
  if (inferable) return body;

  std::string header = "universe:";
  for (std::size_t i = 0; i < universe.size(); ++i) {
    header += i == 0 ? " " : ", ";
    header += universe.name(i);
  }
  return header + "\n" + body;
}

}  // namespace subcheck
