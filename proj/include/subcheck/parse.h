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

// Text format for preference lists.
//
//   file    := [header NEWLINE] body
//   header  := "universe:" name ("," name)*
//   body    := class (sep class)*
//   sep     := NEWLINE | "/"
//   class   := set ("~" set)*
//   set     := "{" [name ("," name)*] "}"
//   name    := [A-Za-z0-9_]+
//
// Spaces and tabs may appear between tokens. "#" starts a comment that runs to
// the end of the line; blank lines are ignored. Classes are listed best first
// and "~" joins indifferent sets, so
//
//   {a,b,d} ~ {b,c,d} / {a,b} ~ {b,c} ~ {a,c} / {}
//
// has three classes. Without a header the universe is the mentioned
// alternatives, indexed in sorted name order. If no class contains {} one is appended as the last
// class.

#ifndef SUBCHECK_PARSE_H_
#define SUBCHECK_PARSE_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "subcheck/preference.h"

namespace subcheck {

// Throws ParseError on malformed text and ValidationError on text that does
// not describe a valid list.
PreferenceList parse_preference_list(std::string_view text);

// Reads and parses a file. Throws Error if the file cannot be read.
PreferenceList read_preference_file(const std::filesystem::path& path);

// Deterministic text for `pref`. A universe header is emitted only when
// inference over the body would not reproduce the universe.
// parse_preference_list(canonical_form(p)) == p.
std::string canonical_form(const PreferenceList& pref);

}  // namespace subcheck

#endif  // SUBCHECK_PARSE_H_
