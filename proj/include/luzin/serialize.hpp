// Copyright 2026 The luzin Authors
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

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "luzin/interval.hpp"
#include "luzin/pwl.hpp"
#include "luzin/zigzag.hpp"

namespace luzin::io {

using Json = nlohmann::ordered_json;

// Parsers throw ParseError naming `where`, a JSON pointer into the input.
Rational ParseRational(const Json& j, const std::string& where);
Interval ParseInterval(const Json& j, const std::string& where);
IntervalSet ParseSet(const Json& j, const std::string& where);
Pwl ParsePwl(const Json& j, const std::string& where);
// {"epsilon", "levels"} or {"generator": "fat_cantor", "depth", "epsilon"}.
zigzag::FamilyScript ParseScript(const Json& j, const std::string& where);

Json ToJson(const Rational& r);
Json ToJson(const Interval& iv);
Json ToJson(const IntervalSet& s);
Json ToJson(const Pwl& f);
Json ToJson(const zigzag::FamilyScript& script);

// "[[0/1,1/3],[1/2,1/1]]"; "[]" when empty.
std::string FormatSet(const IntervalSet& s);

// Reads and parses a whole JSON file. Throws ParseError with the path and
// byte offset, or Error(kInvalidArgument) when the file cannot be read.
Json ReadJsonFile(const std::string& path);

// One stage of a construction. `meta` holds every field besides the
// function and the verdicts, in file order.
struct StageDump {
  std::string kind;
  long stage = 0;
  Json meta = Json::object();
  Pwl f = Pwl::Identity(Interval(Rational(0), Rational(1)));
  std::vector<std::pair<std::string, bool>> checks;
};

// Layout: one key per line, one breakpoint per line. Equal dumps give equal
// bytes.
void WriteDump(std::ostream& os, const StageDump& dump);
std::string DumpToString(const StageDump& dump);
StageDump ParseDump(const Json& j, const std::string& where);
StageDump LoadDump(const std::string& path);

// A function stored either as a stage dump or as a bare breakpoint array.
Pwl LoadFunction(const std::string& path);

// Samples f at grid + 1 equally spaced abscissae of its domain.
void WriteCsv(std::ostream& os, const Pwl& f, long grid);
// One polyline through the exact breakpoints, scaled to the viewport.
void WriteSvg(std::ostream& os, const Pwl& f, const std::string& title);

}  // namespace luzin::io
