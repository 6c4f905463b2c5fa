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

#include "luzin/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "luzin/error.hpp"

namespace luzin::io {

namespace {

std::string At(const std::string& where) { return where.empty() ? "/" : where; }

const Json& Field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(At(where) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(At(where) + ": missing field \"" + key + "\"");
  return *it;
}

const Json& Array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(At(where) + ": expected an array");
  return j;
}

std::string Sub(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }
std::string Sub(const std::string& where, const char* key) { return where + "/" + key; }

}  // namespace

Rational ParseRational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError(At(where) + ": expected a rational string \"p/q\"");
  try {
    return Rational::Parse(j.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(At(where) + ": " + e.what());
  }
}

Interval ParseInterval(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw ParseError(At(where) + ": expected [lo, hi]");
  Rational lo = ParseRational(j[0], Sub(where, std::size_t{0}));
  Rational hi = ParseRational(j[1], Sub(where, std::size_t{1}));
  if (hi < lo) throw ParseError(At(where) + ": interval with lo > hi");
  return Interval(std::move(lo), std::move(hi));
}

IntervalSet ParseSet(const Json& j, const std::string& where) {
  std::vector<Interval> parts;
  std::size_t i = 0;
  for (const auto& e : Array(j, where)) parts.push_back(ParseInterval(e, Sub(where, i++)));
  return IntervalSet::Normalize(std::move(parts));
}

Pwl ParsePwl(const Json& j, const std::string& where) {
  std::vector<Point> pts;
  pts.reserve(Array(j, where).size());
  std::size_t i = 0;
  for (const auto& e : j) {
    std::string at = Sub(where, i++);
    if (!e.is_array() || e.size() != 2) throw ParseError(At(at) + ": expected [x, y]");
    pts.push_back({ParseRational(e[0], Sub(at, std::size_t{0})), ParseRational(e[1], Sub(at, std::size_t{1}))});
  }
  try {
    return Pwl(std::move(pts));
  } catch (const Error& e) {
    throw ParseError(At(where) + ": " + e.what());
  }
}

zigzag::FamilyScript ParseScript(const Json& j, const std::string& where) {
  Rational epsilon = ParseRational(Field(j, "epsilon", where), Sub(where, "epsilon"));
  if (epsilon.sign() <= 0) throw ParseError(At(Sub(where, "epsilon")) + ": epsilon must be positive");
  if (j.contains("generator")) {
    const Json& g = j["generator"];
    if (g != "fat_cantor")
      throw ParseError(At(Sub(where, "generator")) + ": unknown generator " + g.dump());
    const Json& d = Field(j, "deepest", where);
    if (!d.is_number_integer() || d.get<long>() < 0 || d.get<long>() > 12)
      throw ParseError(At(Sub(where, "deepest")) + ": expected an integer in [0, 12]");
    return zigzag::FatCantorScript(d.get<std::size_t>(), epsilon);
  }
  zigzag::FamilyScript script;
  script.epsilon = std::move(epsilon);
  std::string at = Sub(where, "levels");
  const Json& levels = Array(Field(j, "levels", where), at);
  if (levels.empty()) throw ParseError(At(at) + ": a script needs at least one level");
  std::size_t n = 0;
  for (const auto& level : levels) {
    std::string level_at = Sub(at, n++);
    std::vector<Interval> row;
    std::size_t k = 0;
    for (const auto& iv : Array(level, level_at)) row.push_back(ParseInterval(iv, Sub(level_at, k++)));
    script.levels.push_back(std::move(row));
  }
  return script;
}

Json ToJson(const Rational& r) { return r.str(); }

Json ToJson(const Interval& iv) { return Json::array({iv.lo.str(), iv.hi.str()}); }

Json ToJson(const IntervalSet& s) {
  Json out = Json::array();
  for (const auto& p : s.parts()) out.push_back(ToJson(p));
  return out;
}

Json ToJson(const Pwl& f) {
  Json out = Json::array();
  for (const auto& p : f.points()) out.push_back(Json::array({p.x.str(), p.y.str()}));
  return out;
}

Json ToJson(const zigzag::FamilyScript& script) {
  Json levels = Json::array();
  for (const auto& level : script.levels) {
    Json row = Json::array();
    for (const auto& iv : level) row.push_back(ToJson(iv));
    levels.push_back(std::move(row));
  }
  return Json{{"epsilon", script.epsilon.str()}, {"levels", std::move(levels)}};
}

std::string FormatSet(const IntervalSet& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += "[" + s.parts()[i].lo.str() + "," + s.parts()[i].hi.str() + "]";
  }
  return out + "]";
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, path + ": cannot open file");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

void WriteDump(std::ostream& os, const StageDump& dump) {
  os << "{\n";
  os << "  \"kind\": " << Json(dump.kind).dump() << ",\n";
  os << "  \"stage\": " << dump.stage << ",\n";
  for (const auto& [key, value] : dump.meta.items())
    os << "  " << Json(key).dump() << ": " << value.dump() << ",\n";
  os << "  \"pwl\": [\n";
  const auto& pts = dump.f.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    os << "    [\"" << pts[i].x.str() << "\", \"" << pts[i].y.str() << "\"]";
    os << (i + 1 < pts.size() ? ",\n" : "\n");
  }
  os << "  ],\n";
  os << "  \"checks\": {";
  for (std::size_t i = 0; i < dump.checks.size(); ++i) {
    os << (i ? ", " : "") << Json(dump.checks[i].first).dump() << ": "
       << (dump.checks[i].second ? "true" : "false");
  }
  os << "}\n}\n";
}

std::string DumpToString(const StageDump& dump) {
  std::ostringstream os;
  WriteDump(os, dump);
  return os.str();
}

StageDump ParseDump(const Json& j, const std::string& where) {
  StageDump dump;
  const Json& kind = Field(j, "kind", where);
  if (!kind.is_string()) throw ParseError(At(Sub(where, "kind")) + ": expected a string");
  dump.kind = kind.get<std::string>();
  const Json& stage = Field(j, "stage", where);
  if (!stage.is_number_integer()) throw ParseError(At(Sub(where, "stage")) + ": expected an integer");
  dump.stage = stage.get<long>();
  dump.f = ParsePwl(Field(j, "pwl", where), Sub(where, "pwl"));
  const Json& checks = Field(j, "checks", where);
  if (!checks.is_object()) throw ParseError(At(Sub(where, "checks")) + ": expected an object");
  for (const auto& [key, value] : checks.items()) {
    if (!value.is_boolean())
      throw ParseError(At(Sub(where, "checks")) + "/" + key + ": expected a boolean");
    dump.checks.emplace_back(key, value.get<bool>());
  }
  for (const auto& [key, value] : j.items())
    if (key != "kind" && key != "stage" && key != "pwl" && key != "checks") dump.meta[key] = value;
  return dump;
}

StageDump LoadDump(const std::string& path) {
  Json j = ReadJsonFile(path);
  try {
    return ParseDump(j, "");
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

Pwl LoadFunction(const std::string& path) {
  Json j = ReadJsonFile(path);
  try {
    if (j.is_array()) return ParsePwl(j, "");
    return ParsePwl(Field(j, "pwl", ""), "/pwl");
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

void WriteCsv(std::ostream& os, const Pwl& f, long grid) {
  if (grid < 1) throw InvalidArgument("grid must be at least 1");
  Interval dom = f.domain();
  std::vector<Rational> xs;
  xs.reserve(static_cast<std::size_t>(grid) + 1);
  Rational step = dom.length() / Rational(grid);
  for (long i = 0; i <= grid; ++i) xs.push_back(dom.lo + step * Rational(i));
  std::vector<Rational> ys = ValuesOnGrid(f, xs);
  char line[80];
  os << "x,y\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::snprintf(line, sizeof line, "%.17g,%.17g\n", xs[i].to_double(), ys[i].to_double());
    os << line;
  }
}

void WriteSvg(std::ostream& os, const Pwl& f, const std::string& title) {
  constexpr double kWidth = 800, kHeight = 600, kMargin = 40;
  const auto& pts = f.points();
  auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(),
                                      [](const Point& a, const Point& b) { return a.y < b.y; });
  double x0 = pts.front().x.to_double(), x1 = pts.back().x.to_double();
  double y0 = lo->y.to_double(), y1 = hi->y.to_double();
  if (y1 <= y0) y1 = y0 + 1;
  double sx = (kWidth - 2 * kMargin) / (x1 - x0);
  double sy = (kHeight - 2 * kMargin) / (y1 - y0);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  os << "<title>" << title << "</title>\n";
  os << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kWidth - 2 * kMargin
     << "\" height=\"" << kHeight - 2 * kMargin << "\" fill=\"none\" stroke=\"#bbb\"/>\n";
  os << "<polyline fill=\"none\" stroke=\"#1f4e99\" stroke-width=\"1\" points=\"";
  char buf[64];
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double px = kMargin + (pts[i].x.to_double() - x0) * sx;
    double py = kHeight - kMargin - (pts[i].y.to_double() - y0) * sy;
    std::snprintf(buf, sizeof buf, "%s%.3f,%.3f", i ? " " : "", px, py);
    os << buf;
  }
  os << "\"/>\n</svg>\n";
}

}  // namespace luzin::io
