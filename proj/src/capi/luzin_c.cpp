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

#include "luzin/luzin.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "luzin/concentrate.hpp"
#include "luzin/error.hpp"
#include "luzin/scenario.hpp"
#include "luzin/serialize.hpp"

struct lz_set {
  luzin::IntervalSet value;
};

struct lz_pwl {
  luzin::Pwl value;
};

namespace {

thread_local std::string g_last_error;

lz_status StatusOf(luzin::ErrorKind kind) {
  switch (kind) {
    case luzin::ErrorKind::kInvalidArgument: return LZ_ERR_INVALID_ARGUMENT;
    case luzin::ErrorKind::kDomain: return LZ_ERR_DOMAIN;
    case luzin::ErrorKind::kParse: return LZ_ERR_PARSE;
    case luzin::ErrorKind::kValidation: return LZ_ERR_VALIDATION;
    case luzin::ErrorKind::kConstruction: return LZ_ERR_CONSTRUCTION;
    case luzin::ErrorKind::kConfiguration: return LZ_ERR_CONFIGURATION;
    case luzin::ErrorKind::kIo: return LZ_ERR_IO;
  }
  return LZ_ERR_INTERNAL;
}

lz_status Fail(lz_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
lz_status Guard(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const luzin::Error& e) {
    return Fail(StatusOf(e.kind()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return Fail(LZ_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(LZ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(LZ_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(LZ_ERR_INTERNAL, "unknown failure");
  }
}

char* Copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Need(const void* p, const char* what) {
  if (!p) throw luzin::InvalidArgument(std::string(what) + " must not be NULL");
}

luzin::Rational Num(const char* text, const char* what) {
  Need(text, what);
  return luzin::Rational::Parse(text);
}

luzin::io::Json ParseText(const char* text) {
  Need(text, "json");
  try {
    return luzin::io::Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw luzin::ParseError("byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

template <class Op>
lz_status SetOp(const lz_set* a, const lz_set* b, lz_set** out, Op op) {
  return Guard([&] {
    Need(a, "a");
    Need(b, "b");
    Need(out, "out");
    *out = new lz_set{op(a->value, b->value)};
    return LZ_OK;
  });
}

lz_status ChecksStatus(const std::vector<luzin::scenario::Check>& checks) {
  for (const auto& c : checks)
    if (c.status == luzin::scenario::Status::kFail)
      return Fail(LZ_ERR_CHECK_FAILED,
                  "check failed: " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  return LZ_OK;
}

}  // namespace

extern "C" {

const char* lz_version(void) { return "0.1.0"; }

const char* lz_last_error(void) { return g_last_error.c_str(); }

const char* lz_status_name(lz_status status) {
  switch (status) {
    case LZ_OK: return "ok";
    case LZ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LZ_ERR_DOMAIN: return "domain error";
    case LZ_ERR_PARSE: return "parse error";
    case LZ_ERR_VALIDATION: return "validation error";
    case LZ_ERR_CONSTRUCTION: return "construction error";
    case LZ_ERR_CONFIGURATION: return "configuration error";
    case LZ_ERR_CHECK_FAILED: return "check failed";
    case LZ_ERR_IO: return "i/o error";
    case LZ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void lz_string_free(char* s) { std::free(s); }

lz_status lz_set_parse(const char* json, lz_set** out) {
  return Guard([&] {
    Need(out, "out");
    *out = new lz_set{luzin::io::ParseSet(ParseText(json), "")};
    return LZ_OK;
  });
}

void lz_set_free(lz_set* s) { delete s; }

lz_status lz_set_format(const lz_set* s, char** out) {
  return Guard([&] {
    Need(s, "set");
    Need(out, "out");
    *out = Copy(luzin::io::FormatSet(s->value));
    return LZ_OK;
  });
}

lz_status lz_set_to_json(const lz_set* s, char** out) {
  return Guard([&] {
    Need(s, "set");
    Need(out, "out");
    *out = Copy(luzin::io::ToJson(s->value).dump());
    return LZ_OK;
  });
}

lz_status lz_set_union(const lz_set* a, const lz_set* b, lz_set** out) {
  return SetOp(a, b, out, [](const auto& x, const auto& y) { return luzin::Union(x, y); });
}

lz_status lz_set_intersection(const lz_set* a, const lz_set* b, lz_set** out) {
  return SetOp(a, b, out, [](const auto& x, const auto& y) { return luzin::Intersection(x, y); });
}

lz_status lz_set_difference(const lz_set* a, const lz_set* b, lz_set** out) {
  return SetOp(a, b, out, [](const auto& x, const auto& y) { return luzin::Difference(x, y); });
}

lz_status lz_set_complement(const lz_set* s, const char* lo, const char* hi, lz_set** out) {
  return Guard([&] {
    Need(s, "set");
    Need(out, "out");
    luzin::Rational a = Num(lo, "lo"), b = Num(hi, "hi");
    if (b < a) throw luzin::InvalidArgument("ambient interval with lo > hi");
    *out = new lz_set{luzin::Complement(s->value, luzin::Interval(a, b))};
    return LZ_OK;
  });
}

lz_status lz_set_measure(const lz_set* s, char** out) {
  return Guard([&] {
    Need(s, "set");
    Need(out, "out");
    *out = Copy(s->value.measure().str());
    return LZ_OK;
  });
}

lz_status lz_set_distance(const lz_set* a, const lz_set* b, char** out) {
  return Guard([&] {
    Need(a, "a");
    Need(b, "b");
    Need(out, "out");
    auto d = luzin::Distance(a->value, b->value);
    *out = Copy(d ? d->str() : "inf");
    return LZ_OK;
  });
}

lz_status lz_pwl_parse(const char* json, lz_pwl** out) {
  return Guard([&] {
    Need(out, "out");
    *out = new lz_pwl{luzin::io::ParsePwl(ParseText(json), "")};
    return LZ_OK;
  });
}

lz_status lz_pwl_load(const char* path, lz_pwl** out) {
  return Guard([&] {
    Need(path, "path");
    Need(out, "out");
    *out = new lz_pwl{luzin::io::LoadFunction(path)};
    return LZ_OK;
  });
}

void lz_pwl_free(lz_pwl* f) { delete f; }

lz_status lz_pwl_to_json(const lz_pwl* f, char** out) {
  return Guard([&] {
    Need(f, "f");
    Need(out, "out");
    *out = Copy(luzin::io::ToJson(f->value).dump());
    return LZ_OK;
  });
}

lz_status lz_pwl_piece_count(const lz_pwl* f, size_t* out) {
  return Guard([&] {
    Need(f, "f");
    Need(out, "out");
    *out = f->value.piece_count();
    return LZ_OK;
  });
}

lz_status lz_pwl_eval(const lz_pwl* f, const char* x, char** out) {
  return Guard([&] {
    Need(f, "f");
    Need(out, "out");
    *out = Copy(f->value.eval(Num(x, "x")).str());
    return LZ_OK;
  });
}

lz_status lz_pwl_image(const lz_pwl* f, const lz_set* s, lz_set** out) {
  return Guard([&] {
    Need(f, "f");
    Need(s, "set");
    Need(out, "out");
    *out = new lz_set{luzin::Image(f->value, s->value)};
    return LZ_OK;
  });
}

lz_status lz_pwl_preimage(const lz_pwl* f, const lz_set* s, lz_set** out) {
  return Guard([&] {
    Need(f, "f");
    Need(s, "set");
    Need(out, "out");
    *out = new lz_set{luzin::Preimage(f->value, s->value)};
    return LZ_OK;
  });
}

lz_status lz_pwl_open_image(const lz_pwl* f, const lz_set* s, lz_set** out) {
  return Guard([&] {
    Need(f, "f");
    Need(s, "set");
    Need(out, "out");
    *out = new lz_set{luzin::OpenImage(f->value, s->value)};
    return LZ_OK;
  });
}

lz_status lz_pwl_variation(const lz_pwl* f, const char* upto, char** out) {
  return Guard([&] {
    Need(f, "f");
    Need(out, "out");
    *out = Copy(luzin::Variation(f->value, Num(upto, "upto")).str());
    return LZ_OK;
  });
}

lz_status lz_pwl_sup_distance(const lz_pwl* f, const lz_pwl* g, char** out) {
  return Guard([&] {
    Need(f, "f");
    Need(g, "g");
    Need(out, "out");
    *out = Copy(luzin::SupDistance(f->value, g->value).str());
    return LZ_OK;
  });
}

lz_status lz_pwl_check_2l(const lz_pwl* f, const char* a, const char* b, int* holds,
                          char** witness) {
  return Guard([&] {
    Need(f, "f");
    Need(holds, "holds");
    auto verdict = luzin::CheckTwoLinear(f->value, Num(a, "a"), Num(b, "b"));
    *holds = verdict.holds ? 1 : 0;
    if (witness) *witness = verdict.witness ? Copy(verdict.witness->str()) : nullptr;
    return LZ_OK;
  });
}

lz_status lz_pwl_check_bilipschitz(const lz_pwl* f, const char* a, const char* b,
                                   const char* lipschitz, int* holds) {
  return Guard([&] {
    Need(f, "f");
    Need(holds, "holds");
    *holds = luzin::CheckBiLipschitz(f->value, Num(a, "a"), Num(b, "b"),
                                     Num(lipschitz, "lipschitz"))
                 ? 1
                 : 0;
    return LZ_OK;
  });
}

lz_status lz_pwl_measure_from_cdf(const lz_pwl* f, const lz_set* s, char** out) {
  return Guard([&] {
    Need(f, "f");
    Need(s, "set");
    Need(out, "out");
    *out = Copy(luzin::MeasureFromCdf(f->value, s->value).str());
    return LZ_OK;
  });
}

lz_status lz_pwl_subdivide(const lz_pwl* f, const char* height, lz_pwl** out) {
  return Guard([&] {
    Need(f, "f");
    Need(out, "out");
    *out = new lz_pwl{luzin::SubdivideByHeight(f->value, Num(height, "height"))};
    return LZ_OK;
  });
}

lz_status lz_pwl_concentrate(const lz_pwl* h, const lz_set* b, const char* delta, lz_pwl** out,
                             lz_set** steep_set) {
  return Guard([&] {
    Need(h, "h");
    Need(b, "b");
    Need(out, "out");
    auto result = luzin::concentrate::Concentrate(h->value, b->value, Num(delta, "delta"));
    lz_set* steep = steep_set ? new lz_set{std::move(result.steep_set)} : nullptr;
    *out = new lz_pwl{std::move(result.function)};
    if (steep_set) *steep_set = steep;
    return LZ_OK;
  });
}

lz_run_options lz_run_options_default(void) {
  lz_run_options o;
  o.stages = -1;
  o.verify = 0;
  o.export_json = 1;
  o.export_csv = 0;
  o.export_svg = 0;
  o.grid = 1024;
  o.out_dir = nullptr;
  return o;
}

lz_status lz_run_scenario_file(const char* path, const lz_run_options* options, char** report) {
  if (report) *report = nullptr;
  return Guard([&] {
    Need(path, "path");
    lz_run_options o = options ? *options : lz_run_options_default();
    luzin::scenario::RunOptions run;
    if (o.stages >= 0) run.stages = o.stages;
    run.verify = o.verify != 0;
    run.json = o.export_json != 0;
    run.csv = o.export_csv != 0;
    run.svg = o.export_svg != 0;
    run.grid = o.grid >= 1 ? o.grid : 1024;
    run.out_dir = o.out_dir ? o.out_dir : ".";
    auto scenario = luzin::scenario::LoadScenario(path);
    auto result = luzin::scenario::Run(scenario, run);
    if (report) *report = Copy(result.Report().dump(2));
    return ChecksStatus(result.checks);
  });
}

lz_status lz_verify_dump(const char* path, char** report) {
  if (report) *report = nullptr;
  return Guard([&] {
    Need(path, "path");
    luzin::scenario::RunResult result;
    result.checks = luzin::scenario::VerifyDumpFile(path);
    if (report) *report = Copy(result.Report().dump(2));
    return ChecksStatus(result.checks);
  });
}

}  // extern "C"
