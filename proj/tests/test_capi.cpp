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

#include <filesystem>
#include <memory>
#include <string>

#include "doctest.h"
#include "luzin/luzin.h"

namespace {

struct SetDel {
  void operator()(lz_set* s) const { lz_set_free(s); }
};
struct PwlDel {
  void operator()(lz_pwl* f) const { lz_pwl_free(f); }
};
using Set = std::unique_ptr<lz_set, SetDel>;
using Fn = std::unique_ptr<lz_pwl, PwlDel>;

std::string Take(char* s) {
  std::string out = s ? s : "";
  lz_string_free(s);
  return out;
}

Set ParseSet(const char* json) {
  lz_set* s = nullptr;
  REQUIRE(lz_set_parse(json, &s) == LZ_OK);
  return Set(s);
}

Fn ParsePwl(const char* json) {
  lz_pwl* f = nullptr;
  REQUIRE(lz_pwl_parse(json, &f) == LZ_OK);
  return Fn(f);
}

const char* kZigzag3 = R"([["0","0"],["1/3","1"],["2/3","0"],["1","1"]])";

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(lz_status_name(LZ_OK)) == "ok");
  CHECK(std::string(lz_status_name(LZ_ERR_CHECK_FAILED)) != "");
  CHECK(std::string(lz_version()).size() > 0);
}

TEST_CASE("set operations through handles") {
  Set a = ParseSet(R"([["0","1/3"],["1/2","1"]])");
  Set b = ParseSet(R"([["1/4","3/4"]])");
  lz_set* out = nullptr;
  char* text = nullptr;

  REQUIRE(lz_set_union(a.get(), b.get(), &out) == LZ_OK);
  Set u(out);
  REQUIRE(lz_set_format(u.get(), &text) == LZ_OK);
  CHECK(Take(text) == "[[0/1,1/1]]");

  REQUIRE(lz_set_intersection(a.get(), b.get(), &out) == LZ_OK);
  Set i(out);
  REQUIRE(lz_set_measure(i.get(), &text) == LZ_OK);
  CHECK(Take(text) == "1/3");

  REQUIRE(lz_set_difference(a.get(), b.get(), &out) == LZ_OK);
  Set d(out);
  REQUIRE(lz_set_to_json(d.get(), &text) == LZ_OK);
  CHECK(Take(text) == R"([["0/1","1/4"],["3/4","1/1"]])");

  REQUIRE(lz_set_complement(a.get(), "0", "1", &out) == LZ_OK);
  Set c(out);
  REQUIRE(lz_set_format(c.get(), &text) == LZ_OK);
  CHECK(Take(text) == "[[1/3,1/2]]");

  Set empty = ParseSet("[]");
  REQUIRE(lz_set_distance(a.get(), empty.get(), &text) == LZ_OK);
  CHECK(Take(text) == "inf");
  Set far = ParseSet(R"([["2","3"]])");
  REQUIRE(lz_set_distance(a.get(), far.get(), &text) == LZ_OK);
  CHECK(Take(text) == "1/1");
}

TEST_CASE("function queries through handles") {
  Fn f = ParsePwl(kZigzag3);
  size_t pieces = 0;
  REQUIRE(lz_pwl_piece_count(f.get(), &pieces) == LZ_OK);
  CHECK(pieces == 3);
  char* text = nullptr;
  REQUIRE(lz_pwl_eval(f.get(), "5/12", &text) == LZ_OK);
  CHECK(Take(text) == "3/4");
  REQUIRE(lz_pwl_variation(f.get(), "1", &text) == LZ_OK);
  CHECK(Take(text) == "3/1");

  Set s = ParseSet(R"([["0","1/9"]])");
  lz_set* out = nullptr;
  REQUIRE(lz_pwl_image(f.get(), s.get(), &out) == LZ_OK);
  Set img(out);
  REQUIRE(lz_set_format(img.get(), &text) == LZ_OK);
  CHECK(Take(text) == "[[0/1,1/3]]");

  Set half = ParseSet(R"([["0","1/2"]])");
  REQUIRE(lz_pwl_preimage(f.get(), half.get(), &out) == LZ_OK);
  Set pre(out);
  REQUIRE(lz_set_format(pre.get(), &text) == LZ_OK);
  CHECK(Take(text) == "[[0/1,1/6],[1/2,5/6]]");

  int holds = -1;
  REQUIRE(lz_pwl_check_2l(f.get(), "0", "1", &holds, &text) == LZ_OK);
  CHECK(holds == 0);
  lz_string_free(text);
  REQUIRE(lz_pwl_check_2l(f.get(), "0", "2/3", &holds, &text) == LZ_OK);
  CHECK(holds == 1);
  CHECK(Take(text) == "1/3");
  REQUIRE(lz_pwl_check_bilipschitz(f.get(), "0", "1/3", "3", &holds) == LZ_OK);
  CHECK(holds == 1);
  REQUIRE(lz_pwl_check_bilipschitz(f.get(), "0", "1", "3", &holds) == LZ_OK);
  CHECK(holds == 0);

  Fn id = ParsePwl(R"([["0","0"],["1","1"]])");
  REQUIRE(lz_pwl_sup_distance(f.get(), id.get(), &text) == LZ_OK);
  CHECK(Take(text) == "2/3");
}

TEST_CASE("concentrate through handles") {
  Fn id = ParsePwl(R"([["0","0"],["1","1"]])");
  Set all = ParseSet(R"([["0","1"]])");
  lz_pwl* g = nullptr;
  lz_set* steep = nullptr;
  REQUIRE(lz_pwl_concentrate(id.get(), all.get(), "1/2", &g, &steep) == LZ_OK);
  Fn gf(g);
  Set st(steep);
  char* text = nullptr;
  REQUIRE(lz_pwl_to_json(gf.get(), &text) == LZ_OK);
  CHECK(Take(text) ==
        R"([["0/1","0/1"],["1/8","1/2"],["1/2","1/2"],["5/8","1/1"],["1/1","1/1"]])");
  REQUIRE(lz_set_format(st.get(), &text) == LZ_OK);
  CHECK(Take(text) == "[[0/1,1/8],[1/2,5/8]]");

  Set sub = ParseSet(R"([["0","1/8"]])");
  REQUIRE(lz_pwl_measure_from_cdf(gf.get(), sub.get(), &text) == LZ_OK);
  CHECK(Take(text) == "1/2");
}

TEST_CASE("errors map to status codes and leave outputs untouched") {
  lz_set* s = nullptr;
  CHECK(lz_set_parse("[[1,]", &s) == LZ_ERR_PARSE);
  CHECK(s == nullptr);
  CHECK(std::string(lz_last_error()).size() > 0);
  CHECK(lz_set_parse(R"([["1/2","1/3"]])", &s) != LZ_OK);
  CHECK(lz_set_parse(R"([["0","1"]])", nullptr) == LZ_ERR_INVALID_ARGUMENT);

  Fn f = ParsePwl(kZigzag3);
  char* text = nullptr;
  CHECK(lz_pwl_eval(f.get(), "2", &text) == LZ_ERR_DOMAIN);
  CHECK(text == nullptr);
  CHECK(lz_pwl_eval(f.get(), "x", &text) == LZ_ERR_PARSE);
  CHECK(lz_pwl_eval(nullptr, "0", &text) == LZ_ERR_INVALID_ARGUMENT);
  lz_pwl* g = nullptr;
  CHECK(lz_pwl_load("/nonexistent/dump.json", &g) == LZ_ERR_IO);
  CHECK(g == nullptr);

  Set all = ParseSet(R"([["0","1"]])");
  lz_set* steep = nullptr;
  CHECK(lz_pwl_concentrate(f.get(), all.get(), "1/2", &g, &steep) == LZ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("scenario runs and dump verification") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "luzin_capi_run";
  fs::remove_all(dir);
  std::string out_dir = dir.string();
  lz_run_options opt = lz_run_options_default();
  opt.verify = 1;
  opt.out_dir = out_dir.c_str();
  char* report = nullptr;
  REQUIRE(lz_run_scenario_file(LUZIN_SCENARIO_DIR "/zigzag3.json", &opt, &report) == LZ_OK);
  CHECK(Take(report).find("\"all_pass\": true") != std::string::npos);

  std::string dump = (dir / "stage_000.json").string();
  REQUIRE(lz_verify_dump(dump.c_str(), &report) == LZ_OK);
  Take(report);

  lz_pwl* f = nullptr;
  REQUIRE(lz_pwl_load(dump.c_str(), &f) == LZ_OK);
  Fn fn(f);
  char* text = nullptr;
  REQUIRE(lz_pwl_variation(fn.get(), "1", &text) == LZ_OK);
  CHECK(Take(text) == "3/1");

  CHECK(lz_verify_dump(LUZIN_SCENARIO_DIR "/tampered_dump.json", &report) == LZ_ERR_CHECK_FAILED);
  lz_string_free(report);
  CHECK(std::string(lz_last_error()).find("stored_verdicts") != std::string::npos);

  CHECK(lz_run_scenario_file(LUZIN_SCENARIO_DIR "/bad_condition5.json", &opt, &report) ==
        LZ_ERR_VALIDATION);
  CHECK(lz_run_scenario_file(LUZIN_SCENARIO_DIR "/over_budget.json", &opt, &report) ==
        LZ_ERR_CONFIGURATION);
  CHECK(lz_run_scenario_file(LUZIN_SCENARIO_DIR "/coarse_zigzag.json", &opt, &report) ==
        LZ_ERR_CHECK_FAILED);
  lz_string_free(report);
}
