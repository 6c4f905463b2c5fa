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

// luzin: run constructions from scenario files, inspect stage dumps and
// re-verify them. Exit status: 0 all checks pass, 1 a check fails, 2 input
// error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "luzin/luzin.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

int ExitCode(lz_status status) {
  if (status == LZ_OK) return kExitPass;
  if (status == LZ_ERR_CHECK_FAILED) return kExitCheckFailed;
  return kExitInputError;
}

int Report(lz_status status) {
  if (status != LZ_OK) std::cerr << "luzin: " << lz_last_error() << "\n";
  return ExitCode(status);
}

// Owns a string returned by the library.
struct Text {
  char* p = nullptr;
  ~Text() { lz_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Set {
  lz_set* p = nullptr;
  ~Set() { lz_set_free(p); }
};

struct Fn {
  lz_pwl* p = nullptr;
  ~Fn() { lz_pwl_free(p); }
};

// Accepts [[0,1/9]] as shorthand for [["0","1/9"]].
std::string QuoteRationals(const std::string& text) {
  if (text.find('"') != std::string::npos) return text;
  static const std::regex number("-?[0-9]+(/[0-9]+)?");
  return std::regex_replace(text, number, "\"$&\"");
}

void PrintChecks(const std::string& report) {
  auto j = nlohmann::json::parse(report, nullptr, false);
  if (j.is_discarded() || !j.contains("checks")) return;
  for (const auto& c : j["checks"]) {
    std::cout << c["status"].get<std::string>() << "  " << c["name"].get<std::string>();
    auto detail = c["detail"].get<std::string>();
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
  }
}

int CmdRun(const std::string& scenario, std::string out_dir, long stages, bool verify,
           const std::vector<std::string>& exports, long grid) {
  if (out_dir.empty()) {
    const char* env = std::getenv("LUZIN_OUT_DIR");
    out_dir = env && *env ? env : "luzin-out";
  }
  lz_run_options o = lz_run_options_default();
  o.stages = stages;
  o.verify = verify ? 1 : 0;
  o.grid = grid;
  o.out_dir = out_dir.c_str();
  if (!exports.empty()) {
    o.export_json = o.export_csv = o.export_svg = 0;
    for (const auto& e : exports) {
      if (e == "json") o.export_json = 1;
      if (e == "csv") o.export_csv = 1;
      if (e == "svg") o.export_svg = 1;
    }
  }
  Text report;
  lz_status status = lz_run_scenario_file(scenario.c_str(), &o, &report.p);
  if (verify && report.p) PrintChecks(report.str());
  if (status == LZ_OK)
    std::cout << (verify ? "all checks pass; " : "") << "artifacts in " << out_dir << "\n";
  return Report(status);
}

int CmdVerify(const std::string& path) {
  std::vector<std::string> dumps;
  if (std::filesystem::is_directory(path)) {
    for (const auto& entry : std::filesystem::directory_iterator(path)) {
      auto name = entry.path().filename().string();
      if (name.rfind("stage_", 0) == 0 && entry.path().extension() == ".json")
        dumps.push_back(entry.path().string());
    }
    std::sort(dumps.begin(), dumps.end());
    if (dumps.empty()) {
      std::cerr << "luzin: " << path << ": no stage dumps found\n";
      return kExitInputError;
    }
  } else {
    dumps.push_back(path);
  }
  for (const auto& dump : dumps) {
    Text report;
    lz_status status = lz_verify_dump(dump.c_str(), &report.p);
    if (status != LZ_OK) return Report(status);
    std::cout << "pass  " << dump << "\n";
  }
  return kExitPass;
}

int Usage(const std::string& query, std::size_t want, std::size_t got) {
  if (want == got) return kExitPass;
  std::cerr << "luzin: query \"" << query << "\" takes " << want << " argument(s), got " << got
            << "\n";
  return kExitInputError;
}

int CmdInspect(const std::string& dump, const std::string& query,
               const std::vector<std::string>& args) {
  static const std::vector<std::string> known = {"measure", "image",       "preimage", "variation",
                                                 "2L",      "bilipschitz", "eval",     "pieces"};
  if (std::find(known.begin(), known.end(), query) == known.end()) {
    std::cerr << "luzin: unknown query \"" << query << "\"\n";
    return kExitInputError;
  }
  Fn f;
  if (lz_status s = lz_pwl_load(dump.c_str(), &f.p); s != LZ_OK) return Report(s);

  auto with_set = [&](auto&& body) -> int {
    if (int rc = Usage(query, 1, args.size())) return rc;
    Set s;
    if (lz_status st = lz_set_parse(QuoteRationals(args[0]).c_str(), &s.p); st != LZ_OK)
      return Report(st);
    return body(s.p);
  };
  auto print_set = [](lz_status st, lz_set* out) -> int {
    Set owned{out};
    if (st != LZ_OK) return Report(st);
    Text text;
    if (lz_status fs = lz_set_format(owned.p, &text.p); fs != LZ_OK) return Report(fs);
    std::cout << text.str() << "\n";
    return kExitPass;
  };
  auto print_text = [](lz_status st, Text& text) -> int {
    if (st != LZ_OK) return Report(st);
    std::cout << text.str() << "\n";
    return kExitPass;
  };

  if (query == "measure") {
    return with_set([&](lz_set* s) {
      Set image;
      if (lz_status st = lz_pwl_image(f.p, s, &image.p); st != LZ_OK) return Report(st);
      Text m;
      return print_text(lz_set_measure(image.p, &m.p), m);
    });
  }
  if (query == "image") {
    return with_set([&](lz_set* s) {
      lz_set* out = nullptr;
      lz_status st = lz_pwl_image(f.p, s, &out);
      return print_set(st, out);
    });
  }
  if (query == "preimage") {
    return with_set([&](lz_set* s) {
      lz_set* out = nullptr;
      lz_status st = lz_pwl_preimage(f.p, s, &out);
      return print_set(st, out);
    });
  }
  if (query == "variation" || query == "eval") {
    if (int rc = Usage(query, 1, args.size())) return rc;
    Text out;
    lz_status st = query == "eval" ? lz_pwl_eval(f.p, args[0].c_str(), &out.p)
                                   : lz_pwl_variation(f.p, args[0].c_str(), &out.p);
    return print_text(st, out);
  }
  if (query == "2L") {
    if (int rc = Usage(query, 2, args.size())) return rc;
    int holds = 0;
    Text witness;
    lz_status st = lz_pwl_check_2l(f.p, args[0].c_str(), args[1].c_str(), &holds, &witness.p);
    if (st != LZ_OK) return Report(st);
    std::cout << (holds ? "true " + witness.str() : "false") << "\n";
    return kExitPass;
  }
  if (query == "bilipschitz") {
    if (int rc = Usage(query, 3, args.size())) return rc;
    int holds = 0;
    lz_status st = lz_pwl_check_bilipschitz(f.p, args[0].c_str(), args[1].c_str(),
                                            args[2].c_str(), &holds);
    if (st != LZ_OK) return Report(st);
    std::cout << (holds ? "true" : "false") << "\n";
    return kExitPass;
  }
  if (int rc = Usage(query, 0, args.size())) return rc;
  std::size_t pieces = 0;
  if (lz_status st = lz_pwl_piece_count(f.p, &pieces); st != LZ_OK) return Report(st);
  std::cout << pieces << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finite-stage constructions of continuous functions on [0, 1]", "luzin"};
  app.set_version_flag("--version", std::string(lz_version()));
  app.require_subcommand(1);

  std::string scenario, out_dir;
  long stages = -1, grid = 1024;
  bool verify = false;
  std::vector<std::string> exports;
  auto* run = app.add_subcommand("run", "build a scenario and write stage dumps");
  run->add_option("scenario", scenario, "scenario JSON file")->required();
  run->add_option("out_dir", out_dir, "output directory (default: $LUZIN_OUT_DIR, else luzin-out)");
  run->add_option("--stages", stages, "number of stages to build")->check(CLI::NonNegativeNumber);
  run->add_flag("--verify", verify, "run the exact checks and write verdict.json");
  run->add_option("--export", exports, "artifact formats")
      ->delimiter(',')
      ->check(CLI::IsMember({"json", "csv", "svg"}));
  run->add_option("--grid", grid, "CSV sample intervals")->check(CLI::PositiveNumber);

  std::string dump, query;
  auto* inspect = app.add_subcommand("inspect", "evaluate one operation on a dumped function");
  inspect->add_option("dump", dump, "stage dump or breakpoint array")->required();
  inspect->add_option("query", query, "measure|image|preimage|variation|2L|bilipschitz|eval|pieces")
      ->required();
  // Query arguments are taken verbatim: CLI11 would split "[[a,b]]" as a list.
  inspect->allow_extras();
  inspect->footer("query arguments follow the query name, e.g. image [[0,1/9]]");

  std::string path;
  auto* verify_cmd = app.add_subcommand("verify", "re-verify stage dumps (file or directory)");
  verify_cmd->add_option("path", path, "stage dump or run directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitInputError;
  }

  if (*run) return CmdRun(scenario, out_dir, stages, verify, exports, grid);
  if (*inspect) return CmdInspect(dump, query, inspect->remaining());
  return CmdVerify(path);
}
