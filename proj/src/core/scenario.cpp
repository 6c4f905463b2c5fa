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

#include "luzin/scenario.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>

#include "luzin/error.hpp"

namespace luzin::scenario {

namespace {

using io::Json;

const Interval kUnit(Rational(0), Rational(1));

Error Invalid(const std::string& what) { return Error(ErrorKind::kValidation, what); }

long NonNegative(const Json& j, const char* key, const std::string& where) {
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long>() < 0)
    throw ParseError(where + "/" + key + ": expected a nonnegative integer");
  return v.get<long>();
}

std::vector<IntervalSet> ParseSetList(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of interval sets");
  std::vector<IntervalSet> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string at = where + "/" + std::to_string(i);
    out.push_back(io::ParseSet(j[i], at));
    if (!IntervalSet(kUnit).includes(out.back())) throw Invalid(at + ": set leaves [0, 1]");
  }
  return out;
}

void ParseZigzag(Scenario& sc, const Json& j, const std::string& where) {
  sc.script = io::ParseScript(j.contains("script") ? j["script"] : j,
                              j.contains("script") ? where + "/script" : where);
  auto report = zigzag::ValidateFamily(sc.script);
  if (!report.valid()) {
    const auto& v = report.violations.front();
    std::string what = v.condition == 0 ? "script interval outside [0, 1]"
                                        : "condition (" + std::to_string(v.condition) + ") violated";
    throw Invalid(where + "/levels/" + std::to_string(v.level) + "/" + std::to_string(v.index) +
                  ": " + what + " at (n,k)=(" + std::to_string(v.level) + "," +
                  std::to_string(v.index) + "): " + v.message);
  }
  sc.stages = j.contains("stages") ? NonNegative(j, "stages", where)
                                   : static_cast<long>(sc.script.depth()) - 1;
  if (j.contains("K")) sc.resolution = NonNegative(j, "K", where);
}

void ParseConcentrate(Scenario& sc, const Json& j, const std::string& where) {
  if (!j.contains("targets")) throw ParseError(where + ": missing field \"targets\"");
  sc.targets = ParseSetList(j["targets"], where + "/targets");
  if (!j.contains("stages")) throw ParseError(where + ": missing field \"stages\"");
  sc.stages = NonNegative(j, "stages", where);
  if (sc.targets.empty() && sc.stages > 0) throw Invalid(where + "/targets: no target sets");
}

void ParsePriority(Scenario& sc, const Json& j, const std::string& where) {
  if (!j.contains("budgets") || !j["budgets"].is_array())
    throw ParseError(where + ": missing array \"budgets\"");
  Rational total;
  for (std::size_t e = 0; e < j["budgets"].size(); ++e) {
    std::string at = where + "/budgets/" + std::to_string(e);
    sc.budgets.push_back(io::ParseRational(j["budgets"][e], at));
    if (sc.budgets.back().sign() <= 0) throw Invalid(at + ": budget must be positive");
    total += sc.budgets.back();
  }
  if (!(total < Rational(1, 2)))
    throw Error(ErrorKind::kConfiguration,
                where + "/budgets: budgets sum to " + total.str() + ", which is not below 1/2");
  if (!j.contains("stages")) throw ParseError(where + ": missing field \"stages\"");
  sc.stages = NonNegative(j, "stages", where);

  std::string at = where + "/classes";
  if (!j.contains("classes")) throw ParseError(where + ": missing field \"classes\"");
  const Json& classes = j["classes"];
  if (classes.is_object()) {
    if (!classes.contains("shrink_to") || !classes["shrink_to"].is_array())
      throw ParseError(at + ": expected {\"shrink_to\": [centers]}");
    for (std::size_t e = 0; e < classes["shrink_to"].size(); ++e) {
      std::string c_at = at + "/shrink_to/" + std::to_string(e);
      sc.shrink_centers.push_back(io::ParseRational(classes["shrink_to"][e], c_at));
      if (!kUnit.contains(sc.shrink_centers.back())) throw Invalid(c_at + ": center leaves [0, 1]");
    }
    if (sc.shrink_centers.size() != sc.budgets.size())
      throw Invalid(at + "/shrink_to: one center per budget is required");
    return;
  }
  if (!classes.is_array() || classes.empty())
    throw ParseError(at + ": expected per-stage rows of interval sets");
  for (std::size_t s = 0; s < classes.size(); ++s) {
    std::string row_at = at + "/" + std::to_string(s);
    sc.classes.push_back(ParseSetList(classes[s], row_at));
    if (sc.classes.back().size() != sc.budgets.size())
      throw Invalid(row_at + ": one class per budget is required");
    if (s == 0) continue;
    for (std::size_t e = 0; e < sc.budgets.size(); ++e)
      if (!sc.classes[s - 1][e].includes(sc.classes[s][e]))
        throw Invalid(row_at + "/" + std::to_string(e) + ": class does not nest into stage " +
                      std::to_string(s - 1));
  }
}

std::string StageFile(const std::string& dir, long s, const char* ext) {
  char name[32];
  std::snprintf(name, sizeof name, "stage_%03ld.%s", s, ext);
  return (std::filesystem::path(dir) / name).string();
}

std::string Verdict(bool ok) { return ok ? "holds" : "fails"; }

Check Make(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? Status::kPass : Status::kFail, std::move(detail)};
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, path + ": cannot open file");
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

class Writer {
 public:
  Writer(const RunOptions& options, RunResult& result) : options_(options), result_(result) {
    std::error_code ec;
    std::filesystem::create_directories(options.out_dir, ec);
    if (ec)
      throw Error(ErrorKind::kIo, options.out_dir + ": cannot create directory: " + ec.message());
  }

  void Emit(const io::StageDump& dump, const std::string& title) {
    if (options_.json) {
      std::string path = StageFile(options_.out_dir, dump.stage, "json");
      Open(path, [&](std::ostream& os) { io::WriteDump(os, dump); });
    }
    if (options_.csv) {
      std::string path = StageFile(options_.out_dir, dump.stage, "csv");
      Open(path, [&](std::ostream& os) { io::WriteCsv(os, dump.f, options_.grid); });
    }
    if (options_.svg) {
      std::string path = StageFile(options_.out_dir, dump.stage, "svg");
      Open(path, [&](std::ostream& os) { io::WriteSvg(os, dump.f, title); });
    }
  }

  // Per-dump verdicts and, for JSON dumps, the reload round trip.
  void Audit(const io::StageDump& dump) {
    if (!options_.verify) return;
    std::string tag = "stage_" + std::to_string(dump.stage);
    std::string failed;
    for (const auto& [name, ok] : dump.checks)
      if (!ok) {
        failed = name;
        break;
      }
    result_.checks.push_back(Make(tag + "/" + (failed.empty() ? "dump_checks" : failed), failed.empty(),
                                  std::to_string(dump.checks.size()) + " dump verdicts"));
    if (!options_.json) return;
    for (auto& c : VerifyDumpFile(StageFile(options_.out_dir, dump.stage, "json"))) {
      c.name = tag + "/" + c.name;
      result_.checks.push_back(std::move(c));
    }
  }

 private:
  template <class F>
  void Open(const std::string& path, F&& write) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error(ErrorKind::kIo, path + ": cannot write file");
    write(os);
    os.flush();
    if (!os) throw Error(ErrorKind::kIo, path + ": write failed");
    result_.files.push_back(path);
  }

  const RunOptions& options_;
  RunResult& result_;
};

IntervalSet EffectiveTarget(const IntervalSet& b) { return b.is_point_set() ? IntervalSet() : b; }

bool EndpointsFixed(const Pwl& f) {
  return f.domain() == kUnit && f.points().front().y == Rational(0) &&
         f.points().back().y == Rational(1);
}

// ---- zigzag ----

io::StageDump ZigzagDump(const zigzag::ZigzagState& st, const Rational& epsilon) {
  io::StageDump d;
  d.kind = "zigzag";
  d.stage = st.N;
  d.meta["N"] = st.N;
  d.meta["K"] = st.K;
  d.meta["epsilon"] = epsilon.str();
  Json levels = Json::array();
  for (const auto& b : st.b_levels) levels.push_back(io::ToJson(b));
  d.meta["B_levels"] = std::move(levels);
  d.f = st.f;
  d.checks = DumpChecks(d);
  return d;
}

void RunZigzag(const Scenario& sc, long stages, const RunOptions& options, RunResult& result) {
  const auto& script = sc.script;
  if (stages >= static_cast<long>(script.depth()))
    throw Invalid("stages: the script has levels 0.." + std::to_string(script.depth() - 1) +
                  ", so at most " + std::to_string(script.depth() - 1) + " stages can be built");
  auto core = zigzag::SelectCore(script);
  long K = sc.resolution.value_or(zigzag::FullResolution(script));
  auto built = zigzag::BuildStages(script, core, stages, K);

  Writer out(options, result);
  if (options.verify) {
    result.checks.push_back(Make("family_conditions", true, "conditions (2)-(5) on every level"));
    result.checks.push_back(
        {"condition_1", Status::kPending, zigzag::ValidationReport::kCondition1});
  }
  for (const auto& st : built) {
    io::StageDump d = ZigzagDump(st, script.epsilon);
    out.Emit(d, sc.name + " f_" + std::to_string(st.N));
    out.Audit(d);
  }
  if (!options.verify) return;

  auto bounds = zigzag::VerifyMeasureBounds(core, script);
  for (const auto& lb : bounds.levels) {
    if (static_cast<long>(lb.level) > stages) break;
    std::string n = std::to_string(lb.level);
    result.checks.push_back(Make("measure_upper_" + n, lb.upper_ok,
                                 "core " + lb.core_measure.str() + " <= " + lb.upper.str()));
    result.checks.push_back(Make("measure_lower_" + n, lb.lower_ok,
                                 "3^n core mass " + lb.scaled_mass.str() + " >= " + lb.lower.str()));
  }
  auto images = zigzag::VerifyCoreImages(built.back(), script, core);
  std::string detail = std::to_string(images.checked) + " core intervals";
  if (!images.identity_failures.empty())
    detail += "; identity fails at (n,k)=(" + std::to_string(images.identity_failures[0].first) +
              "," + std::to_string(images.identity_failures[0].second) + ")";
  if (!images.overlapping_levels.empty())
    detail += "; images overlap at level " + std::to_string(images.overlapping_levels[0]);
  result.checks.push_back(Make("core_image_identity", images.ok(), detail));
  for (long n = 0; n + 1 <= stages; ++n) {
    Rational gap = SupDistance(built[n + 1].f, built[n].f);
    Rational bound = Rational::Pow2(-(n + 1));
    result.checks.push_back(Make("modulus_" + std::to_string(n), gap <= bound,
                                 "sup |f_" + std::to_string(n + 1) + " - f_" + std::to_string(n) +
                                     "| = " + gap.str() + " <= " + bound.str()));
  }
}

// ---- concentrate ----

void RunConcentrate(const Scenario& sc, long stages, const RunOptions& options, RunResult& result) {
  auto chain = concentrate::BuildChain(sc.targets, static_cast<std::size_t>(stages));
  Writer out(options, result);
  for (std::size_t n = 0; n < chain.functions.size(); ++n) {
    io::StageDump d;
    d.kind = "concentrate";
    d.stage = static_cast<long>(n);
    Json witnesses = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      const auto& step = chain.steps[j];
      witnesses.push_back(Json{{"delta", step.delta.str()},
                               {"target", io::ToJson(step.target)},
                               {"steep_set", io::ToJson(step.result.steep_set)}});
    }
    d.meta["witnesses"] = std::move(witnesses);
    d.f = chain.functions[n];
    d.checks = DumpChecks(d);
    out.Emit(d, sc.name + " f_" + std::to_string(n));
    out.Audit(d);
  }
  if (!options.verify) return;

  for (std::size_t n = 0; n < chain.steps.size(); ++n) {
    const auto& step = chain.steps[n];
    const auto& p = step.post;
    std::string tag = std::to_string(n);
    std::string first = !p.outside_unchanged ? "outside_unchanged"
                        : !p.steep_small     ? "steep_small"
                        : !p.steep_onto      ? "steep_onto"
                        : !p.steep_pieces    ? "steep_pieces"
                        : !p.close           ? "close"
                        : !p.breakpoints_kept ? "breakpoints_kept"
                        : !p.monotone        ? "monotone"
                                             : "";
    result.checks.push_back(Make("concentrate_" + tag + (first.empty() ? "" : "/" + first), p.ok(),
                                 "measure(F) = " + p.steep_measure.str() + ", sup gap " +
                                     p.sup_gap.str()));
    result.checks.push_back(Make("cauchy_" + tag, step.cauchy_ok,
                                 step.cauchy_gap.str() + " < " + step.delta.str()));
  }
  result.checks.push_back(Make("witness_persistence", chain.witnesses_persist()));
  if (!chain.steps.empty()) {
    const auto& last = chain.steps.back();
    Rational image = Image(chain.functions.back(), last.result.steep_set).measure();
    bool ok = last.result.steep_set.measure() < last.delta &&
              image == EffectiveTarget(last.target).measure();
    result.checks.push_back(Make("luzin_n_witness", ok,
                                 "measure(F) = " + last.result.steep_set.measure().str() +
                                     ", measure(image) = " + image.str() + ", min measure(B_n) = " +
                                     chain.min_target_measure().str()));
  }
}

// ---- priority ----

io::StageDump PriorityDump(const concentrate::PriorityState& st) {
  io::StageDump d;
  d.kind = "priority";
  d.stage = st.stage;
  Json budgets = Json::array(), cells = Json::array(), frozen = Json::array(),
       classes = Json::array();
  for (std::size_t e = 0; e < st.strategies.size(); ++e) {
    budgets.push_back(st.strategies[e].budget.str());
    cells.push_back(io::ToJson(st.strategies[e].cell));
    frozen.push_back(st.strategies[e].frozen);
    classes.push_back(io::ToJson(st.classes[e]));
  }
  d.meta["budgets"] = std::move(budgets);
  d.meta["cells"] = std::move(cells);
  d.meta["frozen"] = std::move(frozen);
  d.meta["classes"] = std::move(classes);
  d.meta["B"] = io::ToJson(st.last_target);
  d.f = st.f;
  d.checks = DumpChecks(d);
  return d;
}

void RunPriority(const Scenario& sc, long stages, const RunOptions& options, RunResult& result) {
  auto state = concentrate::InitPriority(sc.budgets, sc.ClassesAt(0));
  Writer out(options, result);
  std::size_t count = sc.budgets.size();
  std::vector<std::optional<Rational>> last_image(count);
  std::vector<bool> monotone(count, true);
  auto emit = [&] {
    io::StageDump d = PriorityDump(state);
    out.Emit(d, sc.name + " f_" + std::to_string(state.stage));
    out.Audit(d);
    for (std::size_t e = 0; e < count; ++e) {
      auto k = concentrate::VerifyKurtzImage(state, e);
      if (!k) continue;
      if (last_image[e] && *last_image[e] < k->image_measure) monotone[e] = false;
      last_image[e] = k->image_measure;
    }
  };
  emit();
  for (long s = 0; s < stages; ++s) {
    state = concentrate::PriorityStep(state, sc.ClassesAt(s + 1));
    emit();
  }
  if (!options.verify) return;
  for (std::size_t e = 0; e < count; ++e) {
    std::string tag = "kurtz_image_" + std::to_string(e);
    auto k = concentrate::VerifyKurtzImage(state, e);
    if (!k) {
      result.checks.push_back({tag, Status::kPending,
                               "strategy still active; its dichotomy is not decided at a finite stage"});
      continue;
    }
    result.checks.push_back(Make(tag, monotone[e],
                                 "measure(f_s(P)) = " + k->image_measure.str() + " over " +
                                     std::to_string(k->frozen_pieces) +
                                     " frozen pieces, nonincreasing since freezing: " +
                                     Verdict(monotone[e])));
  }
  result.checks.push_back(
      {"flat_measure", Status::kPending,
       "flat pieces of f_s total " + concentrate::FlatMeasure(state.f).str() +
           "; strict monotonicity of the limit is not decided"});
}

}  // namespace

std::vector<IntervalSet> Scenario::ClassesAt(long s) const {
  if (!shrink_centers.empty()) {
    std::vector<IntervalSet> out;
    Rational r = Rational::Pow2(-s);
    for (const auto& c : shrink_centers)
      out.push_back(Intersection(IntervalSet(Interval(c - r, c + r)), IntervalSet(kUnit)));
    return out;
  }
  if (classes.empty()) return {};
  return classes[std::min<std::size_t>(static_cast<std::size_t>(s), classes.size() - 1)];
}

Scenario ParseScenario(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError((where.empty() ? "/" : where) + ": expected an object");
  Scenario sc;
  std::string kind;
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) throw ParseError(where + "/kind: expected a string");
    kind = j["kind"].get<std::string>();
  } else if (j.contains("levels") || j.contains("generator")) {
    kind = "zigzag";
  } else {
    throw ParseError((where.empty() ? "/" : where) + ": missing field \"kind\"");
  }
  if (j.contains("name") && j["name"].is_string()) sc.name = j["name"].get<std::string>();
  if (kind == "zigzag") {
    sc.kind = Kind::kZigzag;
    ParseZigzag(sc, j, where);
  } else if (kind == "concentrate") {
    sc.kind = Kind::kConcentrate;
    ParseConcentrate(sc, j, where);
  } else if (kind == "priority") {
    sc.kind = Kind::kPriority;
    ParsePriority(sc, j, where);
  } else {
    throw ParseError(where + "/kind: unknown kind \"" + kind + "\"");
  }
  if (sc.name.empty()) sc.name = kind;
  return sc;
}

Scenario LoadScenario(const std::string& path) {
  Json j = io::ReadJsonFile(path);
  try {
    return ParseScenario(j, "");
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

const Check* RunResult::first_failure() const {
  for (const auto& c : checks)
    if (c.status == Status::kFail) return &c;
  return nullptr;
}

Json RunResult::Report() const {
  Json list = Json::array();
  for (const auto& c : checks) {
    const char* status = c.status == Status::kPass ? "pass"
                         : c.status == Status::kFail ? "fail"
                                                     : "pending";
    list.push_back(Json{{"name", c.name}, {"status", status}, {"detail", c.detail}});
  }
  return Json{{"all_pass", first_failure() == nullptr}, {"checks", std::move(list)},
              {"files", files}};
}

RunResult Run(const Scenario& sc, const RunOptions& options) {
  long stages = options.stages.value_or(sc.stages);
  if (stages < 0) throw InvalidArgument("stages must be nonnegative");
  RunResult result;
  switch (sc.kind) {
    case Kind::kZigzag: RunZigzag(sc, stages, options, result); break;
    case Kind::kConcentrate: RunConcentrate(sc, stages, options, result); break;
    case Kind::kPriority: RunPriority(sc, stages, options, result); break;
  }
  if (options.verify) {
    std::string path = (std::filesystem::path(options.out_dir) / "verdict.json").string();
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error(ErrorKind::kIo, path + ": cannot write file");
    result.files.push_back(path);
    os << result.Report().dump(2) << "\n";
  }
  return result;
}

std::vector<std::pair<std::string, bool>> DumpChecks(const io::StageDump& d) {
  std::vector<std::pair<std::string, bool>> out;
  const Pwl& f = d.f;
  auto where = [&](const char* key) { return std::string("/") + key; };
  auto field = [&](const char* key) -> const Json& {
    if (!d.meta.contains(key)) throw ParseError(std::string("/") + key + ": missing field");
    return d.meta[key];
  };
  out.emplace_back("endpoints_fixed", EndpointsFixed(f));
  if (d.kind == "zigzag") {
    const Json& levels = field("B_levels");
    if (!levels.is_array()) throw ParseError("/B_levels: expected an array");
    IntervalSet prev;
    for (std::size_t m = 0; m < levels.size(); ++m) {
      IntervalSet b = io::ParseSet(levels[m], "/B_levels/" + std::to_string(m));
      auto n = static_cast<long>(m);
      if (m > 0) out.emplace_back("b_nested_" + std::to_string(m), prev.includes(b));
      out.emplace_back("b_upper_" + std::to_string(m), b.measure() <= Rational::Pow3(-n));
      out.emplace_back("b_image_" + std::to_string(m),
                       Image(f, b).measure() == Rational::Pow3(n) * b.measure());
      prev = std::move(b);
    }
  } else if (d.kind == "concentrate") {
    out.emplace_back("monotone", IsNondecreasing(f));
    out.emplace_back("variation_one", Variation(f, f.domain().hi) == Rational(1));
    const Json& ws = field("witnesses");
    if (!ws.is_array()) throw ParseError("/witnesses: expected an array");
    for (std::size_t j = 0; j < ws.size(); ++j) {
      std::string at = "/witnesses/" + std::to_string(j);
      if (!ws[j].is_object() || !ws[j].contains("delta") || !ws[j].contains("target") ||
          !ws[j].contains("steep_set"))
        throw ParseError(at + ": expected {delta, target, steep_set}");
      Rational delta = io::ParseRational(ws[j]["delta"], at + "/delta");
      IntervalSet target = io::ParseSet(ws[j]["target"], at + "/target");
      IntervalSet steep = io::ParseSet(ws[j]["steep_set"], at + "/steep_set");
      out.emplace_back("witness_" + std::to_string(j),
                       steep.measure() < delta && Image(f, steep) == EffectiveTarget(target));
    }
  } else if (d.kind == "priority") {
    out.emplace_back("monotone", IsNondecreasing(f));
    const Json& budgets = field("budgets");
    const Json& cells = field("cells");
    if (!budgets.is_array() || !cells.is_array() || budgets.size() != cells.size())
      throw ParseError("/cells: expected one cell per budget");
    IntervalSet removed;
    for (std::size_t e = 0; e < cells.size(); ++e) {
      Rational eps = io::ParseRational(budgets[e], "/budgets/" + std::to_string(e));
      IntervalSet cell = io::ParseSet(cells[e], "/cells/" + std::to_string(e));
      out.emplace_back("cell_budget_" + std::to_string(e), cell.measure() <= eps);
      if (static_cast<long>(e) + 1 < d.stage) removed = Union(removed, cell);
    }
    if (d.stage > 0) {
      IntervalSet b = io::ParseSet(field("B"), where("B"));
      out.emplace_back("target_formula", b == Difference(IntervalSet(kUnit), removed));
      out.emplace_back("target_measure", Rational(1, 2) < b.measure());
    }
  } else {
    throw ParseError("/kind: unknown dump kind \"" + d.kind + "\"");
  }
  return out;
}

std::vector<Check> VerifyDumpFile(const std::string& path) {
  std::string text = ReadFile(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  io::StageDump dump;
  std::vector<std::pair<std::string, bool>> recomputed;
  try {
    dump = io::ParseDump(j, "");
    j = Json();
    recomputed = DumpChecks(dump);
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
  std::vector<Check> out;
  std::string mismatch;
  if (recomputed.size() != dump.checks.size()) mismatch = "verdict count differs";
  for (std::size_t i = 0; mismatch.empty() && i < recomputed.size(); ++i)
    if (recomputed[i] != dump.checks[i]) mismatch = recomputed[i].first;
  out.push_back(Make("stored_verdicts", mismatch.empty(),
                     mismatch.empty() ? "recomputed verdicts match" : "differs at " + mismatch));
  std::string failed;
  for (const auto& [name, ok] : recomputed)
    if (!ok) {
      failed = name;
      break;
    }
  out.push_back(Make(failed.empty() ? "verdicts" : failed, failed.empty(),
                     std::to_string(recomputed.size()) + " verdicts recomputed"));
  out.push_back(Make("byte_identical", io::DumpToString(dump) == text,
                     "re-serialization of " + path));
  return out;
}

}  // namespace luzin::scenario
