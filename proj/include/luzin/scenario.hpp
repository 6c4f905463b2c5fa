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

#include <optional>
#include <string>
#include <vector>

#include "luzin/concentrate.hpp"
#include "luzin/serialize.hpp"
#include "luzin/zigzag.hpp"

namespace luzin::scenario {

enum class Kind { kZigzag, kConcentrate, kPriority };

struct Scenario {
  Kind kind = Kind::kZigzag;
  std::string name;
  long stages = 0;
  // zigzag
  zigzag::FamilyScript script;
  std::optional<long> resolution;  // K; full resolution when unset
  // concentrate
  std::vector<IntervalSet> targets;
  // priority; classes[s][e] = P_{e,s}, the last row repeats
  std::vector<Rational> budgets;
  std::vector<std::vector<IntervalSet>> classes;
  std::vector<Rational> shrink_centers;  // P_{e,s} = [c - 2^-s, c + 2^-s] ∩ [0, 1]

  std::vector<IntervalSet> ClassesAt(long s) const;
};

// Parses and validates against the owning module's input contract. Errors
// carry the file path and a JSON pointer; a family violation names (n,k).
Scenario ParseScenario(const io::Json& j, const std::string& where);
Scenario LoadScenario(const std::string& path);

enum class Status { kPass, kFail, kPending };

struct Check {
  std::string name;
  Status status = Status::kFail;
  std::string detail;
};

struct RunOptions {
  std::optional<long> stages;
  bool verify = false;
  bool json = true;
  bool csv = false;
  bool svg = false;
  long grid = 1024;
  std::string out_dir = ".";
};

struct RunResult {
  std::vector<std::string> files;
  std::vector<Check> checks;
  const Check* first_failure() const;
  io::Json Report() const;
};

// Builds the construction, writes the requested artifacts under out_dir and,
// with verify, the exact checks plus verdict.json.
RunResult Run(const Scenario& scenario, const RunOptions& options);

// Verdicts that can be recomputed from one dump alone, in a fixed order.
std::vector<std::pair<std::string, bool>> DumpChecks(const io::StageDump& dump);

// Reloads a dump, recomputes its checks and re-serializes it. Fails a check
// when a stored verdict differs, a verdict is false, or the bytes differ.
std::vector<Check> VerifyDumpFile(const std::string& path);

}  // namespace luzin::scenario
