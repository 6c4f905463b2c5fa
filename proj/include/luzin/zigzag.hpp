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
#include <span>
#include <string>
#include <vector>

#include "luzin/interval.hpp"
#include "luzin/pwl.hpp"

namespace luzin::zigzag {

// Finite truncation of the double sequence I^k_n: levels[n][k]. Everything
// lives in the unit interval, which is also the ambient for complements.
struct FamilyScript {
  std::vector<std::vector<Interval>> levels;
  Rational epsilon;

  std::size_t depth() const { return levels.size(); }
  IntervalSet level_union(std::size_t n) const;
  // Stand-in for the target set: the deepest level's union.
  IntervalSet a_proxy() const;
};

inline Interval UnitInterval() { return Interval(Rational(0), Rational(1)); }

// Nowhere-dense-style script with levels 0..deepest. Each parent keeps three
// children of relative length 2/19 in every third, except that the middle
// third of [0, 1] keeps one, so the thirds differ in mass.
FamilyScript FatCantorScript(std::size_t deepest, Rational epsilon);

struct Violation {
  int condition;  // 0 = outside [0, 1]; 2..5 as in the family conditions
  std::size_t level;
  std::size_t index;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  // Condition 1 asks for the infinite intersection to equal the target set.
  static constexpr const char* kCondition1 = "not checkable at finite stage";
  bool valid() const { return violations.empty(); }
};

ValidationReport ValidateFamily(const FamilyScript& script);

// Open V with A ⊆ V ⊆ U and positive distance to the complement of U in
// `ambient`: A dilated by half its distance to that complement, cut back to
// U. Throws when A ⊄ U or the distance is zero.
IntervalSet Shrink(const IntervalSet& a, const IntervalSet& u, const Interval& ambient);

// Replaces f on `segment` (where f must be linear) by a three-piece zig-zag
// of triple slope with the same endpoint values and range.
Pwl Triple(const Pwl& f, const Interval& segment);
// Triple on each of the given almost-disjoint segments, in one pass.
Pwl TripleAll(const Pwl& f, std::vector<Interval> segments);

struct CoreSelection {
  std::vector<long> cutoff;                      // N_n; -1 keeps nothing
  std::vector<std::vector<int>> third;           // b[n][k]
  std::vector<std::vector<std::size_t>> parent;  // parent[n][k] at level n - 1
  std::vector<std::vector<int>> parent_third;    // which third of the parent
  std::vector<std::vector<std::size_t>> members; // core indices per level
  std::vector<IntervalSet> cores;                // unions of the members
};

CoreSelection SelectCore(const FamilyScript& script);
// Rebuilds members and cores from `selection.third`, e.g. after a deliberate
// corruption of one choice.
CoreSelection RecomputeMembers(const FamilyScript& script, CoreSelection selection);

struct ZigzagState {
  long N = 0;
  long K = 0;
  Pwl f = Pwl::Identity(UnitInterval());
  std::vector<IntervalSet> b_levels;
};

// Smallest K such that every script interval is longer than 2^-K.
long FullResolution(const FamilyScript& script);

// f_{N,K}: levels 0..N in order, each preceded by subdivision to height 2^-n,
// tripling every I^k_n longer than 2^-K.
ZigzagState BuildStage(const FamilyScript& script, const CoreSelection& core, long N, long K);
// f_{0,K}, ..., f_{N,K}, sharing work between stages.
std::vector<ZigzagState> BuildStages(const FamilyScript& script, const CoreSelection& core,
                                     long N, long K);

struct LevelBounds {
  std::size_t level = 0;
  Rational core_measure;
  Rational upper;        // 3^-n
  Rational scaled_mass;  // 3^n * measure(core ∩ A)
  Rational lower;        // measure(A) - (1 - 2^-n-1) * epsilon
  Rational lower_plain;  // measure(A) - epsilon
  bool upper_ok = false;
  bool lower_ok = false;
};

struct MeasureBoundsReport {
  std::vector<LevelBounds> levels;
  bool all_ok() const;
};

MeasureBoundsReport VerifyMeasureBounds(const CoreSelection& core, const FamilyScript& script);

struct Location {
  bool well_located = false;
  std::optional<std::size_t> depth;  // unset when J lies in no script interval
};

Location ClassifyWellLocated(const Interval& j, const FamilyScript& script);
bool Peers(const Interval& j0, const Interval& j1, const FamilyScript& script);

struct ImageIdentityReport {
  Rational image_measure;
  Rational expected;  // 3^depth * |J|
  bool identity_holds = false;
  bool stable = false;  // f_M[J] = f_depth[J] for every later built stage
};

// `stages[m]` must be f_m. Requires stages.size() > depth.
ImageIdentityReport VerifyImageIdentity(std::span<const ZigzagState> stages, const Interval& j,
                                  std::size_t depth);

// Images of the given intervals under f pairwise meet in at most one point.
bool ImagesAlmostDisjoint(const Pwl& f, std::span<const Interval> js);

struct CoreImageReport {
  std::size_t checked = 0;
  std::vector<std::pair<std::size_t, std::size_t>> identity_failures;  // (n, k)
  std::vector<std::size_t> overlapping_levels;
  bool ok() const { return identity_failures.empty() && overlapping_levels.empty(); }
};

// Image identity for every core member at levels <= f_stage.N under
// f_stage, plus the peer overlap condition per level.
CoreImageReport VerifyCoreImages(const ZigzagState& f_stage, const FamilyScript& script,
                                 const CoreSelection& core);

struct LocalityReport {
  bool in_a_proxy = false;
  long level = -1;  // no script interval of a deeper level meets (a, b)
  Interval neighborhood;
  bool stable = false;  // every later built stage equals f_level on it
  SlopeSummary slopes;  // of the last built stage on the neighborhood
  Interval linear_window;  // sub-neighborhood where f is linear on each side of x
  bool two_linear = false;
};

LocalityReport VerifyLocality(const FamilyScript& script, const Rational& x,
                              std::span<const ZigzagState> stages);

}  // namespace luzin::zigzag
