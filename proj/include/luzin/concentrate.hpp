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

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "luzin/interval.hpp"
#include "luzin/pwl.hpp"

namespace luzin::concentrate {

struct ConcentrateResult {
  Pwl function = Pwl::Identity(Interval(Rational(0), Rational(1)));  // the rebuilt h
  IntervalSet steep_set;  // F: steep pieces mapping onto B
};

// Rebuilds nondecreasing h on h^-1(B) so that a set of measure < delta maps
// onto B while h moves by less than delta.
//
// B is cut into the intervals I_k on whose preimage h is a single rising
// piece. Each I_k = [c, d] is split into m = ceil((d - c) / delta) equal
// bands; the preimage of a band gets a steep segment on its left fraction
// rho followed by a flat segment at the band top. rho is the largest power
// of two not above min(1/2, delta / (2 * measure(h^-1(B)))), so the steep
// set has measure at most delta / 2 and every band moves h by less than its
// height. A point set B carries no measure and leaves h unchanged.
ConcentrateResult Concentrate(const Pwl& h, const IntervalSet& b, const Rational& delta);

// The steep fraction used by Concentrate.
Rational SteepFraction(const Rational& delta, const Rational& preimage_measure);

struct PostconditionReport {
  bool outside_unchanged = false;  // h == result outside h^-1(B)
  bool steep_small = false;        // measure(F) < delta
  bool steep_onto = false;         // result(F) == B
  bool steep_pieces = false;       // F is made of rising pieces inside result^-1(B)
  bool close = false;              // sup |h - result| < delta
  bool breakpoints_kept = false;   // result(x) == h(x) at every breakpoint of h
  bool monotone = false;
  Rational steep_measure;
  Rational sup_gap;
  bool ok() const {
    return outside_unchanged && steep_small && steep_onto && steep_pieces && close &&
           breakpoints_kept && monotone;
  }
};

// Checks the three defining outcomes from the inputs and the claimed result,
// without reusing any of Concentrate's internals.
PostconditionReport VerifyConcentrate(const Pwl& h, const IntervalSet& b, const Rational& delta,
                                      const ConcentrateResult& result);

struct ChainStep {
  IntervalSet target;  // B_n
  Rational delta;      // 2^-n
  ConcentrateResult result;
  PostconditionReport post;
  Rational cauchy_gap;  // sup |f_{n+1} - f_n|
  bool cauchy_ok = false;
};

struct Chain {
  std::vector<Pwl> functions;  // f_0 .. f_stages
  std::vector<ChainStep> steps;

  Rational min_target_measure() const;
  // image(f_m, F_n) == B_n for all built m > n.
  bool witnesses_persist() const;
};

// f_0 = identity on [0, 1], f_{n+1} = Concentrate(f_n, B_n, 2^-n). When the
// sequence is shorter than `stages` its last set repeats.
Chain BuildChain(std::span<const IntervalSet> targets, std::size_t stages);

struct Strategy {
  Rational budget;      // epsilon_e
  IntervalSet cell;     // C_{e,s}
  IntervalSet history;  // union of all cells so far
  bool frozen = false;
  std::optional<long> frozen_at;
  long replacements = 0;
};

struct PriorityState {
  long stage = 0;
  Pwl f = Pwl::Identity(Interval(Rational(0), Rational(1)));  // f_s
  std::vector<Strategy> strategies;
  std::vector<IntervalSet> classes;  // P_{e,s}
  IntervalSet last_target;           // B_{s-1}; empty at stage 0
};

// Stage-0 state. Cells start as consecutive intervals [sum_{j<e}, sum_{j<=e}]
// of the budgets. Throws a configuration error unless the budgets are
// positive with sum below 1/2.
PriorityState InitPriority(std::vector<Rational> budgets, std::vector<IntervalSet> classes);

// B_s = [0, 1] minus the cells of the strategies e < s.
IntervalSet TargetSet(const PriorityState& state);

// One stage: update the cells of the active strategies e < s, then
// f_{s+1} = Concentrate(f_s, B_s, 2^-s). `next_classes` must nest into the
// current ones.
PriorityState PriorityStep(const PriorityState& state, std::span<const IntervalSet> next_classes);

struct KurtzImage {
  Rational image_measure;         // measure(f_s(P_{e,s}))
  std::size_t frozen_pieces = 0;  // pieces of f_s on f_s^-1(C_e)
};

// std::nullopt while strategy e is still pending (not frozen).
std::optional<KurtzImage> VerifyKurtzImage(const PriorityState& state, std::size_t e);

// Total length of the flat pieces of f.
Rational FlatMeasure(const Pwl& f);

}  // namespace luzin::concentrate
