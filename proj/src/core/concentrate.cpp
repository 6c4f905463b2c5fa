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

#include "luzin/concentrate.hpp"

#include <algorithm>

#include "luzin/error.hpp"

namespace luzin::concentrate {

namespace {

const Interval kUnit(Rational(0), Rational(1));

// A point set carries no measure; Concentrate ignores it.
IntervalSet EffectiveTarget(const IntervalSet& b) {
  return b.is_point_set() ? IntervalSet() : b;
}

}  // namespace

Rational SteepFraction(const Rational& delta, const Rational& preimage_measure) {
  Rational cap(1, 2);
  if (preimage_measure.sign() > 0) {
    Rational r = delta / (Rational(2) * preimage_measure);
    if (r < cap) cap = r;
  }
  Rational rho(1, 2);
  const Rational half(1, 2);
  while (cap < rho) rho *= half;
  return rho;
}

ConcentrateResult Concentrate(const Pwl& h, const IntervalSet& b, const Rational& delta) {
  if (delta.sign() <= 0) throw InvalidArgument("concentrate needs delta > 0");
  if (!IsNondecreasing(h)) throw InvalidArgument("concentrate needs a nondecreasing function");
  const auto& pts = h.points();
  IntervalSet target = EffectiveTarget(b);
  if (target.empty()) return {h, {}};
  if (!IntervalSet(Interval(pts.front().y, pts.back().y)).includes(target))
    throw InvalidArgument("target set leaves the range of h");

  Rational rho = SteepFraction(delta, Preimage(h, target).measure());
  const auto& parts = target.parts();

  std::vector<Point> out;
  out.reserve(pts.size() * 2);
  std::vector<Interval> steep;
  auto emit = [&](Rational x, Rational y) {
    if (out.empty() || out.back().x < x) out.push_back({std::move(x), std::move(y)});
  };

  emit(pts.front().x, pts.front().y);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Point& p = pts[i];
    const Point& q = pts[i + 1];
    if (p.y < q.y) {
      auto it = std::partition_point(parts.begin(), parts.end(),
                                     [&](const Interval& part) { return part.hi <= p.y; });
      for (; it != parts.end() && it->lo < q.y; ++it) {
        const Rational& c = max(p.y, it->lo);
        const Rational& d = min(q.y, it->hi);
        // The sub-piece of h over [c, d]; h is linear there.
        Rational run = (q.x - p.x) / (q.y - p.y);
        Rational xa = p.x + (c - p.y) * run;
        Rational xb = p.x + (d - p.y) * run;
        mpz_class bands = ((d - c) / delta).ceil();
        if (!bands.fits_slong_p()) throw InvalidArgument("band count overflow");
        Rational m(bands.get_si());
        Rational height = (d - c) / m;
        Rational width = (xb - xa) / m;
        Rational rise_width = rho * width;
        Rational bx = xa;
        Rational by = c;
        emit(xa, c);
        for (long j = 0; j < bands.get_si(); ++j) {
          Rational top = by + height;
          Rational steep_end = bx + rise_width;
          Rational band_end = bx + width;
          steep.emplace_back(bx, steep_end);
          emit(steep_end, top);
          emit(band_end, top);
          bx = std::move(band_end);
          by = std::move(top);
        }
      }
    }
    emit(q.x, q.y);
  }
  return {Pwl(std::move(out)), IntervalSet::Normalize(std::move(steep))};
}

PostconditionReport VerifyConcentrate(const Pwl& h, const IntervalSet& b, const Rational& delta,
                                      const ConcentrateResult& result) {
  PostconditionReport r;
  const Pwl& g = result.function;
  const IntervalSet& f_set = result.steep_set;
  IntervalSet target = EffectiveTarget(b);
  if (h.domain() != g.domain()) return r;

  r.monotone = IsNondecreasing(g);

  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (const auto& p : h.points()) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  r.breakpoints_kept = ValuesOnGrid(g, xs) == ys;

  r.outside_unchanged = true;
  IntervalSet outside = Complement(Preimage(h, target), h.domain());
  for (const auto& part : outside.parts()) {
    bool same = part.is_point() ? h.eval(part.lo) == g.eval(part.lo) : AgreeOn(h, g, part);
    if (!same) {
      r.outside_unchanged = false;
      break;
    }
  }

  r.steep_measure = f_set.measure();
  r.steep_small = r.steep_measure < delta;
  r.steep_onto = Image(g, f_set) == target;

  // The rising pieces of g lying over B.
  std::vector<Interval> rising;
  const auto& gp = g.points();
  for (std::size_t i = 0; i + 1 < gp.size(); ++i)
    if (gp[i].y < gp[i + 1].y && target.contains(Interval(gp[i].y, gp[i + 1].y)))
      rising.emplace_back(gp[i].x, gp[i + 1].x);
  r.steep_pieces = IntervalSet::Normalize(std::move(rising)) == f_set;

  r.sup_gap = SupDistance(h, g);
  r.close = r.sup_gap < delta;
  return r;
}

Rational Chain::min_target_measure() const {
  if (steps.empty()) return Rational(0);
  Rational best = steps.front().target.measure();
  for (const auto& s : steps) best = min(best, s.target.measure());
  return best;
}

bool Chain::witnesses_persist() const {
  for (std::size_t n = 0; n < steps.size(); ++n) {
    IntervalSet target = EffectiveTarget(steps[n].target);
    for (std::size_t m = n + 1; m < functions.size(); ++m)
      if (Image(functions[m], steps[n].result.steep_set) != target) return false;
  }
  return true;
}

Chain BuildChain(std::span<const IntervalSet> targets, std::size_t stages) {
  if (stages > 0 && targets.empty()) throw InvalidArgument("chain needs at least one target set");
  Chain chain;
  chain.functions.push_back(Pwl::Identity(kUnit));
  for (std::size_t n = 0; n < stages; ++n) {
    ChainStep step;
    step.target = targets[std::min(n, targets.size() - 1)];
    step.delta = Rational::Pow2(-static_cast<long>(n));
    const Pwl& fn = chain.functions.back();
    step.result = Concentrate(fn, step.target, step.delta);
    step.post = VerifyConcentrate(fn, step.target, step.delta, step.result);
    step.cauchy_gap = SupDistance(fn, step.result.function);
    step.cauchy_ok = step.cauchy_gap < step.delta;
    chain.functions.push_back(step.result.function);
    chain.steps.push_back(std::move(step));
  }
  return chain;
}

PriorityState InitPriority(std::vector<Rational> budgets, std::vector<IntervalSet> classes) {
  if (budgets.size() != classes.size())
    throw InvalidArgument("one class approximation per strategy is required");
  Rational total;
  for (const auto& e : budgets) {
    if (e.sign() <= 0) throw Error(ErrorKind::kConfiguration, "budgets must be positive");
    total += e;
  }
  if (!(total < Rational(1, 2)))
    throw Error(ErrorKind::kConfiguration,
                "budgets sum to " + total.str() + ", which is not below 1/2");
  PriorityState state;
  Rational start;
  for (auto& e : budgets) {
    Strategy s;
    s.cell = IntervalSet(Interval(start, start + e));
    s.history = s.cell;
    start += e;
    s.budget = std::move(e);
    state.strategies.push_back(std::move(s));
  }
  state.classes = std::move(classes);
  return state;
}

IntervalSet TargetSet(const PriorityState& state) {
  IntervalSet removed;
  for (std::size_t e = 0; e < state.strategies.size() && static_cast<long>(e) < state.stage; ++e)
    removed = Union(removed, state.strategies[e].cell);
  return Difference(IntervalSet(kUnit), removed);
}

namespace {

// Leftmost part of `available` with measure `need` (need below its measure).
IntervalSet LeftmostPortion(const IntervalSet& available, Rational need) {
  std::vector<Interval> out;
  for (const auto& part : available.parts()) {
    if (need.sign() <= 0) break;
    if (part.length() <= need) {
      need -= part.length();
      out.push_back(part);
    } else {
      out.emplace_back(part.lo, part.lo + need);
      need = Rational(0);
    }
  }
  return IntervalSet::Normalize(std::move(out));
}

}  // namespace

PriorityState PriorityStep(const PriorityState& state, std::span<const IntervalSet> next_classes) {
  if (next_classes.size() != state.strategies.size())
    throw InvalidArgument("one class approximation per strategy is required");
  for (std::size_t e = 0; e < next_classes.size(); ++e)
    if (!state.classes[e].includes(next_classes[e]))
      throw InvalidArgument("class approximation for strategy " + std::to_string(e) +
                            " does not shrink at stage " + std::to_string(state.stage + 1));

  PriorityState next = state;
  const long s = state.stage;
  for (std::size_t e = 0; e < next.strategies.size() && static_cast<long>(e) < s; ++e) {
    Strategy& st = next.strategies[e];
    if (st.frozen) continue;
    IntervalSet kept = Intersection(Image(state.f, state.classes[e]), st.cell);
    if (!(kept.measure() < st.budget / Rational(2))) continue;
    Rational need = st.budget - kept.measure();
    IntervalSet available = Difference(IntervalSet(kUnit), st.history);
    IntervalSet fresh;
    if (need < available.measure()) {
      fresh = LeftmostPortion(available, need);
    } else {
      fresh = available;
      st.frozen = true;
      st.frozen_at = s + 1;
    }
    st.cell = Union(kept.is_point_set() ? IntervalSet() : kept, fresh);
    st.history = Union(st.history, fresh);
    ++st.replacements;
  }

  next.last_target = TargetSet(next);
  next.f = Concentrate(state.f, next.last_target, Rational::Pow2(-s)).function;
  next.classes.assign(next_classes.begin(), next_classes.end());
  next.stage = s + 1;
  return next;
}

std::optional<KurtzImage> VerifyKurtzImage(const PriorityState& state, std::size_t e) {
  const Strategy& st = state.strategies.at(e);
  if (!st.frozen) return std::nullopt;
  KurtzImage out;
  out.image_measure = Image(state.f, state.classes[e]).measure();
  const auto& pts = state.f.points();
  IntervalSet frozen_region = Preimage(state.f, st.cell);
  for (const auto& part : frozen_region.parts()) {
    if (part.is_point()) continue;
    auto first = std::partition_point(pts.begin(), pts.end(),
                                      [&](const Point& p) { return p.x <= part.lo; });
    auto last = std::partition_point(pts.begin(), pts.end(),
                                     [&](const Point& p) { return p.x < part.hi; });
    // Pieces starting in [part.lo, part.hi): from the one holding part.lo.
    out.frozen_pieces += static_cast<std::size_t>(last - first) + 1;
  }
  return out;
}

Rational FlatMeasure(const Pwl& f) {
  Rational total;
  const auto& pts = f.points();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    if (pts[i].y == pts[i + 1].y) total += pts[i + 1].x - pts[i].x;
  return total;
}

}  // namespace luzin::concentrate
