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

#include "luzin/zigzag.hpp"

#include <algorithm>
#include <numeric>

#include "luzin/error.hpp"

namespace luzin::zigzag {

IntervalSet FamilyScript::level_union(std::size_t n) const {
  return IntervalSet::Normalize(levels.at(n));
}

IntervalSet FamilyScript::a_proxy() const {
  if (levels.empty()) return {};
  return level_union(levels.size() - 1);
}

FamilyScript FatCantorScript(std::size_t deepest, Rational epsilon) {
  FamilyScript script;
  script.epsilon = std::move(epsilon);
  script.levels.push_back({UnitInterval()});
  const Rational child(2, 19);
  const Rational gap(1, 228);  // (1/3 - 3 * 2/19) / 4
  for (std::size_t n = 1; n <= deepest; ++n) {
    std::vector<Interval> next;
    for (const auto& parent : script.levels.back()) {
      Rational len = parent.length();
      Rational c = child * len;
      Rational g = gap * len;
      for (int t = 0; t < 3; ++t) {
        Interval third = Third(parent, t);
        if (n == 1 && t == 1) {
          Rational lo = third.lo + (third.length() - c) / Rational(2);
          next.emplace_back(lo, lo + c);
          continue;
        }
        for (int j = 0; j < 3; ++j) {
          Rational lo = third.lo + g + Rational(j) * (c + g);
          next.emplace_back(lo, lo + c);
        }
      }
    }
    script.levels.push_back(std::move(next));
  }
  return script;
}

namespace {

// Positions of a level's intervals sorted by left endpoint.
std::vector<std::size_t> SortedOrder(const std::vector<Interval>& level) {
  std::vector<std::size_t> order(level.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return level[a].lo < level[b].lo; });
  return order;
}

struct ParentLink {
  std::size_t parent;
  int third;
};

// Parent at the previous level and the third of it containing `iv`.
std::optional<ParentLink> FindParent(const Interval& iv, const std::vector<Interval>& prev,
                                     const std::vector<std::size_t>& prev_order) {
  auto it = std::partition_point(prev_order.begin(), prev_order.end(),
                                 [&](std::size_t idx) { return prev[idx].lo <= iv.lo; });
  // Walk back over candidates starting at or before iv.lo; touching
  // neighbours can only matter for degenerate intervals.
  for (int step = 0; step < 2 && it != prev_order.begin(); ++step) {
    --it;
    const Interval& p = prev[*it];
    if (!p.contains(iv)) continue;
    for (int t = 0; t < 3; ++t)
      if (Third(p, t).contains(iv)) return ParentLink{*it, t};
  }
  return std::nullopt;
}

std::string Where(std::size_t n, std::size_t k) {
  return "interval (n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

std::string Show(const Interval& iv) { return "[" + iv.lo.str() + ", " + iv.hi.str() + "]"; }

}  // namespace

ValidationReport ValidateFamily(const FamilyScript& script) {
  ValidationReport report;
  const Interval unit = UnitInterval();
  auto flag = [&](int condition, std::size_t n, std::size_t k, std::string msg) {
    report.violations.push_back({condition, n, k, std::move(msg)});
  };

  std::vector<std::vector<std::size_t>> orders;
  for (std::size_t n = 0; n < script.levels.size(); ++n) {
    const auto& level = script.levels[n];
    for (std::size_t k = 0; k < level.size(); ++k)
      if (!unit.contains(level[k])) flag(0, n, k, Show(level[k]) + " leaves [0, 1]");

    // (2) at most one common point within a level.
    orders.push_back(SortedOrder(level));
    const auto& order = orders.back();
    for (std::size_t i = 1, widest = order.empty() ? 0 : order[0]; i < order.size(); ++i) {
      const Interval& cur = level[order[i]];
      const Interval& prev = level[widest];
      if (cur.lo < prev.hi && cur.lo < cur.hi)
        flag(2, n, order[i], Show(cur) + " overlaps " + Where(n, widest) +
                                 " in more than one point");
      if (prev.hi < cur.hi) widest = order[i];
    }

    // (4) lengths nonincreasing in k.
    for (std::size_t k = 1; k < level.size(); ++k)
      if (level[k - 1].length() < level[k].length())
        flag(4, n, k, Show(level[k]) + " is longer than " + Where(n, k - 1));

    if (n == 0) continue;
    const auto& prev = script.levels[n - 1];
    IntervalSet prev_union = IntervalSet::Normalize(prev);
    for (std::size_t k = 0; k < level.size(); ++k) {
      const Interval& iv = level[k];
      // (3) positive distance to the complement of the previous level's
      // union; nesting into every shallower level follows by transitivity.
      const auto& parts = prev_union.parts();
      auto it = std::partition_point(parts.begin(), parts.end(),
                                     [&](const Interval& p) { return p.lo <= iv.lo; });
      bool inside = false;
      if (it != parts.begin()) {
        const Interval& q = *(it - 1);
        bool left = q.lo < iv.lo || (iv.lo == unit.lo && q.lo == unit.lo);
        bool right = iv.hi < q.hi || (iv.hi == unit.hi && q.hi == unit.hi);
        inside = left && right;
      }
      if (!inside)
        flag(3, n, k, Show(iv) + " is not at positive distance from the complement of level " +
                          std::to_string(n - 1));

      // (5) inside a third of a parent and shorter than a ninth of it.
      auto link = FindParent(iv, prev, orders[n - 1]);
      if (!link) {
        flag(5, n, k, Show(iv) + " lies in no third of a level-" + std::to_string(n - 1) +
                          " interval");
      } else if (!(Rational(9) * iv.length() < prev[link->parent].length())) {
        flag(5, n, k, Show(iv) + " is not shorter than a ninth of its parent " +
                          Where(n - 1, link->parent));
      }
    }
  }
  return report;
}

IntervalSet Shrink(const IntervalSet& a, const IntervalSet& u, const Interval& ambient) {
  if (a.empty() || u.empty()) throw InvalidArgument("shrink needs non-empty sets");
  if (!u.includes(a)) throw InvalidArgument("shrink needs A inside U");
  IntervalSet outside = Complement(u, ambient);
  if (outside.empty()) return u;
  Rational d = *Distance(a, outside);
  if (d.is_zero()) throw InvalidArgument("A touches the complement of U");
  return Intersection(Dilate(a, d / Rational(2)), u);
}

Pwl Triple(const Pwl& f, const Interval& segment) { return TripleAll(f, {segment}); }

Pwl TripleAll(const Pwl& f, std::vector<Interval> segments) {
  std::sort(segments.begin(), segments.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t s = 0; s < segments.size(); ++s) {
    if (segments[s].is_point()) throw InvalidArgument("cannot triple a degenerate segment");
    if (!f.domain().contains(segments[s]))
      throw DomainError("tripling segment leaves the domain");
    if (s > 0 && segments[s].lo < segments[s - 1].hi)
      throw InvalidArgument("tripling segments overlap");
  }

  const auto& pts = f.points();
  std::vector<Point> out;
  out.reserve(pts.size() + 4 * segments.size());
  auto emit = [&](Point p) {
    if (out.empty() || out.back().x < p.x) out.push_back(std::move(p));
  };
  auto value_before = [&](std::size_t i, const Rational& x) -> Rational {
    // pts[i].x >= x > pts[i - 1].x, or pts[i].x == x.
    if (pts[i].x == x) return pts[i].y;
    const Point& p = pts[i - 1];
    const Point& q = pts[i];
    return p.y + (x - p.x) * (q.y - p.y) / (q.x - p.x);
  };

  std::size_t i = 0;
  for (const auto& seg : segments) {
    while (pts[i].x < seg.lo) emit(pts[i++]);
    Rational ya = value_before(i, seg.lo);
    std::size_t j = i;
    while (pts[j].x < seg.hi) ++j;
    Rational yb = value_before(j, seg.hi);
    Rational width = seg.length();
    for (std::size_t m = i; m < j; ++m) {
      if (!(seg.lo < pts[m].x)) continue;
      if ((pts[m].y - ya) * width != (yb - ya) * (pts[m].x - seg.lo))
        throw Error(ErrorKind::kConstruction,
                    "function is not linear on [" + seg.lo.str() + ", " + seg.hi.str() + "]");
    }
    Rational step = width / Rational(3);
    emit({seg.lo, ya});
    emit({seg.lo + step, yb});
    emit({seg.lo + step + step, ya});
    emit({seg.hi, yb});
    i = j;
  }
  for (; i < pts.size(); ++i) emit(pts[i]);
  return Pwl(std::move(out));
}

CoreSelection SelectCore(const FamilyScript& script) {
  ValidationReport report = ValidateFamily(script);
  if (!report.valid()) {
    const Violation& v = report.violations.front();
    throw Error(ErrorKind::kValidation, "invalid family script: condition (" +
                                            std::to_string(v.condition) + ") violated at " +
                                            Where(v.level, v.index) + ": " + v.message);
  }
  CoreSelection sel;
  const std::size_t depth = script.depth();
  IntervalSet a = script.a_proxy();
  MeasureIndex index(a);

  sel.cutoff.resize(depth);
  sel.third.resize(depth);
  sel.parent.resize(depth);
  sel.parent_third.resize(depth);
  std::vector<std::size_t> prev_order;
  for (std::size_t n = 0; n < depth; ++n) {
    const auto& level = script.levels[n];
    // Minimal N_n with the tail below 3^-n 2^-n-2 epsilon.
    Rational bound = Rational::Pow3(-static_cast<long>(n)) *
                     Rational::Pow2(-static_cast<long>(n) - 2) * script.epsilon;
    Rational tail;
    long cutoff = static_cast<long>(level.size()) - 1;
    while (cutoff >= 0) {
      Rational longer = tail + level[static_cast<std::size_t>(cutoff)].length();
      if (!(longer < bound)) break;
      tail = std::move(longer);
      --cutoff;
    }
    sel.cutoff[n] = cutoff;

    sel.third[n].resize(level.size());
    for (std::size_t k = 0; k < level.size(); ++k) {
      int best = 0;
      Rational best_mass = index.measure_within(Third(level[k], 0));
      for (int c = 1; c < 3; ++c) {
        Rational mass = index.measure_within(Third(level[k], c));
        if (best_mass < mass) {
          best = c;
          best_mass = std::move(mass);
        }
      }
      sel.third[n][k] = best;
    }

    if (n > 0) {
      sel.parent[n].resize(level.size());
      sel.parent_third[n].resize(level.size());
      for (std::size_t k = 0; k < level.size(); ++k) {
        auto link = FindParent(level[k], script.levels[n - 1], prev_order);
        sel.parent[n][k] = link->parent;
        sel.parent_third[n][k] = link->third;
      }
    }
    prev_order = SortedOrder(level);
  }
  return RecomputeMembers(script, std::move(sel));
}

CoreSelection RecomputeMembers(const FamilyScript& script, CoreSelection sel) {
  const std::size_t depth = script.depth();
  sel.members.assign(depth, {});
  sel.cores.assign(depth, {});
  std::vector<char> in_prev;
  for (std::size_t n = 0; n < depth; ++n) {
    const auto& level = script.levels[n];
    std::vector<char> in_core(level.size(), 0);
    for (std::size_t k = 0; k < level.size(); ++k) {
      if (static_cast<long>(k) > sel.cutoff[n]) continue;
      if (n > 0) {
        std::size_t p = sel.parent[n][k];
        if (!in_prev[p] || sel.third[n - 1][p] != sel.parent_third[n][k]) continue;
      }
      in_core[k] = 1;
      sel.members[n].push_back(k);
    }
    std::vector<Interval> parts;
    parts.reserve(sel.members[n].size());
    for (std::size_t k : sel.members[n]) parts.push_back(level[k]);
    sel.cores[n] = IntervalSet::Normalize(std::move(parts));
    in_prev = std::move(in_core);
  }
  return sel;
}

long FullResolution(const FamilyScript& script) {
  std::optional<Rational> shortest;
  for (const auto& level : script.levels)
    for (const auto& iv : level)
      if (!iv.is_point() && (!shortest || iv.length() < *shortest)) shortest = iv.length();
  long k = 0;
  if (!shortest) return k;
  while (!(Rational::Pow2(-k) < *shortest)) ++k;
  return k;
}

std::vector<ZigzagState> BuildStages(const FamilyScript& script, const CoreSelection& core,
                                     long N, long K) {
  if (N < 0 || K < 0) throw InvalidArgument("stage indices must be nonnegative");
  std::vector<ZigzagState> stages;
  Pwl f = Pwl::Identity(UnitInterval());
  Rational resolution = Rational::Pow2(-K);
  for (long n = 0; n <= N; ++n) {
    auto level_index = static_cast<std::size_t>(n);
    f = SubdivideByHeight(f, Rational::Pow2(-n));
    if (level_index < script.depth()) {
      std::vector<Interval> segments;
      for (const auto& iv : script.levels[level_index])
        if (resolution < iv.length()) segments.push_back(iv);
      f = TripleAll(f, std::move(segments));
    }
    ZigzagState state{n, K, f, {}};
    for (std::size_t m = 0; m <= level_index && m < core.cores.size(); ++m)
      state.b_levels.push_back(core.cores[m]);
    stages.push_back(std::move(state));
  }
  return stages;
}

ZigzagState BuildStage(const FamilyScript& script, const CoreSelection& core, long N, long K) {
  return std::move(BuildStages(script, core, N, K).back());
}

bool MeasureBoundsReport::all_ok() const {
  return std::all_of(levels.begin(), levels.end(),
                     [](const LevelBounds& l) { return l.upper_ok && l.lower_ok; });
}

MeasureBoundsReport VerifyMeasureBounds(const CoreSelection& core, const FamilyScript& script) {
  MeasureBoundsReport report;
  IntervalSet a = script.a_proxy();
  Rational mass = a.measure();
  for (std::size_t n = 0; n < core.cores.size(); ++n) {
    auto e = static_cast<long>(n);
    LevelBounds lb;
    lb.level = n;
    lb.core_measure = core.cores[n].measure();
    lb.upper = Rational::Pow3(-e);
    lb.scaled_mass = Rational::Pow3(e) * Intersection(core.cores[n], a).measure();
    lb.lower = mass - (Rational(1) - Rational::Pow2(-e - 1)) * script.epsilon;
    lb.lower_plain = mass - script.epsilon;
    lb.upper_ok = lb.core_measure <= lb.upper;
    lb.lower_ok = lb.lower <= lb.scaled_mass;
    report.levels.push_back(std::move(lb));
  }
  return report;
}

Location ClassifyWellLocated(const Interval& j, const FamilyScript& script) {
  Location loc;
  loc.well_located = true;
  for (std::size_t n = 0; n < script.depth(); ++n) {
    for (const auto& iv : script.levels[n]) {
      bool meets_in_point = j.hi <= iv.lo || iv.hi <= j.lo || j.is_point() || iv.is_point();
      bool covers = j.contains(iv);
      bool in_third = false;
      for (int t = 0; t < 3 && !in_third; ++t) in_third = Third(iv, t).contains(j);
      if (!(meets_in_point || covers || in_third)) loc.well_located = false;
      if (iv.contains(j)) loc.depth = n;
    }
  }
  return loc;
}

bool Peers(const Interval& j0, const Interval& j1, const FamilyScript& script) {
  for (const auto& level : script.levels) {
    for (const auto& iv : level) {
      if (!(iv.contains(j0) && iv != j0 && iv.contains(j1) && iv != j1)) continue;
      bool shared = false;
      for (int t = 0; t < 3 && !shared; ++t) {
        Interval third = Third(iv, t);
        shared = third.contains(j0) && third.contains(j1);
      }
      if (!shared) return false;
    }
  }
  return true;
}

ImageIdentityReport VerifyImageIdentity(std::span<const ZigzagState> stages, const Interval& j,
                                  std::size_t depth) {
  if (stages.size() <= depth)
    throw InvalidArgument("image identity needs the stage at the interval's depth");
  ImageIdentityReport r;
  Interval reference = ImageOf(stages[depth].f, j);
  r.image_measure = reference.length();
  r.expected = Rational::Pow3(static_cast<long>(depth)) * j.length();
  r.identity_holds = r.image_measure == r.expected;
  r.stable = std::all_of(stages.begin() + static_cast<std::ptrdiff_t>(depth), stages.end(),
                         [&](const ZigzagState& s) { return ImageOf(s.f, j) == reference; });
  return r;
}

bool ImagesAlmostDisjoint(const Pwl& f, std::span<const Interval> js) {
  std::vector<Interval> images;
  images.reserve(js.size());
  for (const auto& j : js) images.push_back(ImageOf(f, j));
  std::sort(images.begin(), images.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < images.size(); ++i) {
    // Running maximum of hi; sorted by lo so one comparison suffices.
    if (images[i].lo < images[i - 1].hi && !images[i].is_point()) return false;
    if (images[i].hi < images[i - 1].hi) images[i].hi = images[i - 1].hi;
  }
  return true;
}

CoreImageReport VerifyCoreImages(const ZigzagState& stage, const FamilyScript& script,
                                 const CoreSelection& core) {
  CoreImageReport report;
  for (std::size_t n = 0; n < core.members.size() && static_cast<long>(n) <= stage.N; ++n) {
    Rational scale = Rational::Pow3(static_cast<long>(n));
    std::vector<Interval> js;
    for (std::size_t k : core.members[n]) {
      const Interval& j = script.levels[n][k];
      js.push_back(j);
      ++report.checked;
      if (ImageOf(stage.f, j).length() != scale * j.length())
        report.identity_failures.emplace_back(n, k);
    }
    if (!ImagesAlmostDisjoint(stage.f, js)) report.overlapping_levels.push_back(n);
  }
  return report;
}

LocalityReport VerifyLocality(const FamilyScript& script, const Rational& x,
                              std::span<const ZigzagState> stages) {
  const Interval unit = UnitInterval();
  if (!unit.contains(x)) throw DomainError(x.str() + " is outside [0, 1]");
  if (stages.empty()) throw InvalidArgument("locality needs at least one built stage");
  LocalityReport r;
  if (script.depth() > 0 && script.a_proxy().contains(x)) {
    r.in_a_proxy = true;
    return r;
  }
  std::size_t first_miss = 0;
  while (first_miss < script.depth() && script.level_union(first_miss).contains(x)) ++first_miss;
  r.level = static_cast<long>(first_miss) - 1;

  IntervalSet avoid = first_miss < script.depth() ? script.level_union(first_miss) : IntervalSet();
  auto d = Distance(IntervalSet(Interval(x, x)), avoid);
  Rational radius = d ? *d / Rational(2) : Rational(1);
  r.neighborhood = Interval(max(unit.lo, x - radius), min(unit.hi, x + radius));

  Pwl reference = r.level < 0 ? Pwl::Identity(unit) : stages.front().f;
  bool have_reference = r.level < 0 || static_cast<std::size_t>(r.level) < stages.size();
  if (r.level >= 0 && have_reference) reference = stages[static_cast<std::size_t>(r.level)].f;
  r.stable = have_reference;
  for (std::size_t m = static_cast<std::size_t>(std::max(r.level, 0L)); m < stages.size() && r.stable; ++m)
    r.stable = AgreeOn(reference, stages[m].f, r.neighborhood);

  const Pwl& last = stages.back().f;
  r.slopes = SlopesOn(last, r.neighborhood);
  Rational lo = r.neighborhood.lo;
  Rational hi = r.neighborhood.hi;
  for (const auto& p : last.points()) {
    if (lo < p.x && p.x < x) lo = p.x;
    if (x < p.x && p.x < hi) hi = p.x;
  }
  r.linear_window = Interval(lo, hi);
  r.two_linear = CheckTwoLinear(last, lo, hi).holds;
  return r;
}

}  // namespace luzin::zigzag
