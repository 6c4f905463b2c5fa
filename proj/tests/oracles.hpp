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

// Reference implementations for tests. They share only the Rational type and
// the plain data structs with the library and use none of its algorithms.

#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "luzin/interval.hpp"
#include "luzin/pwl.hpp"

namespace oracle {

using luzin::Interval;
using luzin::IntervalSet;
using luzin::Point;
using luzin::Pwl;
using luzin::Rational;

// ---- generators ----

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long Int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool Coin() { return Int(0, 1) == 1; }
  // Rational in [lo, hi] with denominator at most max_den.
  Rational In(const Rational& lo, const Rational& hi, long max_den) {
    long den = Int(1, max_den);
    Rational t(Int(0, den), den);
    return lo + (hi - lo) * t;
  }
  // Up to `count` random intervals inside [0, 1].
  std::vector<Interval> Intervals(long count, long max_den) {
    std::vector<Interval> out;
    long n = Int(0, count);
    for (long i = 0; i < n; ++i) {
      Rational a = In(0, 1, max_den), b = In(0, 1, max_den);
      if (b < a) std::swap(a, b);
      out.emplace_back(a, b);
    }
    return out;
  }
  // Strictly increasing abscissae in [0, 1] with both endpoints.
  std::vector<Rational> Grid(long max_points, long max_den) {
    std::vector<Rational> xs{Rational(0), Rational(1)};
    long n = Int(0, max_points - 2);
    for (long i = 0; i < n; ++i) xs.push_back(In(0, 1, max_den));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
  }
  Pwl AnyPwl(long max_points, long max_den) {
    std::vector<Point> pts;
    for (auto& x : Grid(max_points, max_den)) {
      Rational y = Int(0, 5) == 0 && !pts.empty() ? pts.back().y : In(-1, 2, max_den);
      pts.push_back({x, y});
    }
    return Pwl(std::move(pts));
  }
  // Nondecreasing from 0 to 1, with some flat pieces.
  Pwl Monotone(long max_points, long max_den) {
    auto xs = Grid(max_points, max_den);
    std::vector<Rational> ys{Rational(0), Rational(1)};
    for (std::size_t i = 2; i < xs.size(); ++i) ys.push_back(In(0, 1, max_den));
    std::sort(ys.begin(), ys.end());
    std::vector<Point> pts;
    for (std::size_t i = 0; i < xs.size(); ++i) pts.push_back({xs[i], ys[i]});
    return Pwl(std::move(pts));
  }

 private:
  std::mt19937 rng_;
};

// ---- sets ----

// Union by sorting and sweeping, keeping degenerate parts only when nothing
// has positive length.
inline std::vector<Interval> Merge(std::vector<Interval> v) {
  bool any_positive = std::any_of(v.begin(), v.end(), [](const Interval& i) { return i.lo < i.hi; });
  if (any_positive)
    v.erase(std::remove_if(v.begin(), v.end(), [](const Interval& i) { return i.lo == i.hi; }),
            v.end());
  std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  for (auto& iv : v) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      if (out.back().hi < iv.hi) out.back().hi = iv.hi;
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

inline Rational Length(const std::vector<Interval>& v) {
  Rational total;
  for (const auto& iv : Merge(v)) total += iv.hi - iv.lo;
  return total;
}

inline bool Member(const std::vector<Interval>& v, const Rational& x) {
  return std::any_of(v.begin(), v.end(), [&](const Interval& i) { return i.lo <= x && x <= i.hi; });
}

// Sample points for comparing closed sets up to measure zero: the midpoint
// of every cell cut out by the given endpoints.
inline std::vector<Rational> CellMidpoints(std::vector<Rational> cuts) {
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Rational> mids;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) mids.push_back((cuts[i] + cuts[i + 1]) / 2);
  if (!cuts.empty()) {
    mids.push_back(cuts.front() - 1);
    mids.push_back(cuts.back() + 1);
  }
  return mids;
}

// ---- functions ----

inline Rational Eval(const Pwl& f, const Rational& x) {
  const auto& p = f.points();
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i].x <= x && x <= p[i + 1].x)
      return p[i].y + (p[i + 1].y - p[i].y) * (x - p[i].x) / (p[i + 1].x - p[i].x);
  return p.back().y;
}

// Refinement oracle: split [lo, hi] at every breakpoint so each sub-interval
// lies in one linear piece, where the image is the span of the two end
// values; the image of the whole part is the union of those spans.
inline std::vector<Interval> ImageOfPart(const Pwl& f, const Interval& part) {
  std::vector<Rational> cuts{part.lo, part.hi};
  for (const auto& p : f.points())
    if (part.lo < p.x && p.x < part.hi) cuts.push_back(p.x);
  std::sort(cuts.begin(), cuts.end());
  std::vector<Interval> spans;
  if (cuts.front() == cuts.back()) {
    Rational y = Eval(f, part.lo);
    spans.emplace_back(y, y);
  }
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Rational a = Eval(f, cuts[i]), b = Eval(f, cuts[i + 1]);
    if (b < a) std::swap(a, b);
    spans.emplace_back(a, b);
  }
  return spans;
}

inline std::vector<Interval> Image(const Pwl& f, const std::vector<Interval>& s) {
  std::vector<Interval> out;
  for (const auto& part : s)
    for (auto& iv : ImageOfPart(f, part)) out.push_back(iv);
  return Merge(out);
}

inline Rational Slope(const Point& a, const Point& b) { return (b.y - a.y) / (b.x - a.x); }

// 2L by brute force: try every candidate split point (a and every interior
// breakpoint) and test both sides for a single slope.
inline std::optional<Rational> TwoLinear(const Pwl& f, const Rational& a, const Rational& b) {
  std::vector<Rational> candidates{a};
  for (const auto& p : f.points())
    if (a < p.x && p.x < b) candidates.push_back(p.x);
  auto linear = [&](const Rational& lo, const Rational& hi) {
    if (lo == hi) return true;
    std::vector<Point> inside{{lo, Eval(f, lo)}};
    for (const auto& p : f.points())
      if (lo < p.x && p.x < hi) inside.push_back(p);
    inside.push_back({hi, Eval(f, hi)});
    Rational s = Slope(inside[0], inside[1]);
    for (std::size_t i = 1; i + 1 < inside.size(); ++i)
      if (Slope(inside[i], inside[i + 1]) != s) return false;
    return true;
  };
  for (const auto& x : candidates)
    if (linear(a, x) && linear(x, b)) return x;
  return std::nullopt;
}

// max |f - g| over the merged breakpoint grid.
inline Rational SupDistance(const Pwl& f, const Pwl& g) {
  std::vector<Rational> xs;
  for (const auto& p : f.points()) xs.push_back(p.x);
  for (const auto& p : g.points()) xs.push_back(p.x);
  Rational best;
  for (const auto& x : xs) {
    Rational d = (Eval(f, x) - Eval(g, x)).abs();
    if (best < d) best = d;
  }
  return best;
}

inline std::vector<Interval> Parts(const IntervalSet& s) { return s.parts(); }

}  // namespace oracle
