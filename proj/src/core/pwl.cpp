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

#include "luzin/pwl.hpp"

#include <algorithm>
#include <numeric>

#include "luzin/error.hpp"

namespace luzin {

namespace {

Rational Interpolate(const Point& p, const Point& q, const Rational& x) {
  if (x == p.x) return p.y;
  if (x == q.x) return q.y;
  return p.y + (x - p.x) * (q.y - p.y) / (q.x - p.x);
}

// x in [p.x, q.x] with value y, for a non-flat piece.
Rational InverseInterpolate(const Point& p, const Point& q, const Rational& y) {
  if (y == p.y) return p.x;
  if (y == q.y) return q.x;
  return p.x + (y - p.y) * (q.x - p.x) / (q.y - p.y);
}

void RequireInDomain(const Pwl& f, const Interval& iv) {
  if (!f.domain().contains(iv))
    throw DomainError("[" + iv.lo.str() + ", " + iv.hi.str() + "] leaves the domain [" +
                      f.points().front().x.str() + ", " + f.points().back().x.str() + "]");
}

}  // namespace

Pwl::Pwl(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw InvalidArgument("a piecewise-linear function needs two breakpoints");
  for (std::size_t i = 1; i < points_.size(); ++i)
    if (!(points_[i - 1].x < points_[i].x))
      throw InvalidArgument("breakpoint abscissae must be strictly increasing (at index " +
                            std::to_string(i) + ")");
}

Pwl Pwl::Identity(const Interval& domain) {
  if (domain.is_point()) throw InvalidArgument("identity needs a non-degenerate domain");
  return Pwl({{domain.lo, domain.lo}, {domain.hi, domain.hi}});
}

Rational Pwl::slope(std::size_t piece) const {
  const Point& p = points_.at(piece);
  const Point& q = points_.at(piece + 1);
  return (q.y - p.y) / (q.x - p.x);
}

std::size_t Pwl::locate(const Rational& x) const {
  if (x < points_.front().x || points_.back().x < x)
    throw DomainError(x.str() + " is outside the domain [" + points_.front().x.str() + ", " +
                      points_.back().x.str() + "]");
  auto it = std::upper_bound(points_.begin(), points_.end(), x,
                             [](const Rational& v, const Point& p) { return v < p.x; });
  std::size_t idx = static_cast<std::size_t>(it - points_.begin());
  return std::min(idx, points_.size() - 1) - 1;
}

Rational Pwl::eval(const Rational& x) const {
  std::size_t i = locate(x);
  return Interpolate(points_[i], points_[i + 1], x);
}

Pwl Pwl::canonicalize() const {
  std::vector<Point> out;
  out.push_back(points_.front());
  for (std::size_t i = 1; i + 1 < points_.size(); ++i) {
    const Point& a = out.back();
    const Point& b = points_[i];
    const Point& c = points_[i + 1];
    if ((b.y - a.y) * (c.x - b.x) != (c.y - b.y) * (b.x - a.x)) out.push_back(b);
  }
  out.push_back(points_.back());
  return Pwl(std::move(out));
}

std::vector<Rational> ValuesOnGrid(const Pwl& f, std::span<const Rational> xs) {
  std::vector<Rational> out;
  out.reserve(xs.size());
  if (xs.empty()) return out;
  const auto& pts = f.points();
  std::size_t i = f.locate(xs.front());
  for (const auto& x : xs) {
    while (i + 2 < pts.size() && pts[i + 1].x <= x) ++i;
    if (x < pts[i].x || pts[i + 1].x < x) i = f.locate(x);
    out.push_back(Interpolate(pts[i], pts[i + 1], x));
  }
  return out;
}

Interval ImageOf(const Pwl& f, const Interval& iv) {
  RequireInDomain(f, iv);
  const auto& pts = f.points();
  Rational lo = f.eval(iv.lo);
  Rational hi = lo;
  auto offer = [&](const Rational& y) {
    if (y < lo) lo = y;
    if (hi < y) hi = y;
  };
  offer(f.eval(iv.hi));
  auto it = std::upper_bound(pts.begin(), pts.end(), iv.lo,
                             [](const Rational& v, const Point& p) { return v < p.x; });
  for (; it != pts.end() && it->x < iv.hi; ++it) offer(it->y);
  return Interval(std::move(lo), std::move(hi));
}

IntervalSet Image(const Pwl& f, const IntervalSet& s) {
  std::vector<Interval> out;
  out.reserve(s.size());
  for (const auto& part : s.parts()) out.push_back(ImageOf(f, part));
  return IntervalSet::Normalize(std::move(out));
}

IntervalSet Preimage(const Pwl& f, const IntervalSet& s) {
  const auto& pts = f.points();
  const auto& sp = s.parts();
  std::vector<Interval> out;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Point& p = pts[i];
    const Point& q = pts[i + 1];
    if (p.y == q.y) {
      if (s.contains(p.y)) out.emplace_back(p.x, q.x);
      continue;
    }
    const Rational& ylo = min(p.y, q.y);
    const Rational& yhi = max(p.y, q.y);
    auto it = std::partition_point(sp.begin(), sp.end(),
                                   [&](const Interval& part) { return part.hi < ylo; });
    for (; it != sp.end() && it->lo <= yhi; ++it) {
      Rational x0 = InverseInterpolate(p, q, max(ylo, it->lo));
      Rational x1 = InverseInterpolate(p, q, min(yhi, it->hi));
      if (x1 < x0) std::swap(x0, x1);
      out.emplace_back(std::move(x0), std::move(x1));
    }
  }
  return IntervalSet::Normalize(std::move(out));
}

Rational Variation(const Pwl& f, const Rational& upto) {
  std::size_t last = f.locate(upto);
  const auto& pts = f.points();
  Rational total;
  for (std::size_t i = 0; i < last; ++i) total += (pts[i + 1].y - pts[i].y).abs();
  total += (f.eval(upto) - pts[last].y).abs();
  return total;
}

namespace {

std::vector<Rational> MergedAbscissae(const Pwl& f, const Pwl& g) {
  std::vector<Rational> xs;
  xs.reserve(f.points().size() + g.points().size());
  const auto& a = f.points();
  const auto& b = g.points();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    const Rational* next;
    if (j == b.size() || (i < a.size() && a[i].x <= b[j].x))
      next = &a[i++].x;
    else
      next = &b[j++].x;
    if (xs.empty() || xs.back() != *next) xs.push_back(*next);
  }
  return xs;
}

}  // namespace

Rational SupDistance(const Pwl& f, const Pwl& g) {
  if (f.domain() != g.domain())
    throw DomainError("sup distance needs identical domains");
  auto xs = MergedAbscissae(f, g);
  auto vf = ValuesOnGrid(f, xs);
  auto vg = ValuesOnGrid(g, xs);
  Rational best;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Rational d = (vf[i] - vg[i]).abs();
    if (best < d) best = std::move(d);
  }
  return best;
}

bool AgreeOn(const Pwl& f, const Pwl& g, const Interval& iv) {
  RequireInDomain(f, iv);
  RequireInDomain(g, iv);
  std::vector<Rational> xs{iv.lo};
  for (const Pwl* h : {&f, &g}) {
    const auto& pts = h->points();
    auto it = std::upper_bound(pts.begin(), pts.end(), iv.lo,
                               [](const Rational& v, const Point& p) { return v < p.x; });
    for (; it != pts.end() && it->x < iv.hi; ++it) xs.push_back(it->x);
  }
  xs.push_back(iv.hi);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return ValuesOnGrid(f, xs) == ValuesOnGrid(g, xs);
}

Pwl SubdivideByHeight(const Pwl& f, const Rational& h) {
  if (h.sign() <= 0) throw InvalidArgument("subdivision height must be positive");
  const auto& pts = f.points();
  std::vector<Point> out;
  out.reserve(pts.size());
  out.push_back(pts.front());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Point& p = pts[i];
    const Point& q = pts[i + 1];
    mpz_class m = ((q.y - p.y).abs() / h).ceil();
    if (m > 1) {
      if (!m.fits_slong_p()) throw InvalidArgument("subdivision count overflow");
      long count = m.get_si();
      Rational dx = (q.x - p.x) / Rational(count);
      Rational dy = (q.y - p.y) / Rational(count);
      for (long j = 1; j < count; ++j)
        out.push_back({p.x + dx * Rational(j), p.y + dy * Rational(j)});
    }
    out.push_back(q);
  }
  return Pwl(std::move(out));
}

bool IsNondecreasing(const Pwl& f) {
  const auto& pts = f.points();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    if (pts[i + 1].y < pts[i].y) return false;
  return true;
}

namespace {

// Slopes of the pieces of f clipped to [a, b] (positive-length overlaps), and
// the interior breakpoints separating them.
struct ClippedPieces {
  std::vector<Rational> slopes;
  std::vector<Rational> joints;
};

ClippedPieces ClipPieces(const Pwl& f, const Rational& a, const Rational& b) {
  if (!(a < b)) throw InvalidArgument("need a < b, got [" + a.str() + ", " + b.str() + "]");
  RequireInDomain(f, Interval(a, b));
  ClippedPieces out;
  std::size_t i = f.locate(a);
  const auto& pts = f.points();
  for (; i + 1 < pts.size() && pts[i].x < b; ++i) {
    if (!out.slopes.empty()) out.joints.push_back(pts[i].x);
    out.slopes.push_back(f.slope(i));
  }
  return out;
}

}  // namespace

TwoLinearVerdict CheckTwoLinear(const Pwl& f, const Rational& a, const Rational& b) {
  ClippedPieces cp = ClipPieces(f, a, b);
  std::vector<Rational> changes;
  for (std::size_t i = 0; i + 1 < cp.slopes.size(); ++i)
    if (cp.slopes[i] != cp.slopes[i + 1]) changes.push_back(cp.joints[i]);
  if (changes.size() > 1) return {};
  return {true, changes.empty() ? a : changes.front()};
}

bool CheckBiLipschitz(const Pwl& f, const Rational& a, const Rational& b, const Rational& lipschitz) {
  if (lipschitz < Rational(1)) throw InvalidArgument("Lipschitz constant must be at least 1");
  ClippedPieces cp = ClipPieces(f, a, b);
  Rational inv = Rational(1) / lipschitz;
  int orientation = cp.slopes.front().sign();
  return std::all_of(cp.slopes.begin(), cp.slopes.end(), [&](const Rational& s) {
    Rational m = s.abs();
    return s.sign() != 0 && s.sign() == orientation && inv <= m && m <= lipschitz;
  });
}

SlopeSummary SlopesOn(const Pwl& f, const Interval& iv) {
  ClippedPieces cp = ClipPieces(f, iv.lo, iv.hi);
  SlopeSummary out;
  out.pieces = cp.slopes.size();
  out.min_abs = cp.slopes.front().abs();
  out.max_abs = out.min_abs;
  for (const auto& s : cp.slopes) {
    Rational m = s.abs();
    if (m < out.min_abs) out.min_abs = m;
    if (out.max_abs < m) out.max_abs = m;
  }
  return out;
}

IntervalSet OpenImage(const Pwl& f, const IntervalSet& open_set) {
  std::vector<Interval> out;
  for (const auto& part : open_set.parts()) {
    if (part.is_point()) continue;
    Interval env = ImageOf(f, part);
    if (!env.is_point()) out.push_back(std::move(env));
  }
  return IntervalSet::Normalize(std::move(out));
}

Rational MeasureFromCdf(const Pwl& f, const IntervalSet& b) {
  if (!IsNondecreasing(f)) throw InvalidArgument("cdf must be nondecreasing");
  return Image(f, b).measure();
}

AcWitness FindAcFailureWitness(const Pwl& f, const Rational& epsilon,
                               std::span<const Rational> deltas) {
  const auto& pts = f.points();
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    if (pts[i].y != pts[i + 1].y) order.push_back(i);
  std::vector<Rational> steepness(pts.size());
  for (std::size_t i : order) steepness[i] = f.slope(i).abs();
  // Descending |slope|, ties to the leftmost piece.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return steepness[b] < steepness[a]; });

  AcWitness out;
  out.epsilon = epsilon;
  for (const auto& delta : deltas) {
    if (delta.sign() <= 0) throw InvalidArgument("deltas must be positive");
    std::vector<Interval> chosen;
    Rational length;
    Rational rise;  // upper bound on the image measure
    bool found = false;
    for (std::size_t i : order) {
      Rational room = delta - length;
      Rational width = pts[i + 1].x - pts[i].x;
      bool last = !(width < room);
      if (last) width = room / Rational(2);
      chosen.emplace_back(pts[i].x, pts[i].x + width);
      length += width;
      rise += steepness[i] * width;
      if (!(epsilon < rise)) {
        if (last) break;
        continue;
      }
      IntervalSet candidate = IntervalSet::Normalize(chosen);
      if (epsilon < Image(f, candidate).measure()) {
        out.pairs.emplace_back(delta, std::move(candidate));
        found = true;
        break;
      }
      if (last) break;
    }
    if (!found) out.unmatched.push_back(delta);
  }
  return out;
}

}  // namespace luzin
