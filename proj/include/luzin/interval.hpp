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
#include <vector>

#include "luzin/rational.hpp"

namespace luzin {

// Closed interval [lo, hi]; lo == hi is a degenerate point interval.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational lo, Rational hi);

  Rational length() const { return hi - lo; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// The i-th closed third of `iv`, i in {0, 1, 2}. The thirds tile `iv` and
// meet in single points.
Interval Third(const Interval& iv, int i);

// Finite union of closed rational intervals in normal form: parts sorted,
// pairwise separated by gaps (prev.hi < next.lo). Degenerate parts are
// dropped whenever the set has a part of positive length; a set made only
// of points is kept as a point set.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(Interval iv);

  // Throws InvalidArgument for an interval with lo > hi.
  static IntervalSet Normalize(std::vector<Interval> parts);

  const std::vector<Interval>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  bool is_point_set() const;

  Rational measure() const;
  bool contains(const Rational& x) const;
  // True iff `iv` lies inside the union (pointwise).
  bool contains(const Interval& iv) const;
  // True iff every point of `other` lies in this set.
  bool includes(const IntervalSet& other) const;
  std::optional<Interval> hull() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> parts_;
};

IntervalSet Union(const IntervalSet& a, const IntervalSet& b);
IntervalSet Intersection(const IntervalSet& a, const IntervalSet& b);
// Closure of interior(a) minus b. When `a` is a point set, the points of `a`
// outside `b` are returned instead.
IntervalSet Difference(const IntervalSet& a, const IntervalSet& b);
// Closure of ambient \ s.
IntervalSet Complement(const IntervalSet& s, const Interval& ambient);
// Every part widened by `margin` on both sides.
IntervalSet Dilate(const IntervalSet& s, const Rational& margin);

// Exact inf |s - t|; std::nullopt stands for infinite distance (an empty
// operand).
std::optional<Rational> Distance(const IntervalSet& a, const IntervalSet& b);

// Prefix-sum index answering measure(S ∩ [lo, hi]) in logarithmic time.
// Keeps a reference to `set`, which must outlive the index.
class MeasureIndex {
 public:
  explicit MeasureIndex(const IntervalSet& set);
  Rational measure_within(const Interval& window) const;

 private:
  const IntervalSet& set_;
  std::vector<Rational> prefix_;
};

}  // namespace luzin
