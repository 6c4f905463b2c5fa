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

#include "luzin/interval.hpp"
#include "luzin/rational.hpp"

namespace luzin {

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

// Continuous piecewise-linear function on [first x, last x], given by at
// least two breakpoints with strictly increasing x. Collinear breakpoints are
// kept as given; call canonicalize() to drop them.
class Pwl {
 public:
  explicit Pwl(std::vector<Point> points);
  static Pwl Identity(const Interval& domain);

  const std::vector<Point>& points() const { return points_; }
  std::size_t piece_count() const { return points_.size() - 1; }
  Interval domain() const { return Interval(points_.front().x, points_.back().x); }
  Rational slope(std::size_t piece) const;

  // Index of the piece [x_i, x_{i+1}] holding x; the right piece at interior
  // breakpoints, the last piece at the right end. Throws DomainError.
  std::size_t locate(const Rational& x) const;
  Rational eval(const Rational& x) const;

  Pwl canonicalize() const;

  friend bool operator==(const Pwl&, const Pwl&) = default;

 private:
  std::vector<Point> points_;
};

// Values of f at sorted abscissae xs, computed in one sweep.
std::vector<Rational> ValuesOnGrid(const Pwl& f, std::span<const Rational> xs);

// [min f, max f] over iv (iv inside the domain).
Interval ImageOf(const Pwl& f, const Interval& iv);
IntervalSet Image(const Pwl& f, const IntervalSet& s);
IntervalSet Preimage(const Pwl& f, const IntervalSet& s);

// Total variation of f on [domain start, upto].
Rational Variation(const Pwl& f, const Rational& upto);
Rational SupDistance(const Pwl& f, const Pwl& g);
// True iff f and g coincide at every point of iv.
bool AgreeOn(const Pwl& f, const Pwl& g, const Interval& iv);

// Same function with every piece at most h tall; each piece is split into
// the minimal number of equal parts.
Pwl SubdivideByHeight(const Pwl& f, const Rational& h);

bool IsNondecreasing(const Pwl& f);

struct TwoLinearVerdict {
  bool holds = false;
  std::optional<Rational> witness;  // set iff holds
};

// f restricted to [a, b] has at most one slope change.
TwoLinearVerdict CheckTwoLinear(const Pwl& f, const Rational& a, const Rational& b);

// f is injective on [a, b] with every slope magnitude in [1/L, L].
bool CheckBiLipschitz(const Pwl& f, const Rational& a, const Rational& b, const Rational& lipschitz);

struct SlopeSummary {
  std::size_t pieces = 0;
  Rational min_abs;
  Rational max_abs;
};
// Pieces of f meeting iv in positive length and their |slope| range.
SlopeSummary SlopesOn(const Pwl& f, const Interval& iv);

// U is read as the open set given by the interiors of its parts. The result
// is the union of (inf f, sup f) over the parts, stored by closures.
IntervalSet OpenImage(const Pwl& f, const IntervalSet& open_set);

// For nondecreasing f, the measure with cdf f evaluated on b.
Rational MeasureFromCdf(const Pwl& f, const IntervalSet& b);

struct AcWitness {
  Rational epsilon;
  std::vector<std::pair<Rational, IntervalSet>> pairs;  // (delta, A_delta)
  std::vector<Rational> unmatched;                      // deltas with no witness
};

// For each delta, greedily collects x-intervals of the steepest pieces while
// their total length stays below delta, until the image measure exceeds
// epsilon.
AcWitness FindAcFailureWitness(const Pwl& f, const Rational& epsilon,
                               std::span<const Rational> deltas);

}  // namespace luzin
