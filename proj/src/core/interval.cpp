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

#include "luzin/interval.hpp"

#include <algorithm>

#include "luzin/error.hpp"

namespace luzin {

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (hi < lo)
    throw InvalidArgument("malformed interval [" + lo.str() + ", " + hi.str() + "]");
}

Interval Third(const Interval& iv, int i) {
  if (i < 0 || i > 2) throw InvalidArgument("third index must be 0, 1 or 2");
  Rational step = iv.length() / Rational(3);
  Rational lo = iv.lo + step * Rational(i);
  Rational hi = i == 2 ? iv.hi : iv.lo + step * Rational(i + 1);
  return Interval(std::move(lo), std::move(hi));
}

IntervalSet::IntervalSet(Interval iv) { parts_.push_back(std::move(iv)); }

IntervalSet IntervalSet::Normalize(std::vector<Interval> parts) {
  for (const auto& p : parts)
    if (p.hi < p.lo)
      throw InvalidArgument("malformed interval [" + p.lo.str() + ", " + p.hi.str() + "]");
  bool has_positive = std::any_of(parts.begin(), parts.end(),
                                  [](const Interval& p) { return !p.is_point(); });
  if (has_positive)
    std::erase_if(parts, [](const Interval& p) { return p.is_point(); });
  std::sort(parts.begin(), parts.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

  IntervalSet out;
  for (auto& p : parts) {
    if (!out.parts_.empty() && p.lo <= out.parts_.back().hi) {
      if (out.parts_.back().hi < p.hi) out.parts_.back().hi = std::move(p.hi);
    } else {
      out.parts_.push_back(std::move(p));
    }
  }
  return out;
}

bool IntervalSet::is_point_set() const {
  return !parts_.empty() &&
         std::all_of(parts_.begin(), parts_.end(), [](const Interval& p) { return p.is_point(); });
}

Rational IntervalSet::measure() const {
  Rational total;
  for (const auto& p : parts_) total += p.length();
  return total;
}

namespace {

// Index of the first part whose hi >= x.
std::size_t FirstEndingAtOrAfter(const std::vector<Interval>& parts, const Rational& x) {
  auto it = std::partition_point(parts.begin(), parts.end(),
                                 [&](const Interval& p) { return p.hi < x; });
  return static_cast<std::size_t>(it - parts.begin());
}

}  // namespace

bool IntervalSet::contains(const Rational& x) const {
  std::size_t i = FirstEndingAtOrAfter(parts_, x);
  return i < parts_.size() && parts_[i].lo <= x;
}

bool IntervalSet::contains(const Interval& iv) const {
  std::size_t i = FirstEndingAtOrAfter(parts_, iv.hi);
  return i < parts_.size() && parts_[i].contains(iv);
}

bool IntervalSet::includes(const IntervalSet& other) const {
  return std::all_of(other.parts_.begin(), other.parts_.end(),
                     [&](const Interval& p) { return contains(p); });
}

std::optional<Interval> IntervalSet::hull() const {
  if (parts_.empty()) return std::nullopt;
  return Interval(parts_.front().lo, parts_.back().hi);
}

IntervalSet Union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all;
  all.reserve(a.size() + b.size());
  all.insert(all.end(), a.parts().begin(), a.parts().end());
  all.insert(all.end(), b.parts().begin(), b.parts().end());
  return IntervalSet::Normalize(std::move(all));
}

IntervalSet Intersection(const IntervalSet& a, const IntervalSet& b) {
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < pa.size() && j < pb.size()) {
    const Rational& lo = max(pa[i].lo, pb[j].lo);
    const Rational& hi = min(pa[i].hi, pb[j].hi);
    if (lo <= hi) out.emplace_back(lo, hi);
    if (pa[i].hi < pb[j].hi)
      ++i;
    else
      ++j;
  }
  return IntervalSet::Normalize(std::move(out));
}

IntervalSet Difference(const IntervalSet& a, const IntervalSet& b) {
  if (a.is_point_set()) {
    std::vector<Interval> kept;
    for (const auto& p : a.parts())
      if (!b.contains(p.lo)) kept.push_back(p);
    return IntervalSet::Normalize(std::move(kept));
  }
  // Only parts of positive length remove interior.
  std::vector<const Interval*> cut;
  for (const auto& p : b.parts())
    if (!p.is_point()) cut.push_back(&p);

  std::vector<Interval> out;
  std::size_t j = 0;
  for (const auto& part : a.parts()) {
    while (j < cut.size() && cut[j]->hi <= part.lo) ++j;
    Rational cursor = part.lo;
    std::size_t k = j;
    for (; k < cut.size() && cut[k]->lo < part.hi; ++k) {
      if (cursor < cut[k]->lo) out.emplace_back(cursor, cut[k]->lo);
      if (cursor < cut[k]->hi) cursor = cut[k]->hi;
    }
    if (cursor < part.hi) out.emplace_back(cursor, part.hi);
  }
  return IntervalSet::Normalize(std::move(out));
}

IntervalSet Complement(const IntervalSet& s, const Interval& ambient) {
  return Difference(IntervalSet(ambient), s);
}

IntervalSet Dilate(const IntervalSet& s, const Rational& margin) {
  if (margin.sign() < 0) throw InvalidArgument("negative dilation margin");
  std::vector<Interval> out;
  out.reserve(s.size());
  for (const auto& p : s.parts()) out.emplace_back(p.lo - margin, p.hi + margin);
  return IntervalSet::Normalize(std::move(out));
}

std::optional<Rational> Distance(const IntervalSet& a, const IntervalSet& b) {
  if (a.empty() || b.empty()) return std::nullopt;
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  std::optional<Rational> best;
  auto offer = [&](Rational d) {
    if (!best || d < *best) best = std::move(d);
  };
  std::size_t i = 0, j = 0;
  while (i < pa.size() && j < pb.size()) {
    if (pa[i].hi < pb[j].lo) {
      offer(pb[j].lo - pa[i].hi);
      ++i;
    } else if (pb[j].hi < pa[i].lo) {
      offer(pa[i].lo - pb[j].hi);
      ++j;
    } else {
      return Rational(0);
    }
  }
  return best;
}

MeasureIndex::MeasureIndex(const IntervalSet& set) : set_(set) {
  prefix_.reserve(set.size() + 1);
  prefix_.emplace_back(0);
  for (const auto& p : set.parts()) prefix_.push_back(prefix_.back() + p.length());
}

Rational MeasureIndex::measure_within(const Interval& window) const {
  const auto& parts = set_.parts();
  std::size_t first = FirstEndingAtOrAfter(parts, window.lo);
  auto last_it = std::partition_point(parts.begin() + static_cast<std::ptrdiff_t>(first),
                                      parts.end(),
                                      [&](const Interval& p) { return p.lo < window.hi; });
  std::size_t last = static_cast<std::size_t>(last_it - parts.begin());
  if (first >= last) return Rational(0);
  // Parts [first, last) meet the window; clip the two ends.
  Rational total = prefix_[last] - prefix_[first];
  if (parts[first].lo < window.lo) total -= window.lo - parts[first].lo;
  if (window.hi < parts[last - 1].hi) total -= parts[last - 1].hi - window.hi;
  return total;
}

}  // namespace luzin
