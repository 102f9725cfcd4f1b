#pragma once

#include <vector>

#include "fractw/rational.hpp"

namespace fractw {

// Half-open interval [lo, hi). Canonical ColorSets never store lo >= hi.
struct Interval {
  Rational lo;
  Rational hi;

  bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

// A finite union of disjoint half-open intervals with rational endpoints,
// kept canonical: sorted ascending, pairwise disjoint, adjacent intervals
// merged. The canonical form makes equality comparison exact.
class ColorSet {
public:
  ColorSet() = default;

  // Single interval; empty set when lo >= hi.
  static ColorSet interval(const Rational& lo, const Rational& hi);

  // Canonicalizes an arbitrary collection of intervals.
  static ColorSet from_intervals(std::vector<Interval> parts);

  // Union of palette cells [(c-1)/t, c/t) for each 1-based color index c.
  static ColorSet from_cells(const std::vector<int>& colors, int t);

  const std::vector<Interval>& intervals() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  Rational measure() const;

  ColorSet unite(const ColorSet& other) const;
  ColorSet intersect(const ColorSet& other) const;
  ColorSet subtract(const ColorSet& other) const;

  bool disjoint_with(const ColorSet& other) const;
  bool contains(const ColorSet& other) const;  // superset test

  // Greedy sub-selection from the smallest elements, exact measure `amount`.
  // InsufficientMeasure when measure() < amount.
  ColorSet take_leftmost(const Rational& amount) const;

  bool operator==(const ColorSet& o) const { return parts_ == o.parts_; }
  bool operator!=(const ColorSet& o) const { return !(*this == o); }

private:
  std::vector<Interval> parts_;
};

}  // namespace fractw
