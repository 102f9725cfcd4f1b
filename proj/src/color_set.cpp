#include "fractw/color_set.hpp"

#include <algorithm>

#include "fractw/error.hpp"

namespace fractw {

ColorSet ColorSet::interval(const Rational& lo, const Rational& hi) {
  ColorSet s;
  if (lo < hi) s.parts_.push_back({lo, hi});
  return s;
}

ColorSet ColorSet::from_intervals(std::vector<Interval> parts) {
  parts.erase(std::remove_if(parts.begin(), parts.end(),
                             [](const Interval& iv) { return !(iv.lo < iv.hi); }),
              parts.end());
  std::sort(parts.begin(), parts.end(),
            [](const Interval& a, const Interval& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  ColorSet s;
  for (const Interval& iv : parts) {
    if (!s.parts_.empty() && iv.lo <= s.parts_.back().hi) {
      if (iv.hi > s.parts_.back().hi) s.parts_.back().hi = iv.hi;
    } else {
      s.parts_.push_back(iv);
    }
  }
  return s;
}

ColorSet ColorSet::from_cells(const std::vector<int>& colors, int t) {
  if (t < 1) fail(Errc::bad_params, "cell granularity requires t >= 1");
  std::vector<Interval> parts;
  parts.reserve(colors.size());
  for (int c : colors) parts.push_back({rat(c - 1, t), rat(c, t)});
  return from_intervals(std::move(parts));
}

Rational ColorSet::measure() const {
  Rational total = 0;
  for (const Interval& iv : parts_) total += iv.hi - iv.lo;
  return total;
}

ColorSet ColorSet::unite(const ColorSet& other) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return from_intervals(std::move(all));
}

ColorSet ColorSet::intersect(const ColorSet& other) const {
  ColorSet out;
  std::size_t i = 0, j = 0;
  while (i < parts_.size() && j < other.parts_.size()) {
    const Interval& a = parts_[i];
    const Interval& b = other.parts_[j];
    Rational lo = std::max(a.lo, b.lo);
    Rational hi = std::min(a.hi, b.hi);
    if (lo < hi) out.parts_.push_back({lo, hi});
    if (a.hi < b.hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

ColorSet ColorSet::subtract(const ColorSet& other) const {
  ColorSet out;
  std::size_t j = 0;
  for (const Interval& a : parts_) {
    Rational lo = a.lo;
    while (j < other.parts_.size() && other.parts_[j].hi <= lo) ++j;
    std::size_t k = j;
    while (k < other.parts_.size() && other.parts_[k].lo < a.hi) {
      if (other.parts_[k].lo > lo) out.parts_.push_back({lo, other.parts_[k].lo});
      lo = std::max(lo, other.parts_[k].hi);
      if (lo >= a.hi) break;
      ++k;
    }
    if (lo < a.hi) out.parts_.push_back({lo, a.hi});
  }
  return out;
}

bool ColorSet::disjoint_with(const ColorSet& other) const {
  std::size_t i = 0, j = 0;
  while (i < parts_.size() && j < other.parts_.size()) {
    const Interval& a = parts_[i];
    const Interval& b = other.parts_[j];
    if (std::max(a.lo, b.lo) < std::min(a.hi, b.hi)) return false;
    if (a.hi < b.hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

bool ColorSet::contains(const ColorSet& other) const {
  return other.subtract(*this).empty();
}

ColorSet ColorSet::take_leftmost(const Rational& amount) const {
  if (amount < 0) fail(Errc::bad_params, "negative amount");
  ColorSet out;
  Rational need = amount;
  for (const Interval& iv : parts_) {
    if (need == 0) break;
    Rational len = iv.hi - iv.lo;
    if (len <= need) {
      out.parts_.push_back(iv);
      need -= len;
    } else {
      out.parts_.push_back({iv.lo, iv.lo + need});
      need = 0;
    }
  }
  if (need > 0) fail(Errc::insufficient_measure, "set holds less than the requested measure");
  return out;
}

}  // namespace fractw
