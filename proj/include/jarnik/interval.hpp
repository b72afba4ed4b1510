#pragma once

#include <vector>

#include "jarnik/errors.hpp"
#include "jarnik/rational.hpp"

namespace jarnik {

// Closed interval with exact rational endpoints, lo <= hi.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw invariant_error("Interval: hi < lo");
  }

  Rational length() const { return hi - lo; }

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

  // Closed-interval convention: touching at an endpoint counts.
  bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

// Exact distance between two disjoint intervals; 0 when they touch.
// Overlapping intervals are a caller bug: siblings must never overlap.
inline Rational gap(const Interval& a, const Interval& b) {
  if (a.hi <= b.lo) return b.lo - a.hi;
  if (b.hi <= a.lo) return a.lo - b.hi;
  throw invariant_error("gap: intervals overlap");
}

// Sort by lo and merge overlapping or touching intervals into a
// disjoint ascending list.
inline std::vector<Interval> normalize_union(std::vector<Interval> v) {
  if (v.empty()) return v;
  std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  std::vector<Interval> out;
  out.push_back(v.front());
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i].lo <= out.back().hi) {
      if (out.back().hi < v[i].hi) out.back().hi = v[i].hi;
    } else {
      out.push_back(v[i]);
    }
  }
  return out;
}

// Intersect a disjoint ascending list with one interval.
inline std::vector<Interval> clip_union(const std::vector<Interval>& u, const Interval& w) {
  std::vector<Interval> out;
  for (const auto& p : u) {
    if (!p.intersects(w)) continue;
    out.emplace_back(max(p.lo, w.lo), min(p.hi, w.hi));
  }
  return out;
}

}  // namespace jarnik
