#pragma once

#include <initializer_list>
#include <span>
#include <vector>

namespace choquet {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Finite union of closed intervals in canonical form: parts sorted,
// pairwise disjoint with strict gaps (hi_i < lo_{i+1}), lo <= hi.
// Degenerate single points [a,a] are allowed; they carry zero length
// but matter for discrete measures.
class IntervalSet {
 public:
  IntervalSet() = default;
  IntervalSet(std::initializer_list<Interval> parts);

  static IntervalSet interval(double lo, double hi);
  static IntervalSet from_intervals(std::span<const Interval> parts);

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }

  double total_length() const;
  bool contains(double x) const;
  // True when every part of this set lies inside the other set.
  bool subset_of(const IntervalSet& other) const;
  // Smallest single interval covering the set; undefined when empty.
  Interval hull() const;

  // Pad every boundary outward by eps (and merge), or inward by eps
  // (dropping parts that collapse). Used to bracket boundary-location
  // uncertainty when level sets come from root refinement.
  IntervalSet inflated(double eps) const;
  IntervalSet deflated(double eps) const;

  friend IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
  friend IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);

  bool operator==(const IntervalSet& other) const = default;

 private:
  std::vector<Interval> parts_;
};

IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);

}  // namespace choquet
