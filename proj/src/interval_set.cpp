#include "choquet/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace choquet {

namespace {

std::vector<Interval> canonicalize(std::vector<Interval> parts) {
  for (const Interval& p : parts) {
    if (!(std::isfinite(p.lo) && std::isfinite(p.hi)))
      throw std::invalid_argument("interval endpoints must be finite");
    if (p.lo > p.hi) throw std::invalid_argument("interval with lo > hi");
  }
  std::sort(parts.begin(), parts.end(),
            [](const Interval& a, const Interval& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  std::vector<Interval> merged;
  for (const Interval& p : parts) {
    // Closed sets: touching endpoints merge.
    if (!merged.empty() && p.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, p.hi);
    } else {
      merged.push_back(p);
    }
  }
  return merged;
}

}  // namespace

IntervalSet::IntervalSet(std::initializer_list<Interval> parts)
    : parts_(canonicalize(std::vector<Interval>(parts))) {}

IntervalSet IntervalSet::interval(double lo, double hi) {
  IntervalSet s;
  s.parts_ = canonicalize({Interval{lo, hi}});
  return s;
}

IntervalSet IntervalSet::from_intervals(std::span<const Interval> parts) {
  IntervalSet s;
  s.parts_ = canonicalize(std::vector<Interval>(parts.begin(), parts.end()));
  return s;
}

double IntervalSet::total_length() const {
  double sum = 0.0;
  for (const Interval& p : parts_) sum += p.hi - p.lo;
  return sum;
}

bool IntervalSet::contains(double x) const {
  auto it = std::upper_bound(
      parts_.begin(), parts_.end(), x,
      [](double v, const Interval& p) { return v < p.lo; });
  if (it == parts_.begin()) return false;
  --it;
  return x <= it->hi;
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
  for (const Interval& p : parts_) {
    auto it = std::upper_bound(
        other.parts_.begin(), other.parts_.end(), p.lo,
        [](double v, const Interval& q) { return v < q.lo; });
    if (it == other.parts_.begin()) return false;
    --it;
    if (p.lo < it->lo || p.hi > it->hi) return false;
  }
  return true;
}

Interval IntervalSet::hull() const {
  if (parts_.empty()) throw std::logic_error("hull of empty IntervalSet");
  return Interval{parts_.front().lo, parts_.back().hi};
}

IntervalSet IntervalSet::inflated(double eps) const {
  std::vector<Interval> grown;
  grown.reserve(parts_.size());
  for (const Interval& p : parts_) grown.push_back({p.lo - eps, p.hi + eps});
  IntervalSet s;
  s.parts_ = canonicalize(std::move(grown));
  return s;
}

IntervalSet IntervalSet::deflated(double eps) const {
  std::vector<Interval> shrunk;
  shrunk.reserve(parts_.size());
  for (const Interval& p : parts_) {
    if (p.hi - p.lo >= 2 * eps) shrunk.push_back({p.lo + eps, p.hi - eps});
  }
  IntervalSet s;
  s.parts_ = std::move(shrunk);  // already canonical
  return s;
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all = a.parts_;
  all.insert(all.end(), b.parts_.begin(), b.parts_.end());
  IntervalSet s;
  s.parts_ = canonicalize(std::move(all));
  return s;
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < a.parts_.size() && j < b.parts_.size()) {
    const Interval& p = a.parts_[i];
    const Interval& q = b.parts_[j];
    double lo = std::max(p.lo, q.lo);
    double hi = std::min(p.hi, q.hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (p.hi < q.hi)
      ++i;
    else
      ++j;
  }
  IntervalSet s;
  s.parts_ = std::move(out);  // disjoint inputs give disjoint output
  return s;
}

}  // namespace choquet
