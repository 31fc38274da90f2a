#include "choquet/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace choquet {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Iterate all cells of the [0,1]^N grid, invoking fn(cell_index_vector).
template <typename Fn>
void for_each_cell(int dim, int cells, Fn&& fn) {
  std::vector<int> idx(dim, 0);
  while (true) {
    fn(idx);
    int d = 0;
    while (d < dim) {
      if (++idx[d] < cells) break;
      idx[d] = 0;
      ++d;
    }
    if (d == dim) break;
  }
}

}  // namespace

double SimplexRegion::cap_volume(int dim, double c) {
  double t = std::clamp(1.0 - c, 0.0, 1.0);
  return std::pow(t, dim) / factorial(dim);
}

SimplexRegion SimplexRegion::cap(int dim, double c) {
  if (dim < 1) throw std::invalid_argument("simplex dimension must be >= 1");
  SimplexRegion r;
  r.dim_ = dim;
  r.is_cap_ = true;
  r.cap_level_ = c;
  double v = cap_volume(dim, c);
  r.vol_mid_ = r.vol_lo_ = r.vol_hi_ = v;
  return r;
}

SimplexRegion SimplexRegion::rasterize(
    int dim, int cells_per_axis,
    const std::function<bool(std::span<const double>)>& inside,
    int subsamples) {
  if (dim < 1) throw std::invalid_argument("simplex dimension must be >= 1");
  if (cells_per_axis < 2) throw std::invalid_argument("cells_per_axis too small");
  if (subsamples < 1) throw std::invalid_argument("subsamples must be >= 1");

  SimplexRegion r;
  r.dim_ = dim;
  r.is_cap_ = false;
  r.cells_per_axis_ = cells_per_axis;

  const double h = 1.0 / cells_per_axis;
  const double cell_vol = std::pow(h, dim);
  std::size_t n_cells = 1;
  for (int d = 0; d < dim; ++d) n_cells *= cells_per_axis;
  r.coverage_.assign(n_cells, 0.0f);

  int probes_per_cell = 1;
  for (int d = 0; d < dim; ++d) probes_per_cell *= subsamples;

  std::vector<double> point(dim);
  std::vector<int> probe(dim);
  std::size_t flat = 0;
  double mid = 0.0, lo = 0.0, hi = 0.0;
  for_each_cell(dim, cells_per_axis, [&](const std::vector<int>& idx) {
    int hits = 0;
    std::fill(probe.begin(), probe.end(), 0);
    for (int p = 0; p < probes_per_cell; ++p) {
      double coord_sum = 0.0;
      for (int d = 0; d < dim; ++d) {
        point[d] = (idx[d] + (probe[d] + 0.5) / subsamples) * h;
        coord_sum += point[d];
      }
      if (coord_sum <= 1.0 && inside(point)) ++hits;
      int d = 0;
      while (d < dim) {
        if (++probe[d] < subsamples) break;
        probe[d] = 0;
        ++d;
      }
    }
    double frac = static_cast<double>(hits) / probes_per_cell;
    r.coverage_[flat++] = static_cast<float>(frac);
    mid += frac;
    if (hits == probes_per_cell) lo += 1.0;
    if (hits > 0) hi += 1.0;
  });
  r.vol_mid_ = mid * cell_vol;
  r.vol_lo_ = lo * cell_vol;
  r.vol_hi_ = hi * cell_vol;
  return r;
}

double SimplexRegion::lebesgue() const { return vol_mid_; }
double SimplexRegion::lebesgue_lower() const { return vol_lo_; }
double SimplexRegion::lebesgue_upper() const { return vol_hi_; }

SimplexRegion SimplexRegion::intersect_with(const SimplexRegion& other) const {
  if (dim_ != other.dim_)
    throw std::invalid_argument("simplex region dimension mismatch");
  if (is_cap_ && other.is_cap_)
    return cap(dim_, std::max(cap_level_, other.cap_level_));
  if (!is_cap_ && !other.is_cap_) {
    if (cells_per_axis_ != other.cells_per_axis_)
      throw std::invalid_argument("mask resolutions differ");
    SimplexRegion r = *this;
    double mid = 0.0, lo = 0.0, hi = 0.0;
    const double cell_vol = std::pow(1.0 / cells_per_axis_, dim_);
    for (std::size_t i = 0; i < r.coverage_.size(); ++i) {
      // Lower bound on intersection coverage of two sub-cell fractions.
      float c = std::max(0.0f, coverage_[i] + other.coverage_[i] - 1.0f);
      r.coverage_[i] = c;
      mid += c;
      if (c >= 1.0f) lo += 1.0;
      if (coverage_[i] > 0.0f && other.coverage_[i] > 0.0f) hi += 1.0;
    }
    r.vol_mid_ = mid * cell_vol;
    r.vol_lo_ = lo * cell_vol;
    r.vol_hi_ = hi * cell_vol;
    return r;
  }
  throw std::invalid_argument(
      "intersection of cap and mask regions is not supported");
}

}  // namespace choquet
