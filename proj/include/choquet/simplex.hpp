#pragma once

#include <functional>
#include <span>
#include <vector>

namespace choquet {

// Measurable subsets of the standard N-simplex
//   D_N = { x : x_i >= 0, sum x_i <= 1 }.
// Two forms are supported: an analytic cap { x_N >= c } (Lebesgue volume
// (1-c)^N / N! in closed form) and a uniform grid mask with fractional
// per-cell coverage estimated by subsampling.
class SimplexRegion {
 public:
  static SimplexRegion cap(int dim, double c);
  static SimplexRegion full(int dim) { return cap(dim, 0.0); }
  // Rasterize an arbitrary region given by a membership predicate on the
  // cube [0,1]^N; points outside the simplex never count. cells_per_axis
  // cells along each axis, subsamples^N probes per cell.
  static SimplexRegion rasterize(int dim, int cells_per_axis,
                                 const std::function<bool(std::span<const double>)>& inside,
                                 int subsamples = 4);

  int dim() const { return dim_; }
  bool is_cap() const { return is_cap_; }
  double cap_level() const { return cap_level_; }
  int cells_per_axis() const { return cells_per_axis_; }

  // Lebesgue volume: exact for caps, coverage-sum estimate for masks.
  double lebesgue() const;
  // Bracket [lo, hi] of the volume; equal for caps.
  double lebesgue_lower() const;
  double lebesgue_upper() const;

  SimplexRegion intersect_with(const SimplexRegion& other) const;

  static double cap_volume(int dim, double c);

 private:
  SimplexRegion() = default;

  int dim_ = 1;
  bool is_cap_ = true;
  double cap_level_ = 0.0;
  int cells_per_axis_ = 0;
  // Per cell: fraction of probes inside (mid), plus all/any flags packed
  // as exact 0/1 coverage in lo_/hi_ sums.
  std::vector<float> coverage_;
  double vol_mid_ = 0.0, vol_lo_ = 0.0, vol_hi_ = 0.0;
};

}  // namespace choquet
