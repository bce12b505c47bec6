#pragma once

#include <vector>

#include "magbot/core.hpp"
#include "magbot/statics.hpp"

namespace magbot {

/// Parametric force sweep: force_between_robots at each grid offset.
/// Offsets are independent and may be evaluated on up to `threads`
/// workers; the curve is assembled in offset order, so the result is
/// identical for any thread count. Fails on the first magnetics error,
/// naming the offending offset. axis X sweeps x_offset, axis Z sweeps
/// the vertical gap.
ForceCurve run_em_sweep(const Scene& scene, const SweepSpec& spec, int quad_order = 8,
                        unsigned threads = 0, SweepAxis axis = SweepAxis::X);

struct AxisStats {
  double max_value;        // signed
  double max_offset;
  double min_value;        // signed
  double min_offset;
  double peak_abs_value;   // |component| at the peak sample
  double peak_abs_offset;
  std::vector<double> zero_crossings;  // offsets, linear interpolation
  int monotone_segments;
};

/// Per-axis extrema, sign changes and monotone-run counts of a curve.
struct CurveStats {
  AxisStats x, y, z;
};
CurveStats curve_stats(const ForceCurve& curve);

/// One-dimensional fit of the vertical gap so the lateral-force peak of
/// the sweep lands at target_peak_offset. The peak location is found by
/// golden-section search on |F_x(offset)| over the sweep range; the gap
/// by bisection on peak(gap) - target. Returns the fitted gap.
double calibrate_z_gap(const Scene& scene, const SweepSpec& spec, double target_peak_offset,
                       double gap_lo, double gap_hi, int quad_order = 8,
                       double tol = 1e-7);

/// Continuous peak locator used by the calibration: offset of max |F_x|.
double locate_peak_offset(const Scene& scene, double lo, double hi, int quad_order = 8,
                          double tol = 1e-8);

}  // namespace magbot
