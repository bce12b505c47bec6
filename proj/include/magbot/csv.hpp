#pragma once

#include <stdexcept>
#include <string>

#include "magbot/core.hpp"
#include "magbot/statics.hpp"

namespace magbot {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Header `offset_m,fx_N,fy_N,fz_N`, one row per sample, scientific
/// notation with 9 significant digits, LF endings, exactly one LF after
/// the last row.
std::string force_curve_csv(const ForceCurve& curve);
void write_force_curve_csv(const ForceCurve& curve, const std::string& path);

/// Header `t_s,friction_N,drag_N,normal_N`, same formatting rules.
std::string friction_trace_csv(const FrictionTrace& trace);
void write_friction_trace_csv(const FrictionTrace& trace, const std::string& path);

/// Parses a force-curve CSV back (values carry 9 significant digits).
ForceCurve read_force_curve_csv(const std::string& text);

}  // namespace magbot
