#pragma once

#include <optional>
#include <vector>

#include "magbot/core.hpp"

namespace magbot {

enum class Axis { X = 0, Y = 1, Z = 2 };

/// Time series of the dragged robot's friction state. `friction` is the
/// viscous wall-shear channel; the Coulomb channel is normal-dependent and
/// recoverable from `normal` via the friction coefficient.
struct FrictionTraceSample {
  double t;         // s
  double friction;  // N, viscous channel
  double drag;      // N
  double normal;    // N
};

struct FrictionTrace {
  std::vector<FrictionTraceSample> samples;
  double max_static_friction = 0.0;  // max of the friction channel
};

struct OffsetWindow {
  double lo;  // m
  double hi;  // m
};

/// Result of the inverse offset-selection problem: the window of offsets
/// whose towing margin meets the required force, and the lateral-force peak.
struct OffsetPlan {
  std::optional<OffsetWindow> feasible_window;
  double peak_offset = 0.0;     // m, offset of max |F_x| in the curve
  double peak_force_x = 0.0;    // N, |F_x| at that offset
  double peak_margin = 0.0;     // N, best towing margin over the curve
  double required_force = 0.0;  // N, the demand the window satisfies
};

/// Closes the force balance at one configuration and motion speed.
/// The normal force solves the contact z-balance (convention per
/// scene.z_balance, clamped at zero with lift-off reported); the Coulomb
/// channel is mu * N; the viscous channel is the Couette wall shear.
ForceBreakdown force_breakdown(const Scene& scene, double speed, int quad_order = 8);

/// Towing margin at an offset: |F_M,x| - F_f - F_D at the given speed.
/// This is what an external pull must exceed for the robot to slip.
double towing_margin(const Scene& scene, double x_offset, double speed, int quad_order = 8);

/// Margin computed from an already-evaluated magnetic force (no field
/// evaluation; used when scanning existing curves).
double towing_margin_from_force(const Scene& scene, const Vec3& f_magnetic, double speed);

/// Quasi-static drag: the wounding robot advances at spec.speed along +x,
/// x_offset growing by speed*dt each step; 0..duration inclusive.
FrictionTrace run_friction_trace(const Scene& scene, const FrictionRunSpec& spec, int quad_order = 8);

/// Sample with the largest |component|; ties break toward smaller offset.
/// Returns the offset and the component magnitude there.
struct CurvePeak {
  double offset;
  double value;
};
CurvePeak find_peak(const ForceCurve& curve, Axis component);

/// Finds the offset window where the towing margin meets required_force.
/// Brackets on the curve samples, then refines each endpoint with the
/// root finder on the exact margin function. Empty window when no offset
/// qualifies (not an error).
OffsetPlan plan_offset(const Scene& scene, const ForceCurve& curve, double required_force,
                       double speed, int quad_order = 8);

}  // namespace magbot
