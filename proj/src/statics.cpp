#include "magbot/statics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "magbot/diamagnetics.hpp"
#include "magbot/hydrodynamics.hpp"
#include "magbot/magnetostatics.hpp"
#include "magbot/numerics.hpp"

namespace magbot {

namespace {

double unclamped_normal(const Scene& scene, double f_gravity, double f_buoyancy,
                        double f_mag_z) {
  // Physical: buoyancy unloads the contact. BuoyancyDown groups it with
  // the weight instead, reproducing the alternative budget convention.
  const double buoyancy_term =
      scene.z_balance == ZBalance::Physical ? -f_buoyancy : +f_buoyancy;
  return f_gravity + scene.f_electrostatic + buoyancy_term - scene.f_adhesive - f_mag_z;
}

Vec3 diamagnetic_force(const Scene& scene, int quad_order) {
  DiamagneticBody body;
  body.center = scene.wounding_center();
  body.half_extents = scene.wounding_robot.half_extents();
  body.susceptibility = scene.diamagnetic_susceptibility;
  const FieldSource source{base_magnets_world(scene), FieldModel::Exact};
  if (source.magnets.empty()) {
    return Vec3::Zero();
  }
  return dia_force_surface(body, source, quad_order);
}

}  // namespace

ForceBreakdown force_breakdown(const Scene& scene, double speed, int quad_order) {
  ForceBreakdown bd;
  bd.f_magnetic = force_between_robots(scene, quad_order);
  if (scene.diamagnetic_enabled) {
    bd.f_diamagnetic = diamagnetic_force(scene, quad_order);
  }
  const BodyForces bf = body_forces(scene.wounding_robot, scene.fluid, scene.constants);
  bd.f_gravity = bf.f_gravity;
  bd.f_buoyancy = bf.f_buoyancy;
  bd.f_drag = drag_force(scene.fluid, scene.wounding_robot.cross_section_area, speed,
                         scene.wounding_robot.hydraulic_diameter);
  bd.f_electrostatic = scene.f_electrostatic;
  bd.f_adhesive = scene.f_adhesive;
  bd.f_wall_shear =
      wall_shear_friction(scene.fluid, scene.wounding_robot.bottom_area(), speed, scene.shear_gap);

  const double n0 = unclamped_normal(scene, bd.f_gravity, bd.f_buoyancy,
                                     bd.f_magnetic.z() + bd.f_diamagnetic.z());
  bd.lift_off = n0 < 0.0;
  bd.normal = std::max(0.0, n0);
  bd.f_friction = scene.wounding_robot.friction_coeff * bd.normal;
  bd.net_x = bd.f_magnetic.x() - bd.f_friction - bd.f_drag;
  bd.net_z = bd.normal + bd.f_magnetic.z() + bd.f_adhesive - bd.f_gravity - bd.f_electrostatic -
             bd.f_buoyancy;
  bd.slips = bd.f_magnetic.norm() > 0.0 &&
             std::abs(bd.f_magnetic.x()) > bd.f_friction + bd.f_drag;
  return bd;
}

double towing_margin_from_force(const Scene& scene, const Vec3& f_magnetic, double speed) {
  const BodyForces bf = body_forces(scene.wounding_robot, scene.fluid, scene.constants);
  const double n0 = unclamped_normal(scene, bf.f_gravity, bf.f_buoyancy, f_magnetic.z());
  const double friction = scene.wounding_robot.friction_coeff * std::max(0.0, n0);
  const double drag = drag_force(scene.fluid, scene.wounding_robot.cross_section_area, speed,
                                 scene.wounding_robot.hydraulic_diameter);
  return std::abs(f_magnetic.x()) - friction - drag;
}

double towing_margin(const Scene& scene, double x_offset, double speed, int quad_order) {
  const Scene at = scene_with_offset(scene, x_offset);
  const ForceBreakdown bd = force_breakdown(at, speed, quad_order);
  return std::abs(bd.f_magnetic.x()) - bd.f_friction - bd.f_drag;
}

FrictionTrace run_friction_trace(const Scene& scene, const FrictionRunSpec& spec,
                                 int quad_order) {
  if (!(spec.duration > 0.0) || !(spec.dt > 0.0) || spec.dt > spec.duration) {
    throw std::domain_error("run_friction_trace: invalid run spec");
  }
  const auto steps = static_cast<std::size_t>(spec.duration / spec.dt + 1e-9);
  FrictionTrace trace;
  trace.samples.reserve(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = k * spec.dt;
    const Scene at = scene_with_offset(scene, scene.x_offset + spec.speed * t);
    const ForceBreakdown bd = force_breakdown(at, spec.speed, quad_order);
    trace.samples.push_back({t, bd.f_wall_shear, bd.f_drag, bd.normal});
    trace.max_static_friction = std::max(trace.max_static_friction, bd.f_wall_shear);
  }
  return trace;
}

CurvePeak find_peak(const ForceCurve& curve, Axis component) {
  if (curve.samples.empty()) {
    throw std::domain_error("find_peak: empty curve");
  }
  const int axis = static_cast<int>(component);
  CurvePeak best{curve.samples.front().offset, std::abs(curve.samples.front().force[axis])};
  for (const ForceCurveSample& s : curve.samples) {
    const double v = std::abs(s.force[axis]);
    if (v > best.value) {
      best = {s.offset, v};
    }
  }
  return best;
}

OffsetPlan plan_offset(const Scene& scene, const ForceCurve& curve, double required_force,
                       double speed, int quad_order) {
  if (curve.samples.empty()) {
    throw std::domain_error("plan_offset: empty curve");
  }
  if (!(required_force >= 0.0)) {
    throw std::domain_error("plan_offset: required force must be non-negative");
  }

  OffsetPlan plan;
  plan.required_force = required_force;
  const CurvePeak xpeak = find_peak(curve, Axis::X);
  plan.peak_offset = xpeak.offset;
  plan.peak_force_x = xpeak.value;

  const std::size_t n = curve.samples.size();
  std::vector<double> margin(n);
  std::size_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    margin[i] = towing_margin_from_force(scene, curve.samples[i].force, speed);
    if (margin[i] > margin[best]) {
      best = i;
    }
  }
  plan.peak_margin = margin[best];
  if (margin[best] < required_force) {
    return plan;  // empty window: the demand is unattainable on this curve
  }

  // Contiguous feasible run around the best sample, endpoints refined on
  // the exact margin function.
  std::size_t ilo = best;
  while (ilo > 0 && margin[ilo - 1] >= required_force) {
    --ilo;
  }
  std::size_t ihi = best;
  while (ihi + 1 < n && margin[ihi + 1] >= required_force) {
    ++ihi;
  }

  const auto g = [&](double offset) {
    return towing_margin(scene, offset, speed, quad_order) - required_force;
  };
  constexpr double root_tol = 1e-9;  // m

  double lo = curve.samples.front().offset;
  if (ilo > 0) {
    lo = find_root(g, curve.samples[ilo - 1].offset, curve.samples[ilo].offset, root_tol);
  }
  double hi = curve.samples.back().offset;
  if (ihi + 1 < n) {
    hi = find_root(g, curve.samples[ihi].offset, curve.samples[ihi + 1].offset, root_tol);
  }
  plan.feasible_window = OffsetWindow{lo, hi};
  return plan;
}

}  // namespace magbot
