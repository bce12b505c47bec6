#pragma once

#include "magbot/core.hpp"

namespace magbot {

/// Re = rho * v * D_h / mu.
double reynolds(const Fluid& fluid, double speed, double hydraulic_diameter);

/// C_d = (24/Re) * (1 + Re^(2/3)/6). Throws std::domain_error at Re <= 0;
/// the v = 0 case is handled by drag_force directly.
double drag_coefficient(double re);

/// F_D = 1/2 * C_d * rho * A * v^2, zero at zero speed.
double drag_force(const Fluid& fluid, double area, double speed, double hydraulic_diameter);

struct BodyForces {
  double f_gravity;   // N
  double f_buoyancy;  // N
};

/// Weight of body plus magnets and buoyancy of the displaced fluid.
/// Body and magnet volumes are counted separately (the magnets sit in
/// dedicated pockets; their volume adds to the displaced total).
BodyForces body_forces(const RobotBody& robot, const Fluid& fluid, const PhysConstants& constants);

/// Couette estimate of the viscous wall friction, F = mu * A * v / gap.
double wall_shear_friction(const Fluid& fluid, double bottom_area, double speed, double shear_gap);

/// Film thickness that makes wall_shear_friction hit target_force at the
/// given speed (Couette inversion).
double calibrate_shear_gap(const Fluid& fluid, double bottom_area, double speed, double target_force);

}  // namespace magbot
