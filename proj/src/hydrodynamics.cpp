#include "magbot/hydrodynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace magbot {

double reynolds(const Fluid& fluid, double speed, double hydraulic_diameter) {
  if (!(hydraulic_diameter > 0.0)) {
    throw std::domain_error("reynolds: hydraulic diameter must be positive");
  }
  if (!(speed >= 0.0)) {
    throw std::domain_error("reynolds: speed must be non-negative");
  }
  return fluid.density * speed * hydraulic_diameter / fluid.dynamic_viscosity;
}

double drag_coefficient(double re) {
  if (!(re > 0.0)) {
    throw std::domain_error("drag_coefficient: Reynolds number must be positive");
  }
  // (24/Re)(1 + Re^(2/3)/6), arranged so the perfect-cube cases come out
  // exact in floating point.
  return 24.0 / re + 4.0 * std::cbrt(re * re) / re;
}

double drag_force(const Fluid& fluid, double area, double speed, double hydraulic_diameter) {
  if (!(area > 0.0)) {
    throw std::domain_error("drag_force: area must be positive");
  }
  if (speed == 0.0) {
    return 0.0;
  }
  const double re = reynolds(fluid, speed, hydraulic_diameter);
  return 0.5 * drag_coefficient(re) * fluid.density * area * speed * speed;
}

BodyForces body_forces(const RobotBody& robot, const Fluid& fluid,
                       const PhysConstants& constants) {
  double mass = robot.density * robot.body_volume();
  double volume = robot.body_volume();
  for (const CylMagnet& m : robot.magnets) {
    mass += m.density * m.volume();
    volume += m.volume();
  }
  return {mass * constants.g, volume * fluid.density * constants.g};
}

double wall_shear_friction(const Fluid& fluid, double bottom_area, double speed,
                           double shear_gap) {
  if (!(shear_gap > 0.0)) {
    throw std::domain_error("wall_shear_friction: shear gap must be positive");
  }
  return fluid.dynamic_viscosity * bottom_area * speed / shear_gap;
}

double calibrate_shear_gap(const Fluid& fluid, double bottom_area, double speed,
                           double target_force) {
  if (!(target_force > 0.0)) {
    throw std::domain_error("calibrate_shear_gap: target force must be positive");
  }
  return fluid.dynamic_viscosity * bottom_area * speed / target_force;
}

}  // namespace magbot
