#pragma once

#include <stdexcept>
#include <vector>

#include "magbot/core.hpp"

namespace magbot {

/// Field point coincides with (or is too close to) a source singularity.
struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Force target intersects a source magnet.
struct OverlapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FieldModel { Exact, Dipole };

/// A set of source magnets evaluated with the selected field model.
struct FieldSource {
  std::vector<CylMagnet> magnets;
  FieldModel model = FieldModel::Exact;
};

/// Point-dipole flux density of a magnet, tesla. Throws SingularityError
/// at the magnet center.
Vec3 b_dipole(const CylMagnet& magnet, const Vec3& p);

/// Flux density of a uniformly axially magnetized cylinder, valid inside
/// and outside the magnet (equivalent-solenoid solution through complete
/// elliptic integrals). Throws SingularityError within 1e-12 m of the rim.
Vec3 b_cylinder_exact(const CylMagnet& magnet, const Vec3& p);

/// Superposition over the source's magnets with its field model.
Vec3 b_total(const FieldSource& source, const Vec3& p);

/// Force of the source array on a rigid uniformly magnetized target,
///   F = mu0 * int_V grad(M . H) dV,
/// H = B_source / mu0, integrated by Gauss-Legendre quadrature over the
/// target cylinder (quad_order nodes per axis), gradient by central
/// differences. Throws OverlapError if the target intersects a source
/// magnet, NumericalError on non-finite field values.
Vec3 force_on_magnet(const CylMagnet& target, const FieldSource& source, int quad_order = 8);

/// Finite-difference step used inside the force integrals (m).
inline constexpr double kForceGradStep = 1e-6;

/// Total force of the base array on the wounding robot's magnets.
Vec3 force_between_robots(const Scene& scene, int quad_order = 8);

/// Reverse coupling: force of the wounding array on the base magnets.
Vec3 force_on_base_robot(const Scene& scene, int quad_order = 8);

/// Torque about the y-axis through the wounding robot's centroid,
/// magnet forces applied at the magnet centers.
double pitch_moment(const Scene& scene, int quad_order = 8);

}  // namespace magbot
