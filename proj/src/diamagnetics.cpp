#include "magbot/diamagnetics.hpp"

#include <cmath>

#include "magbot/numerics.hpp"

namespace magbot {

namespace {

double b_norm2(const FieldFn& field, const Vec3& p) {
  const Vec3 b = field(p);
  return b.squaredNorm();
}

}  // namespace

Vec3 dia_force_volume(const DiamagneticBody& body, const FieldFn& field, int quad_order) {
  if (quad_order < 1) {
    throw std::domain_error("dia_force_volume: quad_order must be >= 1");
  }
  const QuadratureRule rule = gauss_legendre(quad_order);
  const Vec3 he = body.half_extents;
  const auto f = [&](const Vec3& p) { return b_norm2(field, p); };
  // Gradient step tied to the body scale; |B|^2 varies on the magnet
  // scale, well above this.
  const double h = 1e-6;

  Vec3 force = Vec3::Zero();
  for (int ix = 0; ix < quad_order; ++ix) {
    const double x = body.center.x() + he.x() * rule.nodes[ix];
    const double wx = he.x() * rule.weights[ix];
    for (int iy = 0; iy < quad_order; ++iy) {
      const double y = body.center.y() + he.y() * rule.nodes[iy];
      const double wy = he.y() * rule.weights[iy];
      for (int iz = 0; iz < quad_order; ++iz) {
        const double z = body.center.z() + he.z() * rule.nodes[iz];
        const double wz = he.z() * rule.weights[iz];
        force += (wx * wy * wz) * grad_central(f, Vec3(x, y, z), h);
      }
    }
  }
  force *= body.susceptibility / (2.0 * PhysConstants::mu0);
  if (!force.allFinite()) {
    throw NumericalError("dia_force_volume: non-finite integral");
  }
  return force;
}

Vec3 dia_force_surface(const DiamagneticBody& body, const FieldFn& field, int quad_order) {
  if (quad_order < 1) {
    throw std::domain_error("dia_force_surface: quad_order must be >= 1");
  }
  const QuadratureRule rule = gauss_legendre(quad_order);
  const Vec3 he = body.half_extents;

  Vec3 force = Vec3::Zero();
  // Six faces: +/- along each axis; |B|^2 times the outward normal.
  for (int axis = 0; axis < 3; ++axis) {
    const int a1 = (axis + 1) % 3;
    const int a2 = (axis + 2) % 3;
    for (int side = -1; side <= 1; side += 2) {
      double integral = 0.0;
      for (int i = 0; i < quad_order; ++i) {
        for (int j = 0; j < quad_order; ++j) {
          Vec3 p = body.center;
          p[axis] += side * he[axis];
          p[a1] += he[a1] * rule.nodes[i];
          p[a2] += he[a2] * rule.nodes[j];
          const double v = b_norm2(field, p);
          if (!std::isfinite(v)) {
            throw NumericalError("dia_force_surface: non-finite field value");
          }
          integral += rule.weights[i] * rule.weights[j] * v;
        }
      }
      force[axis] += side * integral * he[a1] * he[a2];
    }
  }
  return body.susceptibility / (2.0 * PhysConstants::mu0) * force;
}

Vec3 dia_force_volume(const DiamagneticBody& body, const FieldSource& source, int quad_order) {
  return dia_force_volume(
      body, [&](const Vec3& p) { return b_total(source, p); }, quad_order);
}

Vec3 dia_force_surface(const DiamagneticBody& body, const FieldSource& source, int quad_order) {
  return dia_force_surface(
      body, [&](const Vec3& p) { return b_total(source, p); }, quad_order);
}

}  // namespace magbot
