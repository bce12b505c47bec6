#include "magbot/magnetostatics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "magbot/numerics.hpp"

namespace magbot {

namespace {

constexpr double kRimTol = 1e-12;  // m

struct LocalField {
  double b_rho;
  double b_z;
};

/// Field of a uniformly axially magnetized cylinder in its own frame
/// (equivalent-solenoid solution): half-height hh, radius a, field point
/// at cylindrical (rho, z) from the center.
///
///   B_rho = B0 [ ap cel(kp,1,1,-1) - am cel(km,1,1,-1) ]
///   B_z   = B0 a/(a+rho) [ bp cel(kp,g^2,1,g) - bm cel(km,g^2,1,g) ]
///
/// with B0 = mu0 M / pi, zpm = z +/- hh, g = (a-rho)/(a+rho) and
/// kpm^2 = (zpm^2 + (a-rho)^2) / (zpm^2 + (a+rho)^2). Valid inside and
/// outside; the only true singularity is the rim circle.
LocalField cylinder_field_local(double a, double hh, double b0, double rho, double z,
                                bool want_rho) {
  const double zp = z + hh;
  const double zm = z - hh;
  const double dr = a - rho;
  const double sr = a + rho;
  const double rim2 = dr * dr + std::min(zp * zp, zm * zm);
  if (rim2 < kRimTol * kRimTol) {
    throw SingularityError("b_cylinder_exact: field point on the magnet rim");
  }
  const double denp = zp * zp + sr * sr;
  const double denm = zm * zm + sr * sr;
  const double kp = std::sqrt((zp * zp + dr * dr) / denp);
  const double km = std::sqrt((zm * zm + dr * dr) / denm);
  const double g = dr / sr;

  LocalField f{0.0, 0.0};
  const double bp = zp / std::sqrt(denp);
  const double bm = zm / std::sqrt(denm);
  f.b_z = b0 * a / sr * (bp * cel(kp, g * g, 1.0, g) - bm * cel(km, g * g, 1.0, g));
  if (want_rho && rho > 0.0) {
    const double ap = a / std::sqrt(denp);
    const double am = a / std::sqrt(denm);
    f.b_rho = b0 * (ap * cel(kp, 1.0, 1.0, -1.0) - am * cel(km, 1.0, 1.0, -1.0));
  }
  return f;
}

inline bool is_z_axis(const Vec3& axis) {
  return std::abs(axis.x()) < 1e-14 && std::abs(axis.y()) < 1e-14;
}

/// z-component of the exact field of a z-axis magnet; used by the force
/// integrand when every axis in play is vertical (the common case).
double bz_exact_zaxis(const CylMagnet& m, const Vec3& p) {
  const Vec3 d = p - m.center;
  const double rho = std::hypot(d.x(), d.y());
  const double b0 = PhysConstants::mu0 * m.magnetization / std::numbers::pi;
  const LocalField f =
      cylinder_field_local(m.radius, 0.5 * m.height, b0, rho, d.z() * m.axis.z(), false);
  return f.b_z * m.axis.z();
}

bool cylinders_overlap(const CylMagnet& a, const CylMagnet& b) {
  const Vec3 d = b.center - a.center;
  const double cosang = std::abs(a.axis.dot(b.axis));
  if (cosang > 1.0 - 1e-9) {
    const double axial = std::abs(d.dot(a.axis));
    const Vec3 lat = d - d.dot(a.axis) * a.axis;
    return axial < 0.5 * (a.height + b.height) - 1e-12 &&
           lat.norm() < (a.radius + b.radius) - 1e-12;
  }
  // Tilted pair: bounding-sphere test (conservative).
  const auto bound = [](const CylMagnet& m) {
    return std::sqrt(m.radius * m.radius + 0.25 * m.height * m.height);
  };
  return d.norm() < bound(a) + bound(b) - 1e-12;
}

/// Orthonormal in-plane directions for a magnet's cross-section.
void cylinder_frame(const Vec3& axis, Vec3& u, Vec3& v) {
  const Vec3 seed = std::abs(axis.z()) < 0.9 ? Vec3::UnitZ() : Vec3::UnitX();
  u = axis.cross(seed).normalized();
  v = axis.cross(u);
}

}  // namespace

Vec3 b_dipole(const CylMagnet& magnet, const Vec3& p) {
  const Vec3 r = p - magnet.center;
  const double rn = r.norm();
  if (rn < kRimTol) {
    throw SingularityError("b_dipole: field point at the magnet center");
  }
  const Vec3 m = magnet.moment();
  const Vec3 rhat = r / rn;
  return PhysConstants::mu0 / (4.0 * std::numbers::pi) *
         (3.0 * rhat.dot(m) * rhat - m) / (rn * rn * rn);
}

Vec3 b_cylinder_exact(const CylMagnet& magnet, const Vec3& p) {
  const Vec3 d = p - magnet.center;
  const double z = d.dot(magnet.axis);
  const Vec3 rvec = d - z * magnet.axis;
  const double rho = rvec.norm();
  const double b0 = PhysConstants::mu0 * magnet.magnetization / std::numbers::pi;
  const LocalField f = cylinder_field_local(magnet.radius, 0.5 * magnet.height, b0, rho, z, true);
  Vec3 b = f.b_z * magnet.axis;
  if (rho > 0.0) {
    b += f.b_rho / rho * rvec;
  }
  return b;
}

Vec3 b_total(const FieldSource& source, const Vec3& p) {
  Vec3 b = Vec3::Zero();
  for (const CylMagnet& m : source.magnets) {
    b += source.model == FieldModel::Exact ? b_cylinder_exact(m, p) : b_dipole(m, p);
  }
  return b;
}

Vec3 force_on_magnet(const CylMagnet& target, const FieldSource& source, int quad_order) {
  if (quad_order < 1) {
    throw std::domain_error("force_on_magnet: quad_order must be >= 1");
  }
  for (const CylMagnet& s : source.magnets) {
    if (cylinders_overlap(target, s)) {
      throw OverlapError("force_on_magnet: target intersects a source magnet");
    }
  }

  // F = mu0 int_V grad(M . H) dV with H = B_source / mu0; the mu0 factors
  // cancel, leaving the gradient of M . B over the target volume.
  const bool all_vertical = is_z_axis(target.axis) &&
                            std::all_of(source.magnets.begin(), source.magnets.end(),
                                        [](const CylMagnet& m) { return is_z_axis(m.axis); });
  std::function<double(const Vec3&)> coupling;
  if (all_vertical && source.model == FieldModel::Exact) {
    coupling = [&](const Vec3& p) {
      double bz = 0.0;
      for (const CylMagnet& m : source.magnets) {
        bz += bz_exact_zaxis(m, p);
      }
      return target.magnetization * target.axis.z() * bz;
    };
  } else {
    coupling = [&](const Vec3& p) {
      return target.magnetization * target.axis.dot(b_total(source, p));
    };
  }

  const QuadratureRule rule = gauss_legendre(quad_order);
  Vec3 u, v;
  cylinder_frame(target.axis, u, v);
  const double hh = 0.5 * target.height;

  Vec3 force = Vec3::Zero();
  for (int it = 0; it < quad_order; ++it) {
    const double theta = std::numbers::pi * (rule.nodes[it] + 1.0);
    const double wt = std::numbers::pi * rule.weights[it];
    const Vec3 radial = std::cos(theta) * u + std::sin(theta) * v;
    for (int ir = 0; ir < quad_order; ++ir) {
      const double rho = 0.5 * target.radius * (rule.nodes[ir] + 1.0);
      const double wr = 0.5 * target.radius * rule.weights[ir] * rho;
      for (int iz = 0; iz < quad_order; ++iz) {
        const double zeta = hh * rule.nodes[iz];
        const double wz = hh * rule.weights[iz];
        const Vec3 p = target.center + rho * radial + zeta * target.axis;
        force += (wt * wr * wz) * grad_central(coupling, p, kForceGradStep);
      }
    }
  }
  if (!force.allFinite()) {
    throw NumericalError("force_on_magnet: non-finite force integral");
  }
  return force;
}

Vec3 force_between_robots(const Scene& scene, int quad_order) {
  const std::vector<CylMagnet> sources = base_magnets_world(scene);
  const std::vector<CylMagnet> targets = wounding_magnets_world(scene);
  if (sources.empty() || targets.empty()) {
    return Vec3::Zero();
  }
  const FieldSource source{sources, FieldModel::Exact};
  Vec3 force = Vec3::Zero();
  for (const CylMagnet& t : targets) {
    force += force_on_magnet(t, source, quad_order);
  }
  return force;
}

Vec3 force_on_base_robot(const Scene& scene, int quad_order) {
  const std::vector<CylMagnet> sources = wounding_magnets_world(scene);
  const std::vector<CylMagnet> targets = base_magnets_world(scene);
  if (sources.empty() || targets.empty()) {
    return Vec3::Zero();
  }
  const FieldSource source{sources, FieldModel::Exact};
  Vec3 force = Vec3::Zero();
  for (const CylMagnet& t : targets) {
    force += force_on_magnet(t, source, quad_order);
  }
  return force;
}

double pitch_moment(const Scene& scene, int quad_order) {
  const std::vector<CylMagnet> sources = base_magnets_world(scene);
  const std::vector<CylMagnet> targets = wounding_magnets_world(scene);
  if (sources.empty() || targets.empty()) {
    return 0.0;
  }
  const FieldSource source{sources, FieldModel::Exact};
  const Vec3 centroid = scene.wounding_center();
  double tau_y = 0.0;
  for (const CylMagnet& t : targets) {
    const Vec3 f = force_on_magnet(t, source, quad_order);
    const Vec3 arm = t.center - centroid;
    tau_y += arm.z() * f.x() - arm.x() * f.z();
  }
  return tau_y;
}

}  // namespace magbot
