#include "magbot/core.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

namespace magbot {

namespace {

constexpr double kGeomTol = 1e-12;

bool finite3(const Vec3& v) {
  return std::isfinite(v.x()) && std::isfinite(v.y()) && std::isfinite(v.z());
}

void add(std::vector<Violation>& out, const std::string& code, const std::string& message) {
  out.push_back({code, message});
}

/// Axis-aligned half-extent of a cylinder along unit direction e:
/// (h/2)|a.e| + r*sqrt(1 - (a.e)^2).
double cylinder_support(const CylMagnet& m, const Vec3& e) {
  const double ae = std::clamp(m.axis.dot(e), -1.0, 1.0);
  return 0.5 * m.height * std::abs(ae) + m.radius * std::sqrt(1.0 - ae * ae);
}

void validate_robot(const RobotBody& robot, const std::string& which,
                    std::vector<Violation>& out) {
  if (!(robot.length > 0.0) || !(robot.width > 0.0) || !(robot.height > 0.0)) {
    add(out, which + "_dims_nonpositive", which + ": body dimensions must be positive");
  }
  if (!(robot.density > 0.0)) {
    add(out, which + "_density_nonpositive", which + ": density must be positive");
  }
  if (!(robot.friction_coeff >= 0.0 && robot.friction_coeff <= 1.0)) {
    add(out, which + "_friction_coeff_range", which + ": friction_coeff must lie in [0, 1]");
  }
  if (!(robot.cross_section_area > 0.0)) {
    add(out, which + "_cross_section_nonpositive",
        which + ": cross_section_area must be positive");
  }
  if (!(robot.hydraulic_diameter > 0.0)) {
    add(out, which + "_hydraulic_diameter_nonpositive",
        which + ": hydraulic_diameter must be positive");
  }
  const Vec3 half = robot.half_extents();
  for (std::size_t i = 0; i < robot.magnets.size(); ++i) {
    const CylMagnet& m = robot.magnets[i];
    const std::string tag = which + " magnet " + std::to_string(i);
    if (!finite3(m.center) || !finite3(m.axis) || !std::isfinite(m.magnetization)) {
      add(out, which + "_magnet_nonfinite", tag + ": non-finite field");
      continue;
    }
    if (std::abs(m.axis.norm() - 1.0) > kGeomTol) {
      add(out, which + "_magnet_axis_not_unit", tag + ": axis must be a unit vector");
      continue;
    }
    if (!(m.radius > 0.0) || !(m.height > 0.0)) {
      add(out, which + "_magnet_dims_nonpositive", tag + ": radius and height must be positive");
      continue;
    }
    for (int k = 0; k < 3; ++k) {
      Vec3 e = Vec3::Zero();
      e[k] = 1.0;
      if (std::abs(m.center[k]) + cylinder_support(m, e) > half[k] + kGeomTol) {
        add(out, "magnet_outside_body", tag + ": magnet outside body envelope");
        break;
      }
    }
  }
}

}  // namespace

std::size_t SweepSpec::sample_count() const {
  const double span = end - start;
  if (span == 0.0) {
    return 1;
  }
  return static_cast<std::size_t>(std::llround(span / step)) + 1;
}

std::vector<Violation> validate_scene(const Scene& scene) {
  std::vector<Violation> out;
  if (!(scene.z_gap > 0.0)) {
    add(out, "z_gap_nonpositive", "z_gap must be positive");
  }
  if (!(scene.x_offset >= 0.0)) {
    add(out, "x_offset_negative", "x_offset must be non-negative");
  }
  if (!(scene.f_adhesive >= 0.0)) {
    add(out, "f_adhesive_negative", "f_adhesive must be non-negative");
  }
  if (!(scene.f_electrostatic >= 0.0)) {
    add(out, "f_electrostatic_negative", "f_electrostatic must be non-negative");
  }
  if (!(scene.shear_gap > 0.0)) {
    add(out, "shear_gap_nonpositive", "shear_gap must be positive");
  }
  if (!(scene.fluid.density > 0.0)) {
    add(out, "fluid_density_nonpositive", "fluid density must be positive");
  }
  if (!(scene.fluid.dynamic_viscosity > 0.0)) {
    add(out, "fluid_viscosity_nonpositive", "fluid viscosity must be positive");
  }
  if (!(scene.constants.g > 0.0)) {
    add(out, "gravity_nonpositive", "g must be positive");
  }
  if (!(std::abs(scene.diamagnetic_susceptibility) < 1.0)) {
    add(out, "susceptibility_range", "|susceptibility| must be below 1");
  }
  validate_robot(scene.base_robot, "base_robot", out);
  validate_robot(scene.wounding_robot, "wounding_robot", out);
  return out;
}

std::vector<Violation> validate_sweep_spec(const SweepSpec& spec) {
  std::vector<Violation> out;
  if (!(spec.step > 0.0)) {
    add(out, "sweep_step_nonpositive", "sweep step must be positive");
    return out;
  }
  if (!(spec.start <= spec.end)) {
    add(out, "sweep_range_inverted", "sweep start must not exceed end");
    return out;
  }
  const double span = spec.end - spec.start;
  const double n = span / spec.step;
  if (std::abs(n - std::llround(n)) > 1e-9 * std::max(1.0, n)) {
    add(out, "sweep_step_misaligned", "(end - start) must be an integer number of steps");
  }
  return out;
}

std::vector<Violation> validate_friction_spec(const FrictionRunSpec& spec) {
  std::vector<Violation> out;
  if (!(spec.duration > 0.0)) {
    add(out, "friction_duration_nonpositive", "friction duration must be positive");
  }
  if (!(spec.dt > 0.0 && spec.dt <= spec.duration)) {
    add(out, "friction_dt_range", "friction dt must lie in (0, duration]");
  }
  if (!(spec.speed >= 0.0)) {
    add(out, "friction_speed_negative", "friction speed must be non-negative");
  }
  return out;
}

Scene scene_with_offset(const Scene& scene, double x_offset) {
  Scene s = scene;
  s.x_offset = x_offset;
  return s;
}

Scene scene_with_gap(const Scene& scene, double z_gap) {
  Scene s = scene;
  s.z_gap = z_gap;
  return s;
}

std::vector<CylMagnet> magnets_world(const RobotBody& robot, const Vec3& body_center) {
  std::vector<CylMagnet> out = robot.magnets;
  for (CylMagnet& m : out) {
    m.center += body_center;
  }
  return out;
}

std::vector<CylMagnet> base_magnets_world(const Scene& scene) {
  return magnets_world(scene.base_robot, scene.base_center());
}

std::vector<CylMagnet> wounding_magnets_world(const Scene& scene) {
  return magnets_world(scene.wounding_robot, scene.wounding_center());
}

namespace {

void hash_double(std::uint64_t& h, double v) {
  std::uint64_t bits;
  static_assert(sizeof(bits) == sizeof(v));
  std::memcpy(&bits, &v, sizeof(bits));
  for (int i = 0; i < 8; ++i) {
    h ^= (bits >> (8 * i)) & 0xffu;
    h *= 0x100000001b3ull;
  }
}

void hash_robot(std::uint64_t& h, const RobotBody& r) {
  for (double v : {r.length, r.width, r.height, r.density, r.friction_coeff,
                   r.cross_section_area, r.hydraulic_diameter}) {
    hash_double(h, v);
  }
  for (const CylMagnet& m : r.magnets) {
    for (double v : {m.center.x(), m.center.y(), m.center.z(), m.axis.x(), m.axis.y(),
                     m.axis.z(), m.radius, m.height, m.magnetization, m.density}) {
      hash_double(h, v);
    }
  }
}

}  // namespace

std::uint64_t scene_hash(const Scene& scene) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  hash_robot(h, scene.base_robot);
  hash_robot(h, scene.wounding_robot);
  for (double v : {scene.z_gap, scene.x_offset, scene.fluid.density,
                   scene.fluid.dynamic_viscosity, scene.constants.g, scene.f_adhesive,
                   scene.f_electrostatic, scene.shear_gap, scene.diamagnetic_susceptibility}) {
    hash_double(h, v);
  }
  hash_double(h, scene.z_balance == ZBalance::Physical ? 0.0 : 1.0);
  hash_double(h, scene.diamagnetic_enabled ? 1.0 : 0.0);
  return h;
}

std::vector<CylMagnet> inline_magnet_array(int count, double pitch, double radius, double height,
                                           double magnetization) {
  std::vector<CylMagnet> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  const double y0 = -0.5 * (count - 1) * pitch;
  for (int i = 0; i < count; ++i) {
    CylMagnet m;
    m.center = Vec3(0.0, y0 + i * pitch, 0.0);
    m.axis = Vec3::UnitZ();
    m.radius = radius;
    m.height = height;
    m.magnetization = magnetization;
    out.push_back(m);
  }
  return out;
}

Scene default_scene() {
  Scene scene;
  RobotBody robot;
  robot.magnets = inline_magnet_array(3, 7.5e-4, 1.25e-4, 2.5e-4, 1.2 / PhysConstants::mu0);
  scene.base_robot = robot;
  scene.wounding_robot = robot;
  return scene;
}

}  // namespace magbot
