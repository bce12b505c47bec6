#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

namespace magbot {

using Vec3 = Eigen::Vector3d;

/// Physical constants. mu0 is a fixed constant of nature; g is configurable
/// (it enters the weight/buoyancy balance only).
struct PhysConstants {
  static constexpr double mu0 = 4.0 * std::numbers::pi * 1e-7;  // Wb/(A*m)
  double g = 9.81;                                               // m/s^2
};

/// Axially magnetized cylindrical permanent magnet.
/// `magnetization` is the signed magnitude of M along `axis` (A/m);
/// for a hard magnet M = Br / mu0.
struct CylMagnet {
  Vec3 center = Vec3::Zero();   // m, world or body frame depending on container
  Vec3 axis = Vec3::UnitZ();    // unit vector
  double radius = 1.25e-4;      // m
  double height = 2.5e-4;       // m
  double magnetization = 1.2 / PhysConstants::mu0;  // A/m
  double density = 7500.0;      // kg/m^3

  double volume() const { return std::numbers::pi * radius * radius * height; }
  /// Equivalent point-dipole moment, A*m^2.
  Vec3 moment() const { return magnetization * volume() * axis; }
};

/// Cuboid robot body carrying an array of magnets (magnet centers in the
/// body frame, body center at the origin). The long axis lies along y,
/// the width along x (the travel direction) and the height along z.
struct RobotBody {
  double length = 2e-3;    // m, y extent
  double width = 2.5e-4;   // m, x extent
  double height = 4e-4;    // m, z extent
  double density = 1190.0; // kg/m^3
  double friction_coeff = 0.05;
  double cross_section_area = 2.5e-4 * 4e-4;  // m^2, drag reference area
  double hydraulic_diameter = 4e-4;           // m, Reynolds length scale
  std::vector<CylMagnet> magnets;

  double body_volume() const { return length * width * height; }
  double bottom_area() const { return length * width; }
  Vec3 half_extents() const { return {width / 2, length / 2, height / 2}; }
};

struct Fluid {
  double density = 1000.0;           // kg/m^3
  double dynamic_viscosity = 1e-3;   // Pa*s
};

/// Axis-aligned cuboid of weakly magnetizable material, M = (chi/mu0) B.
struct DiamagneticBody {
  Vec3 center = Vec3::Zero();
  Vec3 half_extents = Vec3::Constant(5e-5);
  double susceptibility = -2e-5;  // chi, negative for diamagnets
};

/// Convention for solving the contact balance in z for the normal force.
/// Physical: buoyancy acts upward (reduces the contact load).
/// BuoyancyDown: buoyancy is grouped with the downward terms, matching the
/// common force-budget tabulation this model reproduces.
enum class ZBalance { Physical, BuoyancyDown };

/// Full two-robot configuration. The base robot sits at the origin; the
/// wounding robot is above it, z_gap between the two magnet planes, offset
/// by x_offset along +x. Robots translate only (no rotation DOF).
struct Scene {
  RobotBody base_robot;
  RobotBody wounding_robot;
  double z_gap = 5e-4;    // m, vertical separation of the magnet planes
  double x_offset = 0.0;  // m, lateral centerline distance (sweep variable)
  Fluid fluid;
  PhysConstants constants;
  double f_adhesive = 0.0;       // N, user constant
  double f_electrostatic = 0.0;  // N, user constant
  double shear_gap = 1.8939393939393939e-3;  // m, Couette film thickness
  ZBalance z_balance = ZBalance::Physical;
  bool diamagnetic_enabled = false;   // add the body's diamagnetic z-force
  double diamagnetic_susceptibility = -2e-5;

  Vec3 base_center() const { return Vec3::Zero(); }
  Vec3 wounding_center() const { return {x_offset, 0.0, z_gap}; }
};

/// Scene with the sweep variable replaced; everything else shared.
Scene scene_with_offset(const Scene& scene, double x_offset);
/// Scene with a different vertical gap (used by z-sweeps and calibration).
Scene scene_with_gap(const Scene& scene, double z_gap);

/// Magnets of a robot translated into the world frame.
std::vector<CylMagnet> magnets_world(const RobotBody& robot, const Vec3& body_center);
std::vector<CylMagnet> base_magnets_world(const Scene& scene);
std::vector<CylMagnet> wounding_magnets_world(const Scene& scene);

/// Named forces acting on the wounding robot at one configuration.
/// f_magnetic is the signed force exerted by the base array (lateral
/// component <= 0 for positive offsets, z component < 0 under attraction).
/// net_x = f_magnetic.x - f_friction - f_drag and
/// net_z = normal + f_magnetic.z + f_adhesive - f_gravity - f_electrostatic
///         - f_buoyancy, both stored with exactly that arithmetic.
struct ForceBreakdown {
  Vec3 f_magnetic = Vec3::Zero();
  Vec3 f_diamagnetic = Vec3::Zero();
  double f_gravity = 0.0;
  double f_buoyancy = 0.0;
  double f_drag = 0.0;
  double f_electrostatic = 0.0;
  double f_adhesive = 0.0;
  double normal = 0.0;       // >= 0, contact reaction
  double f_friction = 0.0;   // Coulomb channel, mu * normal
  double f_wall_shear = 0.0; // viscous channel, reported separately
  double net_x = 0.0;
  double net_z = 0.0;
  bool lift_off = false;     // unclamped normal force was negative
  bool slips = false;        // lateral magnetic pull exceeds friction + drag
};

/// Offset sweep grid. (end - start) must be an integer number of steps.
struct SweepSpec {
  double start = 0.0;   // m
  double end = 5e-4;    // m
  double step = 1e-5;   // m

  /// Number of samples, floor((end-start)/step) + 1.
  std::size_t sample_count() const;
};

enum class SweepAxis { X, Z };

/// Quasi-static drag run: constant speed along +x for `duration` seconds.
struct FrictionRunSpec {
  double duration = 1.0;  // s
  double dt = 0.01;       // s
  double speed = 5e-3;    // m/s
};

struct ForceCurveSample {
  double offset = 0.0;  // m
  Vec3 force = Vec3::Zero();  // N, on the wounding robot
};

/// Ordered (offset, force) samples produced by the sweep engine.
struct ForceCurve {
  std::vector<ForceCurveSample> samples;
  std::uint64_t scene_hash = 0;
  std::string created_at;  // ISO-8601, informational only (not serialized)
};

struct Violation {
  std::string code;
  std::string message;
};

/// Collects every invariant violation in the scene; never throws.
/// An empty result means the scene is valid.
std::vector<Violation> validate_scene(const Scene& scene);

std::vector<Violation> validate_sweep_spec(const SweepSpec& spec);
std::vector<Violation> validate_friction_spec(const FrictionRunSpec& spec);

/// FNV-1a over the scene's defining numbers; stable across runs.
std::uint64_t scene_hash(const Scene& scene);

/// Three equally spaced z-axis magnets along the body's long (y) axis,
/// centered in the body.
std::vector<CylMagnet> inline_magnet_array(int count, double pitch, double radius,
                                           double height, double magnetization);

/// Scene with the default robot pair (identical arrays, aligned
/// magnetization, water-like fluid).
Scene default_scene();

}  // namespace magbot
