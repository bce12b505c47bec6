#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "magbot/core.hpp"

namespace magbot {

/// Syntax error in a config document.
struct ParseError : std::runtime_error {
  ParseError(int line_, int col_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                           ": " + what_),
        line(line_),
        col(col_) {}
  int line;
  int col;
};

/// Semantic errors; carries every violation found, not just the first.
struct ValidationError : std::runtime_error {
  explicit ValidationError(std::vector<Violation> violations_);
  std::vector<Violation> violations;
};

/// Flat, sectioned key-value run configuration. Every field has the
/// documented default; an empty document is the default run.
struct RunConfig {
  // [scene]
  double body_length = 2e-3;
  double body_width = 2.5e-4;
  double body_height = 4e-4;
  double friction_coeff = 0.05;
  double cross_section_area = -1.0;   // <0: width * height
  double hydraulic_diameter = -1.0;   // <0: body height
  double z_gap = 5e-4;
  double x_offset = 0.0;
  double f_adhesive = 0.0;
  double f_electrostatic = 0.0;
  double shear_gap = 1.8939393939393939e-3;
  ZBalance z_balance = ZBalance::Physical;
  bool diamagnetic = false;
  double susceptibility = -2e-5;
  // [magnets]
  int magnet_count = 3;
  double magnet_pitch = 7.5e-4;
  double magnet_radius = 1.25e-4;
  double magnet_height = 2.5e-4;
  // [fluid]
  double fluid_density = 1000.0;
  double fluid_viscosity = 1e-3;
  // [sweep]
  SweepSpec sweep;
  SweepAxis sweep_axis = SweepAxis::X;
  std::string sweep_out;
  // [friction]
  FrictionRunSpec friction;
  std::string friction_out;
  // [calibration]
  double remanence = 1.2;        // T
  double body_density = 1190.0;  // kg/m^3
  double magnet_density = 7500.0;
  std::optional<double> cal_shear_gap;  // overrides [scene] shear_gap
  std::optional<double> cal_z_gap;      // overrides [scene] z_gap

  /// Physics scene assembled from the flat parameters.
  Scene scene() const;
};

/// Parses a config document. Omitted keys keep their defaults. Throws
/// ParseError on syntax, ValidationError with the full violation list on
/// unknown keys or invariant breaks.
RunConfig parse_config(const std::string& text);

/// Reads and parses a config file; empty path gives the default config.
RunConfig load_config_file(const std::string& path);

/// Serializes a config so that parse_config(write_config(c)) reproduces
/// every numeric field exactly.
std::string write_config(const RunConfig& config);

}  // namespace magbot
