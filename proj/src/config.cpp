#include "magbot/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "magbot/csv.hpp"

namespace magbot {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) {
    return {};
  }
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value, int line, int col) {
  double out = 0.0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, col, "expected a number, got '" + value + "'");
  }
  return out;
}

int parse_int(const std::string& value, int line, int col) {
  int out = 0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, col, "expected an integer, got '" + value + "'");
  }
  return out;
}

bool parse_bool(const std::string& value, int line, int col) {
  if (value == "true") {
    return true;
  }
  if (value == "false") {
    return false;
  }
  throw ParseError(line, col, "expected true or false, got '" + value + "'");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations_)
    : std::runtime_error([&] {
        std::string msg = "configuration invalid:";
        for (const Violation& v : violations_) {
          msg += "\n  [" + v.code + "] " + v.message;
        }
        return msg;
      }()),
      violations(std::move(violations_)) {}

Scene RunConfig::scene() const {
  RobotBody robot;
  robot.length = body_length;
  robot.width = body_width;
  robot.height = body_height;
  robot.density = body_density;
  robot.friction_coeff = friction_coeff;
  robot.cross_section_area =
      cross_section_area > 0.0 ? cross_section_area : body_width * body_height;
  robot.hydraulic_diameter = hydraulic_diameter > 0.0 ? hydraulic_diameter : body_height;
  robot.magnets = inline_magnet_array(magnet_count, magnet_pitch, magnet_radius, magnet_height,
                                      remanence / PhysConstants::mu0);
  for (CylMagnet& m : robot.magnets) {
    m.density = magnet_density;
  }

  Scene scene;
  scene.base_robot = robot;
  scene.wounding_robot = robot;
  scene.z_gap = cal_z_gap.value_or(z_gap);
  scene.x_offset = x_offset;
  scene.fluid = {fluid_density, fluid_viscosity};
  scene.f_adhesive = f_adhesive;
  scene.f_electrostatic = f_electrostatic;
  scene.shear_gap = cal_shear_gap.value_or(shear_gap);
  scene.z_balance = z_balance;
  scene.diamagnetic_enabled = diamagnetic;
  scene.diamagnetic_susceptibility = susceptibility;
  return scene;
}

RunConfig parse_config(const std::string& text) {
  RunConfig config;
  std::vector<Violation> violations;

  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) {
      line = line.substr(0, comment);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw ParseError(line_no, 1, "malformed section header '" + raw + "'");
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section != "scene" && section != "magnets" && section != "fluid" &&
          section != "sweep" && section != "friction" && section != "calibration") {
        violations.push_back({"unknown_section", "line " + std::to_string(line_no) +
                                                     ": unknown section [" + section + "]"});
        section = "!skip";
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(line_no, 1, "expected 'key = value', got '" + raw + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const int vcol = static_cast<int>(raw.find(value.empty() ? "=" : value) + 1);
    if (key.empty()) {
      throw ParseError(line_no, 1, "missing key before '='");
    }
    if (value.empty()) {
      throw ParseError(line_no, vcol, "missing value for '" + key + "'");
    }
    if (section == "!skip") {
      continue;  // keys of an unknown section already reported once
    }
    if (section.empty()) {
      violations.push_back(
          {"key_outside_section", "line " + std::to_string(line_no) + ": '" + key +
                                      "' appears before any [section]"});
      continue;
    }

    const auto num = [&] { return parse_double(value, line_no, vcol); };
    bool known = true;
    if (section == "scene") {
      if (key == "body_length") {
        config.body_length = num();
      } else if (key == "body_width") {
        config.body_width = num();
      } else if (key == "body_height") {
        config.body_height = num();
      } else if (key == "friction_coeff") {
        config.friction_coeff = num();
      } else if (key == "cross_section_area") {
        config.cross_section_area = num();
      } else if (key == "hydraulic_diameter") {
        config.hydraulic_diameter = num();
      } else if (key == "z_gap") {
        config.z_gap = num();
      } else if (key == "x_offset") {
        config.x_offset = num();
      } else if (key == "f_adhesive") {
        config.f_adhesive = num();
      } else if (key == "f_electrostatic") {
        config.f_electrostatic = num();
      } else if (key == "shear_gap") {
        config.shear_gap = num();
      } else if (key == "z_balance") {
        if (value == "physical") {
          config.z_balance = ZBalance::Physical;
        } else if (value == "buoyancy_down") {
          config.z_balance = ZBalance::BuoyancyDown;
        } else {
          throw ParseError(line_no, vcol, "z_balance must be physical or buoyancy_down");
        }
      } else if (key == "diamagnetic") {
        config.diamagnetic = parse_bool(value, line_no, vcol);
      } else if (key == "susceptibility") {
        config.susceptibility = num();
      } else {
        known = false;
      }
    } else if (section == "magnets") {
      if (key == "count") {
        config.magnet_count = parse_int(value, line_no, vcol);
      } else if (key == "pitch") {
        config.magnet_pitch = num();
      } else if (key == "radius") {
        config.magnet_radius = num();
      } else if (key == "height") {
        config.magnet_height = num();
      } else {
        known = false;
      }
    } else if (section == "fluid") {
      if (key == "density") {
        config.fluid_density = num();
      } else if (key == "viscosity") {
        config.fluid_viscosity = num();
      } else {
        known = false;
      }
    } else if (section == "sweep") {
      if (key == "start") {
        config.sweep.start = num();
      } else if (key == "end") {
        config.sweep.end = num();
      } else if (key == "step") {
        config.sweep.step = num();
      } else if (key == "axis") {
        if (value == "x") {
          config.sweep_axis = SweepAxis::X;
        } else if (value == "z") {
          config.sweep_axis = SweepAxis::Z;
        } else {
          throw ParseError(line_no, vcol, "sweep axis must be x or z");
        }
      } else if (key == "out") {
        config.sweep_out = value;
      } else {
        known = false;
      }
    } else if (section == "friction") {
      if (key == "duration") {
        config.friction.duration = num();
      } else if (key == "dt") {
        config.friction.dt = num();
      } else if (key == "speed") {
        config.friction.speed = num();
      } else if (key == "out") {
        config.friction_out = value;
      } else {
        known = false;
      }
    } else if (section == "calibration") {
      if (key == "remanence") {
        config.remanence = num();
      } else if (key == "body_density") {
        config.body_density = num();
      } else if (key == "magnet_density") {
        config.magnet_density = num();
      } else if (key == "shear_gap") {
        config.cal_shear_gap = num();
      } else if (key == "z_gap") {
        config.cal_z_gap = num();
      } else {
        known = false;
      }
    }
    if (!known) {
      violations.push_back({"unknown_key", "line " + std::to_string(line_no) +
                                               ": unknown key '" + key + "' in [" + section +
                                               "]"});
    }
  }

  if (config.magnet_count < 0) {
    violations.push_back({"magnet_count_negative", "magnet count must be non-negative"});
  }
  if (config.magnet_count > 1 && !(config.magnet_pitch > 0.0)) {
    violations.push_back({"magnet_pitch_nonpositive", "magnet pitch must be positive"});
  }
  if (!(config.remanence > 0.0)) {
    violations.push_back({"remanence_nonpositive", "remanence must be positive"});
  }
  if (!(config.body_density > 0.0) || !(config.magnet_density > 0.0)) {
    violations.push_back({"density_nonpositive", "densities must be positive"});
  }

  for (const Violation& v : validate_scene(config.scene())) {
    violations.push_back(v);
  }
  for (const Violation& v : validate_sweep_spec(config.sweep)) {
    violations.push_back(v);
  }
  for (const Violation& v : validate_friction_spec(config.friction)) {
    violations.push_back(v);
  }
  if (!violations.empty()) {
    throw ValidationError(std::move(violations));
  }
  return config;
}

RunConfig load_config_file(const std::string& path) {
  if (path.empty()) {
    return parse_config("");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open config file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string write_config(const RunConfig& c) {
  std::ostringstream out;
  out << "[scene]\n";
  out << "body_length = " << format_double(c.body_length) << "\n";
  out << "body_width = " << format_double(c.body_width) << "\n";
  out << "body_height = " << format_double(c.body_height) << "\n";
  out << "friction_coeff = " << format_double(c.friction_coeff) << "\n";
  if (c.cross_section_area > 0.0) {
    out << "cross_section_area = " << format_double(c.cross_section_area) << "\n";
  }
  if (c.hydraulic_diameter > 0.0) {
    out << "hydraulic_diameter = " << format_double(c.hydraulic_diameter) << "\n";
  }
  out << "z_gap = " << format_double(c.z_gap) << "\n";
  out << "x_offset = " << format_double(c.x_offset) << "\n";
  out << "f_adhesive = " << format_double(c.f_adhesive) << "\n";
  out << "f_electrostatic = " << format_double(c.f_electrostatic) << "\n";
  out << "shear_gap = " << format_double(c.shear_gap) << "\n";
  out << "z_balance = " << (c.z_balance == ZBalance::Physical ? "physical" : "buoyancy_down")
      << "\n";
  out << "diamagnetic = " << (c.diamagnetic ? "true" : "false") << "\n";
  out << "susceptibility = " << format_double(c.susceptibility) << "\n";
  out << "\n[magnets]\n";
  out << "count = " << c.magnet_count << "\n";
  out << "pitch = " << format_double(c.magnet_pitch) << "\n";
  out << "radius = " << format_double(c.magnet_radius) << "\n";
  out << "height = " << format_double(c.magnet_height) << "\n";
  out << "\n[fluid]\n";
  out << "density = " << format_double(c.fluid_density) << "\n";
  out << "viscosity = " << format_double(c.fluid_viscosity) << "\n";
  out << "\n[sweep]\n";
  out << "start = " << format_double(c.sweep.start) << "\n";
  out << "end = " << format_double(c.sweep.end) << "\n";
  out << "step = " << format_double(c.sweep.step) << "\n";
  out << "axis = " << (c.sweep_axis == SweepAxis::X ? "x" : "z") << "\n";
  if (!c.sweep_out.empty()) {
    out << "out = " << c.sweep_out << "\n";
  }
  out << "\n[friction]\n";
  out << "duration = " << format_double(c.friction.duration) << "\n";
  out << "dt = " << format_double(c.friction.dt) << "\n";
  out << "speed = " << format_double(c.friction.speed) << "\n";
  if (!c.friction_out.empty()) {
    out << "out = " << c.friction_out << "\n";
  }
  out << "\n[calibration]\n";
  out << "remanence = " << format_double(c.remanence) << "\n";
  out << "body_density = " << format_double(c.body_density) << "\n";
  out << "magnet_density = " << format_double(c.magnet_density) << "\n";
  if (c.cal_shear_gap) {
    out << "shear_gap = " << format_double(*c.cal_shear_gap) << "\n";
  }
  if (c.cal_z_gap) {
    out << "z_gap = " << format_double(*c.cal_z_gap) << "\n";
  }
  return out.str();
}

}  // namespace magbot
