#include "magbot/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <string>
#include <vector>

#include "magbot/config.hpp"
#include "magbot/csv.hpp"
#include "magbot/magnetostatics.hpp"
#include "magbot/numerics.hpp"
#include "magbot/statics.hpp"
#include "magbot/sweep.hpp"

namespace magbot {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.8e", v);
  return buf;
}

Vec3 parse_point(const std::string& text) {
  std::vector<double> vals;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string field =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
      throw IoError("--at expects x,y,z in meters, got '" + text + "'");
    }
    vals.push_back(v);
    if (comma == std::string::npos) {
      break;
    }
    pos = comma + 1;
  }
  if (vals.size() != 3) {
    throw IoError("--at expects exactly three comma-separated values");
  }
  return {vals[0], vals[1], vals[2]};
}

std::string resolve_out(const std::string& flag, const std::string& from_config,
                        const char* what) {
  if (!flag.empty()) {
    return flag;
  }
  if (!from_config.empty()) {
    return from_config;
  }
  throw IoError(std::string("no output path for ") + what +
                " (pass --out or set 'out' in the config)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semi-analytic magnetostatics and force balance for a magnetically "
               "coupled micro-robot pair"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string at_text;
  double required_force = 0.0;
  double speed_override = -1.0;
  unsigned threads = 0;

  CLI::App* field = app.add_subcommand("field", "Flux density of the scene's magnets at a point");
  field->add_option("--config", config_path, "Config file (defaults apply when omitted)");
  field->add_option("--at", at_text, "Probe point x,y,z in meters")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "Run the offset force sweep and write CSV");
  sweep->add_option("--config", config_path, "Config file");
  sweep->add_option("--out", out_path, "Output CSV path");
  sweep->add_option("--threads", threads, "Max worker threads for the sweep");

  CLI::App* friction = app.add_subcommand("friction", "Run the drag friction trace and write CSV");
  friction->add_option("--config", config_path, "Config file");
  friction->add_option("--out", out_path, "Output CSV path");

  CLI::App* plan = app.add_subcommand("plan", "Find the offset window for a required tow force");
  plan->add_option("--config", config_path, "Config file");
  plan->add_option("--required-force", required_force, "Required towing force, N")->required();
  plan->add_option("--speed", speed_override, "Travel speed for the margin, m/s");
  plan->add_option("--out", out_path, "Optional CSV path for the underlying sweep");
  plan->add_option("--threads", threads, "Max worker threads for the sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    const RunConfig config = load_config_file(config_path);
    const Scene scene = config.scene();

    if (field->parsed()) {
      const Vec3 p = parse_point(at_text);
      std::vector<CylMagnet> magnets = base_magnets_world(scene);
      const std::vector<CylMagnet> upper = wounding_magnets_world(scene);
      magnets.insert(magnets.end(), upper.begin(), upper.end());
      const Vec3 b = b_total(FieldSource{magnets, FieldModel::Exact}, p);
      out << "B = (" << sci(b.x()) << ", " << sci(b.y()) << ", " << sci(b.z()) << ") T\n";
      return kExitOk;
    }

    if (sweep->parsed()) {
      const std::string path = resolve_out(out_path, config.sweep_out, "sweep");
      const ForceCurve curve = run_em_sweep(scene, config.sweep, 8, threads, config.sweep_axis);
      write_force_curve_csv(curve, path);
      const CurvePeak peak = find_peak(curve, Axis::X);
      out << "wrote " << curve.samples.size() << " samples to " << path << "\n";
      out << "x-peak |Fx| = " << sci(peak.value) << " N at offset " << sci(peak.offset)
          << " m\n";
      return kExitOk;
    }

    if (friction->parsed()) {
      const std::string path = resolve_out(out_path, config.friction_out, "friction");
      const FrictionTrace trace = run_friction_trace(scene, config.friction);
      write_friction_trace_csv(trace, path);
      out << "wrote " << trace.samples.size() << " samples to " << path << "\n";
      out << "max viscous friction = " << sci(trace.max_static_friction) << " N\n";
      return kExitOk;
    }

    if (plan->parsed()) {
      const double speed = speed_override >= 0.0 ? speed_override : config.friction.speed;
      const ForceCurve curve = run_em_sweep(scene, config.sweep, 8, threads, config.sweep_axis);
      if (!out_path.empty()) {
        write_force_curve_csv(curve, out_path);
      }
      const OffsetPlan result = plan_offset(scene, curve, required_force, speed);
      out << "peak |Fx| = " << sci(result.peak_force_x) << " N at offset "
          << sci(result.peak_offset) << " m\n";
      out << "peak towing margin = " << sci(result.peak_margin) << " N\n";
      if (result.feasible_window) {
        out << "feasible window: [" << sci(result.feasible_window->lo) << ", "
            << sci(result.feasible_window->hi) << "] m\n";
      } else {
        out << "no feasible offset for required force " << sci(required_force) << " N\n";
      }
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ValidationError& e) {
    err << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace magbot
