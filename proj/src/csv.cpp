#include "magbot/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace magbot {

namespace {

constexpr const char* kCurveHeader = "offset_m,fx_N,fy_N,fz_N";
constexpr const char* kTraceHeader = "t_s,friction_N,drag_N,normal_N";

std::string sci9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.8e", v);
  return buf;
}

void write_text(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << text;
  out.flush();
  if (!out) {
    throw IoError("write failed for '" + path + "'");
  }
}

double parse_field(const std::string& s, const std::string& path_hint) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw IoError(path_hint + ": malformed numeric field '" + s + "'");
  }
  return v;
}

}  // namespace

std::string force_curve_csv(const ForceCurve& curve) {
  std::string out = kCurveHeader;
  out += '\n';
  for (const ForceCurveSample& s : curve.samples) {
    out += sci9(s.offset);
    out += ',';
    out += sci9(s.force.x());
    out += ',';
    out += sci9(s.force.y());
    out += ',';
    out += sci9(s.force.z());
    out += '\n';
  }
  return out;
}

void write_force_curve_csv(const ForceCurve& curve, const std::string& path) {
  write_text(force_curve_csv(curve), path);
}

std::string friction_trace_csv(const FrictionTrace& trace) {
  std::string out = kTraceHeader;
  out += '\n';
  for (const FrictionTraceSample& s : trace.samples) {
    out += sci9(s.t);
    out += ',';
    out += sci9(s.friction);
    out += ',';
    out += sci9(s.drag);
    out += ',';
    out += sci9(s.normal);
    out += '\n';
  }
  return out;
}

void write_friction_trace_csv(const FrictionTrace& trace, const std::string& path) {
  write_text(friction_trace_csv(trace), path);
}

ForceCurve read_force_curve_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCurveHeader) {
    throw IoError("force-curve CSV: missing or wrong header");
  }
  ForceCurve curve;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    std::istringstream row(line);
    std::string field;
    double vals[4];
    for (int i = 0; i < 4; ++i) {
      if (!std::getline(row, field, ',')) {
        throw IoError("force-curve CSV: expected 4 fields per row");
      }
      vals[i] = parse_field(field, "force-curve CSV");
    }
    curve.samples.push_back({vals[0], Vec3(vals[1], vals[2], vals[3])});
  }
  return curve;
}

}  // namespace magbot
