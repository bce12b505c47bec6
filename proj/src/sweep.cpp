#include "magbot/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "magbot/magnetostatics.hpp"
#include "magbot/numerics.hpp"

namespace magbot {

namespace {

std::string iso_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

[[noreturn]] void rethrow_at_offset(const std::exception_ptr& ep, double offset) {
  const std::string where = "sweep offset " + std::to_string(offset) + " m: ";
  try {
    std::rethrow_exception(ep);
  } catch (const OverlapError& e) {
    throw OverlapError(where + e.what());
  } catch (const SingularityError& e) {
    throw SingularityError(where + e.what());
  } catch (const NumericalError& e) {
    throw NumericalError(where + e.what());
  } catch (const std::exception& e) {
    throw NumericalError(where + e.what());
  }
}

}  // namespace

ForceCurve run_em_sweep(const Scene& scene, const SweepSpec& spec, int quad_order,
                        unsigned threads, SweepAxis axis) {
  if (!validate_sweep_spec(spec).empty()) {
    throw std::domain_error("run_em_sweep: invalid sweep spec");
  }
  const std::size_t n = spec.sample_count();
  std::vector<Vec3> forces(n);
  std::vector<double> offsets(n);
  for (std::size_t i = 0; i < n; ++i) {
    offsets[i] = spec.start + static_cast<double>(i) * spec.step;
  }

  unsigned nthreads = threads == 0 ? std::thread::hardware_concurrency() : threads;
  nthreads = std::max(1u, std::min<unsigned>(nthreads, static_cast<unsigned>(n)));

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::size_t error_index = n;
  std::exception_ptr error;

  const auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      try {
        const Scene at = axis == SweepAxis::X ? scene_with_offset(scene, offsets[i])
                                              : scene_with_gap(scene, offsets[i]);
        forces[i] = force_between_robots(at, quad_order);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  };

  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) {
      pool.emplace_back(worker);
    }
    for (std::thread& t : pool) {
      t.join();
    }
  }
  if (error) {
    rethrow_at_offset(error, offsets[error_index]);
  }

  ForceCurve curve;
  curve.samples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    curve.samples.push_back({offsets[i], forces[i]});
  }
  curve.scene_hash = scene_hash(scene);
  curve.created_at = iso_now();
  return curve;
}

namespace {

AxisStats stats_for_axis(const ForceCurve& curve, int axis) {
  AxisStats st{};
  const auto& s = curve.samples;
  st.max_value = s.front().force[axis];
  st.max_offset = s.front().offset;
  st.min_value = s.front().force[axis];
  st.min_offset = s.front().offset;
  st.peak_abs_value = std::abs(s.front().force[axis]);
  st.peak_abs_offset = s.front().offset;
  for (const ForceCurveSample& sample : s) {
    const double v = sample.force[axis];
    if (v > st.max_value) {
      st.max_value = v;
      st.max_offset = sample.offset;
    }
    if (v < st.min_value) {
      st.min_value = v;
      st.min_offset = sample.offset;
    }
    if (std::abs(v) > st.peak_abs_value) {
      st.peak_abs_value = std::abs(v);
      st.peak_abs_offset = sample.offset;
    }
  }
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const double a = s[i].force[axis];
    const double b = s[i + 1].force[axis];
    if (a * b < 0.0) {
      const double frac = a / (a - b);
      st.zero_crossings.push_back(s[i].offset + frac * (s[i + 1].offset - s[i].offset));
    }
  }
  st.monotone_segments = 0;
  int current = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const double d = s[i + 1].force[axis] - s[i].force[axis];
    const int sign = d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
    if (sign == 0) {
      continue;
    }
    if (current == 0 || sign != current) {
      ++st.monotone_segments;
      current = sign;
    }
  }
  if (st.monotone_segments == 0 && s.size() > 1) {
    st.monotone_segments = 1;  // constant curve: one flat run
  }
  return st;
}

}  // namespace

CurveStats curve_stats(const ForceCurve& curve) {
  if (curve.samples.empty()) {
    throw std::domain_error("curve_stats: empty curve");
  }
  return {stats_for_axis(curve, 0), stats_for_axis(curve, 1), stats_for_axis(curve, 2)};
}

double locate_peak_offset(const Scene& scene, double lo, double hi, int quad_order, double tol) {
  // Golden-section maximization of |F_x(offset)|; the lateral force of the
  // coupled pair is unimodal on the sweep range.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  const auto fx = [&](double offset) {
    return std::abs(force_between_robots(scene_with_offset(scene, offset), quad_order).x());
  };
  double fc = fx(c);
  double fd = fx(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = fx(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = fx(d);
    }
  }
  return 0.5 * (a + b);
}

double calibrate_z_gap(const Scene& scene, const SweepSpec& spec, double target_peak_offset,
                       double gap_lo, double gap_hi, int quad_order, double tol) {
  const auto peak_error = [&](double gap) {
    const Scene at = scene_with_gap(scene, gap);
    return locate_peak_offset(at, spec.start, spec.end, quad_order) - target_peak_offset;
  };
  return find_root(peak_error, gap_lo, gap_hi, tol);
}

}  // namespace magbot
