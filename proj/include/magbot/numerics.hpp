#pragma once

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "magbot/core.hpp"

namespace magbot {

/// Raised when a computation produced or consumed a non-finite value.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by find_root when f(lo) and f(hi) have the same sign.
struct NoBracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Complete elliptic integrals of the first and second kind, parameter
/// convention m = k^2, computed by the arithmetic-geometric mean.
/// Relative error below 1e-10 on [0, 1). Throws std::domain_error outside.
struct EllipticKE {
  double K;
  double E;
};
EllipticKE elliptic_ke(double m);

/// Bulirsch's generalized complete elliptic integral
///   cel(kc, p, c, s) = int_0^{pi/2} (c cos^2 + s sin^2) dphi /
///                      ((cos^2 + p sin^2) sqrt(cos^2 + kc^2 sin^2))
/// Used by the cylindrical-magnet field kernel. Requires kc != 0.
double cel(double kc, double p, double c, double s);

/// Gauss-Legendre rule on [-1, 1], exact for polynomials of
/// degree <= 2*order - 1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;
};
QuadratureRule gauss_legendre(int order);

/// Central-difference gradient of a scalar field, O(h^2).
/// Throws NumericalError if any stencil evaluation is non-finite.
Vec3 grad_central(const std::function<double(const Vec3&)>& f, const Vec3& p, double h);

/// Root of f on [lo, hi] by bisection with inverse-quadratic/secant
/// acceleration (Brent). The final bracket width is at most tol.
/// Throws NoBracketError when f(lo) * f(hi) > 0.
double find_root(const std::function<double(double)>& f, double lo, double hi, double tol);

}  // namespace magbot
