#include "magbot/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace magbot {

EllipticKE elliptic_ke(double m) {
  if (!(m >= 0.0) || m >= 1.0) {
    throw std::domain_error("elliptic_ke: parameter m must lie in [0, 1)");
  }
  constexpr double pi = std::numbers::pi;
  // AGM with the c-sum for E (Abramowitz & Stegun 17.6):
  //   K = pi / (2 * agm(1, sqrt(1-m))),  E = K * (1 - sum 2^(n-1) c_n^2),
  // c_0 = sqrt(m). The iteration converges quadratically.
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  double c = std::sqrt(m);
  double sum = 0.5 * c * c;
  double pow2 = 0.5;
  for (int i = 0; i < 64 && c > a * 1e-17; ++i) {
    const double an = 0.5 * (a + b);
    const double cn = 0.5 * (a - b);
    b = std::sqrt(a * b);
    a = an;
    c = cn;
    pow2 *= 2.0;
    sum += pow2 * c * c;
  }
  const double K = pi / (2.0 * a);
  return {K, K * (1.0 - sum)};
}

double cel(double kc, double p, double c, double s) {
  // Bulirsch's algorithm; quadratic convergence, ~1e-16 at this ca.
  constexpr double ca = 1e-8;
  constexpr double pi_half = std::numbers::pi / 2.0;
  if (kc == 0.0) {
    throw std::domain_error("cel: kc must be nonzero");
  }
  if (p == 0.0) {
    // (cos^2 + p sin^2) degenerates to cos^2; the integral converges only
    // when the sin^2 numerator term vanishes, and then reduces to c * K'.
    if (s != 0.0) {
      throw std::domain_error("cel: divergent for p = 0 with s != 0");
    }
    return c * cel(kc, 1.0, 1.0, 1.0);
  }
  double k = std::abs(kc);
  double pp = p;
  double cc = c;
  double ss = s;
  double em = 1.0;
  if (pp > 0.0) {
    pp = std::sqrt(pp);
    ss = ss / pp;
  } else {
    double f = kc * kc;
    double q = 1.0 - f;
    double g = 1.0 - pp;
    f = f - pp;
    q = q * (ss - cc * pp);
    pp = std::sqrt(f / g);
    cc = (cc - ss) / g;
    ss = -q / (g * g * pp) + cc * pp;
  }
  double f = cc;
  cc = cc + ss / pp;
  double g = k / pp;
  ss = 2.0 * (ss + f * g);
  pp = g + pp;
  g = em;
  em = k + em;
  double kk = k;
  while (std::abs(g - k) > g * ca) {
    k = 2.0 * std::sqrt(kk);
    kk = k * em;
    f = cc;
    cc = cc + ss / pp;
    g = kk / pp;
    ss = 2.0 * (ss + f * g);
    pp = g + pp;
    g = em;
    em = k + em;
  }
  return pi_half * (ss + cc * em) / (em * (em + pp));
}

QuadratureRule gauss_legendre(int order) {
  if (order < 1) {
    throw std::domain_error("gauss_legendre: order must be >= 1");
  }
  const int n = order;
  QuadratureRule rule;
  rule.order = n;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  constexpr double pi = std::numbers::pi;
  // Newton on P_n with the Chebyshev initial guess; roots come in +/-
  // pairs, so solve half and mirror for exact symmetry.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        break;
      }
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // cos() above starts from the +1 end, so x descends with i.
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
    rule.nodes[i] = -x;
    rule.weights[i] = w;
  }
  if (n % 2 == 1) {
    rule.nodes[n / 2] = 0.0;
  }
  return rule;
}

Vec3 grad_central(const std::function<double(const Vec3&)>& f, const Vec3& p, double h) {
  if (!(h > 0.0)) {
    throw std::domain_error("grad_central: step must be positive");
  }
  Vec3 g;
  for (int i = 0; i < 3; ++i) {
    Vec3 hi = Vec3::Zero();
    hi[i] = h;
    const double fp = f(p + hi);
    const double fm = f(p - hi);
    if (!std::isfinite(fp) || !std::isfinite(fm)) {
      throw NumericalError("grad_central: non-finite field evaluation in the stencil");
    }
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

double find_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
  if (!(tol > 0.0)) {
    throw std::domain_error("find_root: tol must be positive");
  }
  double a = lo;
  double b = hi;
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) {
    return a;
  }
  if (fb == 0.0) {
    return b;
  }
  if (fa * fb > 0.0) {
    throw NoBracketError("find_root: f(lo) and f(hi) have the same sign");
  }
  // Brent: inverse quadratic / secant steps, bisection as the safeguard.
  if (std::abs(fa) < std::abs(fb)) {
    std::swap(a, b);
    std::swap(fa, fb);
  }
  double c = a;
  double fc = fa;
  double d = b - a;
  bool mflag = true;
  while (fb != 0.0 && std::abs(b - a) > tol) {
    double s;
    if (fa != fc && fb != fc) {
      s = a * fb * fc / ((fa - fb) * (fa - fc)) + b * fa * fc / ((fb - fa) * (fb - fc)) +
          c * fa * fb / ((fc - fa) * (fc - fb));
    } else {
      s = b - fb * (b - a) / (fb - fa);
    }
    const double m = 0.5 * (a + b);
    const bool outside = (s < std::min(m, b) || s > std::max(m, b));
    if (outside || (mflag && std::abs(s - b) >= 0.5 * std::abs(b - c)) ||
        (!mflag && std::abs(s - b) >= 0.5 * std::abs(d)) || (mflag && std::abs(b - c) < tol) ||
        (!mflag && std::abs(d) < tol)) {
      s = m;
      mflag = true;
    } else {
      mflag = false;
    }
    const double fs = f(s);
    d = c - b;
    c = b;
    fc = fb;
    if (fa * fs < 0.0) {
      b = s;
      fb = fs;
    } else {
      a = s;
      fa = fs;
    }
    if (std::abs(fa) < std::abs(fb)) {
      std::swap(a, b);
      std::swap(fa, fb);
    }
  }
  return b;
}

}  // namespace magbot
