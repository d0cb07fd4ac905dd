// Test-only oracles: brute-force quadratures kept independent of the
// implementation paths they are used to check.
#pragma once

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <functional>
#include <vector>

namespace oracles {

// Adaptive Gauss-Kronrod on a finite interval.
inline double gk(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b,
                                                                       15, tol);
}

// int_a^inf f for f ~ C v^{-q} (q > 1): the substitution v = a u^{-1/(q-1)}
// maps the tail to (0,1] with an integrand tending to a constant at u = 0.
// The sliver below u_min is added via that constant (relative error
// O(v(u_min)^{-small}), far below the quadrature tolerance).
inline double tail_integral(const std::function<double(double)>& f, double a,
                            double q, double tol = 1e-12) {
  const double m = 1.0 / (q - 1.0);
  auto g = [&](double u) {
    const double v = a * std::pow(u, -m);
    return f(v) * a * m * std::pow(u, -m - 1.0);
  };
  const double u_min = 1e-9;
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate(g, u_min, 1.0, tol) + g(u_min) * u_min;
}

// Independent evaluation of the kernels F_i by a split Gauss-Kronrod route
// (the implementation uses exp-sinh on the half line).
inline double kernel_direct(int index, double s, double nu0, double z) {
  const double p = 1.0 + 2.0 * s;
  const double pi = 3.14159265358979323846;
  const double gamma = p * std::sin(pi / p) / (2.0 * pi);
  const double az = std::abs(z);
  auto integrand = [&](double tau) {
    const double F = gamma / (1.0 + std::pow(az / tau, p));
    return std::pow(nu0, 1.0 + index) * std::exp(-nu0 * tau) *
           std::pow(tau, index - 2.0) * F;
  };
  // resolve the tau^{2s+i-1} endpoint with the substitution tau = sigma^2,
  // and integrate the remaining sharply-peaked piece on a log scale
  auto near0 = [&](double sigma) {
    return integrand(sigma * sigma) * 2.0 * sigma;
  };
  const double t_split = std::min(az, 1.0);
  const double t_end = 60.0 / nu0;
  double value = gk(near0, 0.0, std::sqrt(t_split), 1e-13);
  if (t_split < t_end) {
    auto logspace = [&](double y) {
      const double tau = t_split * std::exp(y);
      return integrand(tau) * tau;
    };
    value += gk(logspace, 0.0, std::log(t_end / t_split), 1e-13);
  }
  return value;
}

// One-sided chi-squared critical value.
inline double chi2_critical(int dof, double significance) {
  boost::math::chi_squared dist(dof);
  return boost::math::quantile(dist, 1.0 - significance);
}

struct FitResult {
  double slope = 0;
  double intercept = 0;
  double r2 = 0;
};

inline FitResult fit_loglog(const std::vector<double>& x,
                            const std::vector<double>& y) {
  FitResult r;
  const size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    syy += ly * ly;
  }
  const double det = n * sxx - sx * sx;
  r.slope = (n * sxy - sx * sy) / det;
  r.intercept = (sy - r.slope * sx) / n;
  const double ss_tot = syy - sy * sy / n;
  double ss_res = 0;
  for (size_t i = 0; i < n; ++i) {
    const double pred = r.slope * std::log(x[i]) + r.intercept;
    const double e = std::log(y[i]) - pred;
    ss_res += e * e;
  }
  r.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return r;
}

}  // namespace oracles
