#pragma once

#include <cmath>
#include <functional>

#include "fdlab/quadrature.hpp"

namespace fdlab::detail {

/// Folded principal-value window around a kernel singularity:
///   int_0^W (2u(x) - u(x+t) - u(x-t)) / t^{1+2s} dt.
///
/// Folding removes the odd part exactly; the remaining integrand behaves
/// like -u''(x) t^{1-2s}. Raw evaluation suffers catastrophic cancellation
/// for tiny t, so the sliver [0, delta] is replaced by its Taylor value,
/// with u'' and u'''' estimated by finite differences. Requires u to be C^2
/// on [x-W, x+W] (C^4 for full accuracy of the sliver term).
inline double folded_pv_window(const std::function<double(double)>& u,
                               double x, double window, double p) {
  const double ux = u(x);
  const double h = window / 8.0;
  const double up1 = u(x + h), um1 = u(x - h);
  const double up2 = u(x + 2 * h), um2 = u(x - 2 * h);
  const double d2 = (-up2 + 16 * up1 - 30 * ux + 16 * um1 - um2) / (12 * h * h);
  const double d4 = (up2 - 4 * up1 + 6 * ux - 4 * um1 + um2) / (h * h * h * h);

  const double delta = 1e-3 * window;
  double value = -d2 * std::pow(delta, 3.0 - p) / (3.0 - p) -
                 d4 * std::pow(delta, 5.0 - p) / (12.0 * (5.0 - p));
  value += quad::finite(
      [&](double t) { return (2.0 * ux - u(x + t) - u(x - t)) / std::pow(t, p); },
      delta, window, 1e-10);
  return value;
}

}  // namespace fdlab::detail
