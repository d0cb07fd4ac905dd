#include "fdlab/model.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>

#include "fdlab/detail/singular.hpp"
#include "fdlab/quadrature.hpp"

namespace fdlab {

using std::numbers::pi;

double ModelParams::gamma() const {
  const double p = 1.0 + 2.0 * s;
  return p * std::sin(pi / p) / (2.0 * pi);
}

double kappa_s_closed_form(double s) {
  return std::sqrt(pi) /
         (std::pow(4.0, s) * boost::math::tgamma(0.5 + s) *
          boost::math::tgamma(1.0 + s));
}

// (-Delta)^s of W(x) = x_+^s (1-x)_+^s at an interior point, for the zero
// extension of W. The symmetric window around x removes the principal value;
// the outer pieces and the exterior tails are ordinary singular integrals.
static double frac_lap_torsion_profile(double s, double x) {
  const double p = 1.0 + 2.0 * s;
  auto w = [s](double y) {
    if (y <= 0.0 || y >= 1.0) return 0.0;
    return std::pow(y, s) * std::pow(1.0 - y, s);
  };
  const double wx = w(x);
  const double window = 0.5 * std::min(x, 1.0 - x);

  double value = detail::folded_pv_window(w, x, window, p);

  auto outer = [&](double y) { return (wx - w(y)) / std::pow(std::abs(x - y), p); };
  value += quad::finite(outer, 0.0, x - window, 1e-12);
  value += quad::finite(outer, x + window, 1.0, 1e-12);

  // exterior tails: W vanishes outside (0,1)
  value += wx * (std::pow(x, -2.0 * s) + std::pow(1.0 - x, -2.0 * s)) / (2.0 * s);

  const double c1s = std::pow(4.0, s) * boost::math::tgamma(0.5 + s) *
                     std::sin(pi * s) * boost::math::tgamma(1.0 + s) /
                     (std::sqrt(pi) * pi);
  return c1s * value;
}

ConstantSet build_constants(const ModelParams& params) {
  params.validate();
  ConstantSet cs;
  cs.s = params.s;
  cs.nu0 = params.nu0;
  const double s = params.s;
  const double p = 1.0 + 2.0 * s;

  cs.gamma = params.gamma();
  cs.gamma0 = cs.gamma * std::pow(params.nu0, 1.0 - 2.0 * s) *
              boost::math::tgamma(2.0 * s);
  cs.gamma1 = cs.gamma * std::pow(params.nu0, 1.0 - 2.0 * s) *
              boost::math::tgamma(2.0 * s + 1.0);

  // int_{w>0} F(w) w dw = gamma (pi/p) / sin(2 pi / p), finite for s > 1/2
  cs.c0 = p * std::sin(2.0 * pi / p) / (cs.gamma * pi);

  // |Gamma(-s)| = pi / (sin(pi s) Gamma(1+s)) by reflection
  cs.c1s = std::pow(4.0, s) * boost::math::tgamma(0.5 + s) * std::sin(pi * s) *
           boost::math::tgamma(1.0 + s) / (std::sqrt(pi) * pi);

  cs.kappa = cs.gamma1 / cs.c1s;

  cs.kappa_s = 1.0 / frac_lap_torsion_profile(s, 0.5);
  return cs;
}

}  // namespace fdlab
