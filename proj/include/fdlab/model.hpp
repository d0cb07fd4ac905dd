#pragma once

#include <stdexcept>
#include <string>

namespace fdlab {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ToleranceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Model parameters of the kinetic equation: tail exponent s and collision
/// frequency nu0. The equilibrium family is fixed to
///   F(v) = gamma / (1 + |v|^{1+2s}),
/// whose normalization constant gamma is determined by s alone.
struct ModelParams {
  double s = 0.75;
  double nu0 = 1.0;

  ModelParams() = default;
  ModelParams(double s_, double nu0_) : s(s_), nu0(nu0_) { validate(); }

  void validate() const {
    if (!(s > 0.5) || !(s < 1.0))
      throw ConfigError("s must lie in (1/2,1), got " + std::to_string(s));
    if (!(nu0 > 0.0))
      throw ConfigError("nu0 must be positive, got " + std::to_string(nu0));
  }

  /// Tail constant of F: gamma = (1+2s) sin(pi/(1+2s)) / (2 pi).
  double gamma() const;
};

/// Scalar constants derived from (s, nu0).
struct ConstantSet {
  double s = 0;
  double nu0 = 0;
  double gamma = 0;    // normalization of F
  double gamma0 = 0;   // tail constant of F0
  double gamma1 = 0;   // tail constant of F1
  double c0 = 0;       // boundary flux normalization
  double c1s = 0;      // fractional Laplacian constant (n = 1)
  double kappa = 0;    // macroscopic diffusivity, gamma1 / c1s
  double kappa_s = 0;  // torsion constant of x_+^s (1-x)_+^s
};

/// Computes every constant of the theory. kappa_s is obtained by evaluating
/// the fractional Laplacian of x_+^s (1-x)_+^s at x = 1/2 by quadrature and
/// inverting; the closed gamma-function forms are used everywhere else.
ConstantSet build_constants(const ModelParams& params);

/// Closed form for kappa_s, kept separate as an independent cross-check:
/// sqrt(pi) / (4^s Gamma(1/2+s) Gamma(1+s)).
double kappa_s_closed_form(double s);

}  // namespace fdlab
