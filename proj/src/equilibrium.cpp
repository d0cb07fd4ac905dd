#include "fdlab/equilibrium.hpp"

#include <algorithm>
#include <cmath>

#include "fdlab/quadrature.hpp"

namespace fdlab {

Equilibrium::Equilibrium(const ModelParams& params, bool build)
    : params_(params), gamma_(params.gamma()), p_(1.0 + 2.0 * params.s) {
  params_.validate();

  const double pi = 3.14159265358979323846;
  c0_ = p_ * std::sin(2.0 * pi / p_) / (gamma_ * pi);
  if (build) build_tables();
}

double Equilibrium::density(double v) const {
  return gamma_ / (1.0 + std::pow(std::abs(v), p_));
}

double Equilibrium::mass_between(double a, double b) const {
  return quad::finite([this](double v) { return density(v); }, a, b, 1e-12);
}

// Nodes are linear on [0,8] and geometric on [8, V_MAX]; the CDF is
// accumulated panel by panel with fixed Gauss rules (the density is smooth).
Equilibrium::InverseCdf Equilibrium::build_inverse(bool flux_weighted) const {
  const int n = kTableSize;
  InverseCdf table;
  table.v.resize(n + 1);
  table.u.resize(n + 1);
  table.dvdu.resize(n + 1);

  const int n_lin = n / 2;
  const double v_split = 8.0;
  for (int i = 0; i <= n_lin; ++i)
    table.v[i] = v_split * static_cast<double>(i) / n_lin;
  const double ratio = std::log(kVMax / v_split) / (n - n_lin);
  for (int i = n_lin + 1; i <= n; ++i)
    table.v[i] = v_split * std::exp(ratio * (i - n_lin));
  table.v[n] = kVMax;

  auto pdf = [this, flux_weighted](double v) {
    return flux_weighted ? c0_ * v * density(v) : 2.0 * density(v);
  };

  table.u[0] = 0.0;
  for (int i = 1; i <= n; ++i)
    table.u[i] = table.u[i - 1] + quad::gauss_panel(pdf, table.v[i - 1], table.v[i]);
  for (int i = 0; i <= n; ++i) {
    const double d = pdf(table.v[i]);
    table.dvdu[i] = d > 0 ? 1.0 / d : 0.0;  // infinite slope only at v=0 of the flux law
  }
  table.u_max = table.u[n];

  // exact tail mass, independent of the table; substitution w = V/t with the
  // integrand kept in overflow-safe form
  const double vp = std::pow(kVMax, p_);
  double tail;
  if (flux_weighted) {
    tail = quad::finite(
        [&](double t) {
          return c0_ * gamma_ * kVMax * kVMax * std::pow(t, p_ - 3.0) /
                 (std::pow(t, p_) + vp);
        },
        0.0, 1.0, 1e-12);
  } else {
    tail = 2.0 * quad::finite(
                     [&](double t) {
                       return gamma_ * kVMax * std::pow(t, p_ - 2.0) /
                              (std::pow(t, p_) + vp);
                     },
                     0.0, 1.0, 1e-12);
  }
  table.tail_prob = tail;

  // normalize so that table mass + tail mass is exactly 1
  const double total = table.u_max + tail;
  for (auto& u : table.u) u /= total;
  for (auto& d : table.dvdu) d *= total;
  table.u_max /= total;
  table.tail_prob /= total;
  table.built = true;
  return table;
}

void Equilibrium::build_tables() {
  bulk_ = build_inverse(false);
  flux_ = build_inverse(true);
}

double Equilibrium::InverseCdf::invert(double target) const {
  auto it = std::upper_bound(u.begin(), u.end(), target);
  size_t hi = std::min<size_t>(u.size() - 1, it - u.begin());
  if (hi == 0) hi = 1;
  const size_t lo = hi - 1;
  const double du = u[hi] - u[lo];
  if (du <= 0.0) return v[lo];
  const double t = (target - u[lo]) / du;
  // Hermite with exact slopes dv/du at the nodes
  const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
  const double h10 = t * (1 - t) * (1 - t);
  const double h01 = t * t * (3 - 2 * t);
  const double h11 = t * t * (t - 1);
  double out = h00 * v[lo] + h10 * du * dvdu[lo] + h01 * v[hi] + h11 * du * dvdu[hi];
  return std::clamp(out, v[lo], v[hi]);
}

double Equilibrium::sample_velocity(Rng& rng) const {
  if (!bulk_.built) throw TableNotBuilt("velocity sampler table not built");
  const double u = rng.uniform();
  double speed;
  if (u < bulk_.u_max) {
    speed = bulk_.invert(u);
  } else {
    // conditional Pareto tail: P(|v| > w | |v| > V) = (w/V)^{-2s}
    const double t = rng.uniform_pos();
    speed = kVMax * std::pow(t, -1.0 / (2.0 * params_.s));
    speed = std::min(speed, 1e15);
  }
  return rng.sign() * speed;
}

double Equilibrium::sample_boundary_velocity(Rng& rng, int inward_sign) const {
  if (!flux_.built) throw TableNotBuilt("boundary sampler table not built");
  const double u = rng.uniform();
  double speed;
  if (u < flux_.u_max) {
    if (u < flux_.u[1]) {
      // quadratic CDF near w=0: u ~ c0 F(0) w^2 / 2
      speed = std::sqrt(2.0 * u / (c0_ * gamma_));
    } else {
      speed = flux_.invert(u);
    }
  } else {
    // survival ~ (w/V)^{1-2s}
    const double t = rng.uniform_pos();
    speed = kVMax * std::pow(t, -1.0 / (2.0 * params_.s - 1.0));
    speed = std::min(speed, 1e15);
  }
  return inward_sign > 0 ? speed : -speed;
}

}  // namespace fdlab
