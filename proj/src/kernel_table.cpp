#include "fdlab/kernel_table.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fdlab/quadrature.hpp"

namespace fdlab {

KernelTable::KernelTable(int index, const ModelParams& params)
    : index_(index), params_(params), gamma_(params.gamma()), p_(1.0 + 2.0 * params.s) {
  if (index != 0 && index != 1) throw ConfigError("kernel index must be 0 or 1");
  const double s = params_.s;
  const double nu0 = params_.nu0;
  gamma_i_ = gamma_ * std::pow(nu0, 1.0 - 2.0 * s) *
             boost::math::tgamma(2.0 * s + index);
  delta_i_ = -gamma_ * std::pow(nu0, -4.0 * s) *
             boost::math::tgamma(4.0 * s + index + 1.0);

  constexpr int kPerDecade = 2048;
  const double decades = std::log10(kZCut / kZMin);
  const int n = static_cast<int>(std::ceil(decades * kPerDecade));
  log_z0_ = std::log(kZMin);
  step_ = (std::log(kZCut) - log_z0_) / n;

  log_f_.resize(n + 1);
  for (int k = 0; k <= n; ++k)
    log_f_[k] = std::log(direct(std::exp(log_z0_ + k * step_)));

  slope_.resize(n + 1);
  for (int k = 1; k < n; ++k)
    slope_[k] = (log_f_[k + 1] - log_f_[k - 1]) / (2.0 * step_);
  slope_[0] = (log_f_[1] - log_f_[0]) / step_;
  slope_[n] = (log_f_[n] - log_f_[n - 1]) / step_;

  // certified tail deviation over the cached nodes with z >= 1
  tail_constant_ = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double z = std::exp(log_z0_ + k * step_);
    if (z < 1.0) continue;
    const double dev = std::abs(std::exp(log_f_[k]) - gamma_i_ * std::pow(z, -p_));
    tail_constant_ = std::max(tail_constant_, dev * std::pow(z, 1.0 + 4.0 * s));
  }
}

double KernelTable::direct(double z) const {
  const double az = std::abs(z);
  const double nu0 = params_.nu0;
  const double pref = gamma_ * std::pow(nu0, 1.0 + index_);
  // integrand: e^{-nu0 tau} tau^{p+i-2} / (tau^p + |z|^p); the endpoint
  // behavior tau^{2s+i-1} is integrable and resolved by the exp-sinh map
  const double zp = std::pow(az, p_);
  auto f = [&](double tau) {
    const double tp = std::pow(tau, p_);
    return std::exp(-nu0 * tau) * std::pow(tau, p_ + index_ - 2.0) / (tp + zp);
  };
  return pref * quad::half_line(f, 1e-12);
}

double KernelTable::tail_model(double z) const {
  const double az = std::abs(z);
  return gamma_i_ * std::pow(az, -p_) + delta_i_ * std::pow(az, -1.0 - p_ - 2.0 * params_.s);
}

double KernelTable::interpolate(double abs_z) const {
  const double x = std::log(abs_z);
  double pos = (x - log_z0_) / step_;
  int k = static_cast<int>(pos);
  k = std::min<int>(std::max(k, 0), static_cast<int>(log_f_.size()) - 2);
  const double t = pos - k;
  const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
  const double h10 = t * (1 - t) * (1 - t);
  const double h01 = t * t * (3 - 2 * t);
  const double h11 = t * t * (t - 1);
  const double y = h00 * log_f_[k] + h10 * step_ * slope_[k] +
                   h01 * log_f_[k + 1] + h11 * step_ * slope_[k + 1];
  return std::exp(y);
}

double KernelTable::operator()(double z) const {
  if (!std::isfinite(z)) throw std::invalid_argument("kernel offset must be finite");
  const double az = std::abs(z);
  if (az == 0.0) return std::numeric_limits<double>::infinity();
  if (az > kZCut) return tail_model(az);
  if (az < kZMin) return direct(az);
  return interpolate(az);
}

}  // namespace fdlab
