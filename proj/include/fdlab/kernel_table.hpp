#pragma once

#include <vector>

#include "fdlab/model.hpp"

namespace fdlab {

/// Cached evaluator for the collision-path kernels
///   F_i(z) = int_0^inf nu0^{1+i} e^{-nu0 tau} tau^{i-2} F(z/tau) dtau,
/// i in {0,1}. Values are cached on a log grid over [Z_MIN, Z_CUT] (2048
/// points per decade, cubic Hermite in log-log coordinates); beyond Z_CUT the
/// two-term tail model gamma_i |z|^{-1-2s} + delta_i |z|^{-2-4s} is used,
/// below Z_MIN the integral is evaluated directly. Both kernels are even and
/// diverge at z = 0 (F0 like 1/|z|, F1 like log 1/|z|).
class KernelTable {
 public:
  static constexpr double kZMin = 1e-6;
  static constexpr double kZCut = 1e3;

  KernelTable(int index, const ModelParams& params);

  int index() const { return index_; }
  double gamma_i() const { return gamma_i_; }

  /// Cached evaluation; relative accuracy ~1e-9 against direct().
  double operator()(double z) const;

  /// Direct adaptive quadrature of the tau-integral (slow path / oracle).
  double direct(double z) const;

  /// Two-term large-|z| model.
  double tail_model(double z) const;

  /// Measured sup over the cached log grid z >= 1 of
  /// |z|^{1+4s} |F_i(z) - gamma_i |z|^{-1-2s}|.
  double tail_constant() const { return tail_constant_; }

 private:
  int index_;
  ModelParams params_;
  double gamma_;    // normalization of F
  double p_;        // 1 + 2s
  double gamma_i_;  // leading tail coefficient
  double delta_i_;  // next-order tail coefficient
  double log_z0_ = 0;
  double step_ = 0;
  std::vector<double> log_f_;
  std::vector<double> slope_;
  double tail_constant_ = 0;

  double interpolate(double abs_z) const;
};

}  // namespace fdlab
