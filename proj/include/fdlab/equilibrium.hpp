#pragma once

#include <memory>
#include <vector>

#include "fdlab/model.hpp"
#include "fdlab/rng.hpp"

namespace fdlab {

struct TableNotBuilt : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Heavy-tailed equilibrium F(v) = gamma / (1 + |v|^{1+2s}) together with
/// the samplers used by the particle simulation:
///   - sample_velocity: v ~ F (post-collision law)
///   - sample_boundary_velocity: |w| ~ c0 F(w) |w| on a half line (diffuse
///     wall re-emission), sign chosen by the caller.
///
/// Both samplers invert a tabulated CDF below v = V_MAX and fall back to the
/// exact power-law tail inversion beyond. Tables are immutable once built.
class Equilibrium {
 public:
  static constexpr double kVMax = 1e3;
  static constexpr int kTableSize = 1 << 14;

  explicit Equilibrium(const ModelParams& params, bool build_tables = true);

  const ModelParams& params() const { return params_; }
  double gamma() const { return gamma_; }
  double c0() const { return c0_; }

  /// F(v); total function, even, integrates to 1.
  double density(double v) const;

  /// v ~ F.
  double sample_velocity(Rng& rng) const;

  /// Speed |w| from the diffuse wall law, returned with the requested sign
  /// (+1 emits rightward from x=0, -1 leftward from x=1).
  double sample_boundary_velocity(Rng& rng, int inward_sign) const;

  /// int_a^b F(v) dv by quadrature (oracle-grade, not table based).
  double mass_between(double a, double b) const;

 private:
  struct InverseCdf {
    // v-grid nodes, CDF values at the nodes, and exact dv/du slopes;
    // cubic Hermite inversion between nodes.
    std::vector<double> v;
    std::vector<double> u;
    std::vector<double> dvdu;
    double u_max = 0;     // CDF at kVMax
    double tail_prob = 0; // 1 - u_max
    bool built = false;

    double invert(double target) const;
  };

  void build_tables();
  InverseCdf build_inverse(bool flux_weighted) const;

  ModelParams params_;
  double gamma_;
  double c0_;
  double p_;  // 1 + 2s
  InverseCdf bulk_;
  InverseCdf flux_;
};

}  // namespace fdlab
