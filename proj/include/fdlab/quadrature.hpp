#pragma once

#include <functional>
#include <span>
#include <vector>

namespace fdlab::quad {

/// Integrate f over (a,b); integrable endpoint singularities are allowed.
double finite(const std::function<double(double)>& f, double a, double b,
              double rel_tol = 1e-9);

/// Integrate f over (0,inf); f must decay and may be singular at 0.
double half_line(const std::function<double(double)>& f, double rel_tol = 1e-9);

/// Adaptive Gauss-Kronrod for smooth integrands on [a,b].
double smooth(const std::function<double(double)>& f, double a, double b,
              double rel_tol = 1e-9);

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Laguerre rule: sum_i w_i g(x_i) ~ int_0^inf e^{-x} g(x) dx.
/// Rules are computed once per order and cached.
const Rule& gauss_laguerre(int n);

/// Fixed-order Gauss-Legendre on [a,b] (smooth panels).
double gauss_panel(const std::function<double(double)>& f, double a, double b);

}  // namespace fdlab::quad
