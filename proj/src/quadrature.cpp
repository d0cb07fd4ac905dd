#include "fdlab/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <Eigen/Dense>

#include <map>
#include <mutex>

namespace fdlab::quad {

double finite(const std::function<double(double)>& f, double a, double b,
              double rel_tol) {
  if (a == b) return 0.0;
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(f, a, b, rel_tol);
}

double half_line(const std::function<double(double)>& f, double rel_tol) {
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate(f, rel_tol);
}

double smooth(const std::function<double(double)>& f, double a, double b,
              double rel_tol) {
  if (a == b) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, a, b, 12, rel_tol);
}

double gauss_panel(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss<double, 16>::integrate(f, a, b);
}

// Golub-Welsch on the Laguerre Jacobi matrix. Weights come out normalized
// to mu0 = int_0^inf e^{-x} dx = 1.
static Rule make_laguerre(int n) {
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    jacobi(k, k) = 2.0 * k + 1.0;
    if (k > 0) {
      jacobi(k, k - 1) = static_cast<double>(k);
      jacobi(k - 1, k) = static_cast<double>(k);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jacobi);
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int k = 0; k < n; ++k) {
    rule.nodes[k] = eig.eigenvalues()(k);
    const double v0 = eig.eigenvectors()(0, k);
    rule.weights[k] = v0 * v0;
  }
  return rule;
}

const Rule& gauss_laguerre(int n) {
  static std::map<int, Rule> cache;
  static std::mutex mutex;
  std::scoped_lock lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_laguerre(n)).first;
  return it->second;
}

}  // namespace fdlab::quad
