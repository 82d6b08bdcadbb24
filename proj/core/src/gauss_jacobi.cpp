#include "cesaro/gauss_jacobi.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "cesaro/errors.hpp"

namespace cesaro {

QuadratureRule gauss_jacobi(unsigned order, double a, double b) {
  if (order == 0) throw InputError("gauss_jacobi: order must be >= 1");
  if (!(a > -1.0) || !(b > -1.0)) throw DomainError("gauss_jacobi: exponents must exceed -1");

  const auto n = static_cast<Eigen::Index>(order);
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  const double ab = a + b;
  // Recurrence coefficients of the monic Jacobi polynomials.
  diag(0) = (b - a) / (ab + 2.0);
  for (Eigen::Index k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double s = 2.0 * kk + ab;
    diag(k) = (b * b - a * a) / (s * (s + 2.0));
    const double beta = 4.0 * kk * (kk + a) * (kk + b) * (kk + ab) / (s * s * (s + 1.0) * (s - 1.0));
    sub(k - 1) = std::sqrt(beta);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw Error("gauss_jacobi: eigen-decomposition failed");

  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                              std::lgamma(ab + 2.0));
  QuadratureRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (Eigen::Index i = 0; i < n; ++i) {
    rule.nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
  }
  return rule;
}

QuadratureRule gauss_legendre(unsigned order, double lo, double hi) {
  QuadratureRule rule = gauss_jacobi(order, 0.0, 0.0);
  const double half = 0.5 * (hi - lo);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    rule.nodes[i] = lo + half * (rule.nodes[i] + 1.0);
    rule.weights[i] *= half;
  }
  return rule;
}

QuadratureRule shifted_gauss_jacobi(unsigned order, double a, double b) {
  QuadratureRule rule = gauss_jacobi(order, a, b);
  const double scale = std::exp(-(a + b + 1.0) * std::log(2.0));
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    rule.nodes[i] = 0.5 * (rule.nodes[i] + 1.0);
    rule.weights[i] *= scale;
  }
  return rule;
}

}  // namespace cesaro
