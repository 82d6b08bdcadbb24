#pragma once

#include <vector>

namespace cesaro {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Jacobi rule on [-1, 1] for the weight (1-x)^a (1+x)^b, a, b > -1
/// (Golub-Welsch). Exact for polynomials of degree <= 2*order - 1.
QuadratureRule gauss_jacobi(unsigned order, double a, double b);

/// Gauss-Legendre rule on [lo, hi].
QuadratureRule gauss_legendre(unsigned order, double lo, double hi);

/// Rule on [0, 1] for the weight u^b (1-u)^a.
QuadratureRule shifted_gauss_jacobi(unsigned order, double a, double b);

}  // namespace cesaro
