#pragma once

#include <cstddef>
#include <vector>

#include "cesaro/analytic_function.hpp"
#include "cesaro/ball.hpp"
#include "cesaro/quadrature.hpp"

namespace cesaro {

/// Parameters (n, p, q, alpha) of the pair B(p,q) -> B^alpha.
struct SpaceParams {
  std::size_t n = 1;
  double p = 2.0;
  double q = 0.0;
  double alpha = 1.0;

  /// Validated construction; throws InputError naming the violated constraint.
  static SpaceParams make(std::size_t n, double p, double q, double alpha);
  void validate() const;

  /// Embedding exponent s* = (n + 1 + q) / p, so that B(p,q) embeds in B^{s*}.
  double s_star() const noexcept { return (static_cast<double>(n) + 1.0 + q) / p; }
};

/// Branch test for exponents computed in floating point, e.g. s* = 2/2.
bool is_unit_exponent(double p) noexcept;

/// Growth envelope G_p as a function of 1 - |z|^2:
///   1 (0 < p < 1),  log(2/(1-|z|^2)) (p = 1),  (1-|z|^2)^{-(p-1)} (p > 1).
double gp_weight_from_gap(double p, double one_minus_r2);
double gp_weight(double p, const BallPoint& z);

struct NormResult {
  double value = 0.0;     // |f(0)| + seminorm
  double seminorm = 0.0;
  double error_estimate = 0.0;
};

/// |f(0)| + (int_B |grad f|^p (1-|z|^2)^q dv)^{1/p}. The integration weight exponent and
/// dimension must match params.
NormResult besov_norm(const AnalyticFunction& f, const SpaceParams& params, const BallIntegralSpec& spec);

enum class BlochVariant { gradient, radial };

/// Sampled supremum with its refinement trace. Always a lower bound for the true sup.
struct BlochResult {
  double value = 0.0;          // last trace entry
  std::vector<double> trace;   // running max per refinement level, non-decreasing
  std::size_t points = 0;      // grid size at the finest level
};

/// sup_z (1-|z|^2)^alpha |grad f(z)|  (or |Rf(z)| for the radial variant) over the
/// scan grids of levels 0..scheme.refinement_levels.
BlochResult bloch_seminorm(const AnalyticFunction& f, double alpha, const SamplingScheme& scheme,
                           BlochVariant variant = BlochVariant::gradient);

/// |f(0)| + bloch_seminorm(...).value.
double bloch_norm(const AnalyticFunction& f, double alpha, const SamplingScheme& scheme,
                  BlochVariant variant = BlochVariant::gradient);

/// Explicit pointwise constant C(p, z) with |f(z)| <= C(p, z) ||f||_{B^p}:
///   1 + 1/(1-p)                            0 < p < 1
///   1 + log(4/(1-|z|^2)) / 2               p = 1
///   1 + 2^{p-1} / ((p-1)(1-|z|^2)^{p-1})   p > 1
double growth_bound_constant(double p, const BallPoint& z);
double growth_bound_constant_from_gap(double p, double one_minus_r2);

}  // namespace cesaro
