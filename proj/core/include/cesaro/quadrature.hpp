#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "cesaro/ball.hpp"
#include "cesaro/gauss_jacobi.hpp"
#include "cesaro/types.hpp"

namespace cesaro {

/// Real-valued integrand on the ball.
using BallIntegrand = std::function<double(std::span<const Complex>)>;

/// How the spherical factor of a polar ball integral is handled.
enum class SphereRule {
  monte_carlo,       // mean over sample_sphere(n, scheme.sphere_samples, scheme.seed)
  circle_trapezoid,  // n = 1 only: adaptive equispaced rule on the circle
};

/// Description of int_B F(z) (1 - |z|^2)^q dv(z), dv normalized so that v(B) = 1.
///
/// In polar form with u = r^2 this is n int_0^1 u^{n-1} (1-u)^q <F(sqrt(u) xi)>_sphere du.
/// The radial factor is a Gauss-Jacobi rule for u^{n-1}(1-u)^q; with
/// scheme.refinement_levels = L > 0 the interval is split into Gauss-Legendre panels
/// [1 - 2^-k, 1 - 2^-(k+1)], k < L, graded toward the sphere, and a final Gauss-Jacobi
/// panel [1 - 2^-L, 1] that absorbs the (1-u)^q factor. The weight singularity for
/// q < 0 is never sampled directly.
struct BallIntegralSpec {
  std::size_t dimension = 1;
  double weight_exponent = 0.0;
  SamplingScheme scheme;
  unsigned radial_order = 16;
  SphereRule sphere_rule = SphereRule::monte_carlo;
  /// circle_trapezoid: stop doubling when successive means differ by at most this
  /// fraction of their magnitude.
  double relative_tolerance = 1e-12;
  std::size_t max_circle_points = std::size_t{1} << 22;

  static BallIntegralSpec monte_carlo(std::size_t n, double q, std::size_t samples, std::uint64_t seed,
                                      unsigned radial_order = 16);
  /// n = 1 product rule: graded radial panels x adaptive circle trapezoid.
  static BallIntegralSpec circle_product(double q, unsigned refinement_levels = 20,
                                         unsigned radial_order = 16);

  /// Throws InputError unless q > -1 and the rule fits the dimension.
  void validate() const;
};

struct IntegralEstimate {
  double value = 0.0;
  /// Monte-Carlo: one standard error. Product rule: sum of weighted refinement differences.
  double error = 0.0;
  std::size_t evaluations = 0;
};

/// Radial rule on u in [0, 1] whose weights already include u^{n-1} (1-u)^q.
QuadratureRule radial_rule(std::size_t n, double q, unsigned order, unsigned levels);

/// int_B F(z) (1-|z|^2)^q dv(z). Throws EvaluationError naming the node if F is not
/// finite there.
IntegralEstimate ball_integral(const BallIntegrand& F, const BallIntegralSpec& spec);

/// Same integral for a zonal integrand F(z) = h(z_1), reduced to the disc:
///   int_B h(w_1)(1-|w|^2)^q dv_n = c_{n,q} int_D h(zeta)(1-|zeta|^2)^{q+n-1} dA/pi,
///   c_{n,q} = n! Gamma(q+1) (q+n) / Gamma(n+q+1).
/// The disc integral uses the circle product rule regardless of spec.sphere_rule; the
/// spec's dimension fixes n.
IntegralEstimate zonal_ball_integral(const std::function<double(Complex)>& h, const BallIntegralSpec& spec);

/// Gamma(t+1) Gamma(m+1) n! / Gamma(n+1+t+m): the coefficient of |z|^{2m} in
/// int_B |<z,w>|^{2m} (1-|w|^2)^t dv(w). Throws DomainError for t <= -1.
double monomial_ball_integral(std::size_t n, unsigned m, double t);

struct PathIntegral {
  Complex value;
  double error = 0.0;
  std::size_t intervals = 0;
};

/// Adaptive Gauss-Kronrod (7/15) for int_0^1 F(t) dt with complex F. The integrand is
/// only sampled at interior Kronrod nodes, never at t = 0. Throws AccuracyError (with
/// the best estimate) when max_intervals is reached above abs_tolerance.
PathIntegral path_integral_unit(const std::function<Complex(double)>& F, double abs_tolerance = 1e-10,
                                std::size_t max_intervals = 4096);

}  // namespace cesaro
