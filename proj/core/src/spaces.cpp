#include "cesaro/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cesaro/errors.hpp"
#include "cesaro/scan.hpp"

namespace cesaro {

SpaceParams SpaceParams::make(std::size_t n, double p, double q, double alpha) {
  SpaceParams params{n, p, q, alpha};
  params.validate();
  return params;
}

void SpaceParams::validate() const {
  if (n == 0) throw InputError("space parameters: n must be >= 1");
  if (!(p > 0.0) || !std::isfinite(p)) throw InputError("space parameters: p must satisfy 0 < p < inf");
  // -n-1 < q is implied by q > -1.
  if (!(q > -1.0) || !std::isfinite(q)) {
    throw InputError("space parameters: q must satisfy q > -1 (got " + std::to_string(q) + ")");
  }
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw InputError("space parameters: alpha must be >= 0");
}

bool is_unit_exponent(double p) noexcept { return std::abs(p - 1.0) <= 1e-12; }

double gp_weight_from_gap(double p, double one_minus_r2) {
  if (!(p > 0.0)) throw InputError("gp_weight: p must be > 0");
  if (!(one_minus_r2 > 0.0)) throw DomainError("gp_weight: z must lie in the open unit ball");
  if (is_unit_exponent(p)) return std::log(2.0 / one_minus_r2);
  if (p < 1.0) return 1.0;
  return std::pow(one_minus_r2, -(p - 1.0));
}

double gp_weight(double p, const BallPoint& z) {
  if (!z.interior()) throw DomainError("gp_weight: z must lie in the open unit ball");
  return gp_weight_from_gap(p, one_minus_norm_sq(z.coords()));
}

NormResult besov_norm(const AnalyticFunction& f, const SpaceParams& params, const BallIntegralSpec& spec) {
  params.validate();
  if (f.dimension() != params.n || spec.dimension != params.n) {
    throw InputError("besov_norm: function, parameters and integration spec must share the dimension n");
  }
  if (spec.weight_exponent != params.q) {
    throw InputError("besov_norm: integration weight exponent must equal q");
  }
  const double p = params.p;
  const auto integral = ball_integral(
      [&](std::span<const Complex> z) { return std::pow(norm(f.gradient(z)), p); }, spec);

  NormResult out;
  const double I = std::max(integral.value, 0.0);
  out.seminorm = std::pow(I, 1.0 / p);
  out.value = std::abs(f.value(CVector(params.n, Complex{0.0, 0.0}))) + out.seminorm;
  out.error_estimate = I > 0.0 ? out.seminorm / (p * I) * integral.error : 0.0;
  return out;
}

BlochResult bloch_seminorm(const AnalyticFunction& f, double alpha, const SamplingScheme& scheme,
                           BlochVariant variant) {
  if (!(alpha >= 0.0)) throw InputError("bloch_seminorm: alpha must be >= 0");
  BlochResult out;
  double running = 0.0;
  for (unsigned level = 0; level <= scheme.refinement_levels; ++level) {
    const ScanGrid grid = ScanGrid::at_level(scheme, f.dimension(), level);
    const auto maxima = per_radius_max(grid, [&](std::span<const Complex> z) {
      const double weight = std::pow(one_minus_norm_sq(z), alpha);
      const double size = variant == BlochVariant::gradient ? norm(f.gradient(z)) : std::abs(f.radial(z));
      return weight * size;
    });
    running = std::max(running, *std::max_element(maxima.begin(), maxima.end()));
    out.trace.push_back(running);
    out.points = grid.size();
  }
  out.value = running;
  return out;
}

double bloch_norm(const AnalyticFunction& f, double alpha, const SamplingScheme& scheme, BlochVariant variant) {
  return std::abs(f.value(CVector(f.dimension(), Complex{0.0, 0.0}))) +
         bloch_seminorm(f, alpha, scheme, variant).value;
}

double growth_bound_constant_from_gap(double p, double one_minus_r2) {
  if (!(p > 0.0)) throw InputError("growth_bound_constant: p must be > 0");
  if (!(one_minus_r2 > 0.0)) throw DomainError("growth_bound_constant: z must lie in the open unit ball");
  if (is_unit_exponent(p)) return 1.0 + 0.5 * std::log(4.0 / one_minus_r2);
  if (p < 1.0) return 1.0 + 1.0 / (1.0 - p);
  return 1.0 + std::pow(2.0, p - 1.0) / ((p - 1.0) * std::pow(one_minus_r2, p - 1.0));
}

double growth_bound_constant(double p, const BallPoint& z) {
  if (!z.interior()) throw DomainError("growth_bound_constant: z must lie in the open unit ball");
  return growth_bound_constant_from_gap(p, one_minus_norm_sq(z.coords()));
}

}  // namespace cesaro
