#include "cesaro/operator.hpp"

#include "cesaro/errors.hpp"

namespace cesaro {

TruncatedSeries apply_coefficient_route(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.dimension() != g.dimension()) throw InputError("T_g: f and g have different dimensions");
  const TruncatedSeries h = multiply(f, radial_derivative(g));
  TruncatedSeries out(h.dimension(), h.degree_cap());
  for (const auto& [alpha, c] : h.terms()) {
    const unsigned k = alpha.order();
    // Rg has no constant term, so h_0 = 0 and k >= 1 here.
    if (k > 0) out.add_term(alpha, c / static_cast<double>(k));
  }
  return out;
}

PathIntegral apply_quadrature_route(const AnalyticFunction& f, const AnalyticFunction& g,
                                    std::span<const Complex> z, double abs_tolerance) {
  if (f.dimension() != g.dimension() || z.size() != f.dimension()) {
    throw InputError("T_g: f, g and z must share the dimension n");
  }
  if (!(norm_sq(z) < 1.0)) throw DomainError("T_g: z must lie in the open unit ball");
  const CVector point(z.begin(), z.end());
  return path_integral_unit(
      [&](double t) {
        const CVector tz = scaled(point, t);
        return f.value(tz) * dot(point, g.gradient(tz));
      },
      abs_tolerance);
}

Complex radial_of_image(const AnalyticFunction& f, const AnalyticFunction& g, std::span<const Complex> z) {
  return f.value(z) * g.radial(z);
}

Lemma6Residual verify_lemma6(const TruncatedSeries& f, const TruncatedSeries& g) {
  const TruncatedSeries lhs = radial_derivative(apply_coefficient_route(f, g));
  const TruncatedSeries rhs = multiply(f, radial_derivative(g));
  Lemma6Residual out;
  out.max_abs_difference = max_coefficient_difference(lhs, rhs);
  out.scale = max_abs_coefficient(rhs);
  out.relative = out.scale > 0.0 ? out.max_abs_difference / out.scale : out.max_abs_difference;
  return out;
}

}  // namespace cesaro
