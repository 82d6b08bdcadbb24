#pragma once

#include "cesaro/analytic_function.hpp"
#include "cesaro/quadrature.hpp"
#include "cesaro/series.hpp"

namespace cesaro {

/// Extended Cesaro operator T_g f(z) = int_0^1 f(tz) Rg(tz) dt/t.
///
/// Coefficient route: with h = f * Rg, the coefficient of z^alpha in T_g f is
/// h_alpha / |alpha| for |alpha| >= 1, and T_g f(0) = 0.
TruncatedSeries apply_coefficient_route(const TruncatedSeries& f, const TruncatedSeries& g);

/// Quadrature route at one point: path_integral_unit of t -> f(tz) * sum_j z_j dg/dz_j(tz).
/// That integrand is Rg(tz)/t with the 1/t cancelled analytically, so t = 0 is harmless.
PathIntegral apply_quadrature_route(const AnalyticFunction& f, const AnalyticFunction& g,
                                    std::span<const Complex> z, double abs_tolerance = 1e-12);

/// R(T_g f)(z) = f(z) Rg(z). Used for radial-variant Bloch norms of T_g f when f has no
/// series form.
Complex radial_of_image(const AnalyticFunction& f, const AnalyticFunction& g, std::span<const Complex> z);

struct Lemma6Residual {
  double max_abs_difference = 0.0;  // max_alpha |R(T_g f)_alpha - (f Rg)_alpha|
  double scale = 0.0;               // max_alpha |(f Rg)_alpha|
  double relative = 0.0;            // difference / scale (0 when both vanish)
};

/// Compares radial_derivative(apply_coefficient_route(f, g)) with f * Rg coefficientwise.
Lemma6Residual verify_lemma6(const TruncatedSeries& f, const TruncatedSeries& g);

}  // namespace cesaro
