#include <doctest.h>

#include <cmath>

#include "cesaro/errors.hpp"
#include "cesaro/gauss_jacobi.hpp"
#include "cesaro/quadrature.hpp"
#include "support.hpp"

using namespace cesaro;

namespace {

double beta(double x, double y) { return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y)); }

// Composite Simpson on [0, 1]; independent of the library's Gauss rules.
template <typename F>
double simpson(F&& f, int panels = 2000) {
  const double h = 1.0 / panels;
  double s = f(0.0) + f(1.0);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return s * h / 3.0;
}

const CVector kZ2{Complex{0.3, 0.4}, Complex{-0.2, 0.5}};

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("Gauss-Jacobi rules integrate polynomials exactly") {
  for (double a : {0.0, -0.5, 1.0, 2.5}) {
    for (double b : {0.0, 1.0, 2.0}) {
      const auto rule = shifted_gauss_jacobi(6, a, b);
      for (int k = 0; k <= 11; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], k);
        CHECK(s == doctest::Approx(beta(b + k + 1.0, a + 1.0)).epsilon(1e-13));
      }
    }
  }
  const auto gl = gauss_legendre(5, 0.25, 0.75);
  double s = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) s += gl.weights[i] * std::pow(gl.nodes[i], 9);
  CHECK(s == doctest::Approx((std::pow(0.75, 10) - std::pow(0.25, 10)) / 10.0).epsilon(1e-14));
}

TEST_CASE("graded radial rule keeps total mass") {
  for (unsigned levels : {0u, 3u, 12u}) {
    for (double q : {-0.5, 0.0, 1.5}) {
      const auto rule = radial_rule(2, q, 8, levels);
      double s = 0.0;
      for (double w : rule.weights) s += w;
      // Interior panels see (1-u)^q as analytic with a singularity one panel width away,
      // so an order-8 Legendre panel is good to a few 1e-13 when q < 0.
      CHECK(s == doctest::Approx(beta(2.0, q + 1.0)).epsilon(levels == 0 ? 1e-14 : 1e-12));
    }
  }
}

TEST_CASE("monomial closed form") {
  CHECK(monomial_ball_integral(1, 1, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(monomial_ball_integral(2, 1, 0.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(monomial_ball_integral(1, 2, 1.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
  // n = 1: int_D |w|^{2m}(1-|w|^2)^t dA/pi = 2 int_0^1 r^{2m+1}(1-r^2)^t dr.
  const double radial = 2.0 * simpson([](double r) { return std::pow(r, 5) * (1.0 - r * r); });
  CHECK(monomial_ball_integral(1, 2, 1.0) == doctest::Approx(radial).epsilon(1e-10));
  CHECK_THROWS_AS(monomial_ball_integral(1, 1, -1.0), DomainError);
  CHECK_THROWS_AS(monomial_ball_integral(1, 1, -2.0), DomainError);
}

TEST_CASE("unit integrand gives the normalized volume") {
  const auto one = [](std::span<const Complex>) { return 1.0; };
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto est = ball_integral(one, BallIntegralSpec::monte_carlo(n, 0.0, 64, 1, 4));
    CHECK(est.value == doctest::Approx(1.0).epsilon(1e-13));
  }
  CHECK(ball_integral(one, BallIntegralSpec::circle_product(0.0, 0, 4)).value ==
        doctest::Approx(1.0).epsilon(1e-13));
  // int (1-|z|^2)^q dv = n! Gamma(q+1) / Gamma(n+q+1), here with q < 0.
  const auto w = ball_integral(one, BallIntegralSpec::monte_carlo(2, -0.5, 16, 1, 8));
  CHECK(w.value == doctest::Approx(2.0 * std::tgamma(0.5) / std::tgamma(2.5)).epsilon(1e-12));
}

TEST_CASE("inner-product moments") {
  SUBCASE("n = 1 product rule is exact") {
    const Complex z{0.5, -0.3};
    const auto F = [&](std::span<const Complex> w) { return std::norm(z * std::conj(w[0])); };
    const auto est = ball_integral(F, BallIntegralSpec::circle_product(0.0, 0, 4));
    CHECK(est.value == doctest::Approx(std::norm(z) / 2.0).epsilon(1e-13));
  }
  SUBCASE("n = 2 Monte Carlo") {
    const auto F = [&](std::span<const Complex> w) { return std::norm(inner(kZ2, w)); };
    const auto est = ball_integral(F, BallIntegralSpec::monte_carlo(2, 0.0, 200000, 42, 4));
    const double exact = norm_sq(kZ2) / 3.0;
    CHECK(std::abs(est.value - exact) <= 3.0 * est.error);
    CHECK(est.error < 0.01 * exact);
  }
}

TEST_CASE("product rule matches the monomial oracle to 1e-10") {
  const Complex z{0.6, 0.5};
  for (unsigned m = 1; m <= 5; ++m) {
    for (double t : {0.0, 1.0, 2.5}) {
      const auto F = [&](std::span<const Complex> w) { return std::pow(std::norm(z * std::conj(w[0])), m); };
      const auto est = ball_integral(F, BallIntegralSpec::circle_product(t, 0, m / 2 + 1));
      const double exact = monomial_ball_integral(1, m, t) * std::pow(std::norm(z), m);
      CHECK(std::abs(est.value - exact) <= 1e-10 * exact);
    }
  }
}

TEST_CASE("zonal reduction agrees with the monomial oracle") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (unsigned m = 1; m <= 3; ++m) {
      for (double t : {0.0, 1.5}) {
        auto spec = BallIntegralSpec::circle_product(t, 0, 8);
        spec.dimension = n;
        const auto est = zonal_ball_integral([&](Complex w1) { return std::pow(std::norm(w1), m); }, spec);
        CHECK(est.value == doctest::Approx(monomial_ball_integral(n, m, t)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("adaptive circle rule resolves peaked integrands") {
  // Poisson-type kernel: (1/2pi) int |1 - r e^{it}|^{-2} dt = 1/(1-r^2).
  const double r = 0.999;
  const auto F = [&](std::span<const Complex> w) {
    const double rho2 = std::norm(w[0]);
    return rho2 == 0.0 ? 1.0 : (1.0 - r * r * rho2) / std::norm(1.0 - r * w[0]);
  };
  const auto est = ball_integral(F, BallIntegralSpec::circle_product(0.0, 4, 8));
  CHECK(est.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("non-finite integrand values name the node") {
  const auto bad = [](std::span<const Complex> w) { return norm_sq(w) > 0.5 ? NAN : 1.0; };
  CHECK_THROWS_AS(ball_integral(bad, BallIntegralSpec::monte_carlo(2, 0.0, 16, 1, 4)), EvaluationError);
  try {
    ball_integral(bad, BallIntegralSpec::circle_product(0.0, 0, 4));
    FAIL("expected an evaluation error");
  } catch (const EvaluationError& e) {
    CHECK(std::string(e.what()).find("node") != std::string::npos);
  }
}

TEST_CASE("spec validation") {
  auto spec = BallIntegralSpec::monte_carlo(2, -1.0, 16, 1);
  CHECK_THROWS_AS(spec.validate(), InputError);
  auto circle = BallIntegralSpec::circle_product(0.0);
  circle.dimension = 2;
  CHECK_THROWS_AS(circle.validate(), InputError);
}

TEST_CASE("Monte-Carlo estimates are linear, monotone and stable under doubling") {
  const auto f = [](std::span<const Complex> w) { return std::norm(w[0] - 0.3 * w[1]); };
  const auto g = [](std::span<const Complex> w) { return 1.0 + std::real(w[1]); };
  const auto spec = BallIntegralSpec::monte_carlo(2, 1.0, 20000, 5, 6);
  const auto If = ball_integral(f, spec);
  const auto Ig = ball_integral(g, spec);
  const auto Ih = ball_integral([&](std::span<const Complex> w) { return 2.0 * f(w) - 0.5 * g(w); }, spec);
  CHECK(Ih.value == doctest::Approx(2.0 * If.value - 0.5 * Ig.value).epsilon(1e-12));
  const auto Ibig = ball_integral([&](std::span<const Complex> w) { return f(w) + 0.01; }, spec);
  CHECK(Ibig.value >= If.value);

  auto doubled = spec;
  doubled.scheme.sphere_samples *= 2;
  const auto If2 = ball_integral(f, doubled);
  CHECK(std::abs(If2.value - If.value) < 3.0 * If.error);
}

TEST_CASE("path integrals on [0,1]") {
  CHECK(std::abs(path_integral_unit([](double t) { return Complex{t, 0.0}; }).value - 0.5) < 1e-14);
  const Complex c{2.0, -1.0};
  CHECK(std::abs(path_integral_unit([&](double) { return c; }).value - c) < 1e-14);
  const Complex z{0.4, 0.3};
  const auto res = path_integral_unit([&](double t) { return t * z * z; });
  CHECK(std::abs(res.value - z * z / 2.0) < 1e-14);
  CHECK(res.error <= 1e-10);

  SUBCASE("smooth but sharp integrand") {
    // int_0^1 1/(1 + 1e4 (t - 0.5)^2) dt = 2 atan(50) / 100
    const auto r = path_integral_unit([](double t) { return Complex{1.0 / (1.0 + 1e4 * (t - 0.5) * (t - 0.5)), 0.0}; });
    CHECK(std::abs(r.value.real() - 2.0 * std::atan(50.0) / 100.0) < 1e-10);
  }

  SUBCASE("failure carries the best estimate") {
    const auto wild = [](double t) { return Complex{std::sin(1.0 / (t + 1e-6)), 0.0}; };
    try {
      path_integral_unit(wild, 1e-14, 8);
      FAIL("expected an accuracy error");
    } catch (const AccuracyError& e) {
      CHECK(std::isfinite(e.best_re()));
      CHECK(e.error_estimate() > 0.0);
    }
  }

  CHECK_THROWS_AS(path_integral_unit([](double) { return Complex{NAN, 0.0}; }), EvaluationError);
}

}  // TEST_SUITE
