#include <doctest.h>

#include "cesaro/errors.hpp"
#include "cesaro/series.hpp"
#include "support.hpp"

using namespace cesaro;
using testing::random_point;
using testing::rel_err;

namespace {

Complex brute_force(const TruncatedSeries& f, std::span<const Complex> z) {
  Complex acc{0.0, 0.0};
  for (const auto& [alpha, c] : f.terms()) {
    Complex m{1.0, 0.0};
    for (std::size_t j = 0; j < alpha.dimension(); ++j) {
      for (unsigned e = 0; e < alpha[j]; ++e) m *= z[j];
    }
    acc += c * m;
  }
  return acc;
}

TruncatedSeries poly(std::size_t n, std::initializer_list<std::pair<MultiIndex, Complex>> terms) {
  unsigned cap = 0;
  for (const auto& t : terms) cap = std::max(cap, t.first.order());
  TruncatedSeries f(n, cap);
  for (const auto& [a, c] : terms) f.add_term(a, c);
  return f;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("multi-index order and sum") {
  MultiIndex a{2, 0, 1};
  CHECK(a.order() == 3);
  CHECK((a + MultiIndex{0, 1, 1}) == MultiIndex{2, 1, 2});
  CHECK_THROWS_AS((a + MultiIndex{1, 1}), InputError);
}

TEST_CASE("evaluation of small cases") {
  const CVector z{0.5, 0.5};
  CHECK(evaluate(TruncatedSeries::constant(2, 1.0), z) == Complex{1.0, 0.0});
  CHECK(std::abs(evaluate(TruncatedSeries::monomial({1, 1}), z) - 0.25) == 0.0);
  CHECK_THROWS_AS(evaluate(TruncatedSeries::constant(3, 1.0), z), InputError);
}

TEST_CASE("evaluation matches term-by-term summation") {
  std::mt19937_64 rng(7);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto f = random_series(n, 8, 20, 11, s);
      const auto z = random_point(rng, n);
      CHECK(rel_err(evaluate(f, z), brute_force(f, z)) < 1e-13);
    }
  }
}

TEST_CASE("canonical form drops zero coefficients") {
  TruncatedSeries f(1, 2);
  f.add_term({1}, 2.0);
  f.add_term({1}, -2.0);
  CHECK(f.is_zero());
  f.add_term({2}, 0.0);
  CHECK(f.terms().empty());
  CHECK_THROWS_AS(f.add_term({3}, 1.0), InputError);
  CHECK_THROWS_AS(f.add_term({1, 0}, 1.0), InputError);
}

TEST_CASE("multiply") {
  const auto one_plus = poly(1, {{{0}, 1.0}, {{1}, 1.0}});
  const auto one_minus = poly(1, {{{0}, 1.0}, {{1}, -1.0}});
  const auto prod = multiply(one_plus, one_minus);
  CHECK(prod.degree_cap() == 2);
  CHECK(prod.terms().size() == 2);
  CHECK(prod.coefficient({0}) == Complex{1.0, 0.0});
  CHECK(prod.coefficient({2}) == Complex{-1.0, 0.0});
  CHECK(prod.coefficient({1}) == Complex{0.0, 0.0});

  CHECK(multiply(one_plus, TruncatedSeries(1, 0)).is_zero());
  CHECK_THROWS_AS(multiply(one_plus, TruncatedSeries(2, 1)), InputError);

  SUBCASE("degree cap is the sum of caps") {
    const auto f = random_series(2, 5, 6, 3, 0);
    const auto g = random_series(2, 7, 6, 3, 1);
    CHECK(multiply(f, g).degree_cap() == 12);
  }
}

TEST_CASE("multiply agrees with the pointwise product") {
  std::mt19937_64 rng(21);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto f = random_series(n, 8, 15, 5, 2 * n);
    const auto g = random_series(n, 8, 15, 5, 2 * n + 1);
    const auto fg = multiply(f, g);
    for (int k = 0; k < 100; ++k) {
      const auto z = random_point(rng, n);
      CHECK(rel_err(evaluate(fg, z), brute_force(f, z) * brute_force(g, z)) < 1e-11);
    }
  }
}

TEST_CASE("radial derivative") {
  CHECK(radial_derivative(TruncatedSeries::constant(2, {3.0, 1.0})).is_zero());
  const auto r = radial_derivative(TruncatedSeries::monomial({2, 1}));
  CHECK(r.terms().size() == 1);
  CHECK(r.coefficient({2, 1}) == Complex{3.0, 0.0});
}

TEST_CASE("radial derivative obeys the product rule") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t s = 0; s < 5; ++s) {
      const auto f = random_series(n, 6, 10, 99, 2 * s);
      const auto g = random_series(n, 6, 10, 99, 2 * s + 1);
      const auto lhs = radial_derivative(multiply(f, g));
      const auto rhs = add(multiply(f, radial_derivative(g)), multiply(g, radial_derivative(f)));
      CHECK(max_coefficient_difference(lhs, rhs) <= 1e-13 * std::max(1.0, max_abs_coefficient(lhs)));
    }
  }
}

TEST_CASE("gradient small cases") {
  const auto g1 = gradient_at(TruncatedSeries::coordinate(3, 0), CVector{0.1, 0.2, 0.3});
  CHECK(g1 == CVector{1.0, 0.0, 0.0});
  const auto g2 = gradient_at(TruncatedSeries::monomial({2, 1}), CVector{1.0, 1.0});
  CHECK(g2 == CVector{2.0, 1.0});
  CHECK_THROWS_AS(gradient_at(TruncatedSeries::monomial({2, 1}), CVector{1.0}), InputError);
}

TEST_CASE("gradient matches central finite differences") {
  std::mt19937_64 rng(5);
  const double h = 1e-5;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto f = random_series(n, 8, 15, 17, n);
    for (int k = 0; k < 20; ++k) {
      const auto z = random_point(rng, n, 0.9);
      const auto grad = gradient_at(f, z);
      for (std::size_t j = 0; j < n; ++j) {
        CVector zp = z, zm = z;
        zp[j] += h;
        zm[j] -= h;
        const Complex fd = (brute_force(f, zp) - brute_force(f, zm)) / (2.0 * h);
        CHECK(rel_err(grad[j], fd) < 1e-6);
      }
    }
  }
}

TEST_CASE("linearity of evaluation") {
  std::mt19937_64 rng(8);
  const auto f = random_series(2, 8, 12, 1, 0);
  const auto g = random_series(2, 8, 12, 1, 1);
  const Complex a{0.7, -1.3}, b{-2.0, 0.4};
  const auto h = linear_combination(a, f, b, g);
  for (int k = 0; k < 50; ++k) {
    const auto z = random_point(rng, 2);
    const Complex expect = a * evaluate(f, z) + b * evaluate(g, z);
    CHECK(std::abs(evaluate(h, z) - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
  }
}

TEST_CASE("radial derivative is bounded by |z| |grad f|") {
  std::mt19937_64 rng(9);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto f = random_series(n, 8, 12, 4, n);
    const auto rf = radial_derivative(f);
    for (int k = 0; k < 100; ++k) {
      const auto z = random_point(rng, n, 0.999);
      CHECK(std::abs(evaluate(rf, z)) <= norm(z) * norm(gradient_at(f, z)) * (1.0 + 1e-12) + 1e-300);
    }
  }
}

TEST_CASE("truncate is explicit and keeps low orders") {
  const auto f = random_series(2, 8, 20, 12, 0);
  const auto t = truncate(f, 3);
  CHECK(t.degree_cap() == 3);
  for (const auto& [alpha, c] : f.terms()) {
    if (alpha.order() <= 3) CHECK(t.coefficient(alpha) == c);
    else CHECK(t.coefficient(alpha) == Complex{0.0, 0.0});
  }
}

TEST_CASE("random series are deterministic per seed and stream") {
  CHECK(random_series(3, 8, 10, 42, 5) == random_series(3, 8, 10, 42, 5));
  CHECK_FALSE(random_series(3, 8, 10, 42, 5) == random_series(3, 8, 10, 42, 6));
  const auto f = random_series(2, 8, 30, 1, 0);
  CHECK(f.degree() <= 8);
}

}  // TEST_SUITE
