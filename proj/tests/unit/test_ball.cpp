#include <doctest.h>

#include <cmath>

#include "cesaro/ball.hpp"
#include "cesaro/errors.hpp"
#include "support.hpp"

using namespace cesaro;
using testing::random_point;

namespace {

double dist(std::span<const Complex> a, std::span<const Complex> b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += std::norm(a[j] - b[j]);
  return std::sqrt(s);
}

}  // namespace

TEST_SUITE("ball") {

TEST_CASE("ball points validate their closure") {
  CHECK_NOTHROW(BallPoint(CVector{0.6, Complex{0.0, 0.7}}));
  CHECK_THROWS_AS(BallPoint(CVector{1.0, 0.0}), DomainError);
  CHECK_NOTHROW(BallPoint(CVector{1.0, 0.0}, BallPoint::Closure::closed));
  CHECK_THROWS_AS(BallPoint(CVector{1.0, 0.1}, BallPoint::Closure::closed), DomainError);
  CHECK_THROWS_AS(BallPoint(CVector{}), InputError);
}

TEST_CASE("mobius exchanges 0 and a") {
  std::mt19937_64 rng(1);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int k = 0; k < 20; ++k) {
      const BallPoint a(random_point(rng, n));
      CHECK(dist(mobius(a, BallPoint::origin(n)).coords(), a.coords()) < 1e-14);
      CHECK(mobius(a, a).norm() < 1e-12);
    }
  }
}

TEST_CASE("mobius is an involution") {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + k % 3;
    const BallPoint a(random_point(rng, n, 0.99));
    const BallPoint z(random_point(rng, n, 0.99));
    CHECK(dist(mobius(a, mobius(a, z)).coords(), z.coords()) < 1e-10);
  }
}

TEST_CASE("mobius in one variable is the disc automorphism") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    const Complex a = random_point(rng, 1)[0];
    const Complex z = random_point(rng, 1)[0];
    const Complex expect = (a - z) / (1.0 - std::conj(a) * z);
    CHECK(std::abs(mobius(BallPoint({a}), BallPoint({z}))[0] - expect) < 1e-13);
  }
}

TEST_CASE("mobius modulus identity and interior images") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + k % 3;
    const auto a = random_point(rng, n, 0.999);
    const auto z = random_point(rng, n, 0.999);
    const double expect =
        1.0 - (1.0 - norm_sq(a)) * (1.0 - norm_sq(z)) / std::norm(1.0 - inner(z, a));
    const auto image = mobius(BallPoint(a), BallPoint(z));
    CHECK(std::abs(image.norm_sq() - expect) < 1e-10);
    CHECK(image.norm_sq() < 1.0);
  }
}

TEST_CASE("mobius rejects boundary points") {
  const BallPoint edge(CVector{1.0, 0.0}, BallPoint::Closure::closed);
  const BallPoint inside(CVector{0.1, 0.2});
  CHECK_THROWS_AS(mobius(edge, inside), DomainError);
  CHECK_THROWS_AS(mobius(inside, edge), DomainError);
  CHECK_THROWS_AS(mobius(inside, BallPoint(CVector{0.1})), InputError);
}

TEST_CASE("green function") {
  const auto a = BallPoint::on_axis(2, 0, 0.5);
  CHECK(green(BallPoint::origin(2), a) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(green(a, a), SingularInputError);

  SUBCASE("symmetric and non-negative") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
      const std::size_t n = 1 + k % 3;
      const BallPoint z(random_point(rng, n));
      const BallPoint w(random_point(rng, n));
      const double g = green(z, w);
      CHECK(g >= 0.0);
      CHECK(std::abs(g - green(w, z)) < 1e-10);
    }
  }

  SUBCASE("decreases toward the sphere along a ray") {
    const BallPoint b(CVector{Complex{0.2, 0.1}, Complex{-0.3, 0.0}});
    const CVector dir{Complex{0.0, 1.0} / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
    double prev = INFINITY;
    for (double r : {0.9, 0.95, 0.99, 0.995, 0.999, 0.9999}) {
      const double g = green(BallPoint(scaled(dir, r)), b);
      CHECK(g < prev);
      prev = g;
    }
    CHECK(prev < 1e-3);
  }

  SUBCASE("blows up approaching a") {
    double prev = 0.0;
    for (double eps : {1e-1, 1e-2, 1e-4, 1e-8}) {
      const double g = green(BallPoint(CVector{0.5 + eps, 0.0}), a);
      CHECK(g > prev);
      prev = g;
    }
    CHECK(prev > 15.0);
  }
}

TEST_CASE("sphere samples are unit vectors and deterministic") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto s = sample_sphere(n, 1000, 42);
    for (const auto& xi : s) CHECK(std::abs(norm(xi) - 1.0) <= 1e-12);
    CHECK(s == sample_sphere(n, 1000, 42));
    CHECK_FALSE(s == sample_sphere(n, 1000, 43));
  }
  // Prefixes nest: the k-th sample does not depend on the count.
  const auto small = sample_sphere(3, 10, 9);
  const auto large = sample_sphere(3, 100, 9);
  CHECK(std::equal(small.begin(), small.end(), large.begin()));
}

TEST_CASE("sphere second moment") {
  const auto s = sample_sphere(2, 1000000, 42);
  double acc = 0.0;
  for (const auto& xi : s) acc += std::norm(xi[0]);
  CHECK(std::abs(acc / static_cast<double>(s.size()) - 0.5) <= 0.003);
}

TEST_CASE("sphere moments match closed forms within 3 standard errors") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto s = sample_sphere(n, 200000, 7);
    for (unsigned m = 1; m <= 4; ++m) {
      double sum = 0.0, sum2 = 0.0;
      for (const auto& xi : s) {
        const double v = std::pow(std::norm(xi[0]), m);
        sum += v;
        sum2 += v * v;
      }
      const double N = static_cast<double>(s.size());
      const double mean = sum / N;
      const double se = std::sqrt(std::max(sum2 / N - mean * mean, 0.0) / N);
      // (n-1)! m! / (m+n-1)!
      const double exact = std::exp(std::lgamma(n) + std::lgamma(m + 1.0) - std::lgamma(m + n));
      CHECK(std::abs(mean - exact) <= 3.0 * se + 1e-15);
    }
  }
}

TEST_CASE("ball samples lie inside the ball with uniform volume law") {
  const auto pts = sample_ball(2, 100000, 3);
  double below = 0.0;
  for (const auto& z : pts) {
    CHECK(norm_sq(z) < 1.0);
    if (norm(z) < 0.5) below += 1.0;
  }
  // v({|z| < r}) = r^{2n}
  CHECK(std::abs(below / 100000.0 - std::pow(0.5, 4)) < 0.005);
}

TEST_CASE("sampling scheme validation") {
  SamplingScheme s;
  s.radial_grid = {0.1, 0.5, 0.9};
  CHECK_NOTHROW(s.validate());
  s.radial_grid = {0.5, 0.1};
  CHECK_THROWS_AS(s.validate(), InputError);
  s.radial_grid = {0.5, 1.0};
  CHECK_THROWS_AS(s.validate(), InputError);
  s.radial_grid = {0.5};
  s.sphere_samples = 0;
  CHECK_THROWS_AS(s.validate(), InputError);
}

}  // TEST_SUITE
