#include "cesaro/ball.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cesaro/errors.hpp"
#include "cesaro/parallel.hpp"
#include "cesaro/random.hpp"

namespace cesaro {

BallPoint::BallPoint(CVector coordinates, Closure closure) : coords_(std::move(coordinates)) {
  if (coords_.empty()) throw InputError("ball point needs at least one coordinate");
  const double r2 = cesaro::norm_sq(coords_);
  if (!std::isfinite(r2)) throw DomainError("ball point has non-finite coordinates");
  if (closure == Closure::open ? r2 >= 1.0 : r2 > 1.0) {
    throw DomainError("point with |z| = " + std::to_string(std::sqrt(r2)) + " lies outside the " +
                      (closure == Closure::open ? "open" : "closed") + " unit ball");
  }
}

BallPoint BallPoint::origin(std::size_t n) { return BallPoint(CVector(n, Complex{0.0, 0.0})); }

BallPoint BallPoint::on_axis(std::size_t n, std::size_t j, double r) {
  CVector c(n, Complex{0.0, 0.0});
  c.at(j) = r;
  return BallPoint(std::move(c));
}

std::vector<double> SamplingScheme::default_radial_grid() {
  return {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99, 0.999, 0.9999};
}

void SamplingScheme::validate() const {
  if (radial_grid.empty()) throw InputError("sampling scheme: radial grid is empty");
  for (std::size_t i = 0; i < radial_grid.size(); ++i) {
    const double r = radial_grid[i];
    if (!(r >= 0.0 && r < 1.0)) throw InputError("sampling scheme: radius outside [0, 1)");
    if (i > 0 && !(r > radial_grid[i - 1])) {
      throw InputError("sampling scheme: radial grid must be strictly increasing");
    }
  }
  if (sphere_samples == 0) throw InputError("sampling scheme: sphere_samples must be >= 1");
}

namespace {

void require_interior(const BallPoint& p, const char* name) {
  if (!p.interior()) throw DomainError(std::string(name) + " must lie in the open unit ball");
}

}  // namespace

BallPoint mobius(const BallPoint& a, const BallPoint& z) {
  require_interior(a, "a");
  require_interior(z, "z");
  if (a.dimension() != z.dimension()) throw InputError("mobius: dimension mismatch");

  const std::size_t n = a.dimension();
  const double a2 = a.norm_sq();
  const Complex za = inner(z.coords(), a.coords());
  const Complex denom = Complex{1.0, 0.0} - za;

  CVector out(n);
  if (a2 == 0.0) {
    for (std::size_t j = 0; j < n; ++j) out[j] = -z[j];
    return BallPoint(std::move(out));
  }
  const double s = std::sqrt(1.0 - a2);
  for (std::size_t j = 0; j < n; ++j) {
    const Complex proj = za / a2 * a[j];  // P_a z
    const Complex perp = z[j] - proj;     // Q_a z
    out[j] = (a[j] - proj - s * perp) / denom;
  }
  // Rounding can place the image of a near-boundary point on the sphere.
  const double r2 = cesaro::norm_sq(out);
  if (r2 >= 1.0) {
    const double shrink = std::nextafter(1.0, 0.0) / std::sqrt(r2);
    for (auto& c : out) c *= shrink;
  }
  return BallPoint(std::move(out));
}

double mobius_modulus_sq(const BallPoint& a, const BallPoint& z) {
  require_interior(a, "a");
  require_interior(z, "z");
  const double denom = std::norm(Complex{1.0, 0.0} - inner(z.coords(), a.coords()));
  return 1.0 - one_minus_norm_sq(a.coords()) * one_minus_norm_sq(z.coords()) / denom;
}

double green(const BallPoint& z, const BallPoint& a) {
  if (z.dimension() != a.dimension()) throw InputError("green: dimension mismatch");
  const double m2 = norm_sq(mobius(a, z).coords());
  if (m2 == 0.0) throw SingularInputError("green: logarithmic singularity at a (z = a)");
  return -0.5 * std::log(m2);
}

std::vector<CVector> sample_sphere(std::size_t n, std::size_t count, std::uint64_t seed) {
  if (n == 0) throw InputError("sample_sphere: n must be >= 1");
  std::vector<CVector> out(count);
  parallel_for(count, [&](std::size_t k) {
    const CounterRng rng(seed, k);
    CVector xi(n);
    double r2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double re = 0.0;
      double im = 0.0;
      rng.normal_pair(j, re, im);
      xi[j] = {re, im};
      r2 += re * re + im * im;
    }
    const double inv = 1.0 / std::sqrt(r2);
    for (auto& c : xi) c *= inv;
    out[k] = std::move(xi);
  });
  return out;
}

std::vector<CVector> sample_ball(std::size_t n, std::size_t count, std::uint64_t seed) {
  auto points = sample_sphere(n, count, seed);
  for (std::size_t k = 0; k < count; ++k) {
    // Separate stream family for the radius so the direction stream is unchanged.
    const CounterRng rng(seed ^ 0x5bd1e9955bd1e995ULL, k);
    const double r = std::pow(rng.uniform(0), 1.0 / (2.0 * static_cast<double>(n))) *
                     std::nextafter(1.0, 0.0);
    for (auto& c : points[k]) c *= r;
  }
  return points;
}

std::vector<CVector> scan_directions(std::size_t n, std::size_t count, std::uint64_t seed) {
  if (n == 0) throw InputError("scan_directions: n must be >= 1");
  std::vector<CVector> out;
  if (n == 1) {
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
      out.push_back(CVector{std::polar(1.0, theta)});
    }
    return out;
  }
  out.reserve(n + count);
  for (std::size_t j = 0; j < n; ++j) {
    CVector e(n, Complex{0.0, 0.0});
    e[j] = 1.0;
    out.push_back(std::move(e));
  }
  auto random = sample_sphere(n, count, seed);
  out.insert(out.end(), std::make_move_iterator(random.begin()), std::make_move_iterator(random.end()));
  return out;
}

}  // namespace cesaro
