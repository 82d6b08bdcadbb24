#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cesaro/types.hpp"

namespace cesaro {

/// A point of the unit ball B of C^n. Interior points satisfy |z| < 1; the closed
/// variant admits |z| <= 1 for boundary-limit scans.
class BallPoint {
 public:
  enum class Closure { open, closed };

  explicit BallPoint(CVector coordinates, Closure closure = Closure::open);

  static BallPoint origin(std::size_t n);
  /// r * e_{j}; 0-based coordinate index.
  static BallPoint on_axis(std::size_t n, std::size_t j, double r);

  std::size_t dimension() const noexcept { return coords_.size(); }
  std::span<const Complex> coords() const noexcept { return coords_; }
  const Complex& operator[](std::size_t j) const { return coords_[j]; }
  double norm() const noexcept { return cesaro::norm(coords_); }
  double norm_sq() const noexcept { return cesaro::norm_sq(coords_); }
  bool interior() const noexcept { return norm_sq() < 1.0; }

 private:
  CVector coords_;
};

/// Deterministic description of where integrals and suprema are sampled.
struct SamplingScheme {
  std::vector<double> radial_grid;  // strictly increasing, each in [0, 1)
  std::size_t sphere_samples = 256;
  std::uint64_t seed = 42;
  unsigned refinement_levels = 0;

  /// Coarse interior grid {0, 0.1, ..., 0.8} followed by {0.9, 0.99, 0.999, 0.9999}.
  static std::vector<double> default_radial_grid();

  /// Throws InputError unless the invariants above hold.
  void validate() const;
};

/// The involutive automorphism of B exchanging 0 and a:
///   phi_a(z) = (a - P_a z - s Q_a z) / (1 - <z, a>),  s = sqrt(1 - |a|^2),
/// with P_a the orthogonal projection onto span(a) and Q_a = I - P_a (phi_0(z) = -z).
BallPoint mobius(const BallPoint& a, const BallPoint& z);

/// |phi_a(z)|^2 through 1 - (1-|a|^2)(1-|z|^2)/|1-<z,a>|^2.
double mobius_modulus_sq(const BallPoint& a, const BallPoint& z);

/// Green's function log(1/|phi_a(z)|); throws SingularInputError when z = a.
double green(const BallPoint& z, const BallPoint& a);

/// Pseudo-uniform points on the unit sphere of C^n from normalized complex Gaussians.
/// Sample k depends only on (seed, k), so a longer request extends a shorter one.
std::vector<CVector> sample_sphere(std::size_t n, std::size_t count, std::uint64_t seed);

/// Uniform points in the ball with respect to volume (radius U^{1/(2n)} on a sphere sample).
std::vector<CVector> sample_ball(std::size_t n, std::size_t count, std::uint64_t seed);

/// Directions used by supremum scans. n = 1: the count equispaced unit complex numbers
/// e^{2 pi i k / count} (nested under doubling). n >= 2: the basis vectors e_1..e_n
/// followed by sample_sphere(n, count, seed).
std::vector<CVector> scan_directions(std::size_t n, std::size_t count, std::uint64_t seed);

}  // namespace cesaro
