#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

namespace cesaro {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Hermitian inner product <z, w> = sum_j z_j conj(w_j).
inline Complex inner(std::span<const Complex> z, std::span<const Complex> w) {
  Complex acc{0.0, 0.0};
  for (std::size_t j = 0; j < z.size(); ++j) acc += z[j] * std::conj(w[j]);
  return acc;
}

inline double norm_sq(std::span<const Complex> z) {
  double acc = 0.0;
  for (const auto& c : z) acc += std::norm(c);
  return acc;
}

inline double norm(std::span<const Complex> z) { return std::sqrt(norm_sq(z)); }

/// 1 - |z|^2, computed as (1 - |z|)(1 + |z|) to keep relative accuracy near the sphere.
inline double one_minus_norm_sq(std::span<const Complex> z) {
  const double r = norm(z);
  return (1.0 - r) * (1.0 + r);
}

inline double one_minus_r_sq(double r) { return (1.0 - r) * (1.0 + r); }

/// Bilinear pairing sum_j z_j v_j (no conjugation); Rf(z) = dot(z, grad f(z)).
inline Complex dot(std::span<const Complex> z, std::span<const Complex> v) {
  Complex acc{0.0, 0.0};
  for (std::size_t j = 0; j < z.size(); ++j) acc += z[j] * v[j];
  return acc;
}

inline CVector scaled(std::span<const Complex> z, double s) {
  CVector out(z.begin(), z.end());
  for (auto& c : out) c *= s;
  return out;
}

}  // namespace cesaro
