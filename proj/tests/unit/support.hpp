#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "cesaro/types.hpp"

namespace testing {

using cesaro::Complex;
using cesaro::CVector;

// Independent generator for test points: std::mt19937_64, not the library's counter RNG.
inline CVector random_point(std::mt19937_64& rng, std::size_t n, double max_radius = 0.95) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  CVector z(n);
  double s = 0.0;
  for (auto& c : z) {
    c = {normal(rng), normal(rng)};
    s += std::norm(c);
  }
  const double r = max_radius * std::pow(unif(rng), 1.0 / (2.0 * static_cast<double>(n)));
  for (auto& c : z) c *= r / std::sqrt(s);
  return z;
}

inline double rel_err(Complex a, Complex b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace testing
