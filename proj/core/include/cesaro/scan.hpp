#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cesaro/ball.hpp"

namespace cesaro {

/// Product grid {r * xi} of radii and unit directions used for sampled suprema.
struct ScanGrid {
  std::vector<double> radii;
  std::vector<CVector> directions;

  /// Level 0 is scheme.radial_grid x scan_directions(n, scheme.sphere_samples, seed).
  /// Each further level inserts the geometric midpoint 1 - sqrt((1-a)(1-b)) between
  /// neighbouring radii, appends 1 - (1 - r_max)/10 and doubles the direction count,
  /// so level k's grid contains level k-1's.
  static ScanGrid at_level(const SamplingScheme& scheme, std::size_t n, unsigned level);

  std::size_t size() const noexcept { return radii.size() * directions.size(); }
};

std::vector<double> refine_radii(std::span<const double> radii);

/// For each radius r, max over directions xi of value(r * xi). Non-finite values raise
/// EvaluationError naming the point.
std::vector<double> per_radius_max(const ScanGrid& grid,
                                   const std::function<double(std::span<const Complex>)>& value);

}  // namespace cesaro
