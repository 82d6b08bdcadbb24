#include "cesaro/scan.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cesaro/errors.hpp"
#include "cesaro/parallel.hpp"

namespace cesaro {

std::vector<double> refine_radii(std::span<const double> radii) {
  std::vector<double> out;
  out.reserve(2 * radii.size() + 1);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (i > 0) out.push_back(1.0 - std::sqrt((1.0 - radii[i - 1]) * (1.0 - radii[i])));
    out.push_back(radii[i]);
  }
  if (!radii.empty()) out.push_back(1.0 - (1.0 - radii.back()) / 10.0);
  return out;
}

ScanGrid ScanGrid::at_level(const SamplingScheme& scheme, std::size_t n, unsigned level) {
  scheme.validate();
  ScanGrid grid;
  grid.radii = scheme.radial_grid;
  for (unsigned k = 0; k < level; ++k) grid.radii = refine_radii(grid.radii);
  grid.directions = scan_directions(n, scheme.sphere_samples << level, scheme.seed);
  return grid;
}

std::vector<double> per_radius_max(const ScanGrid& grid,
                                   const std::function<double(std::span<const Complex>)>& value) {
  const std::size_t nd = grid.directions.size();
  const std::size_t dim = nd == 0 ? 0 : grid.directions.front().size();
  auto values = parallel_map<double>(grid.size(), [&](std::size_t idx) {
    const double r = grid.radii[idx / nd];
    const CVector& xi = grid.directions[idx % nd];
    CVector z(dim);
    for (std::size_t j = 0; j < dim; ++j) z[j] = r * xi[j];
    const double v = value(z);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "scan value is not finite at radius " << r << ", direction index " << idx % nd;
      throw EvaluationError(msg.str());
    }
    return v;
  });
  std::vector<double> out(grid.radii.size(), 0.0);
  for (std::size_t i = 0; i < grid.radii.size(); ++i) {
    out[i] = *std::max_element(values.begin() + static_cast<std::ptrdiff_t>(i * nd),
                               values.begin() + static_cast<std::ptrdiff_t>((i + 1) * nd));
  }
  return out;
}

}  // namespace cesaro
