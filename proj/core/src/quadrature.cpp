#include "cesaro/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <sstream>
#include <string>

#include "cesaro/errors.hpp"
#include "cesaro/parallel.hpp"

namespace cesaro {

BallIntegralSpec BallIntegralSpec::monte_carlo(std::size_t n, double q, std::size_t samples,
                                               std::uint64_t seed, unsigned radial_order) {
  BallIntegralSpec spec;
  spec.dimension = n;
  spec.weight_exponent = q;
  spec.scheme.radial_grid = SamplingScheme::default_radial_grid();
  spec.scheme.sphere_samples = samples;
  spec.scheme.seed = seed;
  spec.scheme.refinement_levels = 0;
  spec.radial_order = radial_order;
  spec.sphere_rule = SphereRule::monte_carlo;
  return spec;
}

BallIntegralSpec BallIntegralSpec::circle_product(double q, unsigned refinement_levels, unsigned radial_order) {
  BallIntegralSpec spec;
  spec.dimension = 1;
  spec.weight_exponent = q;
  spec.scheme.radial_grid = SamplingScheme::default_radial_grid();
  spec.scheme.sphere_samples = 64;
  spec.scheme.refinement_levels = refinement_levels;
  spec.radial_order = radial_order;
  spec.sphere_rule = SphereRule::circle_trapezoid;
  return spec;
}

void BallIntegralSpec::validate() const {
  if (dimension == 0) throw InputError("ball integral: dimension must be >= 1");
  if (!(weight_exponent > -1.0)) {
    throw InputError("ball integral: weight exponent q must satisfy q > -1 (got " +
                     std::to_string(weight_exponent) + ")");
  }
  if (radial_order == 0) throw InputError("ball integral: radial order must be >= 1");
  if (scheme.sphere_samples == 0) throw InputError("ball integral: sphere_samples must be >= 1");
  if (sphere_rule == SphereRule::circle_trapezoid && dimension != 1) {
    throw InputError("ball integral: the circle product rule requires n = 1");
  }
}

QuadratureRule radial_rule(std::size_t n, double q, unsigned order, unsigned levels) {
  const double b = static_cast<double>(n) - 1.0;
  if (levels == 0) return shifted_gauss_jacobi(order, q, b);

  QuadratureRule rule;
  for (unsigned k = 0; k < levels; ++k) {
    const double lo = 1.0 - std::ldexp(1.0, -static_cast<int>(k));
    const double hi = 1.0 - std::ldexp(1.0, -static_cast<int>(k) - 1);
    const QuadratureRule panel = gauss_legendre(order, lo, hi);
    for (std::size_t i = 0; i < panel.nodes.size(); ++i) {
      const double u = panel.nodes[i];
      rule.nodes.push_back(u);
      rule.weights.push_back(panel.weights[i] * std::pow(u, b) * std::pow(1.0 - u, q));
    }
  }
  // Final panel [c, 1]: (1-c)^{q+1} int_0^1 (1-s)^q h(c + (1-c)s) ds.
  const double width = std::ldexp(1.0, -static_cast<int>(levels));
  const double c = 1.0 - width;
  const QuadratureRule tail = shifted_gauss_jacobi(order, q, 0.0);
  const double factor = std::pow(width, q + 1.0);
  for (std::size_t i = 0; i < tail.nodes.size(); ++i) {
    const double u = c + width * tail.nodes[i];
    rule.nodes.push_back(u);
    rule.weights.push_back(tail.weights[i] * factor * std::pow(u, b));
  }
  return rule;
}

namespace {

[[noreturn]] void throw_nonfinite(std::span<const Complex> z, double value) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "integrand is not finite (" << value << ") at node (";
  for (std::size_t j = 0; j < z.size(); ++j) msg << (j ? ", " : "") << z[j];
  msg << ")";
  throw EvaluationError(msg.str());
}

double checked(const BallIntegrand& F, std::span<const Complex> z) {
  const double v = F(z);
  if (!std::isfinite(v)) throw_nonfinite(z, v);
  return v;
}

IntegralEstimate monte_carlo_integral(const BallIntegrand& F, const BallIntegralSpec& spec,
                                      const QuadratureRule& radial) {
  const std::size_t n = spec.dimension;
  const auto directions = sample_sphere(n, spec.scheme.sphere_samples, spec.scheme.seed);
  std::vector<double> sqrt_u(radial.nodes.size());
  for (std::size_t i = 0; i < sqrt_u.size(); ++i) sqrt_u[i] = std::sqrt(radial.nodes[i]);

  const double nd = static_cast<double>(n);
  auto per_direction = parallel_map<double>(directions.size(), [&](std::size_t k) {
    CVector z(n);
    std::vector<double> terms(sqrt_u.size());
    for (std::size_t i = 0; i < sqrt_u.size(); ++i) {
      for (std::size_t j = 0; j < n; ++j) z[j] = sqrt_u[i] * directions[k][j];
      terms[i] = radial.weights[i] * checked(F, z);
    }
    return nd * pairwise_sum(terms);
  });

  const double count = static_cast<double>(per_direction.size());
  const double mean = pairwise_sum(per_direction) / count;
  std::vector<double> dev(per_direction.size());
  for (std::size_t k = 0; k < dev.size(); ++k) dev[k] = (per_direction[k] - mean) * (per_direction[k] - mean);
  const double var = per_direction.size() > 1 ? pairwise_sum(dev) / (count - 1.0) : 0.0;
  return {mean, std::sqrt(var / count), per_direction.size() * sqrt_u.size()};
}

struct CircleAverage {
  double value;
  double difference;
  std::size_t points;
};

// Adaptive equispaced mean of F(rho e^{i theta}) over theta; nested doubling.
CircleAverage circle_average(const BallIntegrand& F, double rho, std::size_t start, std::size_t max_points,
                             double rel_tol) {
  CVector z(1);
  auto at = [&](std::size_t k, std::size_t m) {
    z[0] = std::polar(rho, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m));
    return checked(F, z);
  };

  std::size_t m = std::max<std::size_t>(start, 4);
  std::vector<double> values(m);
  for (std::size_t k = 0; k < m; ++k) values[k] = at(k, m);
  double sum = pairwise_sum(values);
  double abs_sum = 0.0;
  for (double v : values) abs_sum += std::abs(v);
  double mean = sum / static_cast<double>(m);
  std::size_t evaluations = m;

  while (true) {
    const std::size_t fine = 2 * m;
    std::vector<double> odd(m);
    for (std::size_t k = 0; k < m; ++k) odd[k] = at(2 * k + 1, fine);
    evaluations += m;
    sum += pairwise_sum(odd);
    for (double v : odd) abs_sum += std::abs(v);
    const double fine_mean = sum / static_cast<double>(fine);
    const double diff = std::abs(fine_mean - mean);
    m = fine;
    mean = fine_mean;
    // Scale by the mean modulus so sign-changing integrands with zero mean terminate.
    if (diff <= rel_tol * abs_sum / static_cast<double>(fine)) return {mean, diff, evaluations};
    if (2 * m > max_points) {
      throw AccuracyError("circle rule did not converge at radius " + std::to_string(rho) + " with " +
                              std::to_string(m) + " points",
                          mean, 0.0, diff);
    }
  }
}

IntegralEstimate circle_product_integral(const BallIntegrand& F, const BallIntegralSpec& spec,
                                         const QuadratureRule& radial) {
  struct NodeResult {
    double value = 0.0;
    double difference = 0.0;
    std::size_t points = 0;
  };
  auto nodes = parallel_map<NodeResult>(radial.nodes.size(), [&](std::size_t i) {
    const auto avg = circle_average(F, std::sqrt(radial.nodes[i]), spec.scheme.sphere_samples,
                                    spec.max_circle_points, spec.relative_tolerance);
    return NodeResult{radial.weights[i] * avg.value, radial.weights[i] * avg.difference, avg.points};
  });
  std::vector<double> values(nodes.size());
  std::vector<double> errors(nodes.size());
  std::size_t evaluations = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    values[i] = nodes[i].value;
    errors[i] = nodes[i].difference;
    evaluations += nodes[i].points;
  }
  return {pairwise_sum(values), pairwise_sum(errors), evaluations};
}

}  // namespace

IntegralEstimate ball_integral(const BallIntegrand& F, const BallIntegralSpec& spec) {
  spec.validate();
  const auto radial =
      radial_rule(spec.dimension, spec.weight_exponent, spec.radial_order, spec.scheme.refinement_levels);
  if (spec.sphere_rule == SphereRule::circle_trapezoid) return circle_product_integral(F, spec, radial);
  return monte_carlo_integral(F, spec, radial);
}

IntegralEstimate zonal_ball_integral(const std::function<double(Complex)>& h, const BallIntegralSpec& spec) {
  if (spec.dimension == 0) throw InputError("zonal ball integral: dimension must be >= 1");
  if (!(spec.weight_exponent > -1.0)) throw InputError("zonal ball integral: q must satisfy q > -1");
  const double n = static_cast<double>(spec.dimension);
  const double q = spec.weight_exponent;

  BallIntegralSpec disc = spec;
  disc.dimension = 1;
  disc.weight_exponent = q + n - 1.0;
  disc.sphere_rule = SphereRule::circle_trapezoid;
  const double c = std::exp(std::lgamma(n + 1.0) + std::lgamma(q + 1.0) - std::lgamma(n + q + 1.0)) * (q + n);

  auto est = ball_integral([&](std::span<const Complex> z) { return h(z[0]); }, disc);
  return {c * est.value, c * est.error, est.evaluations};
}

double monomial_ball_integral(std::size_t n, unsigned m, double t) {
  if (!(t > -1.0)) throw DomainError("monomial_ball_integral: t must satisfy t > -1");
  if (n == 0) throw InputError("monomial_ball_integral: n must be >= 1");
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  return std::exp(std::lgamma(t + 1.0) + std::lgamma(md + 1.0) + std::lgamma(nd + 1.0) -
                  std::lgamma(nd + 1.0 + t + md));
}

namespace {

constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7.
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo;
  double hi;
  Complex value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const std::function<Complex(double)>& F, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  auto eval = [&](double t) {
    const Complex v = F(t);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw EvaluationError("path integrand is not finite at t = " + std::to_string(t));
    }
    return v;
  };
  Complex kronrod = kKronrodWeights[7] * eval(mid);
  Complex gauss = kGaussWeights[3] * (kronrod / kKronrodWeights[7]);
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const Complex pair = eval(mid - dx) + eval(mid + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

PathIntegral path_integral_unit(const std::function<Complex(double)>& F, double abs_tolerance,
                                std::size_t max_intervals) {
  std::priority_queue<Panel> panels;
  panels.push(gauss_kronrod(F, 0.0, 1.0));
  Complex total = panels.top().value;
  double error = panels.top().error;

  while (error > abs_tolerance) {
    if (panels.size() >= max_intervals) {
      throw AccuracyError("path integral did not reach tolerance " + std::to_string(abs_tolerance) +
                              " within " + std::to_string(max_intervals) + " intervals",
                          total.real(), total.imag(), error);
    }
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Panel left = gauss_kronrod(F, worst.lo, mid);
    const Panel right = gauss_kronrod(F, mid, worst.hi);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum in interval order so the result does not carry cancellation from the updates.
  std::vector<Panel> all;
  all.reserve(panels.size());
  while (!panels.empty()) {
    all.push_back(panels.top());
    panels.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  Complex sum{0.0, 0.0};
  double err = 0.0;
  for (const auto& p : all) {
    sum += p.value;
    err += p.error;
  }
  return {sum, err, all.size()};
}

}  // namespace cesaro
