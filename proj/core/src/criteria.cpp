#include "cesaro/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cesaro/errors.hpp"
#include "cesaro/operator.hpp"
#include "cesaro/parallel.hpp"
#include "cesaro/scan.hpp"

namespace cesaro {

std::string to_string(Trend trend) {
  switch (trend) {
    case Trend::bounded: return "bounded";
    case Trend::vanishing: return "vanishing";
    case Trend::diverging: return "diverging";
    case Trend::inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string to_string(CompactnessRegime regime) {
  return regime == CompactnessRegime::bloch_membership ? "bloch_membership" : "little_oh";
}

TrendSummary classify_trend(std::span<const double> radii, std::span<const double> values,
                            const TrendPolicy& policy) {
  if (radii.size() != values.size() || values.empty()) {
    throw InputError("classify_trend: radii and values must be non-empty and of equal length");
  }
  std::size_t tail = 0;
  while (tail < radii.size() && radii[tail] < policy.tail_start) ++tail;
  if (tail == radii.size()) tail = 0;

  TrendSummary out;
  out.peak = *std::max_element(values.begin(), values.end());
  out.last = values.back();
  const double first = values[tail];
  if (first > 0.0) {
    out.growth_factor = out.last / first;
  } else {
    out.growth_factor = out.last > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
  }

  bool increasing = values.size() - tail >= 2;
  for (std::size_t i = tail + 1; i < values.size(); ++i) increasing = increasing && values[i] > values[i - 1];

  if (out.peak <= 0.0 || out.last < policy.vanish_fraction * out.peak) {
    out.trend = Trend::vanishing;
  } else if (out.growth_factor > policy.diverge_factor) {
    out.trend = Trend::diverging;
  } else if (increasing && out.growth_factor > policy.steady_growth) {
    out.trend = Trend::inconclusive;
  } else {
    out.trend = Trend::bounded;
  }
  return out;
}

namespace {

void require_dimension(const AnalyticFunction& g, const SpaceParams& params) {
  params.validate();
  if (g.dimension() != params.n) throw InputError("g has dimension " + std::to_string(g.dimension()) +
                                                  " but n = " + std::to_string(params.n));
}

double boundary_statistic(const AnalyticFunction& g, const SpaceParams& params, std::span<const Complex> z) {
  const double gap = one_minus_norm_sq(z);
  return std::pow(gap, params.alpha) * gp_weight_from_gap(params.s_star(), gap) * std::abs(g.radial(z));
}

}  // namespace

CriterionReport criterion_statistic(const AnalyticFunction& g, const SpaceParams& params,
                                    const SamplingScheme& scheme, const TrendPolicy& policy) {
  require_dimension(g, params);
  const ScanGrid grid = ScanGrid::at_level(scheme, params.n, scheme.refinement_levels);
  CriterionReport report;
  report.params = params;
  report.s_star = params.s_star();
  report.radii = grid.radii;
  report.values = per_radius_max(grid, [&](std::span<const Complex> z) { return boundary_statistic(g, params, z); });
  report.summary = classify_trend(report.radii, report.values, policy);
  return report;
}

CompactnessReport compactness_scan(const AnalyticFunction& g, const SpaceParams& params,
                                   const SamplingScheme& scheme, const TrendPolicy& policy) {
  CompactnessReport out;
  out.scan = criterion_statistic(g, params, scheme, policy);
  const double s = params.s_star();
  const Trend trend = out.scan.summary.trend;
  if (s < 1.0 && !is_unit_exponent(s)) {
    out.regime = CompactnessRegime::bloch_membership;
    out.compact = trend == Trend::bounded || trend == Trend::vanishing;
  } else {
    out.regime = CompactnessRegime::little_oh;
    out.compact = trend == Trend::vanishing;
  }
  return out;
}

namespace {

bool is_integer(double e) { return std::abs(e - std::round(e)) <= 1e-12 && std::abs(e) < 64.0; }

Complex integer_power(Complex x, long e) {
  if (e < 0) return Complex{1.0, 0.0} / integer_power(x, -e);
  Complex acc{1.0, 0.0};
  while (e > 0) {
    if (e & 1) acc *= x;
    x *= x;
    e >>= 1;
  }
  return acc;
}

// Principal-branch x^e; exact repeated multiplication for integer exponents.
Complex principal_power(Complex x, double e) {
  if (is_integer(e)) return integer_power(x, std::lround(e));
  if (x == Complex{0.0, 0.0}) return e > 0.0 ? Complex{0.0, 0.0} : Complex{INFINITY, 0.0};
  return std::exp(e * std::log(x));
}

CVector conj_of(std::span<const Complex> w) {
  CVector out(w.begin(), w.end());
  for (auto& c : out) c = std::conj(c);
  return out;
}

}  // namespace

AnalyticFunction power_test_function(const BallPoint& w, const SpaceParams& params) {
  params.validate();
  if (w.dimension() != params.n) throw InputError("power test function: w must have dimension n");
  const double s = params.s_star();
  if (!(s > 1.0) || is_unit_exponent(s)) {
    throw InputError("power test function requires s* = (n+1+q)/p > 1 (got " + std::to_string(s) + ")");
  }
  const CVector point(w.coords().begin(), w.coords().end());
  const CVector wbar = conj_of(point);
  const double gap = one_minus_norm_sq(point);
  return AnalyticFunction(
      params.n,
      [point, gap, s](std::span<const Complex> z) {
        return gap * principal_power(Complex{1.0, 0.0} - inner(z, point), -s);
      },
      [point, wbar, gap, s](std::span<const Complex> z) {
        const Complex factor = s * gap * principal_power(Complex{1.0, 0.0} - inner(z, point), -s - 1.0);
        CVector grad(wbar);
        for (auto& c : grad) c *= factor;
        return grad;
      },
      "power-test");
}

AnalyticFunction log_test_function(const BallPoint& w, const SpaceParams& params) {
  params.validate();
  if (w.dimension() != params.n) throw InputError("log test function: w must have dimension n");
  if (!is_unit_exponent(params.s_star())) {
    throw InputError("log test function requires s* = (n+1+q)/p = 1 (got " + std::to_string(params.s_star()) + ")");
  }
  if (w.norm_sq() == 0.0) throw DomainError("log test function: w = 0 makes the normalizer log 1/(1-|w|^2) vanish");
  const CVector point(w.coords().begin(), w.coords().end());
  const CVector wbar = conj_of(point);
  const double normalizer = std::pow(-std::log(one_minus_norm_sq(point)), -2.0 / params.p);
  const double exponent = 1.0 + 2.0 / params.p;
  return AnalyticFunction(
      params.n,
      [point, normalizer, exponent](std::span<const Complex> z) {
        const Complex ell = -std::log(Complex{1.0, 0.0} - inner(z, point));
        return normalizer * principal_power(ell, exponent);
      },
      [point, wbar, normalizer, exponent](std::span<const Complex> z) {
        const Complex one_minus = Complex{1.0, 0.0} - inner(z, point);
        const Complex ell = -std::log(one_minus);
        const Complex factor = normalizer * exponent * principal_power(ell, exponent - 1.0) / one_minus;
        CVector grad(wbar);
        for (auto& c : grad) c *= factor;
        return grad;
      },
      "log-test");
}

namespace {

CVector resolve_direction(const SpaceParams& params, const CVector& direction) {
  if (direction.empty()) {
    CVector e(params.n, Complex{0.0, 0.0});
    e[0] = 1.0;
    return e;
  }
  if (direction.size() != params.n) throw InputError("family direction must have dimension n");
  const double len = norm(direction);
  if (!(len > 0.0)) throw InputError("family direction must be nonzero");
  return scaled(direction, 1.0 / len);
}

template <typename Builder>
std::vector<FamilyMember> build_family(const SpaceParams& params, std::span<const double> radii,
                                       const CVector& direction, Builder&& build) {
  const CVector dir = resolve_direction(params, direction);
  std::vector<FamilyMember> out;
  out.reserve(radii.size());
  for (double r : radii) {
    BallPoint w(scaled(dir, r));
    FamilyMember m{build(w, params), r, CVector(w.coords().begin(), w.coords().end()), r};
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::vector<FamilyMember> power_family(const SpaceParams& params, std::span<const double> radii,
                                       const CVector& direction) {
  return build_family(params, radii, direction, power_test_function);
}

std::vector<FamilyMember> log_family(const SpaceParams& params, std::span<const double> radii,
                                     const CVector& direction) {
  return build_family(params, radii, direction, log_test_function);
}

std::vector<FamilyMember> test_family(const SpaceParams& params, std::span<const double> radii,
                                      const CVector& direction) {
  const double s = params.s_star();
  if (is_unit_exponent(s)) return log_family(params, radii, direction);
  if (s > 1.0) return power_family(params, radii, direction);
  throw InputError("no test family for s* < 1: the criterion there is g in B^alpha");
}

namespace {

double witness_bound(const AnalyticFunction& f, const AnalyticFunction& g, const SpaceParams& params,
                     const CVector& w) {
  if (w.empty()) return 0.0;
  return std::pow(one_minus_norm_sq(w), params.alpha) * std::abs(radial_of_image(f, g, w));
}

double image_norm(const AnalyticFunction& f, const AnalyticFunction& g, const SpaceParams& params,
                  const ScanGrid& full, double radius_limit) {
  ScanGrid grid;
  grid.directions = full.directions;
  for (double r : full.radii) {
    if (r <= radius_limit * (1.0 + 1e-15)) grid.radii.push_back(r);
  }
  if (grid.radii.empty()) return 0.0;
  const auto maxima = per_radius_max(grid, [&](std::span<const Complex> z) {
    return std::pow(one_minus_norm_sq(z), params.alpha) * std::abs(radial_of_image(f, g, z));
  });
  // |T_g f(0)| = 0, so the norm is the seminorm.
  return *std::max_element(maxima.begin(), maxima.end());
}

void summarize(ProbeReport& report) {
  if (report.entries.empty()) return;
  double max_ratio = 0.0;
  double min_ratio = std::numeric_limits<double>::infinity();
  for (const auto& e : report.entries) {
    max_ratio = std::max(max_ratio, e.ratio);
    min_ratio = std::min(min_ratio, e.ratio);
  }
  const auto& first = report.entries.front();
  const auto& last = report.entries.back();
  report.ratio_spread = min_ratio > 0.0 ? max_ratio / min_ratio : (max_ratio > 0.0 ? INFINITY : 1.0);
  report.ratio_growth = first.ratio > 0.0 ? last.ratio / first.ratio : (last.ratio > 0.0 ? INFINITY : 1.0);
  report.ratios_bounded = report.ratio_spread < 10.0;
  report.ratios_growing = report.ratio_growth > 5.0;
  report.ratios_decaying = max_ratio > 0.0 && last.ratio < 0.1 * max_ratio;
  report.images_decay = first.image_norm > 0.0 && last.image_norm < 0.1 * first.image_norm;
}

ProbeReport run_probe(const AnalyticFunction& g, const SpaceParams& params, const std::vector<FamilyMember>& family,
                      const SamplingScheme& scheme, const BallIntegralSpec& integral, bool exhaust) {
  require_dimension(g, params);
  if (family.empty()) throw InputError("probe: the test family is empty");
  const ScanGrid grid = ScanGrid::at_level(scheme, params.n, scheme.refinement_levels);

  ProbeReport report;
  report.params = params;
  for (const auto& member : family) {
    ProbeEntry e;
    e.parameter = member.parameter;
    e.lower_bound = witness_bound(member.f, g, params, member.witness);
    e.image_norm = std::max(image_norm(member.f, g, params, grid, exhaust ? member.radius_limit : 1.0),
                            e.lower_bound);
    const NormResult source = besov_norm(member.f, params, integral);
    if (!(source.value > 0.0)) throw InputError("probe: family members must be nonzero in B(p,q)");
    e.source_norm = source.value;
    e.source_error = source.error_estimate;
    e.ratio = e.image_norm / e.source_norm;
    report.entries.push_back(e);
  }
  summarize(report);
  return report;
}

}  // namespace

ProbeReport empirical_operator_ratio(const AnalyticFunction& g, const SpaceParams& params,
                                     const std::vector<FamilyMember>& family, const SamplingScheme& scheme,
                                     const BallIntegralSpec& integral) {
  return run_probe(g, params, family, scheme, integral, true);
}

ProbeReport compactness_probe(const AnalyticFunction& g, const SpaceParams& params,
                              std::span<const double> w_radii, const SamplingScheme& scheme,
                              const BallIntegralSpec& integral) {
  return run_probe(g, params, test_family(params, w_radii), scheme, integral, false);
}

double lemma1_constant(std::size_t n, double q, double r0) {
  if (!(r0 > 0.0 && r0 < 1.0)) throw InputError("lemma 1: r0 must lie in (0, 1)");
  const double nd = static_cast<double>(n);
  return std::pow(4.0, nd + 1.0) * std::pow(r0, -2.0 * nd) * std::pow((1.0 + r0) / (1.0 - r0), std::abs(q));
}

InequalityReport lemma1_embedding_check(const TruncatedSeries& f, const SpaceParams& params, double r0,
                                        std::size_t points, std::uint64_t seed, const BallIntegralSpec& integral,
                                        double tolerance) {
  params.validate();
  if (f.dimension() != params.n) throw InputError("lemma 1: f must have dimension n");
  if (f.is_zero()) throw InputError("lemma 1: f must be nonzero");
  const double constant = lemma1_constant(params.n, params.q, r0);
  const auto fn = AnalyticFunction::from_series(f);
  const TruncatedSeries rf = radial_derivative(f);

  InequalityReport out;
  out.tolerance = tolerance;
  out.norm = besov_norm(fn, params, integral).value;
  const double rhs = constant * std::pow(out.norm, params.p);
  const double exponent = static_cast<double>(params.n) + 1.0 + params.q;

  const auto samples = sample_ball(params.n, points, seed);
  const auto ratios = parallel_map<double>(samples.size(), [&](std::size_t k) {
    const auto& a = samples[k];
    const double lhs = std::pow(std::abs(evaluate(rf, a)), params.p) * std::pow(one_minus_norm_sq(a), exponent);
    return lhs / rhs;
  });
  out.points = ratios.size();
  for (double r : ratios) {
    out.max_ratio = std::max(out.max_ratio, r);
    if (r > 1.0 + tolerance) ++out.violations;
  }
  return out;
}

InequalityReport lemma2_growth_check(const AnalyticFunction& f, double p, const SamplingScheme& scheme,
                                     std::size_t points, std::uint64_t seed) {
  if (!(p > 0.0)) throw InputError("lemma 2: p must be > 0");
  const auto samples = sample_ball(f.dimension(), points, seed);
  const auto at_samples = parallel_map<double>(samples.size(), [&](std::size_t k) {
    return std::pow(one_minus_norm_sq(samples[k]), p) * norm(f.gradient(samples[k]));
  });
  double sup = bloch_seminorm(f, p, scheme, BlochVariant::gradient).value;
  for (double v : at_samples) sup = std::max(sup, v);

  InequalityReport out;
  out.norm = std::abs(f.value(CVector(f.dimension(), Complex{0.0, 0.0}))) + sup;
  out.points = samples.size();
  for (const auto& z : samples) {
    const double bound = growth_bound_constant_from_gap(p, one_minus_norm_sq(z)) * out.norm;
    const double lhs = std::abs(f.value(z));
    const double ratio = bound > 0.0 ? lhs / bound : (lhs > 0.0 ? INFINITY : 0.0);
    out.max_ratio = std::max(out.max_ratio, ratio);
    if (ratio > 1.0) ++out.violations;
  }
  return out;
}

namespace {

double lemma4_kernel(Complex zeta, double exponent, KernelForm form) {
  const Complex one_minus = Complex{1.0, 0.0} - zeta;
  const double log_sq = std::norm(std::log(one_minus));
  if (form == KernelForm::modulus) return log_sq / std::pow(std::abs(one_minus), exponent);
  return (log_sq / principal_power(one_minus, exponent)).real();
}

}  // namespace

IntegralEstimate lemma4_integral(const BallPoint& z, double t, const BallIntegralSpec& spec, KernelForm form) {
  if (!(t > -1.0)) throw DomainError("lemma 4: t must satisfy t > -1");
  if (spec.dimension != z.dimension()) throw InputError("lemma 4: spec dimension must equal dim z");
  if (spec.weight_exponent != t) throw InputError("lemma 4: spec weight exponent must equal t");
  const double exponent = static_cast<double>(z.dimension()) + 1.0 + t;
  if (z.norm_sq() == 0.0) return {0.0, 0.0, 0};

  if (spec.sphere_rule == SphereRule::circle_trapezoid) {
    // Unitary invariance: I_t(z) = I_t(|z| e_1), and <|z| e_1, w> = |z| conj(w_1).
    const double r = z.norm();
    return zonal_ball_integral([&](Complex w1) { return lemma4_kernel(r * std::conj(w1), exponent, form); },
                               spec);
  }
  const CVector point(z.coords().begin(), z.coords().end());
  return ball_integral([&](std::span<const Complex> w) { return lemma4_kernel(inner(point, w), exponent, form); },
                       spec);
}

Lemma4Result lemma4_ratio(const BallPoint& z, double t, const BallIntegralSpec& spec, KernelForm form) {
  if (z.norm_sq() == 0.0) throw DomainError("lemma 4 ratio is undefined at z = 0 (both sides vanish)");
  const auto est = lemma4_integral(z, t, spec, form);
  Lemma4Result out;
  out.integral = est.value;
  out.error = est.error;
  const double l = -std::log(one_minus_norm_sq(z.coords()));
  out.log_sq = l * l;
  out.ratio = est.value / out.log_sq;
  return out;
}

SupDecayReport sup_decay_check(const std::vector<AnalyticFunction>& family, const SamplingScheme& scheme) {
  SupDecayReport out;
  if (family.empty()) return out;
  const ScanGrid grid = ScanGrid::at_level(scheme, family.front().dimension(), scheme.refinement_levels);
  for (const auto& f : family) {
    const auto maxima = per_radius_max(grid, [&](std::span<const Complex> z) { return std::abs(f.value(z)); });
    out.sups.push_back(*std::max_element(maxima.begin(), maxima.end()));
  }
  out.decays = out.sups.front() > 0.0 ? out.sups.back() < 0.1 * out.sups.front() : false;
  return out;
}

}  // namespace cesaro
