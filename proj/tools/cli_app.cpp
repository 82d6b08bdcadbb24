#include "cli_app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cesaro/criteria.hpp"
#include "cesaro/errors.hpp"
#include "cesaro/operator.hpp"
#include "cesaro/version.hpp"
#include "function_selector.hpp"
#include "series_io.hpp"

namespace cesaro::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr unsigned kDefaultPanels = 12;
constexpr unsigned kLemma4Panels = 24;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(std::size_t v) { return std::to_string(v); }

// JSON has no representation for inf/nan; emit them as strings.
json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

json numbers(std::span<const double> v) {
  auto out = json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

json params_json(const SpaceParams& p) {
  return json{{"n", p.n}, {"p", p.p}, {"q", p.q}, {"alpha", p.alpha}, {"s_star", p.s_star()}};
}

json integral_json(const BallIntegralSpec& s) {
  json j{{"dimension", s.dimension},
         {"weight_exponent", s.weight_exponent},
         {"radial_order", s.radial_order},
         {"radial_panels", s.scheme.refinement_levels}};
  if (s.sphere_rule == SphereRule::circle_trapezoid) {
    j["sphere_rule"] = "circle-trapezoid";
    j["start_points"] = s.scheme.sphere_samples;
    j["relative_tolerance"] = s.relative_tolerance;
  } else {
    j["sphere_rule"] = "monte-carlo";
    j["sphere_samples"] = s.scheme.sphere_samples;
    j["seed"] = s.scheme.seed;
  }
  return j;
}

json trend_json(const TrendSummary& s, const TrendPolicy& policy) {
  return json{{"trend", to_string(s.trend)},
              {"growth_factor", number(s.growth_factor)},
              {"peak", number(s.peak)},
              {"last", number(s.last)},
              {"policy",
               {{"diverge_factor", policy.diverge_factor},
                {"vanish_fraction", policy.vanish_fraction},
                {"tail_start", policy.tail_start},
                {"steady_growth", policy.steady_growth}}}};
}

const char* weight_branch(double s) {
  if (is_unit_exponent(s)) return "log(2/(1-|z|^2))";
  return s < 1.0 ? "1" : "(1-|z|^2)^(1-s*)";
}

Report base_report(const RunConfig& cfg) {
  Report r;
  r.document["tool"] = "cesaro";
  r.document["version"] = kVersion;
  r.document["command"] = cfg.command;
  r.document["config"] = cfg.to_json();
  r.document["status"] = "ok";
  return r;
}

SelectedFunction require_function(const std::string& selector, const char* flag, std::size_t n) {
  if (selector.empty()) throw InputError(std::string("missing ") + flag + " (function selector)");
  return select_function(selector, n);
}

TruncatedSeries require_series(const SelectedFunction& s, const char* flag) {
  if (!s.series) {
    throw InputError(std::string(flag) + " '" + s.selector + "' has no series form; use polynomial:<expr> or a series file");
  }
  return *s.series;
}

// ---- norm ------------------------------------------------------------------

void run_norm(const RunConfig& cfg, Report& r) {
  const auto& P = cfg.params;
  const auto f = require_function(cfg.f_selector, "--f", P.n);
  json res;
  res["space"] = cfg.space;
  res["function"] = f.selector;
  if (cfg.space == "besov") {
    const auto spec = cfg.integral_spec(P.n, P.q);
    const auto norm = besov_norm(f.function, P, spec);
    res["params"] = params_json(P);
    res["integral"] = integral_json(spec);
    res["value"] = number(norm.value);
    res["seminorm"] = number(norm.seminorm);
    res["error_estimate"] = number(norm.error_estimate);
  } else if (cfg.space == "bloch") {
    const auto variant = cfg.variant == "radial" ? BlochVariant::radial : BlochVariant::gradient;
    const auto semi = bloch_seminorm(f.function, P.alpha, cfg.scheme(), variant);
    const double at_origin = std::abs(f.function.value(CVector(P.n, Complex{0.0, 0.0})));
    res["params"] = {{"n", P.n}, {"alpha", P.alpha}};
    res["variant"] = cfg.variant;
    res["value"] = number(at_origin + semi.value);
    res["seminorm"] = number(semi.value);
    res["error_estimate"] = nullptr;
    res["lower_bound"] = true;
    res["refinement_trace"] = numbers(semi.trace);
    res["points"] = semi.points;
    CsvTable t{"trace", {"level", "seminorm"}, {}};
    for (std::size_t k = 0; k < semi.trace.size(); ++k) t.rows.push_back({fmt(k), fmt(semi.trace[k])});
    r.tables.push_back(std::move(t));
  } else {
    throw InputError("--space must be besov or bloch (got '" + cfg.space + "')");
  }
  r.document["results"] = std::move(res);
}

// ---- apply -----------------------------------------------------------------

void run_apply(const RunConfig& cfg, Report& r) {
  const auto n = cfg.params.n;
  const auto f = require_series(require_function(cfg.f_selector, "--f", n), "--f");
  const auto g = require_series(require_function(cfg.g_selector, "--g", n), "--g");
  const auto image = apply_coefficient_route(f, g);
  const auto check = verify_lemma6(f, g);
  if (!cfg.series_out.empty()) write_series_file(image, cfg.series_out);
  r.document["results"] = json{{"terms", image.terms().size()},
                               {"degree", image.degree()},
                               {"identity_residual", number(check.relative)},
                               {"series_file", cfg.series_out.empty() ? json(nullptr) : json(cfg.series_out)},
                               {"image", series_to_json(image)}};
}

// ---- criterion / compactness -----------------------------------------------

json criterion_json(const CriterionReport& c, const TrendPolicy& policy, CsvTable& table) {
  table = CsvTable{"statistic", {"radius", "statistic"}, {}};
  for (std::size_t k = 0; k < c.radii.size(); ++k) table.rows.push_back({fmt(c.radii[k]), fmt(c.values[k])});
  return json{{"params", params_json(c.params)},
              {"weight", weight_branch(c.s_star)},
              {"radii", numbers(c.radii)},
              {"statistic", numbers(c.values)},
              {"summary", trend_json(c.summary, policy)}};
}

void run_criterion(const RunConfig& cfg, Report& r) {
  const auto g = require_function(cfg.g_selector, "--g", cfg.params.n);
  const TrendPolicy policy;
  const auto c = criterion_statistic(g.function, cfg.params, cfg.scheme(), policy);
  CsvTable table;
  auto res = criterion_json(c, policy, table);
  res["function"] = g.selector;
  res["bounded"] = c.summary.trend == Trend::bounded || c.summary.trend == Trend::vanishing;
  r.document["results"] = std::move(res);
  r.tables.push_back(std::move(table));
}

json probe_json(const ProbeReport& p, CsvTable& table) {
  table = CsvTable{"probe", {"parameter", "image_norm", "source_norm", "source_error", "ratio", "lower_bound"}, {}};
  auto entries = json::array();
  for (const auto& e : p.entries) {
    entries.push_back(json{{"parameter", e.parameter},
                           {"image_norm", number(e.image_norm)},
                           {"source_norm", number(e.source_norm)},
                           {"source_error", number(e.source_error)},
                           {"ratio", number(e.ratio)},
                           {"lower_bound", number(e.lower_bound)}});
    table.rows.push_back({fmt(e.parameter), fmt(e.image_norm), fmt(e.source_norm), fmt(e.source_error),
                          fmt(e.ratio), fmt(e.lower_bound)});
  }
  return json{{"entries", std::move(entries)},
              {"ratio_spread", number(p.ratio_spread)},
              {"ratio_growth", number(p.ratio_growth)},
              {"ratios_bounded", p.ratios_bounded},
              {"ratios_growing", p.ratios_growing},
              {"ratios_decaying", p.ratios_decaying},
              {"images_decay", p.images_decay}};
}

void run_compactness(const RunConfig& cfg, Report& r) {
  const auto& P = cfg.params;
  const auto g = require_function(cfg.g_selector, "--g", P.n);
  const TrendPolicy policy;
  const auto scheme = cfg.scheme();
  const auto scan = compactness_scan(g.function, P, scheme, policy);
  CsvTable table;
  json res;
  res["function"] = g.selector;
  res["regime"] = to_string(scan.regime);
  res["compact"] = scan.compact;
  res["scan"] = criterion_json(scan.scan, policy, table);
  r.tables.push_back(std::move(table));
  if (scan.regime == CompactnessRegime::little_oh && !cfg.w_radii.empty()) {
    const auto spec = cfg.integral_spec(P.n, P.q);
    const auto probe = compactness_probe(g.function, P, cfg.w_radii, scheme, spec);
    CsvTable probe_table;
    res["probe"] = probe_json(probe, probe_table);
    res["probe"]["family"] = is_unit_exponent(P.s_star()) ? "log" : "power";
    res["probe"]["integral"] = integral_json(spec);
    r.tables.push_back(std::move(probe_table));
  } else {
    res["probe"] = nullptr;
  }
  r.document["results"] = std::move(res);
}

// ---- verify ----------------------------------------------------------------

TruncatedSeries suite_polynomial(std::size_t n, std::uint64_t seed, std::uint64_t k) {
  return random_series(n, 6, 8, seed, 10'000 + k);
}

void verify_lemma6_suite(const RunConfig& cfg, Report& r) {
  const std::size_t pairs = cfg.count ? cfg.count : 100;
  CsvTable table{"pairs", {"index", "n", "degree_f", "degree_g", "relative_residual"}, {}};
  double worst = 0.0;
  for (std::size_t k = 0; k < pairs; ++k) {
    const std::size_t n = 1 + k % 3;
    const auto f = random_series(n, 8, 12, cfg.seed, 2 * k);
    const auto g = random_series(n, 8, 12, cfg.seed, 2 * k + 1);
    const auto res = verify_lemma6(f, g);
    worst = std::max(worst, res.relative);
    table.rows.push_back({fmt(k), fmt(n), fmt(std::size_t{f.degree()}), fmt(std::size_t{g.degree()}), fmt(res.relative)});
  }
  const bool pass = worst <= 1e-12;
  r.document["results"] = json{{"lemma", 6}, {"pairs", pairs}, {"max_relative_residual", worst},
                               {"threshold", 1e-12}, {"pass", pass}};
  r.tables.push_back(std::move(table));
  if (!pass) r.exit_code = exit_numerical;
}

void verify_lemma1_suite(const RunConfig& cfg, Report& r) {
  const std::size_t polys = cfg.count ? cfg.count : 50;
  const std::size_t points = cfg.points ? cfg.points : 1000;
  const std::pair<double, double> pq[] = {{2.0, 0.0}, {1.0, 0.5}, {4.0, 1.0}};
  CsvTable table{"checks", {"index", "n", "p", "q", "max_ratio", "violations"}, {}};
  double worst = 0.0;
  std::size_t violations = 0;
  for (std::size_t k = 0; k < polys; ++k) {
    const std::size_t n = 1 + k % 2;
    const auto f = suite_polynomial(n, cfg.seed, k);
    if (f.is_zero()) continue;
    for (const auto& [p, q] : pq) {
      const auto params = SpaceParams::make(n, p, q, 0.0);
      auto spec = cfg.integral_spec(n, q);
      // Polynomials are smooth up to the sphere; graded panels only help peaked integrands.
      if (cfg.panels == 0) spec.scheme.refinement_levels = 0;
      const auto rep = lemma1_embedding_check(f, params, cfg.r0, points, cfg.seed + k, spec);
      worst = std::max(worst, rep.max_ratio);
      violations += rep.violations;
      table.rows.push_back({fmt(k), fmt(n), fmt(p), fmt(q), fmt(rep.max_ratio), fmt(rep.violations)});
    }
  }
  const bool pass = violations == 0;
  r.document["results"] = json{{"lemma", 1}, {"polynomials", polys}, {"points_per_check", points},
                               {"r0", cfg.r0}, {"max_ratio", number(worst)}, {"violations", violations},
                               {"tolerance", 1e-6}, {"pass", pass}};
  r.tables.push_back(std::move(table));
  if (!pass) r.exit_code = exit_numerical;
}

void verify_lemma2_suite(const RunConfig& cfg, Report& r) {
  const std::size_t polys = cfg.count ? cfg.count : 50;
  const std::size_t points = cfg.points ? cfg.points : 10000;
  const auto scheme = cfg.scheme();
  CsvTable table{"checks", {"index", "n", "p", "norm", "max_ratio", "violations"}, {}};
  double worst = 0.0;
  std::size_t violations = 0;
  for (std::size_t k = 0; k < polys; ++k) {
    const std::size_t n = 1 + k % 2;
    const auto f = AnalyticFunction::from_series(suite_polynomial(n, cfg.seed, k));
    for (double p : {0.5, 1.0, 2.0}) {
      const auto rep = lemma2_growth_check(f, p, scheme, points, cfg.seed + k);
      worst = std::max(worst, rep.max_ratio);
      violations += rep.violations;
      table.rows.push_back({fmt(k), fmt(n), fmt(p), fmt(rep.norm), fmt(rep.max_ratio), fmt(rep.violations)});
    }
  }
  const bool pass = violations == 0;
  r.document["results"] = json{{"lemma", 2}, {"polynomials", polys}, {"points_per_check", points},
                               {"max_ratio", number(worst)}, {"violations", violations}, {"pass", pass}};
  r.tables.push_back(std::move(table));
  if (!pass) r.exit_code = exit_numerical;
}

std::vector<std::pair<std::size_t, double>> lemma4_pairs(const RunConfig& cfg) {
  if (cfg.count == 0) return {{1, 0.0}, {1, 1.0}, {2, 0.0}};
  return {{cfg.params.n, cfg.params.q}};
}

void verify_lemma4_suite(const RunConfig& cfg, Report& r) {
  if (cfg.kernel != "modulus" && cfg.kernel != "analytic") {
    throw InputError("--kernel must be modulus or analytic (got '" + cfg.kernel + "')");
  }
  const auto form = cfg.kernel == "modulus" ? KernelForm::modulus : KernelForm::analytic;
  if (cfg.lemma4_radii.empty()) throw InputError("--z-radii must not be empty");
  CsvTable table{"ratios", {"n", "t", "radius", "integral", "error", "log_sq", "ratio", "relative_to_first"}, {}};
  auto cases = json::array();
  bool pass = true;
  for (const auto& [n, t] : lemma4_pairs(cfg)) {
    auto spec = BallIntegralSpec::circle_product(t, cfg.panels ? cfg.panels : kLemma4Panels, cfg.radial_order);
    spec.dimension = n;
    double first = 0.0;
    double worst = 0.0;
    auto ratios = json::array();
    for (double rad : cfg.lemma4_radii) {
      const auto res = lemma4_ratio(BallPoint::on_axis(n, 0, rad), t, spec, form);
      if (first == 0.0) first = res.ratio;
      const double rel = res.ratio / first;
      worst = std::max(worst, rel);
      ratios.push_back(json{{"radius", rad}, {"integral", number(res.integral)}, {"error", number(res.error)},
                            {"ratio", number(res.ratio)}, {"relative_to_first", number(rel)}});
      table.rows.push_back({fmt(n), fmt(t), fmt(rad), fmt(res.integral), fmt(res.error), fmt(res.log_sq),
                            fmt(res.ratio), fmt(rel)});
    }
    const bool ok = worst <= 2.0;
    pass = pass && ok;
    cases.push_back(json{{"n", n}, {"t", t}, {"ratios", std::move(ratios)}, {"max_relative", number(worst)},
                         {"within_factor_2", ok}});
  }
  r.document["results"] = json{{"lemma", 4}, {"kernel", cfg.kernel}, {"cases", std::move(cases)}, {"pass", pass}};
  r.tables.push_back(std::move(table));
  if (!pass) r.exit_code = exit_numerical;
}

void run_verify(const RunConfig& cfg, Report& r) {
  switch (cfg.lemma) {
    case 1: return verify_lemma1_suite(cfg, r);
    case 2: return verify_lemma2_suite(cfg, r);
    case 4: return verify_lemma4_suite(cfg, r);
    case 6: return verify_lemma6_suite(cfg, r);
    default: throw InputError("--lemma must be one of 1, 2, 4, 6 (got " + std::to_string(cfg.lemma) + ")");
  }
}

// ---- oracle ----------------------------------------------------------------

CVector oracle_point(std::size_t n) {
  const CVector base{Complex{0.6, 0.1}, Complex{0.0, -0.4}, Complex{0.3, 0.2}};
  CVector z(n, Complex{0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) z[j] = base[j % base.size()];
  return scaled(z, 0.8 / norm(z));
}

void run_oracle(const RunConfig& cfg, Report& r) {
  if (cfg.max_dimension == 0 || cfg.max_power == 0) throw InputError("oracle needs --max-n >= 1 and --max-m >= 1");
  CsvTable table{"oracle",
                 {"n", "m", "t", "closed_form", "monte_carlo", "mc_relative_error", "mc_standard_error", "product",
                  "product_relative_error"},
                 {}};
  auto rows = json::array();
  double worst_mc = 0.0;
  double worst_product = 0.0;
  for (std::size_t n = 1; n <= cfg.max_dimension; ++n) {
    const CVector z = oracle_point(n);
    const double zsq = norm_sq(z);
    for (unsigned m = 1; m <= cfg.max_power; ++m) {
      // Gauss-Jacobi in u = r^2 is exact for the radial polynomial u^m with m/2 + 1 nodes.
      const unsigned order = m / 2 + 1;
      const auto integrand = [&](std::span<const Complex> w) { return std::pow(std::norm(inner(z, w)), m); };
      for (double t : cfg.weights) {
        const double exact = monomial_ball_integral(n, m, t) * std::pow(zsq, m);
        auto mc_spec = BallIntegralSpec::monte_carlo(n, t, cfg.oracle_samples, cfg.seed, order);
        const auto mc = ball_integral(integrand, mc_spec);
        const double mc_rel = std::abs(mc.value - exact) / exact;
        worst_mc = std::max(worst_mc, mc_rel);
        json row{{"n", n}, {"m", m}, {"t", t}, {"closed_form", exact}, {"monte_carlo", number(mc.value)},
                 {"mc_relative_error", number(mc_rel)}, {"mc_standard_error", number(mc.error)}};
        std::string product_cell = "";
        std::string product_err_cell = "";
        if (n == 1) {
          const auto pr = ball_integral(integrand, BallIntegralSpec::circle_product(t, 0, order));
          const double pr_rel = std::abs(pr.value - exact) / exact;
          worst_product = std::max(worst_product, pr_rel);
          row["product"] = number(pr.value);
          row["product_relative_error"] = number(pr_rel);
          product_cell = fmt(pr.value);
          product_err_cell = fmt(pr_rel);
        }
        table.rows.push_back({fmt(n), fmt(std::size_t{m}), fmt(t), fmt(exact), fmt(mc.value), fmt(mc_rel),
                              fmt(mc.error), product_cell, product_err_cell});
        rows.push_back(std::move(row));
      }
    }
  }
  const bool pass = worst_mc <= 5e-3 && worst_product <= 1e-10;
  r.document["results"] = json{{"samples", cfg.oracle_samples},
                               {"rows", std::move(rows)},
                               {"max_mc_relative_error", number(worst_mc)},
                               {"max_product_relative_error", number(worst_product)},
                               {"mc_threshold", 5e-3},
                               {"product_threshold", 1e-10},
                               {"pass", pass}};
  r.tables.push_back(std::move(table));
  if (!pass) r.exit_code = exit_numerical;
}

std::string csv_path(const std::string& stem, const std::string& table) { return stem + "-" + table + ".csv"; }

std::string csv_stem(const RunConfig& cfg) {
  if (!cfg.csv.empty()) return cfg.csv;
  if (cfg.output.empty()) return {};
  const auto dot = cfg.output.rfind('.');
  const auto slash = cfg.output.rfind('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) return cfg.output.substr(0, dot);
  return cfg.output;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

}  // namespace

SamplingScheme RunConfig::scheme() const {
  SamplingScheme s;
  s.radial_grid = radial_grid;
  s.sphere_samples = sphere_samples;
  s.seed = seed;
  s.refinement_levels = refinement;
  s.validate();
  return s;
}

BallIntegralSpec RunConfig::integral_spec(std::size_t n, double q) const {
  const unsigned levels = panels ? panels : kDefaultPanels;
  const bool circle = quadrature == "circle" || (quadrature == "auto" && n == 1);
  if (quadrature != "auto" && quadrature != "circle" && quadrature != "monte-carlo") {
    throw InputError("--quadrature must be auto, circle or monte-carlo (got '" + quadrature + "')");
  }
  if (circle && n != 1) throw InputError("--quadrature circle requires n = 1");
  BallIntegralSpec spec = circle ? BallIntegralSpec::circle_product(q, levels, radial_order)
                                 : BallIntegralSpec::monte_carlo(n, q, integral_samples, seed, radial_order);
  spec.scheme.refinement_levels = levels;
  spec.validate();
  return spec;
}

json RunConfig::to_json() const {
  json j;
  j["command"] = command;
  j["params"] = params_json(params);
  j["scheme"] = {{"radial_grid", radial_grid},
                 {"sphere_samples", sphere_samples},
                 {"seed", seed},
                 {"refinement_levels", refinement}};
  j["integral"] = {{"quadrature", quadrature},
                   {"integral_samples", integral_samples},
                   {"radial_order", radial_order},
                   {"panels", panels}};
  if (command == "norm") {
    j["f"] = f_selector;
    j["space"] = space;
    if (space == "bloch") j["variant"] = variant;
  } else if (command == "apply") {
    j["f"] = f_selector;
    j["g"] = g_selector;
    j["series_out"] = series_out;
  } else if (command == "criterion") {
    j["g"] = g_selector;
  } else if (command == "compactness") {
    j["g"] = g_selector;
    j["w_radii"] = w_radii;
  } else if (command == "verify") {
    j["lemma"] = lemma;
    j["count"] = count;
    j["points"] = points;
    if (lemma == 1) j["r0"] = r0;
    if (lemma == 4) {
      j["kernel"] = kernel;
      j["z_radii"] = lemma4_radii;
    }
  } else if (command == "oracle") {
    j["max_n"] = max_dimension;
    j["max_m"] = max_power;
    j["weights"] = weights;
    j["samples"] = oracle_samples;
  }
  return j;
}

Report execute(const RunConfig& cfg) {
  cfg.params.validate();
  Report r = base_report(cfg);
  try {
    if (cfg.command == "norm") run_norm(cfg, r);
    else if (cfg.command == "apply") run_apply(cfg, r);
    else if (cfg.command == "criterion") run_criterion(cfg, r);
    else if (cfg.command == "compactness") run_compactness(cfg, r);
    else if (cfg.command == "verify") run_verify(cfg, r);
    else if (cfg.command == "oracle") run_oracle(cfg, r);
    else throw InputError("unknown command '" + cfg.command + "'");
  } catch (const AccuracyError& e) {
    r.document["status"] = "numerical-failure";
    r.document["error"] = {{"message", e.what()},
                           {"best_estimate", {number(e.best_re()), number(e.best_im())}},
                           {"error_estimate", number(e.error_estimate())}};
    r.exit_code = exit_numerical;
  } catch (const EvaluationError& e) {
    r.document["status"] = "numerical-failure";
    r.document["error"] = {{"message", e.what()}};
    r.exit_code = exit_numerical;
  }
  if (r.exit_code == exit_numerical && r.document["status"] == "ok") r.document["status"] = "check-failed";
  return r;
}

std::string render(const Report& report) { return report.document.dump(2) + "\n"; }

std::string render_csv(const CsvTable& table) {
  std::ostringstream out;
  for (std::size_t k = 0; k < table.header.size(); ++k) out << (k ? "," : "") << table.header[k];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << row[k];
    out << '\n';
  }
  return out.str();
}

namespace {

void add_params(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.params.n, "Complex dimension")->capture_default_str();
  sub->add_option("--p", cfg.params.p, "Exponent p > 0")->capture_default_str();
  sub->add_option("--q", cfg.params.q, "Weight exponent q > -1")->capture_default_str();
  sub->add_option("--alpha", cfg.params.alpha, "Bloch exponent alpha >= 0")->capture_default_str();
}

void add_scheme(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--radii", cfg.radial_grid, "Scan radii, comma separated")->delimiter(',');
  sub->add_option("--sphere-samples", cfg.sphere_samples, "Directions per scan radius")->capture_default_str();
  sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  sub->add_option("--refinement", cfg.refinement, "Scan refinement levels")->capture_default_str();
}

void add_integral(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--quadrature", cfg.quadrature, "auto | circle | monte-carlo")->capture_default_str();
  sub->add_option("--integral-samples", cfg.integral_samples, "Monte-Carlo sphere samples")->capture_default_str();
  sub->add_option("--radial-order", cfg.radial_order, "Gauss-Jacobi order per radial panel")->capture_default_str();
  sub->add_option("--panels", cfg.panels, "Graded radial panels toward the sphere (0 = default)");
}

void add_output(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-o,--output", cfg.output, "Report file (stdout when omitted)");
  sub->add_option("--csv", cfg.csv, "CSV stem; tables go to <stem>-<table>.csv");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Numerical laboratory for the extended Cesaro operator on the unit ball", "cesaro"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto* norm = app.add_subcommand("norm", "Besov B(p,q) or Bloch norm of a function");
  add_params(norm, cfg);
  add_scheme(norm, cfg);
  add_integral(norm, cfg);
  add_output(norm, cfg);
  norm->add_option("--f", cfg.f_selector, "Function selector")->required();
  norm->add_option("--space", cfg.space, "besov | bloch")->capture_default_str();
  norm->add_option("--variant", cfg.variant, "Bloch variant: gradient | radial")->capture_default_str();

  auto* apply = app.add_subcommand("apply", "Coefficients of T_g f for polynomial f and g");
  add_params(apply, cfg);
  add_output(apply, cfg);
  apply->add_option("--f", cfg.f_selector, "Function selector")->required();
  apply->add_option("--g", cfg.g_selector, "Symbol selector")->required();
  apply->add_option("--series-out", cfg.series_out, "Write T_g f as a series file");

  auto* criterion = app.add_subcommand("criterion", "Boundedness statistic scan");
  add_params(criterion, cfg);
  add_scheme(criterion, cfg);
  add_output(criterion, cfg);
  criterion->add_option("--g", cfg.g_selector, "Symbol selector")->required();

  auto* compactness = app.add_subcommand("compactness", "Compactness scan and test-family probe");
  add_params(compactness, cfg);
  add_scheme(compactness, cfg);
  add_integral(compactness, cfg);
  add_output(compactness, cfg);
  compactness->add_option("--g", cfg.g_selector, "Symbol selector")->required();
  compactness->add_option("--w-radii", cfg.w_radii, "Test-family radii |w_j|, comma separated")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "Inequality and identity suites");
  add_params(verify, cfg);
  add_scheme(verify, cfg);
  add_integral(verify, cfg);
  add_output(verify, cfg);
  verify->add_option("--lemma", cfg.lemma, "Suite: 1, 2, 4 or 6")->capture_default_str();
  verify->add_option("--count", cfg.count, "Random cases (0 = suite default; for 4, non-zero runs the single --n/--q case)");
  verify->add_option("--points", cfg.points, "Sample points per case (0 = suite default)");
  verify->add_option("--r0", cfg.r0, "Sub-ball radius for suite 1")->capture_default_str();
  verify->add_option("--kernel", cfg.kernel, "Suite 4 kernel: modulus | analytic")->capture_default_str();
  verify->add_option("--z-radii", cfg.lemma4_radii, "Suite 4 radii, comma separated")->delimiter(',');

  auto* oracle = app.add_subcommand("oracle", "Ball quadrature against closed-form monomial integrals");
  add_output(oracle, cfg);
  oracle->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  oracle->add_option("--max-n", cfg.max_dimension, "Largest dimension")->capture_default_str();
  oracle->add_option("--max-m", cfg.max_power, "Largest power m")->capture_default_str();
  oracle->add_option("--weights", cfg.weights, "Weight exponents t, comma separated")->delimiter(',');
  oracle->add_option("--samples", cfg.oracle_samples, "Monte-Carlo sphere samples")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? exit_ok : exit_usage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  Report report;
  try {
    report = execute(cfg);
  } catch (const InputError& e) {
    err << "cesaro " << cfg.command << ": " << e.what() << '\n';
    return exit_usage;
  } catch (const DomainError& e) {
    err << "cesaro " << cfg.command << ": " << e.what() << '\n';
    return exit_usage;
  }

  try {
    const auto text = render(report);
    if (cfg.output.empty()) out << text;
    else write_text(cfg.output, text);
    const auto stem = csv_stem(cfg);
    if (!stem.empty()) {
      for (const auto& t : report.tables) write_text(csv_path(stem, t.name), render_csv(t));
    }
  } catch (const InputError& e) {
    err << "cesaro " << cfg.command << ": " << e.what() << '\n';
    return exit_usage;
  }
  if (report.exit_code != exit_ok) {
    const auto& status = report.document["status"];
    err << "cesaro " << cfg.command << ": " << status.get<std::string>();
    if (report.document.contains("error")) err << ": " << report.document["error"]["message"].get<std::string>();
    err << '\n';
  }
  return report.exit_code;
}

}  // namespace cesaro::cli
