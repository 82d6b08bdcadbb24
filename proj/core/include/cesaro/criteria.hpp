#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "cesaro/analytic_function.hpp"
#include "cesaro/ball.hpp"
#include "cesaro/quadrature.hpp"
#include "cesaro/series.hpp"
#include "cesaro/spaces.hpp"

namespace cesaro {

// ---------------------------------------------------------------------------
// Boundary statistic (1-|z|^2)^alpha G_{s*}(z) |Rg(z)| and its trend.
// ---------------------------------------------------------------------------

enum class Trend { bounded, vanishing, diverging, inconclusive };

std::string to_string(Trend trend);

/// Thresholds that turn a finite radius scan into a trend. The criteria are asymptotic,
/// so these are policy; reports carry the raw per-radius values so they can be re-applied.
struct TrendPolicy {
  double diverge_factor = 10.0;   // tail growth last/first above this => diverging
  double vanish_fraction = 0.1;   // last value below this fraction of the peak => vanishing
  double tail_start = 0.9;        // radii >= tail_start form the boundary tail
  double steady_growth = 2.0;     // strictly increasing tail growing beyond this => inconclusive
};

struct TrendSummary {
  Trend trend = Trend::bounded;
  double growth_factor = 1.0;  // last / first value on the tail
  double peak = 0.0;
  double last = 0.0;
};

/// Classification order: all-zero or last < vanish_fraction * peak => vanishing;
/// growth > diverge_factor => diverging; strictly increasing tail with growth >
/// steady_growth => inconclusive; otherwise bounded.
TrendSummary classify_trend(std::span<const double> radii, std::span<const double> values,
                            const TrendPolicy& policy = {});

struct CriterionReport {
  SpaceParams params;
  double s_star = 0.0;
  std::vector<double> radii;
  std::vector<double> values;  // max over scan directions at each radius
  TrendSummary summary;
};

/// Per radius r: max over scan directions xi of (1-r^2)^alpha G_{s*}(r xi) |Rg(r xi)|,
/// on the scan grid at level scheme.refinement_levels.
CriterionReport criterion_statistic(const AnalyticFunction& g, const SpaceParams& params,
                                    const SamplingScheme& scheme, const TrendPolicy& policy = {});

enum class CompactnessRegime {
  bloch_membership,  // s* < 1: compact iff g in B^alpha
  little_oh,         // s* >= 1: compact iff the statistic tends to 0 at the sphere
};

std::string to_string(CompactnessRegime regime);

struct CompactnessReport {
  CriterionReport scan;
  CompactnessRegime regime = CompactnessRegime::little_oh;
  bool compact = false;
};

/// Same statistic as criterion_statistic (for s* < 1 G = 1, so it is the radial-variant
/// B^alpha statistic of g). Verdict: bounded or vanishing trend when s* < 1, vanishing
/// trend when s* >= 1.
CompactnessReport compactness_scan(const AnalyticFunction& g, const SpaceParams& params,
                                   const SamplingScheme& scheme, const TrendPolicy& policy = {});

// ---------------------------------------------------------------------------
// Test families.
// ---------------------------------------------------------------------------

/// f_w(z) = (1-|w|^2) / (1 - <z,w>)^{s*}, principal branch. Requires s* > 1.
AnalyticFunction power_test_function(const BallPoint& w, const SpaceParams& params);

/// f_w(z) = (log 1/(1-|w|^2))^{-2/p} (log 1/(1-<z,w>))^{1+2/p}, principal branch.
/// Requires s* = 1 and w != 0.
AnalyticFunction log_test_function(const BallPoint& w, const SpaceParams& params);

struct FamilyMember {
  AnalyticFunction f;
  double parameter = 0.0;  // |w| for the parametrized families
  CVector witness;         // the point w (empty when the member has none)
  /// Image norms are sampled over radii <= radius_limit. Families use |w|, an
  /// exhaustion of B by compact balls; 1 means the full scan grid.
  double radius_limit = 1.0;
};

/// Members f_w for w = r * direction, r in radii. The family kind follows s*:
/// log for s* = 1, power for s* > 1 (InputError for s* < 1).
std::vector<FamilyMember> test_family(const SpaceParams& params, std::span<const double> radii,
                                      const CVector& direction = {});
std::vector<FamilyMember> power_family(const SpaceParams& params, std::span<const double> radii,
                                       const CVector& direction = {});
std::vector<FamilyMember> log_family(const SpaceParams& params, std::span<const double> radii,
                                     const CVector& direction = {});

// ---------------------------------------------------------------------------
// Operator probes.
// ---------------------------------------------------------------------------

struct ProbeEntry {
  double parameter = 0.0;
  double image_norm = 0.0;   // radial-variant B^alpha norm of T_g f, sampled
  double source_norm = 0.0;  // ||f||_{B(p,q)}
  double source_error = 0.0;
  double ratio = 0.0;
  double lower_bound = 0.0;  // (1-|w|^2)^alpha |f(w)| |Rg(w)| at the witness (0 without one)
};

struct ProbeReport {
  SpaceParams params;
  std::vector<ProbeEntry> entries;
  double ratio_spread = 1.0;  // max ratio / min ratio
  double ratio_growth = 1.0;  // last ratio / first ratio
  bool ratios_bounded = true;    // spread < 10
  bool ratios_growing = false;   // growth > 5
  bool ratios_decaying = false;  // last ratio < 0.1 * max ratio
  bool images_decay = false;     // last image norm < 0.1 * first image norm
};

/// For each member, ||T_g f||_{B^alpha} (radial variant through R(T_g f) = f Rg, sampled
/// on radii <= radius_limit and at the witness) over ||f||_{B(p,q)}.
ProbeReport empirical_operator_ratio(const AnalyticFunction& g, const SpaceParams& params,
                                     const std::vector<FamilyMember>& family, const SamplingScheme& scheme,
                                     const BallIntegralSpec& integral);

/// Norm-decay probe along w_j = r_j e_1 with the family matching s*. Image norms use
/// the full scan grid.
ProbeReport compactness_probe(const AnalyticFunction& g, const SpaceParams& params,
                              std::span<const double> w_radii, const SamplingScheme& scheme,
                              const BallIntegralSpec& integral);

// ---------------------------------------------------------------------------
// Explicit inequalities from the embedding, growth and integral lemmas.
// ---------------------------------------------------------------------------

struct InequalityReport {
  double max_ratio = 0.0;     // max over sampled points of lhs / rhs
  std::size_t violations = 0; // points with ratio > 1 + tolerance
  std::size_t points = 0;
  double norm = 0.0;          // the norm entering the right-hand side
  double tolerance = 0.0;
};

/// Checks |Rf(a)|^p (1-|a|^2)^{n+1+q} <= 4^{n+1} r0^{-2n} ((1+r0)/(1-r0))^{|q|} ||f||_{B(p,q)}^p
/// at `points` uniform samples a of the ball.
InequalityReport lemma1_embedding_check(const TruncatedSeries& f, const SpaceParams& params, double r0,
                                        std::size_t points, std::uint64_t seed, const BallIntegralSpec& integral,
                                        double tolerance = 1e-6);

double lemma1_constant(std::size_t n, double q, double r0);

/// Checks |f(z)| <= growth_bound_constant(p, z) * ||f||_{B^p} at `points` uniform samples,
/// with ||f||_{B^p} = |f(0)| + the gradient Bloch-p sup over the scheme grid and the
/// check points together.
InequalityReport lemma2_growth_check(const AnalyticFunction& f, double p, const SamplingScheme& scheme,
                                     std::size_t points, std::uint64_t seed);

enum class KernelForm {
  modulus,   // |log 1/(1-<z,w>)|^2 / |1-<z,w>|^{n+1+t}
  analytic,  // Re of |log 1/(1-<z,w>)|^2 / (1-<z,w>)^{n+1+t}
};

/// I_t(z) = int_B |log 1/(1-<z,w>)|^2 (1-|w|^2)^t K(z,w) dv(w). With a circle product
/// spec the zonal reduction is used (any n); otherwise the generic ball integral.
IntegralEstimate lemma4_integral(const BallPoint& z, double t, const BallIntegralSpec& spec,
                                 KernelForm form = KernelForm::modulus);

struct Lemma4Result {
  double integral = 0.0;
  double error = 0.0;
  double log_sq = 0.0;  // (log 1/(1-|z|^2))^2
  double ratio = 0.0;
};

/// I_t(z) / (log 1/(1-|z|^2))^2; DomainError at z = 0.
Lemma4Result lemma4_ratio(const BallPoint& z, double t, const BallIntegralSpec& spec,
                          KernelForm form = KernelForm::modulus);

struct SupDecayReport {
  std::vector<double> sups;
  bool decays = false;  // last < 0.1 * first
};

/// Sampled sup |f_j| over the scan grid at level scheme.refinement_levels.
SupDecayReport sup_decay_check(const std::vector<AnalyticFunction>& family, const SamplingScheme& scheme);

}  // namespace cesaro
